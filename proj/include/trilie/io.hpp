#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "../../vendor/json.hpp"
#include "two_term.hpp"

namespace trilie {

using Json = nlohmann::ordered_json;

// Input-layer failure: malformed document, bad index, wrong shape. Mapped to
// exit code 2 by the command layer, as opposed to mathematical failures.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline Scalar scalar_from_json(const Json& j, const std::string& where) {
    if (j.is_number_float())
        throw InputError(where + ": floating-point literal forbidden; write 1/2");
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        std::string text = j.get<std::string>();
        if (auto s = parse_scalar(text)) return *s;
        if (text.find('.') != std::string::npos)
            throw InputError(where + ": floating-point literal forbidden; write 1/2");
        throw InputError(where + ": bad rational literal \"" + text + "\"");
    }
    throw InputError(where + ": expected integer or rational string");
}

inline Json scalar_to_json(const Scalar& s) { return Json(scalar_str(s)); }

inline Vec vec_from_json(const Json& j, int len, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != len)
        throw InputError(where + ": expected array of length " + std::to_string(len));
    Vec v;
    v.reserve(static_cast<std::size_t>(len));
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(scalar_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline Json vec_to_json(const Vec& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(scalar_to_json(x));
    return j;
}

inline Matrix matrix_from_json(const Json& j, int rows, int cols, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw InputError(where + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        Vec row = vec_from_json(j[static_cast<std::size_t>(r)], cols,
                                where + " row " + std::to_string(r));
        for (int c = 0; c < cols; ++c) m(r, c) = row[static_cast<std::size_t>(c)];
    }
    return m;
}

inline Json matrix_to_json(const Matrix& m) {
    Json j = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        j.push_back(std::move(row));
    }
    return j;
}

namespace detail {

inline void expect_kind(const Json& j, const std::string& kind) {
    if (!j.is_object()) throw InputError("document must be a JSON object");
    if (!j.contains("format") || !j["format"].is_number_integer() || j["format"] != 1)
        throw InputError("document must declare \"format\": 1");
    if (!j.contains("kind") || j["kind"] != kind)
        throw InputError("expected a document of kind \"" + kind + "\"");
}

inline int int_field(const Json& j, const std::string& name) {
    if (!j.contains(name) || !j[name].is_number_integer())
        throw InputError("missing integer field \"" + name + "\"");
    return j[name].get<int>();
}

inline std::vector<int> args_field(const Json& e, std::size_t count, int bound,
                                   const std::string& where) {
    if (!e.contains("args") || !e["args"].is_array() || e["args"].size() != count)
        throw InputError(where + ": entry needs \"args\" with " + std::to_string(count) +
                         " indices");
    std::vector<int> a;
    for (const auto& x : e["args"]) {
        if (!x.is_number_integer()) throw InputError(where + ": index must be an integer");
        int i = x.get<int>();
        if (i < 0 || i >= bound) throw InputError(where + ": index out of range");
        a.push_back(i);
    }
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i - 1] >= a[i])
            throw InputError(where + ": triple must be strictly increasing");
    return a;
}

} // namespace detail

struct AlgebraDoc {
    ThreeLieAlgebra algebra{0};
    WeightedDifferential dd;
};

inline AlgebraDoc parse_algebra(const Json& j) {
    detail::expect_kind(j, "algebra");
    int n = detail::int_field(j, "dim");
    if (n < 0) throw InputError("dim must be nonnegative");
    AlgebraDoc doc{ThreeLieAlgebra(n), {Matrix(n, n), Scalar(0)}};
    if (j.contains("weight")) doc.dd.lambda = scalar_from_json(j["weight"], "weight");
    if (j.contains("bracket")) {
        if (!j["bracket"].is_array()) throw InputError("bracket must be an array of entries");
        std::set<std::array<int, 3>> seen;
        for (const auto& e : j["bracket"]) {
            auto a = detail::args_field(e, 3, n, "bracket");
            std::array<int, 3> key{a[0], a[1], a[2]};
            if (!seen.insert(key).second) throw InputError("bracket: duplicate triple key");
            if (!e.contains("value")) throw InputError("bracket: entry needs \"value\"");
            doc.algebra.set_bracket(a[0], a[1], a[2],
                                    vec_from_json(e["value"], n, "bracket value"));
        }
    }
    if (j.contains("differential"))
        doc.dd.d = matrix_from_json(j["differential"], n, n, "differential");
    return doc;
}

inline Json serialize_algebra(const AlgebraDoc& doc) {
    Json j;
    j["format"] = 1;
    j["kind"] = "algebra";
    j["dim"] = doc.algebra.dim();
    j["weight"] = scalar_to_json(doc.dd.lambda);
    Json br = Json::array();
    for (const auto& [key, val] : doc.algebra.table()) {
        Json e;
        e["args"] = {key[0], key[1], key[2]};
        e["value"] = vec_to_json(val);
        br.push_back(std::move(e));
    }
    j["bracket"] = std::move(br);
    j["differential"] = matrix_to_json(doc.dd.d);
    return j;
}

inline Representation parse_representation(const Json& j, const Scalar& lambda) {
    detail::expect_kind(j, "representation");
    int n = detail::int_field(j, "dim");
    int dimV = detail::int_field(j, "dimV");
    if (n < 0 || dimV < 0) throw InputError("dim and dimV must be nonnegative");
    Representation r(n, dimV, lambda);
    if (j.contains("rho")) {
        if (!j["rho"].is_array()) throw InputError("rho must be an array of entries");
        std::set<std::pair<int, int>> seen;
        for (const auto& e : j["rho"]) {
            auto a = detail::args_field(e, 2, n, "rho");
            if (!seen.insert({a[0], a[1]}).second) throw InputError("rho: duplicate pair key");
            if (!e.contains("matrix")) throw InputError("rho: entry needs \"matrix\"");
            r.set_rho(a[0], a[1], matrix_from_json(e["matrix"], dimV, dimV, "rho matrix"));
        }
    }
    if (j.contains("dV")) r.dV() = matrix_from_json(j["dV"], dimV, dimV, "dV");
    return r;
}

inline Json serialize_representation(const Representation& r) {
    Json j;
    j["format"] = 1;
    j["kind"] = "representation";
    j["dim"] = r.n();
    j["dimV"] = r.dimV();
    Json rho = Json::array();
    for (const auto& [key, m] : r.rho_table()) {
        Json e;
        e["args"] = {key.first, key.second};
        e["matrix"] = matrix_to_json(m);
        rho.push_back(std::move(e));
    }
    j["rho"] = std::move(rho);
    j["dV"] = matrix_to_json(r.dV());
    return j;
}

// Cochain document: sparse entries (slots..., g) -> value vector.
inline Cochain parse_cochain(const Json& j, int n, int dimV) {
    detail::expect_kind(j, "cochain");
    int p = detail::int_field(j, "degree");
    if (p < 1) throw InputError("degree must be >= 1");
    CochainSpace sp(p, n, dimV);
    Cochain f(sp);
    if (j.contains("entries")) {
        if (!j["entries"].is_array()) throw InputError("entries must be an array");
        for (const auto& e : j["entries"]) {
            std::vector<int> slots;
            if (p > 1) {
                if (!e.contains("slots") || !e["slots"].is_array() ||
                    static_cast<int>(e["slots"].size()) != p - 1)
                    throw InputError("cochain entry needs " + std::to_string(p - 1) + " slots");
                for (const auto& s : e["slots"]) {
                    int v = s.get<int>();
                    if (v < 0 || v >= sp.m) throw InputError("cochain slot out of range");
                    slots.push_back(v);
                }
            }
            int g = detail::int_field(e, "g");
            if (g < 0 || g >= n) throw InputError("cochain g-index out of range");
            if (!e.contains("value")) throw InputError("cochain entry needs \"value\"");
            Vec val = vec_from_json(e["value"], dimV, "cochain value");
            for (int v = 0; v < dimV; ++v)
                f.at(slots, g, v) = val[static_cast<std::size_t>(v)];
        }
    }
    return f;
}

inline Json serialize_cochain(const Cochain& f) {
    Json j;
    j["format"] = 1;
    j["kind"] = "cochain";
    j["degree"] = f.sp.p;
    Json entries = Json::array();
    std::int64_t tuples = f.sp.dimV == 0 ? 0 : f.sp.dim() / f.sp.dimV;
    std::vector<int> slots;
    for (std::int64_t t = 0; t < tuples; ++t) {
        int g, v;
        f.sp.decode(t * f.sp.dimV, slots, g, v);
        Vec val(static_cast<std::size_t>(f.sp.dimV));
        bool nonzero = false;
        for (int x = 0; x < f.sp.dimV; ++x) {
            val[static_cast<std::size_t>(x)] =
                f.c[static_cast<std::size_t>(t * f.sp.dimV + x)];
            if (val[static_cast<std::size_t>(x)] != 0) nonzero = true;
        }
        if (!nonzero) continue;
        Json e;
        if (f.sp.p > 1) e["slots"] = slots;
        e["g"] = g;
        e["value"] = vec_to_json(val);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline Matrix parse_operator(const Json& j) {
    detail::expect_kind(j, "operator");
    int rows = detail::int_field(j, "rows");
    int cols = detail::int_field(j, "cols");
    if (rows < 0 || cols < 0) throw InputError("operator shape must be nonnegative");
    if (!j.contains("matrix")) throw InputError("operator needs \"matrix\"");
    return matrix_from_json(j["matrix"], rows, cols, "operator matrix");
}

inline Json serialize_operator(const Matrix& m) {
    Json j;
    j["format"] = 1;
    j["kind"] = "operator";
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["matrix"] = matrix_to_json(m);
    return j;
}

inline AltTriMap parse_trimap(const Json& arr, int n, int dv, const std::string& where) {
    AltTriMap t(n, dv);
    if (!arr.is_array()) throw InputError(where + " must be an array of entries");
    std::set<std::array<int, 3>> seen;
    for (const auto& e : arr) {
        auto a = detail::args_field(e, 3, n, where);
        if (!seen.insert({a[0], a[1], a[2]}).second)
            throw InputError(where + ": duplicate triple key");
        if (!e.contains("value")) throw InputError(where + ": entry needs \"value\"");
        t.set(a[0], a[1], a[2], vec_from_json(e["value"], dv, where + " value"));
    }
    return t;
}

inline Json serialize_trimap(const AltTriMap& t) {
    Json arr = Json::array();
    for (const auto& [key, val] : t.table()) {
        Json e;
        e["args"] = {key[0], key[1], key[2]};
        e["value"] = vec_to_json(val);
        arr.push_back(std::move(e));
    }
    return arr;
}

// Twisting data (psi, chi) of an abelian extension.
struct TwistDoc {
    AltTriMap psi;
    Matrix chi;
};

inline TwistDoc parse_twist(const Json& j, int n, int dv) {
    detail::expect_kind(j, "twist");
    TwistDoc t{AltTriMap(n, dv), Matrix(dv, n)};
    if (j.contains("psi")) t.psi = parse_trimap(j["psi"], n, dv, "psi");
    if (j.contains("chi")) t.chi = matrix_from_json(j["chi"], dv, n, "chi");
    return t;
}

inline Json serialize_twist(const TwistDoc& t, int n, int dv) {
    (void)n;
    (void)dv;
    Json j;
    j["format"] = 1;
    j["kind"] = "twist";
    j["psi"] = serialize_trimap(t.psi);
    j["chi"] = matrix_to_json(t.chi);
    return j;
}

inline Matrix named_matrix(const Json& j, const std::string& name, int rows, int cols) {
    if (!j.contains(name)) throw InputError("missing field \"" + name + "\"");
    return matrix_from_json(j[name], rows, cols, name);
}

struct SplittingDoc {
    Matrix embed, project, section;
};

inline SplittingDoc parse_splitting(const Json& j, int nh) {
    detail::expect_kind(j, "splitting");
    int n = detail::int_field(j, "dim");
    int dv = detail::int_field(j, "dimV");
    if (n + dv != nh) throw InputError("splitting dimensions do not sum to the big dimension");
    return {named_matrix(j, "embed", nh, dv), named_matrix(j, "project", n, nh),
            named_matrix(j, "section", nh, n)};
}

inline TwoTermAlgebra parse_two_term(const Json& j) {
    detail::expect_kind(j, "two-term");
    int n0 = detail::int_field(j, "dim0");
    int n1 = detail::int_field(j, "dim1");
    Scalar lambda(0);
    if (j.contains("weight")) lambda = scalar_from_json(j["weight"], "weight");
    ThreeLieAlgebra l30(n0);
    if (j.contains("l3")) {
        std::set<std::array<int, 3>> seen;
        for (const auto& e : j["l3"]) {
            auto a = detail::args_field(e, 3, n0, "l3");
            if (!seen.insert({a[0], a[1], a[2]}).second)
                throw InputError("l3: duplicate triple key");
            if (!e.contains("value")) throw InputError("l3: entry needs \"value\"");
            l30.set_bracket(a[0], a[1], a[2], vec_from_json(e["value"], n0, "l3 value"));
        }
    }
    Representation mix(n0, n1, lambda);
    if (j.contains("rho")) {
        std::set<std::pair<int, int>> seen;
        for (const auto& e : j["rho"]) {
            auto a = detail::args_field(e, 2, n0, "rho");
            if (!seen.insert({a[0], a[1]}).second) throw InputError("rho: duplicate pair key");
            if (!e.contains("matrix")) throw InputError("rho: entry needs \"matrix\"");
            mix.set_rho(a[0], a[1], matrix_from_json(e["matrix"], n1, n1, "rho matrix"));
        }
    }
    if (j.contains("d1")) mix.dV() = matrix_from_json(j["d1"], n1, n1, "d1");
    TwoTermAlgebra t = make_two_term(std::move(l30), std::move(mix),
                                     j.contains("h") ? named_matrix(j, "h", n0, n1)
                                                     : Matrix(n0, n1),
                                     j.contains("d0") ? named_matrix(j, "d0", n0, n0)
                                                      : Matrix(n0, n0));
    if (j.contains("d2")) t.d2 = parse_trimap(j["d2"], n0, n1, "d2");
    if (j.contains("l5")) {
        Json l5doc = j["l5"];
        l5doc["format"] = 1;
        l5doc["kind"] = "cochain";
        l5doc["degree"] = 3;
        t.l5 = parse_cochain(l5doc, n0, n1);
    }
    return t;
}

inline Json serialize_two_term(const TwoTermAlgebra& t) {
    Json j;
    j["format"] = 1;
    j["kind"] = "two-term";
    j["dim0"] = t.n0;
    j["dim1"] = t.n1;
    j["weight"] = scalar_to_json(t.lambda());
    Json l3 = Json::array();
    for (const auto& [key, val] : t.l30.table()) {
        Json e;
        e["args"] = {key[0], key[1], key[2]};
        e["value"] = vec_to_json(val);
        l3.push_back(std::move(e));
    }
    j["l3"] = std::move(l3);
    Json rho = Json::array();
    for (const auto& [key, m] : t.mix.rho_table()) {
        Json e;
        e["args"] = {key.first, key.second};
        e["matrix"] = matrix_to_json(m);
        rho.push_back(std::move(e));
    }
    j["rho"] = std::move(rho);
    j["h"] = matrix_to_json(t.h);
    j["d0"] = matrix_to_json(t.d0);
    j["d1"] = matrix_to_json(t.d1());
    j["d2"] = serialize_trimap(t.d2);
    Json l5 = serialize_cochain(t.l5);
    l5.erase("format");
    l5.erase("kind");
    l5.erase("degree");
    j["l5"] = std::move(l5);
    return j;
}

inline CrossedModule parse_crossed_module(const Json& j) {
    detail::expect_kind(j, "crossed-module");
    int n0 = detail::int_field(j, "dim0");
    int n1 = detail::int_field(j, "dim1");
    Scalar lambda(0);
    if (j.contains("weight")) lambda = scalar_from_json(j["weight"], "weight");
    auto bracket = [&](const std::string& name, int n) {
        ThreeLieAlgebra a(n);
        if (j.contains(name))
            for (const auto& e : j[name]) {
                auto ar = detail::args_field(e, 3, n, name);
                if (!e.contains("value")) throw InputError(name + ": entry needs \"value\"");
                a.set_bracket(ar[0], ar[1], ar[2], vec_from_json(e["value"], n, name));
            }
        return a;
    };
    CrossedModule m{bracket("bracket0", n0),
                    {j.contains("d0") ? named_matrix(j, "d0", n0, n0) : Matrix(n0, n0), lambda},
                    bracket("bracket1", n1),
                    {j.contains("d1") ? named_matrix(j, "d1", n1, n1) : Matrix(n1, n1), lambda},
                    j.contains("h") ? named_matrix(j, "h", n0, n1) : Matrix(n0, n1),
                    Representation(n0, n1, lambda)};
    m.rho.dV() = m.d1.d;
    if (j.contains("rho"))
        for (const auto& e : j["rho"]) {
            auto a = detail::args_field(e, 2, n0, "rho");
            m.rho.set_rho(a[0], a[1], matrix_from_json(e["matrix"], n1, n1, "rho matrix"));
        }
    return m;
}

inline Json serialize_crossed_module(const CrossedModule& m) {
    Json j;
    j["format"] = 1;
    j["kind"] = "crossed-module";
    j["dim0"] = m.g0.dim();
    j["dim1"] = m.g1.dim();
    j["weight"] = scalar_to_json(m.d0.lambda);
    auto bracket = [&](const ThreeLieAlgebra& a) {
        Json arr = Json::array();
        for (const auto& [key, val] : a.table()) {
            Json e;
            e["args"] = {key[0], key[1], key[2]};
            e["value"] = vec_to_json(val);
            arr.push_back(std::move(e));
        }
        return arr;
    };
    j["bracket0"] = bracket(m.g0);
    j["bracket1"] = bracket(m.g1);
    j["d0"] = matrix_to_json(m.d0.d);
    j["d1"] = matrix_to_json(m.d1.d);
    j["h"] = matrix_to_json(m.h);
    Json rho = Json::array();
    for (const auto& [key, mat] : m.rho.rho_table()) {
        Json e;
        e["args"] = {key.first, key.second};
        e["matrix"] = matrix_to_json(mat);
        rho.push_back(std::move(e));
    }
    j["rho"] = std::move(rho);
    return j;
}

// Deformation document: higher-order brackets and linear parts; order 0 comes
// from the algebra document it accompanies.
inline DeformationData parse_deformation(const Json& j, const AlgebraDoc& base) {
    detail::expect_kind(j, "deformation");
    const int n = base.algebra.dim();
    DeformationData data{{base.algebra}, {base.dd.d}, base.dd.lambda};
    if (!j.contains("pis") || !j["pis"].is_array())
        throw InputError("deformation needs \"pis\" (array of bracket tables)");
    if (!j.contains("phis") || !j["phis"].is_array() || j["phis"].size() != j["pis"].size())
        throw InputError("deformation needs \"phis\" matching \"pis\" in length");
    for (std::size_t k = 0; k < j["pis"].size(); ++k) {
        ThreeLieAlgebra pi(n);
        for (const auto& e : j["pis"][k]) {
            auto a = detail::args_field(e, 3, n, "pis");
            if (!e.contains("value")) throw InputError("pis: entry needs \"value\"");
            pi.set_bracket(a[0], a[1], a[2], vec_from_json(e["value"], n, "pis value"));
        }
        data.pis.push_back(std::move(pi));
        data.phis.push_back(matrix_from_json(j["phis"][k], n, n, "phis"));
    }
    return data;
}

inline Json verdict_to_json(const Verdict& v) {
    Json j;
    j["verdict"] = v.pass() ? "pass" : "fail";
    Json viols = Json::array();
    for (const auto& viol : v.violations) {
        Json e;
        e["identity"] = viol.identity;
        e["tuple"] = viol.tuple;
        e["defect"] = vec_to_json(viol.defect);
        viols.push_back(std::move(e));
    }
    j["violations"] = std::move(viols);
    return j;
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

} // namespace trilie
