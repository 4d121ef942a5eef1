#include <catch2/catch_amalgamated.hpp>

#include "trilie/io.hpp"

using namespace trilie;

static Json parse_text(const std::string& text) { return Json::parse(text); }

TEST_CASE("algebra documents round-trip through parse and serialize") {
    Json doc = parse_text(R"({
        "format": 1, "kind": "algebra", "dim": 3, "weight": "1/2",
        "bracket": [{"args": [0, 1, 2], "value": ["1", "-2", "0"]}],
        "differential": [["1","0","0"],["0","2","0"],["0","0","-1/3"]]
    })");
    AlgebraDoc a = parse_algebra(doc);
    REQUIRE(a.algebra.dim() == 3);
    REQUIRE(a.dd.lambda == scalar_of(1, 2));
    REQUIRE(a.algebra.bracket(0, 1, 2) == Vec{Scalar(1), Scalar(-2), Scalar(0)});

    Json out = serialize_algebra(a);
    AlgebraDoc b = parse_algebra(out);
    REQUIRE(b.algebra.table() == a.algebra.table());
    REQUIRE(b.dd.d == a.dd.d);
    REQUIRE(b.dd.lambda == a.dd.lambda);
    // serialization is canonical: a second pass is byte-identical
    REQUIRE(serialize_algebra(b).dump(2) == out.dump(2));
}

TEST_CASE("integer literals are accepted alongside rational strings") {
    Json doc = parse_text(R"({
        "format": 1, "kind": "algebra", "dim": 2, "weight": 3,
        "differential": [[1, "1/2"], [-2, 0]]
    })");
    AlgebraDoc a = parse_algebra(doc);
    REQUIRE(a.dd.lambda == 3);
    REQUIRE(a.dd.d(0, 1) == scalar_of(1, 2));
    REQUIRE(a.dd.d(1, 0) == -2);
}

TEST_CASE("floating-point literals are rejected with the canonical message") {
    Json doc = parse_text(R"({"format": 1, "kind": "algebra", "dim": 1, "weight": 0.5})");
    try {
        parse_algebra(doc);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        REQUIRE(std::string(e.what()).find("floating-point literal forbidden; write 1/2") !=
                std::string::npos);
    }
    Json doc2 = parse_text(R"({"format": 1, "kind": "algebra", "dim": 1, "weight": "0.5"})");
    REQUIRE_THROWS_AS(parse_algebra(doc2), InputError);
}

TEST_CASE("non-increasing bracket keys are rejected") {
    Json doc = parse_text(R"({
        "format": 1, "kind": "algebra", "dim": 3,
        "bracket": [{"args": [2, 1, 0], "value": ["1", "0", "0"]}]
    })");
    try {
        parse_algebra(doc);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        REQUIRE(std::string(e.what()).find("triple must be strictly increasing") !=
                std::string::npos);
    }
}

TEST_CASE("duplicate keys and out-of-range indices are rejected") {
    Json dup = parse_text(R"({
        "format": 1, "kind": "algebra", "dim": 3,
        "bracket": [{"args": [0, 1, 2], "value": ["1", "0", "0"]},
                    {"args": [0, 1, 2], "value": ["2", "0", "0"]}]
    })");
    REQUIRE_THROWS_AS(parse_algebra(dup), InputError);
    Json oob = parse_text(R"({
        "format": 1, "kind": "algebra", "dim": 3,
        "bracket": [{"args": [0, 1, 3], "value": ["1", "0", "0"]}]
    })");
    REQUIRE_THROWS_AS(parse_algebra(oob), InputError);
}

TEST_CASE("missing or wrong kind and format are rejected") {
    REQUIRE_THROWS_AS(parse_algebra(parse_text(R"({"kind": "algebra", "dim": 1})")), InputError);
    REQUIRE_THROWS_AS(parse_algebra(parse_text(R"({"format": 2, "kind": "algebra", "dim": 1})")),
                      InputError);
    REQUIRE_THROWS_AS(parse_algebra(parse_text(R"({"format": 1, "kind": "operator"})")),
                      InputError);
}

TEST_CASE("representation documents round-trip") {
    Json doc = parse_text(R"({
        "format": 1, "kind": "representation", "dim": 2, "dimV": 2,
        "rho": [{"args": [0, 1], "matrix": [["0","1"],["-1","0"]]}],
        "dV": [["1","0"],["0","0"]]
    })");
    Representation r = parse_representation(doc, Scalar(2));
    REQUIRE(r.lambda() == 2);
    REQUIRE(r.rho(0, 1)(0, 1) == 1);
    Json out = serialize_representation(r);
    Representation r2 = parse_representation(out, Scalar(2));
    REQUIRE(r2.rho_table() == r.rho_table());
    REQUIRE(r2.dV() == r.dV());
    REQUIRE(serialize_representation(r2).dump(2) == out.dump(2));
}

TEST_CASE("cochain documents round-trip sparsely") {
    Json doc = parse_text(R"({
        "format": 1, "kind": "cochain", "degree": 2,
        "entries": [{"slots": [1], "g": 0, "value": ["3", "-1/2"]},
                    {"slots": [0], "g": 2, "value": ["0", "1"]}]
    })");
    Cochain f = parse_cochain(doc, 3, 2);
    REQUIRE(f.at({1}, 0, 0) == 3);
    REQUIRE(f.at({1}, 0, 1) == scalar_of(-1, 2));
    Json out = serialize_cochain(f);
    Cochain g = parse_cochain(out, 3, 2);
    REQUIRE(g.c == f.c);
    REQUIRE(serialize_cochain(g).dump(2) == out.dump(2));
}

TEST_CASE("operator documents round-trip") {
    Matrix m(2, 3);
    m(0, 1) = scalar_of(5, 7);
    m(1, 2) = -4;
    Json out = serialize_operator(m);
    REQUIRE(parse_operator(out) == m);
}

TEST_CASE("two-term documents round-trip") {
    TwoTermAlgebra t = make_two_term(a3_algebra(),
                                     trivial_rep(a3_algebra(), 2, Matrix(2, 2), Scalar(1)),
                                     Matrix(3, 2), Matrix(3, 3));
    t.d2.set(0, 1, 2, {Scalar(1), Scalar(-3)});
    t.l5.at({0, 2}, 1, 0) = scalar_of(2, 5);
    Json out = serialize_two_term(t);
    TwoTermAlgebra u = parse_two_term(out);
    REQUIRE(u.l30.table() == t.l30.table());
    REQUIRE(u.mix.rho_table() == t.mix.rho_table());
    REQUIRE(u.lambda() == t.lambda());
    REQUIRE(u.d2 == t.d2);
    REQUIRE(u.l5.c == t.l5.c);
    REQUIRE(serialize_two_term(u).dump(2) == out.dump(2));
}

TEST_CASE("crossed-module documents round-trip") {
    ThreeLieAlgebra g0(4);
    g0.set_bracket(0, 1, 2, {Scalar(1), Scalar(0), Scalar(0), Scalar(0)});
    CrossedModule m{g0,
                    {Matrix(4, 4), Scalar(0)},
                    ThreeLieAlgebra(1),
                    {Matrix(1, 1), Scalar(0)},
                    Matrix(4, 1),
                    trivial_rep(g0, 1, Matrix(1, 1), Scalar(0))};
    m.h(3, 0) = 1;
    Json out = serialize_crossed_module(m);
    CrossedModule m2 = parse_crossed_module(out);
    REQUIRE(m2.g0.table() == m.g0.table());
    REQUIRE(m2.g1.table() == m.g1.table());
    REQUIRE(m2.h == m.h);
    REQUIRE(serialize_crossed_module(m2).dump(2) == out.dump(2));
}

TEST_CASE("verdicts serialize violations in order") {
    Verdict v;
    v.report("first", {0, 1}, {Scalar(2)});
    v.report("second", {2}, {Scalar(0)});  // clean, not recorded
    Json j = verdict_to_json(v);
    REQUIRE(j["verdict"] == "fail");
    REQUIRE(j["violations"].size() == 1);
    REQUIRE(j["violations"][0]["identity"] == "first");
}
