// Acceptance gate: one line per criterion, exit 0 only if every criterion
// passes within its time budget. Each check recomputes its own facts; nothing
// is stubbed or skipped.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "trilie/io.hpp"
#include "trilie/leibniz.hpp"
#include "trilie/operators.hpp"
#include "trilie/poly.hpp"
#include "trilie/two_term.hpp"

using namespace trilie;

namespace {

int failures = 0;

void criterion(int num, const std::string& name, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
        ok = false;
        note += (note.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("criterion %2d %-28s %s  (%.2fs)%s%s\n", num, name.c_str(),
                ok ? "PASS" : "FAIL", secs, note.empty() ? "" : "  -- ", note.c_str());
    if (!ok) ++failures;
}

Vec rand_vec(std::mt19937& gen, int len, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<long> dist(lo, hi);
    Vec v(static_cast<std::size_t>(len));
    for (auto& x : v) x = dist(gen);
    return v;
}

Matrix rand_matrix(std::mt19937& gen, int r, int c, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<long> dist(lo, hi);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = dist(gen);
    return m;
}

ThreeLieAlgebra bracket_from_cochain2(const Vec& c2, int n) {
    AltTriMap t = trimap_from_cochain2(c2, n, n);
    ThreeLieAlgebra a(n);
    for (const auto& [key, val] : t.table()) a.set_bracket(key[0], key[1], key[2], val);
    return a;
}

Matrix matrix_from_cochain1(const Vec& c1, int n, int dimV) {
    Matrix m(dimV, n);
    for (int g = 0; g < n; ++g)
        for (int v = 0; v < dimV; ++v)
            m(v, g) = c1[static_cast<std::size_t>(g * dimV + v)];
    return m;
}

ThreeLieAlgebra a4_algebra() {
    ThreeLieAlgebra a(4);
    a.set_bracket(0, 1, 2, {Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
    a.set_bracket(0, 1, 3, {Scalar(0), Scalar(0), Scalar(-1), Scalar(0)});
    a.set_bracket(0, 2, 3, {Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
    a.set_bracket(1, 2, 3, {Scalar(-1), Scalar(0), Scalar(0), Scalar(0)});
    return a;
}

struct CliRun {
    int exit_code;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    std::string out_file = std::string(std::tmpnam(nullptr)) + ".acc";
    std::string cmd = std::string(CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::remove(out_file.c_str());
    return {WEXITSTATUS(status), buf.str()};
}

std::string fx(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

// The three reference complexes used by criteria 3 and 4.
std::vector<Complexes> complex_fixtures(const Scalar& lam) {
    std::vector<Complexes> out;
    ThreeLieAlgebra a3 = a3_algebra();
    for (long a : {1L, 0L}) {
        WeightedDifferential dd = diag_differential({Scalar(a), Scalar(0), Scalar(0)}, lam);
        out.emplace_back(a3, dd, adjoint_rep(a3, dd));
    }
    ThreeLieAlgebra ab = abelian_algebra(2);
    std::mt19937 gen(7);
    WeightedDifferential dd{rand_matrix(gen, 2, 2), lam};
    out.emplace_back(ab, dd, trivial_rep(ab, 2, Matrix(2, 2), lam));
    return out;
}

} // namespace

int main() {
    criterion(1, "axiom suite", 1.0, [](std::string&) {
        ThreeLieAlgebra a3 = a3_algebra();
        if (!check_fundamental_identity(a3).pass()) return false;
        for (Scalar a : {Scalar(0), Scalar(1), Scalar(-2), scalar_of(3, 5)})
            for (Scalar lam : {Scalar(0), Scalar(1), Scalar(-1), Scalar(2), scalar_of(1, 2)}) {
                WeightedDifferential dd = diag_differential({a, Scalar(0), Scalar(0)}, lam);
                if (!check_weighted_differential(a3, dd).pass()) return false;
            }
        std::mt19937 gen(11);
        for (int n : {2, 4}) {
            ThreeLieAlgebra ab = abelian_algebra(n);
            WeightedDifferential dd{rand_matrix(gen, n, n), Scalar(1)};
            if (!check_fundamental_identity(ab).pass()) return false;
            if (!check_weighted_differential(ab, dd).pass()) return false;
        }
        return true;
    });

    criterion(2, "constraint adjudication", 5.0, [](std::string& note) {
        ThreeLieAlgebra a3 = a3_algebra();
        ConstraintSystem sys = derive_differential_constraints(a3, Scalar(1));
        // two linear conditions and one polynomial condition
        if (sys.equations.size() != 3) return false;
        int linear = 0;
        for (const Poly& p : sys.equations) {
            std::string s = poly_str(p, 3);
            if (s == "d21" || s == "d31") ++linear;
        }
        if (linear != 2) return false;

        // the shipped witness matrix: rejected by direct expansion of the
        // weighted rule, accepted by the alternative cubic recorded in
        // docs/conventions.md
        Matrix w(3, 3);
        w(0, 0) = 1; w(0, 1) = 1; w(0, 2) = 2;
        w(1, 0) = 0; w(1, 1) = 1; w(1, 2) = 1;
        w(2, 0) = 0; w(2, 1) = 4; w(2, 2) = 1;
        Verdict direct = check_weighted_differential(a3, {w, Scalar(1)});
        Verdict symbolic = evaluate_constraints(sys, w);
        if (direct.pass() || symbolic.pass()) return false;
        // the direct defect is 2 e1 on the basis triple (lhs - rhs orientation)
        if (direct.violations.size() != 1) return false;
        if (direct.violations[0].defect != Vec{Scalar(2), Scalar(0), Scalar(0)}) return false;
        // the alternative cubic: d22 + d33 + l(d11d22 + d11d33 + d22d33)
        //   + l^2 (d11 d12 d33 - d11 d23 d32 - d13 d22 d33), at l = 1
        auto e = [&](int r, int c) { return w(r, c); };
        Scalar alt = e(1, 1) + e(2, 2) +
                     (e(0, 0) * e(1, 1) + e(0, 0) * e(2, 2) + e(1, 1) * e(2, 2)) +
                     (e(0, 0) * e(0, 1) * e(2, 2) - e(0, 0) * e(1, 2) * e(2, 1) -
                      e(0, 2) * e(1, 1) * e(2, 2));
        if (alt != 0) return false;
        note = "witness fails direct expansion (defect 2 e1) but satisfies the "
               "alternative cubic; see docs/conventions.md";

        // symbolic and numeric verdicts agree on 200 random matrices
        std::mt19937 gen(1234);
        for (int trial = 0; trial < 200; ++trial) {
            Matrix d = rand_matrix(gen, 3, 3);
            if (evaluate_constraints(sys, d).pass() !=
                check_weighted_differential(a3, {d, Scalar(1)}).pass())
                return false;
        }
        return true;
    });

    criterion(3, "complex suite", 30.0, [](std::string&) {
        for (Scalar lam : {Scalar(0), Scalar(1), Scalar(-1), Scalar(2)})
            for (Complexes& cc : complex_fixtures(lam))
                for (int p = 1; p <= 3; ++p) {
                    if (!(cc.partial(p + 1) * cc.partial(p)).is_zero()) return false;
                    if (!(cc.partial_corrected(p + 1) * cc.partial_corrected(p)).is_zero())
                        return false;
                    if (!(cc.partial_pair(p + 1) * cc.partial_pair(p)).is_zero()) return false;
                    if (!(cc.delta(p + 1) * cc.partial(p) ==
                          cc.partial_corrected(p) * cc.delta(p)))
                        return false;
                }
        return true;
    });

    criterion(4, "long exact sequence", 30.0, [](std::string&) {
        for (Scalar lam : {Scalar(0), Scalar(1), Scalar(-1), Scalar(2)})
            for (Complexes& cc : complex_fixtures(lam))
                if (!les_check(cc, 2).exact) return false;
        return true;
    });

    criterion(5, "weight-0 bridge", 30.0, [](std::string&) {
        ThreeLieAlgebra a3 = a3_algebra();
        Matrix d(3, 3);
        d(0, 0) = 1; d(1, 1) = 1; d(2, 2) = -1;
        WeightedDifferential dd{d, Scalar(0)};
        for (bool adjoint : {true, false}) {
            Representation r = adjoint ? adjoint_rep(a3, dd)
                                       : trivial_rep(a3, 2, Matrix(2, 2), Scalar(0));
            Complexes cc(a3, dd, r);
            BridgeReport rep = leibniz_bridge(cc, 3);
            if (!rep.module_axioms.pass() || !rep.ok) return false;
            // cohomology dimensions across the bridge for n = 1, 2
            LeibnizModule mod = hom_module(a3, dd, r);
            for (int n = 1; n <= 2; ++n) {
                Matrix outP(cc.partial_pair(n));
                std::int64_t zp = cc.pair_dim(n) - rank(outP);
                std::int64_t bp = n == 1 ? 0 : rank(cc.partial_pair(n - 1));
                Matrix outL = leib_pair_partial(mod, n - 1);
                std::int64_t zl = outL.cols() - rank(outL);
                std::int64_t bl = n == 1 ? 0 : rank(leib_pair_partial(mod, n - 2));
                if (zp - bp != zl - bl) return false;
            }
        }
        return true;
    });

    criterion(6, "operator suite", 60.0, [](std::string&) {
        ThreeLieAlgebra a3 = a3_algebra();
        std::mt19937 gen(271828);
        for (Scalar lam : {Scalar(0), Scalar(1), Scalar(2)}) {
            for (long a : {1L, 0L}) {
                WeightedDifferential dd =
                    diag_differential({Scalar(a), Scalar(0), Scalar(0)}, lam);
                // 0, id, alpha id are always compatible
                for (Scalar alpha : {Scalar(0), Scalar(1), scalar_of(3, 5)}) {
                    Matrix nmat = Matrix::identity(3) * alpha;
                    if (!is_nijenhuis(a3, dd, nmat).pass()) return false;
                    auto [def, ddd] = deformed_bracket(a3, dd, nmat, false);
                    Verdict cert = check_fundamental_identity(def);
                    cert.merge(check_weighted_differential(def, ddd));
                    if (!cert.pass()) return false;
                }
                // verdict agreement of the hat shift on 100 random operators
                Representation rho = adjoint_rep(a3, dd);
                for (int trial = 0; trial < 100; ++trial)
                    if (!hat_K_equivalence(a3, dd, rho, rand_matrix(gen, 3, 3)).agree)
                        return false;
                // the constructed relative operator and its induced chain
                Representation triv = trivial_rep(a3, 3, Matrix(3, 3), lam);
                Matrix k(3, 3);
                k(1, 0) = 1; k(2, 1) = 1; k(2, 2) = 1;
                if (!is_o_operator(a3, dd, triv, k).pass()) return false;
                auto [vb, vdd] = bracket_K(a3, dd, triv, k, false);
                Verdict cert = check_fundamental_identity(vb);
                cert.merge(check_weighted_differential(vb, vdd));
                if (!cert.pass()) return false;
                Representation rk = rho_K(a3, dd, triv, k);
                if (!check_representation(vb, vdd, rk).pass()) return false;
                if (!o_operator_cocycle_check(a3, dd, triv, k).pass()) return false;
            }
        }
        return true;
    });

    criterion(7, "deformation suite", 60.0, [](std::string&) {
        ThreeLieAlgebra a3 = a3_algebra();
        std::mt19937 gen(314159);
        for (Scalar lam : {Scalar(0), Scalar(1)}) {
            for (long a : {1L, 0L}) {
                WeightedDifferential dd =
                    diag_differential({Scalar(a), Scalar(0), Scalar(0)}, lam);
                Complexes cc(a3, dd, adjoint_rep(a3, dd));
                // the two routes agree on 100 random infinitesimal pairs
                for (int trial = 0; trial < 25; ++trial) {
                    ThreeLieAlgebra pi1(3);
                    pi1.set_bracket(0, 1, 2, rand_vec(gen, 3));
                    Matrix phi1 = rand_matrix(gen, 3, 3);
                    CocycleAgreement agr = infinitesimal_is_2cocycle(a3, dd, pi1, phi1);
                    if (!agr.agree) return false;
                }
                // coboundary pairs are always accepted by both routes
                for (int trial = 0; trial < 10; ++trial) {
                    Vec c1 = rand_vec(gen, static_cast<int>(cc.space(1).dim()));
                    Vec pair2 = cc.partial_pair(1).apply(c1);
                    std::int64_t d2 = cc.space(2).dim();
                    Vec top(pair2.begin(), pair2.begin() + d2);
                    Vec bot(pair2.begin() + d2, pair2.end());
                    ThreeLieAlgebra pi1 = bracket_from_cochain2(top, 3);
                    Matrix phi1 = matrix_from_cochain1(bot, 3, 3);
                    CocycleAgreement agr = infinitesimal_is_2cocycle(a3, dd, pi1, phi1);
                    if (!agr.cocycle || !agr.first_order_ok || !agr.agree) return false;
                }
            }
        }
        // the operator-generated first-order pair is a trivial deformation
        WeightedDifferential dd{Matrix(3, 3), Scalar(1)};
        Matrix nmat(3, 3);
        nmat(1, 0) = 1;
        ThreeLieAlgebra pi1(3);
        pi1.set_bracket(0, 1, 2, {Scalar(0), Scalar(-1), Scalar(0)});
        DeformationData data = first_order_deformation(a3, dd, pi1, Matrix(3, 3));
        if (!deformation_check(data).pass()) return false;
        if (!is_trivial_deformation(data, nmat).pass()) return false;
        return true;
    });

    criterion(8, "extension suite", 60.0, [](std::string& note) {
        ThreeLieAlgebra a3 = a3_algebra();
        std::mt19937 gen(662607);
        int cocycles = 0, trials = 0;
        for (Scalar lam : {Scalar(0), Scalar(1)}) {
            WeightedDifferential dd = diag_differential({Scalar(1), Scalar(0), Scalar(0)}, lam);
            for (bool adjoint : {true, false}) {
                Representation r = adjoint ? adjoint_rep(a3, dd)
                                           : trivial_rep(a3, 2, Matrix(2, 2), lam);
                const int dv = r.dimV();
                Complexes cc(a3, dd, r);
                // iff: random twisting pairs are cocycles exactly when the
                // assembled structure passes every verifier
                for (int trial = 0; trial < 25; ++trial, ++trials) {
                    ExtensionDatum e{a3, dd, r, AltTriMap(3, dv), rand_matrix(gen, dv, 3)};
                    e.psi.set(0, 1, 2, rand_vec(gen, dv));
                    if (trial % 5 == 0) {
                        // seed genuine cocycles so both directions of the
                        // equivalence are exercised
                        Vec pair2 = cc.partial_pair(1).apply(
                            rand_vec(gen, static_cast<int>(cc.pair_dim(1))));
                        std::int64_t sd2 = cc.space(2).dim();
                        e.psi = trimap_from_cochain2(Vec(pair2.begin(), pair2.begin() + sd2),
                                                     3, dv);
                        e.chi = matrix_from_cochain1(Vec(pair2.begin() + sd2, pair2.end()),
                                                     3, dv);
                    }
                    bool cocycle = pair_2cocycle_check(e).pass();
                    if (cocycle) ++cocycles;
                    if (cocycle != extension_from_cocycle(e, false).cert.pass()) return false;
                }
                // coboundary twists round-trip byte-exactly
                Vec c1 = rand_vec(gen, static_cast<int>(cc.pair_dim(1)));
                Vec pair2 = cc.partial_pair(1).apply(c1);
                std::int64_t sd2 = cc.space(2).dim();
                ExtensionDatum e{a3, dd, r,
                                 trimap_from_cochain2(Vec(pair2.begin(), pair2.begin() + sd2),
                                                      3, dv),
                                 matrix_from_cochain1(Vec(pair2.begin() + sd2, pair2.end()),
                                                      3, dv)};
                AssembledExtension ext = extension_from_cocycle(e);
                if (!ext.cert.pass()) return false;
                ExtractionResult back = cocycle_from_extension(ext.hat, ext.hat_d, ext.embed,
                                                               ext.project, ext.section);
                if (!back.preconditions.pass() || !back.cert.pass() || !back.datum) return false;
                if (!(back.datum->base.table() == e.base.table())) return false;
                if (!(back.datum->rho.rho_table() == e.rho.rho_table())) return false;
                if (!(back.datum->rho.dV() == e.rho.dV())) return false;
                if (!(back.datum->psi == e.psi)) return false;
                if (!(back.datum->chi == e.chi)) return false;
                // section independence: rho is unchanged and the extracted
                // twists are cohomologous
                for (int trial = 0; trial < 5; ++trial) {
                    Matrix w = rand_matrix(gen, dv, 3);
                    Matrix section2 = ext.section + ext.embed * w;
                    ExtractionResult other = cocycle_from_extension(
                        ext.hat, ext.hat_d, ext.embed, ext.project, section2);
                    if (!other.preconditions.pass() || !other.datum) return false;
                    if (!(other.datum->rho.rho_table() == back.datum->rho.rho_table()))
                        return false;
                    EquivalenceResult eq = extensions_equivalent(*back.datum, *other.datum);
                    if (!eq.witness || !eq.verification.pass()) return false;
                }
            }
        }
        // equivalence decision matches cohomology classes on a module with
        // nontrivial degree-2 classes
        WeightedDifferential d0{Matrix(3, 3), Scalar(0)};
        Representation triv = trivial_rep(a3, 1, Matrix(1, 1), Scalar(0));
        Complexes cc(a3, d0, triv);
        Matrix sys = vconcat(Matrix(cc.partial_pair(2)),
                             alternating_constraints(3, 1, static_cast<int>(cc.pair_dim(2))));
        std::optional<Vec> nontrivial;
        for (const Vec& z : kernel_basis(sys))
            if (!is_zero(z) && !solve(cc.partial_pair(1), z)) { nontrivial = z; break; }
        if (!nontrivial) return false;
        std::int64_t sd2 = cc.space(2).dim();
        auto datum_from = [&](const Vec& z) {
            return ExtensionDatum{a3, d0, triv,
                                  trimap_from_cochain2(Vec(z.begin(), z.begin() + sd2), 3, 1),
                                  matrix_from_cochain1(Vec(z.begin() + sd2, z.end()), 3, 1)};
        };
        ExtensionDatum ez = datum_from(*nontrivial);
        ExtensionDatum e0{a3, d0, triv, AltTriMap(3, 1), Matrix(1, 3)};
        if (extensions_equivalent(ez, e0).witness) return false;  // different classes
        Vec shifted = *nontrivial;
        add_to(shifted, cc.partial_pair(1).apply(rand_vec(gen, static_cast<int>(cc.pair_dim(1)))));
        EquivalenceResult eq = extensions_equivalent(ez, datum_from(shifted));
        if (!eq.witness || !eq.verification.pass()) return false;
        note = std::to_string(cocycles) + "/" + std::to_string(trials) +
               " random twists were cocycles";
        return cocycles < trials;
    });

    criterion(9, "two-term suite", 60.0, [](std::string&) {
        ThreeLieAlgebra a3 = a3_algebra();
        // zero-cocycle round-trips
        for (bool adjoint : {true, false}) {
            WeightedDifferential dd =
                diag_differential({Scalar(2), Scalar(0), Scalar(0)}, Scalar(1));
            Representation r = adjoint ? adjoint_rep(a3, dd)
                                       : trivial_rep(a3, 2, Matrix(2, 2), Scalar(1));
            TwoTermAlgebra t = make_two_term(a3, r, Matrix(3, r.dimV()), dd.d);
            SkeletalCocycle c = skeletal_to_cocycle(t);
            if (!c.cert.pass() || !is_zero(c.pair3)) return false;
            SkeletalResult back = cocycle_to_skeletal(c.base, c.base_d, c.rho, c.pair3);
            if (!back.cert.pass() || !back.structure) return false;
            if (!(back.structure->l5.c == t.l5.c) || !(back.structure->d2 == t.d2)) return false;
        }
        // nonzero cocycle found through an explicit kernel basis
        {
            WeightedDifferential d0{Matrix(3, 3), Scalar(0)};
            Representation triv = trivial_rep(a3, 1, Matrix(1, 1), Scalar(0));
            Complexes cc(a3, d0, triv);
            Matrix sys = vconcat(Matrix(cc.partial_pair(3)),
                                 alternating_constraints(3, 1, static_cast<int>(cc.pair_dim(3))));
            std::optional<Vec> pick;
            for (const Vec& z : kernel_basis(sys))
                if (!is_zero(z)) { pick = z; break; }
            if (!pick) return false;
            SkeletalResult built = cocycle_to_skeletal(a3, d0, triv, *pick);
            if (!built.cert.pass() || !built.structure) return false;
            SkeletalCocycle back = skeletal_to_cocycle(*built.structure);
            if (!back.cert.pass() || !(back.pair3 == *pick)) return false;
        }
        // strict round-trips, with and without a connecting map
        {
            ThreeLieAlgebra central(4);
            central.set_bracket(0, 1, 2, {Scalar(1), Scalar(0), Scalar(0), Scalar(0)});
            Representation r = trivial_rep(central, 1, Matrix(1, 1), Scalar(0));
            Matrix h(4, 1);
            h(3, 0) = 1;
            TwoTermAlgebra t = make_two_term(central, r, h, Matrix(4, 4));
            CrossedResult cr = strict_to_crossed(t);
            if (!cr.cert.pass() || !cr.module) return false;
            if (!check_crossed_module(*cr.module).pass()) return false;
            StrictResult back = crossed_to_strict(*cr.module);
            if (!back.cert.pass() || !back.structure) return false;
            if (!(back.structure->h == t.h)) return false;
            if (!(back.structure->l30.table() == t.l30.table())) return false;

            t.h = Matrix(4, 1);  // trivial connecting map
            CrossedResult cr0 = strict_to_crossed(t);
            if (!cr0.cert.pass() || !cr0.module) return false;
            StrictResult back0 = crossed_to_strict(*cr0.module);
            if (!back0.cert.pass() || !(back0.structure->h == t.h)) return false;
        }
        // 50 random single-entry corrections of each passing fixture break
        // coherence (4-dimensional base: no correction direction is a cocycle)
        std::mt19937 gen(5150);
        std::uniform_int_distribution<long> val(1, 3);
        for (bool adjoint : {true, false}) {
            ThreeLieAlgebra a4 = a4_algebra();
            WeightedDifferential dd{Matrix(4, 4), Scalar(0)};
            Representation r = adjoint ? adjoint_rep(a4, dd)
                                       : trivial_rep(a4, 1, Matrix(1, 1), Scalar(0));
            TwoTermAlgebra t = make_two_term(a4, r, Matrix(4, r.dimV()), dd.d);
            if (!check_two_term(t).pass()) return false;
            std::uniform_int_distribution<std::size_t> pos(0, t.l5.c.size() - 1);
            for (int trial = 0; trial < 50; ++trial) {
                TwoTermAlgebra p = t;
                p.l5.c[pos(gen)] += Scalar(val(gen));
                if (check_two_term(p).pass()) return false;
            }
        }
        return true;
    });

    criterion(10, "cli contract", 5.0, [](std::string&) {
        // parse/serialize round-trip over the shipped corpus
        for (const char* name : {"algebra.a3.json", "algebra.a3.zero-weight.json",
                                 "algebra.a3.static-differential.json",
                                 "algebra.bad-witness.json", "algebra.extended.json"}) {
            AlgebraDoc doc = parse_algebra(load_json_file(fx(name)));
            AlgebraDoc again = parse_algebra(serialize_algebra(doc));
            if (!(again.algebra.table() == doc.algebra.table()) || !(again.dd.d == doc.dd.d) ||
                again.dd.lambda != doc.dd.lambda)
                return false;
        }
        {
            Representation r =
                parse_representation(load_json_file(fx("representation.trivial.json")), Scalar(1));
            Representation r2 = parse_representation(serialize_representation(r), Scalar(1));
            if (!(r2.rho_table() == r.rho_table()) || !(r2.dV() == r.dV())) return false;
        }
        for (const char* name : {"cochain.one.json", "cochain.two.json",
                                 "cochain.two-shifted.json"}) {
            Cochain f = parse_cochain(load_json_file(fx(name)), 3, 2);
            if (!(parse_cochain(serialize_cochain(f), 3, 2).c == f.c)) return false;
        }
        for (const char* name : {"operator.o.json", "operator.scaling.json"}) {
            Matrix m = parse_operator(load_json_file(fx(name)));
            if (!(parse_operator(serialize_operator(m)) == m)) return false;
        }
        for (const char* name : {"twist.json", "twist.zero.json"}) {
            TwistDoc t = parse_twist(load_json_file(fx(name)), 3, 3);
            TwistDoc t2 = parse_twist(serialize_twist(t, 3, 3), 3, 3);
            if (!(t2.psi == t.psi) || !(t2.chi == t.chi)) return false;
        }
        for (const char* name : {"two-term.skeletal.json", "two-term.strict.json"}) {
            TwoTermAlgebra t = parse_two_term(load_json_file(fx(name)));
            TwoTermAlgebra t2 = parse_two_term(serialize_two_term(t));
            if (!(t2.l30.table() == t.l30.table()) || !(t2.l5.c == t.l5.c) ||
                !(t2.d2 == t.d2) || !(t2.h == t.h))
                return false;
        }
        {
            CrossedModule m = parse_crossed_module(load_json_file(fx("crossed-module.json")));
            CrossedModule m2 = parse_crossed_module(serialize_crossed_module(m));
            if (!(m2.g0.table() == m.g0.table()) || !(m2.h == m.h)) return false;
        }
        // deterministic machine output
        std::string cmd = "cohomology " + fx("algebra.a3.json") + " --rep adjoint --json";
        CliRun a = run_cli(cmd), b = run_cli(cmd);
        if (a.exit_code != 0 || a.output != b.output) return false;
        // all three exit codes
        if (run_cli("verify " + fx("algebra.a3.json")).exit_code != 0) return false;
        if (run_cli("verify " + fx("algebra.bad-witness.json")).exit_code != 1) return false;
        if (run_cli("verify " + fx("no-such-file.json")).exit_code != 2) return false;
        return true;
    });

    if (failures == 0) std::printf("all criteria passed\n");
    else std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
