#pragma once

#include "operators.hpp"
#include "trimap.hpp"

namespace trilie {

inline Vec cochain2_from_trimap(const AltTriMap& t, int n, int dimV) {
    CochainSpace sp(2, n, dimV);
    WedgeIndex w(n);
    Vec c = zero_vec(static_cast<int>(sp.dim()));
    for (int a = 0; a < w.size(); ++a) {
        auto [i, j] = w.pair(a);
        for (int k = 0; k < n; ++k) {
            Vec val = t.value(i, j, k);
            for (int v = 0; v < dimV; ++v)
                c[static_cast<std::size_t>(sp.index({a}, k, v))] = val[static_cast<std::size_t>(v)];
        }
    }
    return c;
}

inline AltTriMap trimap_from_cochain2(const Vec& c, int n, int dimV) {
    CochainSpace sp(2, n, dimV);
    WedgeIndex w(n);
    AltTriMap t(n, dimV);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec v(static_cast<std::size_t>(dimV));
                int wi = w.index_signed(i, j).first;
                for (int x = 0; x < dimV; ++x)
                    v[static_cast<std::size_t>(x)] = c[static_cast<std::size_t>(sp.index({wi}, k, x))];
                t.set(i, j, k, std::move(v));
            }
    return t;
}

// Linear conditions forcing a degree-2 cochain to be fully alternating in
// its three underlying slots; extra zero columns cover a trailing degree-1
// block when cols exceeds the cochain dimension.
inline Matrix alternating_constraints(int n, int dimV, int cols = -1) {
    CochainSpace sp(2, n, dimV);
    WedgeIndex w(n);
    if (cols < 0) cols = static_cast<int>(sp.dim());
    std::vector<Vec> rows;
    auto row = [&]() { return zero_vec(cols); };
    for (int a = 0; a < w.size(); ++a) {
        auto [i, j] = w.pair(a);
        for (int v = 0; v < dimV; ++v) {
            Vec r1 = row();
            r1[static_cast<std::size_t>(sp.index({a}, i, v))] = 1;
            rows.push_back(std::move(r1));
            Vec r2 = row();
            r2[static_cast<std::size_t>(sp.index({a}, j, v))] = 1;
            rows.push_back(std::move(r2));
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int v = 0; v < dimV; ++v) {
                    int wij = w.index_signed(i, j).first;
                    int wjk = w.index_signed(j, k).first;
                    int wik = w.index_signed(i, k).first;
                    Vec r1 = row();
                    r1[static_cast<std::size_t>(sp.index({wij}, k, v))] = 1;
                    r1[static_cast<std::size_t>(sp.index({wjk}, i, v))] -= 1;
                    rows.push_back(std::move(r1));
                    Vec r2 = row();
                    r2[static_cast<std::size_t>(sp.index({wij}, k, v))] = 1;
                    r2[static_cast<std::size_t>(sp.index({wik}, j, v))] += 1;
                    rows.push_back(std::move(r2));
                }
    Matrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c) m(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];
    return m;
}

// Data of an abelian extension: base structure, the module it acts on, and
// the two twisting cochains (trilinear psi into V, linear chi into V).
struct ExtensionDatum {
    ThreeLieAlgebra base;
    WeightedDifferential base_d;
    Representation rho;  // carries dV and the weight
    AltTriMap psi;
    Matrix chi;  // dimV x n
};

inline Vec pair2_vec(const ExtensionDatum& e) {
    return concat(cochain2_from_trimap(e.psi, e.base.dim(), e.rho.dimV()),
                  cochain1_from_matrix(e.chi));
}

inline Verdict pair_2cocycle_check(const ExtensionDatum& e) {
    Complexes cc(e.base, e.base_d, e.rho);
    Verdict v;
    v.report("pair_2cocycle", {}, cc.partial_pair(2).apply(pair2_vec(e)));
    return v;
}

struct AssembledExtension {
    ThreeLieAlgebra hat{0};
    WeightedDifferential hat_d;
    Matrix embed, project, section;  // the canonical splitting maps
    Verdict cert;
};

// Twisted direct sum on g (+) V: the base bracket plus the action plus the
// trilinear twist, and the block differential with the linear twist. The
// result is certified by the core verifiers; with enforce the twisting pair
// must be a degree-2 pair cocycle up front.
inline AssembledExtension extension_from_cocycle(const ExtensionDatum& e, bool enforce = true) {
    if (enforce && !pair_2cocycle_check(e).pass())
        throw std::invalid_argument("twisting data is not a degree-2 pair cocycle");
    const int n = e.base.dim(), dv = e.rho.dimV(), nh = n + dv;
    AssembledExtension out;
    ThreeLieAlgebra hat(nh);
    auto lift = [&](const Vec& x, const Vec& a) {
        Vec v = zero_vec(nh);
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
        for (int i = 0; i < dv; ++i)
            v[static_cast<std::size_t>(n + i)] = a[static_cast<std::size_t>(i)];
        return v;
    };
    for (int i = 0; i < nh; ++i)
        for (int j = i + 1; j < nh; ++j)
            for (int k = j + 1; k < nh; ++k) {
                int ing = (i < n) + (j < n) + (k < n);
                Vec val;
                if (ing == 3) {
                    Vec bres = e.base.bracket(i, j, k);
                    val = lift(bres, e.psi.value(i, j, k));
                } else if (ing == 2) {
                    val = lift(zero_vec(n), e.rho.rho(i, j).col(k - n));
                } else {
                    val = zero_vec(nh);
                }
                hat.set_bracket(i, j, k, std::move(val));
            }
    Matrix d(nh, nh);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d(i, j) = e.base_d.d(i, j);
    for (int i = 0; i < dv; ++i)
        for (int j = 0; j < n; ++j) d(n + i, j) = e.chi(i, j);
    for (int i = 0; i < dv; ++i)
        for (int j = 0; j < dv; ++j) d(n + i, n + j) = e.rho.dV()(i, j);
    out.hat = std::move(hat);
    out.hat_d = {std::move(d), e.base_d.lambda};
    out.embed = Matrix(nh, dv);
    for (int i = 0; i < dv; ++i) out.embed(n + i, i) = 1;
    out.project = Matrix(n, nh);
    for (int i = 0; i < n; ++i) out.project(i, i) = 1;
    out.section = Matrix(nh, n);
    for (int i = 0; i < n; ++i) out.section(i, i) = 1;
    out.cert.merge(check_fundamental_identity(out.hat));
    out.cert.merge(check_weighted_differential(out.hat, out.hat_d));
    return out;
}

struct ExtractionResult {
    std::optional<ExtensionDatum> datum;
    Verdict preconditions;  // splitting shape, abelianness, invariance of the fiber
    Verdict cert;           // derived structure re-verified
};

namespace detail {

// Preimage under an injective map given by columns; nullopt when the vector
// is outside the image.
inline std::optional<Vec> preimage(const Matrix& embed, const Vec& w) {
    return solve(embed, w);
}

} // namespace detail

// Recover the twisting data of an abelian extension from the big structure
// and a chosen splitting (embed: V -> ghat, project: ghat -> g, section:
// g -> ghat).
inline ExtractionResult cocycle_from_extension(const ThreeLieAlgebra& hat,
                                               const WeightedDifferential& hat_d,
                                               const Matrix& embed, const Matrix& project,
                                               const Matrix& section) {
    ExtractionResult out;
    Verdict& pre = out.preconditions;
    const int nh = hat.dim(), dv = embed.cols(), n = project.rows();
    if (embed.rows() != nh || project.cols() != nh || section.rows() != nh ||
        section.cols() != n || n + dv != nh)
        throw std::invalid_argument("splitting maps have inconsistent shapes");
    if (rank(embed) != dv) pre.report("embed_injective", {}, {Scalar(1)});
    if (rank(project) != n) pre.report("project_surjective", {}, {Scalar(1)});
    pre.report("project_section_identity", {}, flatten(project * section - Matrix::identity(n)));
    pre.report("fiber_is_kernel", {}, flatten(project * embed));

    // abelianness of the fiber: brackets with two fiber slots vanish
    for (int a = 0; a < dv; ++a)
        for (int b = a + 1; b < dv; ++b)
            for (int t = 0; t < nh; ++t)
                pre.report("fiber_abelian", {a, b, t},
                           hat.bracket(embed.col(a), embed.col(b), hat.basis_vec(t)));
    // the fiber must be invariant under the big differential
    std::vector<Vec> dv_cols;
    for (int a = 0; a < dv; ++a) {
        auto x = detail::preimage(embed, hat_d.d.apply(embed.col(a)));
        if (!x) {
            pre.report("fiber_differential_invariant", {a}, {Scalar(1)});
            dv_cols.push_back(zero_vec(dv));
        } else {
            dv_cols.push_back(*x);
        }
    }
    if (!pre.pass()) return out;

    ExtensionDatum e{ThreeLieAlgebra(n), {}, Representation(n, dv, hat_d.lambda),
                     AltTriMap(n, dv), Matrix(dv, n)};
    // base structure through the section
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec big = hat.bracket(section.col(i), section.col(j), section.col(k));
                Vec base = project.apply(big);
                Vec defect = sub(big, section.apply(base));
                auto psi = detail::preimage(embed, defect);
                if (!psi) {
                    pre.report("section_defect_in_fiber", {i, j, k}, defect);
                    continue;
                }
                e.base.set_bracket(i, j, k, std::move(base));
                e.psi.set(i, j, k, std::move(*psi));
            }
    Matrix dg = project * hat_d.d * section;
    e.base_d = {dg, hat_d.lambda};
    Matrix chi_src = hat_d.d * section - section * dg;
    for (int i = 0; i < n; ++i) {
        auto x = detail::preimage(embed, chi_src.col(i));
        if (!x)
            pre.report("differential_defect_in_fiber", {i}, chi_src.col(i));
        else
            e.chi.set_col(i, *x);
    }
    for (int a = 0; a < dv; ++a) e.rho.dV().set_col(a, dv_cols[static_cast<std::size_t>(a)]);
    // action of the base on the fiber
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix m(dv, dv);
            for (int a = 0; a < dv; ++a) {
                Vec big = hat.bracket(section.col(i), section.col(j), embed.col(a));
                auto x = detail::preimage(embed, big);
                if (!x) {
                    pre.report("action_preserves_fiber", {i, j, a}, big);
                    m.set_col(a, zero_vec(dv));
                } else {
                    m.set_col(a, *x);
                }
            }
            e.rho.set_rho(i, j, std::move(m));
        }
    if (!pre.pass()) return out;

    out.cert.merge(check_fundamental_identity(e.base));
    out.cert.merge(check_weighted_differential(e.base, e.base_d));
    out.cert.merge(check_representation(e.base, e.base_d, e.rho));
    out.cert.merge(pair_2cocycle_check(e));
    out.datum = std::move(e);
    return out;
}

struct EquivalenceResult {
    std::optional<Matrix> witness;  // f: g -> V with phi = id + f
    Verdict verification;           // phi checked on the assembled structures
};

// Two extensions of the same module by the same base are equivalent when the
// difference of their twisting pairs is a degree-1 pair coboundary; the
// witness is materialized and re-verified by direct substitution.
inline EquivalenceResult extensions_equivalent(const ExtensionDatum& e1, const ExtensionDatum& e2) {
    const int n = e1.base.dim(), dv = e1.rho.dimV();
    if (e2.base.dim() != n || e2.rho.dimV() != dv || e1.base.table() != e2.base.table() ||
        e1.base_d.d != e2.base_d.d || e1.base_d.lambda != e2.base_d.lambda ||
        e1.rho.rho_table() != e2.rho.rho_table() || e1.rho.dV() != e2.rho.dV())
        throw std::invalid_argument("extensions must share base, module and action");
    EquivalenceResult out;
    Complexes cc(e1.base, e1.base_d, e1.rho);
    Vec diff = sub(pair2_vec(e1), pair2_vec(e2));
    auto fvec = solve(cc.partial_pair(1), diff);
    if (!fvec) return out;
    Matrix f(dv, n);
    for (int g = 0; g < n; ++g)
        for (int v = 0; v < dv; ++v) f(v, g) = (*fvec)[static_cast<std::size_t>(g * dv + v)];

    AssembledExtension a1 = extension_from_cocycle(e1, false);
    AssembledExtension a2 = extension_from_cocycle(e2, false);
    const int nh = n + dv;
    Matrix phi = Matrix::identity(nh);
    for (int g = 0; g < n; ++g)
        for (int v = 0; v < dv; ++v) phi(n + v, g) = f(v, g);
    Verdict& ver = out.verification;
    for (int i = 0; i < nh; ++i)
        for (int j = i + 1; j < nh; ++j)
            for (int k = j + 1; k < nh; ++k) {
                Vec lhs = phi.apply(a1.hat.bracket(i, j, k));
                Vec rhs = a2.hat.bracket(phi.col(i), phi.col(j), phi.col(k));
                ver.report("equivalence_bracket", {i, j, k}, sub(lhs, rhs));
            }
    ver.report("equivalence_differential", {}, flatten(phi * a1.hat_d.d - a2.hat_d.d * phi));
    if (ver.pass()) out.witness = std::move(f);
    return out;
}

} // namespace trilie
