#pragma once

#include "cohomology.hpp"

namespace trilie {

// Truncated formal deformation: brackets pi_0..pi_N (pi_0 = base bracket) and
// linear parts phi_0..phi_N (phi_0 = base differential), all at a common
// weight. Absent higher terms are treated as zero.
struct DeformationData {
    std::vector<ThreeLieAlgebra> pis;
    std::vector<Matrix> phis;
    Scalar lambda;

    int order() const { return static_cast<int>(pis.size()) - 1; }
};

inline DeformationData first_order_deformation(const ThreeLieAlgebra& a,
                                               const WeightedDifferential& dd,
                                               ThreeLieAlgebra pi1, Matrix phi1) {
    return {{a, std::move(pi1)}, {dd.d, std::move(phi1)}, dd.lambda};
}

// Every t-coefficient of the two generating identities obtained by
// substituting the truncated series into the fundamental identity and the
// weighted differential law. max_degree < 0 checks the full reachable range.
inline Verdict deformation_check(const DeformationData& data, int max_degree = -1) {
    Verdict v;
    if (data.pis.empty() || data.pis.size() != data.phis.size())
        throw std::invalid_argument("deformation data must carry matching bracket and linear parts");
    const int nord = data.order();
    const int n = data.pis[0].dim();
    const Scalar& lam = data.lambda;
    auto pi = [&](int a) -> const ThreeLieAlgebra& { return data.pis[static_cast<std::size_t>(a)]; };
    auto phi = [&](int a) -> const Matrix& { return data.phis[static_cast<std::size_t>(a)]; };

    int fi_max = 2 * nord, diff_max = 4 * nord;
    if (max_degree >= 0) {
        fi_max = std::min(fi_max, max_degree);
        diff_max = std::min(diff_max, max_degree);
    }

    for (int s = 0; s <= fi_max; ++s)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = k + 1; l < n; ++l)
                        for (int m = l + 1; m < n; ++m) {
                            Vec defect = zero_vec(n);
                            for (int a = std::max(0, s - nord); a <= std::min(s, nord); ++a) {
                                int b = s - a;
                                const ThreeLieAlgebra &pa = pi(a), &pb = pi(b);
                                add_to(defect, pa.bracket(i, j, pb.bracket(k, l, m)));
                                Vec rhs = pa.bracket(pb.bracket(i, j, k), pa.basis_vec(l),
                                                     pa.basis_vec(m));
                                add_to(rhs, pa.bracket(pa.basis_vec(k), pb.bracket(i, j, l),
                                                       pa.basis_vec(m)));
                                add_to(rhs, pa.bracket(k, l, pb.bracket(i, j, m)));
                                axpy(defect, Scalar(-1), rhs);
                            }
                            v.report("deformation_fundamental_t" + std::to_string(s),
                                     {i, j, k, l, m}, std::move(defect));
                        }

    for (int s = 0; s <= diff_max; ++s)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    Vec defect = zero_vec(n);
                    for (int a = std::max(0, s - nord); a <= std::min(s, nord); ++a) {
                        int b = s - a;
                        if (b <= nord) {
                            add_to(defect, phi(a).apply(pi(b).bracket(i, j, k)));
                            Vec single = pi(a).bracket(phi(b).col(i), pi(a).basis_vec(j),
                                                       pi(a).basis_vec(k));
                            add_to(single, pi(a).bracket(pi(a).basis_vec(i), phi(b).col(j),
                                                         pi(a).basis_vec(k)));
                            add_to(single, pi(a).bracket(i, j, phi(b).col(k)));
                            axpy(defect, Scalar(-1), single);
                        }
                        for (int b2 = 0; b2 <= std::min(s - a, nord); ++b2) {
                            int rest = s - a - b2;
                            if (rest <= nord && lam != 0) {
                                Vec dbl = pi(a).bracket(phi(b2).col(i), phi(rest).col(j),
                                                        pi(a).basis_vec(k));
                                add_to(dbl, pi(a).bracket(pi(a).basis_vec(i), phi(b2).col(j),
                                                          phi(rest).col(k)));
                                add_to(dbl, pi(a).bracket(phi(b2).col(i), pi(a).basis_vec(j),
                                                          phi(rest).col(k)));
                                axpy(defect, -lam, dbl);
                            }
                            for (int c = 0; c <= std::min(s - a - b2, nord); ++c) {
                                int e = s - a - b2 - c;
                                if (e <= nord && lam != 0)
                                    axpy(defect, -(lam * lam),
                                         pi(a).bracket(phi(b2).col(i), phi(c).col(j),
                                                       phi(e).col(k)));
                            }
                        }
                    }
                    v.report("deformation_differential_t" + std::to_string(s), {i, j, k},
                             std::move(defect));
                }
    return v;
}

// Coordinates of an alternating trilinear map as a 2-cochain and of a linear
// map as a 1-cochain.
inline Vec cochain2_from_bracket(const ThreeLieAlgebra& pi, int n, int dimV) {
    CochainSpace sp(2, n, dimV);
    WedgeIndex w(n);
    Vec c = zero_vec(static_cast<int>(sp.dim()));
    for (int a = 0; a < w.size(); ++a) {
        auto [i, j] = w.pair(a);
        for (int k = 0; k < n; ++k) {
            Vec val = pi.bracket(i, j, k);
            for (int v = 0; v < dimV; ++v)
                c[static_cast<std::size_t>(sp.index({a}, k, v))] = val[static_cast<std::size_t>(v)];
        }
    }
    return c;
}

inline Vec cochain1_from_matrix(const Matrix& m) {
    // m: dimV x n, column convention; coordinates (g, v) with v fastest
    Vec c = zero_vec(m.rows() * m.cols());
    for (int g = 0; g < m.cols(); ++g)
        for (int v = 0; v < m.rows(); ++v)
            c[static_cast<std::size_t>(g * m.rows() + v)] = m(v, g);
    return c;
}

inline Vec concat(const Vec& a, const Vec& b) {
    Vec c = a;
    c.insert(c.end(), b.begin(), b.end());
    return c;
}

struct CocycleAgreement {
    bool cocycle = false;
    bool first_order_ok = false;
    bool agree = false;
    Verdict pair_defect;     // nonzero coordinates of the pair coboundary
    Verdict expansion;       // first-order coefficients of the expansion
};

// Proposition-level equivalence: the infinitesimal part is a degree-2 pair
// cocycle for the adjoint representation iff the order-1 coefficients of the
// expansion vanish. Both routes are computed and compared.
inline CocycleAgreement infinitesimal_is_2cocycle(const ThreeLieAlgebra& a,
                                                  const WeightedDifferential& dd,
                                                  const ThreeLieAlgebra& pi1, const Matrix& phi1) {
    CocycleAgreement out;
    Complexes cc(a, dd, adjoint_rep(a, dd));
    Vec pair_vec = concat(cochain2_from_bracket(pi1, a.dim(), a.dim()), cochain1_from_matrix(phi1));
    Vec img = cc.partial_pair(2).apply(pair_vec);
    out.cocycle = is_zero(img);
    if (!out.cocycle) out.pair_defect.report("pair_2cocycle", {}, img);

    DeformationData data = first_order_deformation(a, dd, pi1, phi1);
    Verdict base = deformation_check(data, 0);
    if (!base.pass())
        throw std::invalid_argument("base structure is not a differential 3-Lie algebra");
    Verdict first = deformation_check(data, 1);
    out.first_order_ok = first.pass();
    out.expansion = std::move(first);
    out.agree = (out.cocycle == out.first_order_ok);
    return out;
}

// Triviality certificate for a first-order deformation: N must intertwine the
// base differential, and I + tN must intertwine the brackets coefficientwise
// in t (degrees 1..3).
inline Verdict is_trivial_deformation(const DeformationData& data, const Matrix& nmat) {
    if (data.order() != 1)
        throw std::invalid_argument("triviality is defined for first-order data");
    Verdict v;
    const ThreeLieAlgebra& pi0 = data.pis[0];
    const ThreeLieAlgebra& pi1 = data.pis[1];
    const Matrix& d0 = data.phis[0];
    const int n = pi0.dim();
    v.report("trivial_differential_commutes", {}, flatten(nmat * d0 - d0 * nmat));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec ni = nmat.col(i), nj = nmat.col(j), nk = nmat.col(k);
                Vec ei = pi0.basis_vec(i), ej = pi0.basis_vec(j), ek = pi0.basis_vec(k);
                // t^1
                Vec lhs1 = nmat.apply(pi0.bracket(i, j, k));
                add_to(lhs1, pi1.bracket(i, j, k));
                Vec rhs1 = pi0.bracket(ni, ej, ek);
                add_to(rhs1, pi0.bracket(ei, nj, ek));
                add_to(rhs1, pi0.bracket(i, j, nk));
                v.report("trivial_t1", {i, j, k}, sub(lhs1, rhs1));
                // t^2
                Vec lhs2 = nmat.apply(pi1.bracket(i, j, k));
                Vec rhs2 = pi0.bracket(ni, nj, ek);
                add_to(rhs2, pi0.bracket(ei, nj, nk));
                add_to(rhs2, pi0.bracket(ni, ej, nk));
                v.report("trivial_t2", {i, j, k}, sub(lhs2, rhs2));
                // t^3
                v.report("trivial_t3", {i, j, k},
                         scaled(Scalar(-1), pi0.bracket(ni, nj, nk)));
            }
    return v;
}

inline Verdict is_nijenhuis(const ThreeLieAlgebra& a, const WeightedDifferential& dd,
                            const Matrix& nmat) {
    Verdict v;
    const int n = a.dim();
    v.report("nijenhuis_differential_commutes", {}, flatten(nmat * dd.d - dd.d * nmat));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec ni = nmat.col(i), nj = nmat.col(j), nk = nmat.col(k);
                Vec ei = a.basis_vec(i), ej = a.basis_vec(j), ek = a.basis_vec(k);
                Vec lhs = a.bracket(ni, nj, nk);
                Vec mid = a.bracket(ni, nj, ek);
                add_to(mid, a.bracket(ei, nj, nk));
                add_to(mid, a.bracket(ni, ej, nk));
                Vec rhs = nmat.apply(mid);
                Vec one = a.bracket(ni, ej, ek);
                add_to(one, a.bracket(ei, nj, ek));
                add_to(one, a.bracket(i, j, nk));
                axpy(rhs, Scalar(-1), nmat.apply(nmat.apply(one)));
                add_to(rhs, nmat.apply(nmat.apply(nmat.apply(a.bracket(i, j, k)))));
                v.report("nijenhuis_identity", {i, j, k}, sub(lhs, rhs));
            }
    return v;
}

// The deformed bracket attached to a Nijenhuis operator; certified by the
// core verifiers before returning.
inline std::pair<ThreeLieAlgebra, WeightedDifferential> deformed_bracket(
    const ThreeLieAlgebra& a, const WeightedDifferential& dd, const Matrix& nmat,
    bool enforce = true) {
    if (enforce && !is_nijenhuis(a, dd, nmat).pass())
        throw std::invalid_argument("not a Nijenhuis operator");
    const int n = a.dim();
    ThreeLieAlgebra out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec ni = nmat.col(i), nj = nmat.col(j), nk = nmat.col(k);
                Vec ei = a.basis_vec(i), ej = a.basis_vec(j), ek = a.basis_vec(k);
                Vec val = a.bracket(ni, nj, ek);
                add_to(val, a.bracket(ei, nj, nk));
                add_to(val, a.bracket(ni, ej, nk));
                Vec one = a.bracket(ni, ej, ek);
                add_to(one, a.bracket(ei, nj, ek));
                add_to(one, a.bracket(i, j, nk));
                axpy(val, Scalar(-1), nmat.apply(one));
                add_to(val, nmat.apply(nmat.apply(a.bracket(i, j, k))));
                out.set_bracket(i, j, k, std::move(val));
            }
    return {out, dd};
}

// Relative operator K: V -> g for a representation: the bracket identity on
// all module triples plus intertwining of the differentials.
inline Verdict is_o_operator(const ThreeLieAlgebra& a, const WeightedDifferential& dd,
                             const Representation& r, const Matrix& kmat) {
    Verdict v;
    if (kmat.rows() != a.dim() || kmat.cols() != r.dimV())
        throw std::invalid_argument("operator has wrong shape");
    v.report("o_operator_differential", {}, flatten(kmat * r.dV() - dd.d * kmat));
    const int dv = r.dimV();
    for (int u = 0; u < dv; ++u)
        for (int w = u + 1; w < dv; ++w)
            for (int x = w + 1; x < dv; ++x) {
                Vec ku = kmat.col(u), kw = kmat.col(w), kx = kmat.col(x);
                Vec lhs = a.bracket(ku, kw, kx);
                Vec inner = r.rho(ku, kw).col(x);
                add_to(inner, r.rho(kw, kx).col(u));
                add_to(inner, r.rho(kx, ku).col(w));
                Vec rhs = kmat.apply(inner);
                v.report("o_operator_bracket", {u, w, x}, sub(lhs, rhs));
            }
    return v;
}

// The induced bracket on V.
inline std::pair<ThreeLieAlgebra, WeightedDifferential> bracket_K(const ThreeLieAlgebra& a,
                                                                  const WeightedDifferential& dd,
                                                                  const Representation& r,
                                                                  const Matrix& kmat,
                                                                  bool enforce = true) {
    if (enforce && !is_o_operator(a, dd, r, kmat).pass())
        throw std::invalid_argument("not a relative operator for this representation");
    const int dv = r.dimV();
    ThreeLieAlgebra out(dv);
    for (int u = 0; u < dv; ++u)
        for (int w = u + 1; w < dv; ++w)
            for (int x = w + 1; x < dv; ++x) {
                Vec ku = kmat.col(u), kw = kmat.col(w), kx = kmat.col(x);
                Vec val = r.rho(ku, kw).col(x);
                add_to(val, r.rho(kw, kx).col(u));
                add_to(val, r.rho(kx, ku).col(w));
                out.set_bracket(u, w, x, std::move(val));
            }
    return {out, WeightedDifferential{r.dV(), dd.lambda}};
}

struct HatAgreement {
    Verdict against_corrected_rep;  // K tested against the corrected representation
    Verdict shifted_operator;       // K + lambda d K tested against the original
    bool agree = false;
};

inline HatAgreement hat_K_equivalence(const ThreeLieAlgebra& a, const WeightedDifferential& dd,
                                      const Representation& r, const Matrix& kmat) {
    HatAgreement out;
    out.against_corrected_rep = is_o_operator(a, dd, hat_rep(r, dd), kmat);
    Matrix khat = kmat + (dd.d * kmat) * dd.lambda;
    out.shifted_operator = is_o_operator(a, dd, r, khat);
    auto tuples = [](const Verdict& v) {
        std::vector<std::vector<int>> t;
        for (const auto& viol : v.violations) t.push_back(viol.tuple);
        return t;
    };
    out.agree = (out.against_corrected_rep.pass() == out.shifted_operator.pass()) &&
                tuples(out.against_corrected_rep) == tuples(out.shifted_operator);
    return out;
}

// The representation of (V, [.,.]_K, d_V) on the module g.
inline Representation rho_K(const ThreeLieAlgebra& a, const WeightedDifferential& dd,
                            const Representation& r, const Matrix& kmat, bool enforce = true) {
    if (enforce && !is_o_operator(a, dd, r, kmat).pass())
        throw std::invalid_argument("not a relative operator for this representation");
    const int dv = r.dimV(), n = a.dim();
    Representation out(dv, n, dd.lambda);
    out.dV() = dd.d;
    for (int u = 0; u < dv; ++u)
        for (int w = u + 1; w < dv; ++w) {
            Vec ku = kmat.col(u), kw = kmat.col(w);
            Matrix m(n, n);
            for (int x = 0; x < n; ++x) {
                Vec ex = basisv(n, x);
                Vec val = a.bracket(ku, kw, ex);
                Vec inner = scaled(Scalar(1), r.rho(kw, ex).col(u));
                add_to(inner, r.rho(ex, ku).col(w));
                axpy(val, Scalar(-1), kmat.apply(inner));
                m.set_col(x, val);
            }
            out.set_rho(u, w, std::move(m));
        }
    return out;
}

// The operator itself, viewed as a degree-1 pair cochain over the induced
// structure on V, must be a cocycle.
inline Verdict o_operator_cocycle_check(const ThreeLieAlgebra& a, const WeightedDifferential& dd,
                                        const Representation& r, const Matrix& kmat,
                                        bool enforce = true) {
    auto [valg, vdd] = bracket_K(a, dd, r, kmat, enforce);
    Representation vrep = rho_K(a, dd, r, kmat, enforce);
    Complexes cc(valg, vdd, vrep);
    Vec kvec = cochain1_from_matrix(kmat);
    Vec img = cc.partial_pair(1).apply(kvec);
    Verdict v;
    v.report("o_operator_1cocycle", {}, img);
    return v;
}

} // namespace trilie
