#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "comb.hpp"
#include "matrix.hpp"
#include "verdict.hpp"

namespace trilie {

// Finite-dimensional 3-Lie algebra given by alternating structure constants.
// Only canonical triples i < j < k are stored; everything else follows by
// antisymmetry, repeated indices evaluate to zero.
class ThreeLieAlgebra {
public:
    explicit ThreeLieAlgebra(int n) : n_(n) {}

    int dim() const { return n_; }

    void set_bracket(int i, int j, int k, Vec value) {
        if (!(0 <= i && i < j && j < k && k < n_))
            throw std::invalid_argument("bracket key must be strictly increasing and in range");
        if (static_cast<int>(value.size()) != n_)
            throw std::invalid_argument("bracket value has wrong dimension");
        if (is_zero(value))
            table_.erase({i, j, k});
        else
            table_[{i, j, k}] = std::move(value);
    }

    const std::map<std::array<int, 3>, Vec>& table() const { return table_; }

    // [e_i, e_j, e_k] for arbitrary index order.
    Vec bracket(int i, int j, int k) const {
        SortedTriple t = sort_triple(i, j, k);
        if (t.sign == 0) return zero_vec(n_);
        auto it = table_.find(t.idx);
        if (it == table_.end()) return zero_vec(n_);
        return t.sign == 1 ? it->second : scaled(Scalar(-1), it->second);
    }

    // Trilinear extension to coordinate vectors.
    Vec bracket(const Vec& u, const Vec& v, const Vec& w) const {
        Vec out = zero_vec(n_);
        for (const auto& [idx, val] : table_) {
            auto [i, j, k] = idx;
            // sum of sgn(sigma) u_{sigma(i)} v_{sigma(j)} w_{sigma(k)}
            Scalar c = u[i] * (v[j] * w[k] - v[k] * w[j]) -
                       u[j] * (v[i] * w[k] - v[k] * w[i]) +
                       u[k] * (v[i] * w[j] - v[j] * w[i]);
            if (c != 0) axpy(out, c, val);
        }
        return out;
    }

    // [e_i, e_j, w] with one vector slot.
    Vec bracket(int i, int j, const Vec& w) const {
        Vec out = zero_vec(n_);
        for (int k = 0; k < n_; ++k)
            if (w[static_cast<std::size_t>(k)] != 0)
                axpy(out, w[static_cast<std::size_t>(k)], bracket(i, j, k));
        return out;
    }

    Vec basis_vec(int i) const {
        Vec v = zero_vec(n_);
        v[static_cast<std::size_t>(i)] = 1;
        return v;
    }

private:
    int n_;
    std::map<std::array<int, 3>, Vec> table_;
};

inline ThreeLieAlgebra abelian_algebra(int n) { return ThreeLieAlgebra(n); }

// The 3-dimensional algebra with [e1, e2, e3] = e1.
inline ThreeLieAlgebra a3_algebra() {
    ThreeLieAlgebra a(3);
    a.set_bracket(0, 1, 2, {Scalar(1), Scalar(0), Scalar(0)});
    return a;
}

struct WeightedDifferential {
    Matrix d;       // n x n, column convention
    Scalar lambda;
};

inline WeightedDifferential diag_differential(const Vec& diag, Scalar lambda) {
    Matrix d(static_cast<int>(diag.size()), static_cast<int>(diag.size()));
    for (std::size_t i = 0; i < diag.size(); ++i)
        d(static_cast<int>(i), static_cast<int>(i)) = diag[i];
    return {d, std::move(lambda)};
}

// Representation (V, rho, d_V) of a weighted differential 3-Lie algebra.
// rho is stored on pairs i < j of the algebra basis and extended
// antisymmetrically / bilinearly.
class Representation {
public:
    Representation(int n, int dimV, Scalar lambda)
        : n_(n), dimV_(dimV), dV_(dimV, dimV), lambda_(std::move(lambda)) {}

    int n() const { return n_; }
    int dimV() const { return dimV_; }
    const Scalar& lambda() const { return lambda_; }

    Matrix& dV() { return dV_; }
    const Matrix& dV() const { return dV_; }

    void set_rho(int i, int j, Matrix m) {
        if (!(0 <= i && i < j && j < n_)) throw std::invalid_argument("rho key must satisfy i < j");
        if (m.rows() != dimV_ || m.cols() != dimV_)
            throw std::invalid_argument("rho matrix has wrong shape");
        if (m.is_zero())
            rho_.erase({i, j});
        else
            rho_[{i, j}] = std::move(m);
    }

    const std::map<std::pair<int, int>, Matrix>& rho_table() const { return rho_; }

    Matrix rho(int i, int j) const {
        if (i == j) return Matrix(dimV_, dimV_);
        int sign = 1;
        if (i > j) { std::swap(i, j); sign = -1; }
        auto it = rho_.find({i, j});
        Matrix m = (it == rho_.end()) ? Matrix(dimV_, dimV_) : it->second;
        return sign == 1 ? m : m * Scalar(-1);
    }

    // Bilinear extension rho(u, v).
    Matrix rho(const Vec& u, const Vec& v) const {
        Matrix out(dimV_, dimV_);
        for (const auto& [key, m] : rho_) {
            auto [i, j] = key;
            Scalar c = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] -
                       u[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(i)];
            if (c != 0) out = out + m * c;
        }
        return out;
    }

private:
    int n_;
    int dimV_;
    std::map<std::pair<int, int>, Matrix> rho_;
    Matrix dV_;
    Scalar lambda_;
};

inline Vec basisv(int n, int i) {
    Vec v = zero_vec(n);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

inline Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

// Fundamental identity on every basis 5-tuple (x1 < x2; y1 < y2 < y3 suffices
// by multilinearity and antisymmetry).
inline Verdict check_fundamental_identity(const ThreeLieAlgebra& a) {
    Verdict v;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    for (int m = l + 1; m < n; ++m) {
                        Vec lhs = a.bracket(i, j, a.bracket(k, l, m));
                        Vec rhs = a.bracket(a.bracket(i, j, k), a.basis_vec(l), a.basis_vec(m));
                        add_to(rhs, a.bracket(a.basis_vec(k), a.bracket(i, j, l), a.basis_vec(m)));
                        add_to(rhs, a.bracket(k, l, a.bracket(i, j, m)));
                        v.report("fundamental_identity", {i, j, k, l, m}, sub(lhs, rhs));
                    }
    return v;
}

// Weighted Leibniz rule for d on every canonical basis triple: all seven
// bracket terms plus the lambda and lambda^2 weights.
inline Verdict check_weighted_differential(const ThreeLieAlgebra& a,
                                           const WeightedDifferential& dd) {
    Verdict v;
    const int n = a.dim();
    if (dd.d.rows() != n || dd.d.cols() != n)
        throw std::invalid_argument("differential has wrong shape");
    const Scalar& lam = dd.lambda;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec ei = a.basis_vec(i), ej = a.basis_vec(j), ek = a.basis_vec(k);
                Vec di = dd.d.col(i), dj = dd.d.col(j), dk = dd.d.col(k);
                Vec lhs = dd.d.apply(a.bracket(i, j, k));
                Vec rhs = a.bracket(di, ej, ek);
                add_to(rhs, a.bracket(ei, dj, ek));
                add_to(rhs, a.bracket(ei, ej, dk));
                if (lam != 0) {
                    Vec quad = a.bracket(di, dj, ek);
                    add_to(quad, a.bracket(ei, dj, dk));
                    add_to(quad, a.bracket(di, ej, dk));
                    axpy(rhs, lam, quad);
                    axpy(rhs, lam * lam, a.bracket(di, dj, dk));
                }
                v.report("weighted_differential", {i, j, k}, sub(lhs, rhs));
            }
    return v;
}

// Induced Leibniz algebra on L = wedge^2 g with the bracket [.,.]_F and the
// weighted differential d_L.
class LeibnizAlgebra {
public:
    LeibnizAlgebra(WedgeIndex w, Scalar lambda)
        : w_(std::move(w)),
          bracketF_(static_cast<std::size_t>(w_.size()),
                    std::vector<Vec>(static_cast<std::size_t>(w_.size()))),
          dL_(w_.size(), w_.size()),
          lambda_(std::move(lambda)) {}

    const WedgeIndex& wedge() const { return w_; }
    int dim() const { return w_.size(); }
    const Scalar& lambda() const { return lambda_; }

    void set_bracket(int a, int b, Vec value) {
        bracketF_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::move(value);
    }
    const Vec& bracket(int a, int b) const {
        return bracketF_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    Vec bracket(const Vec& x, const Vec& y) const {
        Vec out = zero_vec(dim());
        for (int a = 0; a < dim(); ++a) {
            if (x[static_cast<std::size_t>(a)] == 0) continue;
            for (int b = 0; b < dim(); ++b) {
                Scalar c = x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)];
                if (c != 0) axpy(out, c, bracket(a, b));
            }
        }
        return out;
    }

    Matrix& dL() { return dL_; }
    const Matrix& dL() const { return dL_; }

private:
    WedgeIndex w_;
    std::vector<std::vector<Vec>> bracketF_;  // [a][b] -> L-coordinates
    Matrix dL_;
    Scalar lambda_;
};

inline LeibnizAlgebra induced_leibniz(const ThreeLieAlgebra& a, const WeightedDifferential& dd) {
    WedgeIndex w(a.dim());
    LeibnizAlgebra l(w, dd.lambda);
    for (int x = 0; x < w.size(); ++x) {
        auto [x1, x2] = w.pair(x);
        for (int y = 0; y < w.size(); ++y) {
            auto [y1, y2] = w.pair(y);
            // [X, Y]_F = y1 ^ [x1, x2, y2] + [x1, x2, y1] ^ y2
            Vec val = wedge_coords(w, a.basis_vec(y1), a.bracket(x1, x2, y2));
            add_to(val, wedge_coords(w, a.bracket(x1, x2, y1), a.basis_vec(y2)));
            l.set_bracket(x, y, std::move(val));
        }
    }
    for (int x = 0; x < w.size(); ++x) {
        auto [x1, x2] = w.pair(x);
        Vec d1 = dd.d.col(x1), d2 = dd.d.col(x2);
        Vec col = wedge_coords(w, d1, a.basis_vec(x2));
        add_to(col, wedge_coords(w, a.basis_vec(x1), d2));
        axpy(col, dd.lambda, wedge_coords(w, d1, d2));
        l.dL().set_col(x, col);
    }
    return l;
}

// Leibniz identity and the weight-lambda differential law on basis elements.
inline Verdict check_leibniz(const LeibnizAlgebra& l) {
    Verdict v;
    const int m = l.dim();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                Vec lhs = l.bracket(basisv(m, a), l.bracket(b, c));
                Vec rhs = l.bracket(l.bracket(a, b), basisv(m, c));
                add_to(rhs, l.bracket(basisv(m, b), l.bracket(a, c)));
                v.report("leibniz_identity", {a, b, c}, sub(lhs, rhs));
            }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Vec lhs = l.dL().apply(l.bracket(a, b));
            Vec da = l.dL().col(a), db = l.dL().col(b);
            Vec rhs = l.bracket(da, basisv(m, b));
            add_to(rhs, l.bracket(basisv(m, a), db));
            axpy(rhs, l.lambda(), l.bracket(da, db));
            v.report("leibniz_differential", {a, b}, sub(lhs, rhs));
        }
    return v;
}

// Representation axioms: the two 3-Lie compatibilities on basis 4-tuples and
// the weighted compatibility with (d, d_V) on basis pairs.
inline Verdict check_representation(const ThreeLieAlgebra& a, const WeightedDifferential& dd,
                                    const Representation& r) {
    Verdict v;
    const int n = a.dim();
    if (r.n() != n) throw std::invalid_argument("representation dimension mismatch");
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = i1 + 1; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3)
                for (int i4 = 0; i4 < n; ++i4) {
                    Matrix lhs = r.rho(i1, i2) * r.rho(i3, i4);
                    Matrix rhs = r.rho(a.bracket(i1, i2, i3), a.basis_vec(i4)) +
                                 r.rho(a.basis_vec(i3), a.bracket(i1, i2, i4)) +
                                 r.rho(i3, i4) * r.rho(i1, i2);
                    v.report("rep_compat_a", {i1, i2, i3, i4}, flatten(lhs - rhs));
                }
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3)
                for (int i4 = 0; i4 < n; ++i4) {
                    Matrix lhs = r.rho(a.basis_vec(i1), a.bracket(i2, i3, i4));
                    Matrix rhs = r.rho(i3, i4) * r.rho(i1, i2) - r.rho(i2, i4) * r.rho(i1, i3) +
                                 r.rho(i2, i3) * r.rho(i1, i4);
                    v.report("rep_compat_b", {i1, i2, i3, i4}, flatten(lhs - rhs));
                }
    const Scalar& lam = r.lambda();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec di = dd.d.col(i), dj = dd.d.col(j);
            Matrix corr = r.rho(di, a.basis_vec(j)) + r.rho(a.basis_vec(i), dj) +
                          r.rho(di, dj) * lam;
            Matrix lhs = r.dV() * r.rho(i, j);
            Matrix rhs = corr + r.rho(i, j) * r.dV() + (corr * r.dV()) * lam;
            v.report("rep_differential_compat", {i, j}, flatten(lhs - rhs));
        }
    return v;
}

// Adjoint representation: rho(e_i, e_j) = [e_i, e_j, .], d_V = d.
inline Representation adjoint_rep(const ThreeLieAlgebra& a, const WeightedDifferential& dd) {
    Representation r(a.dim(), a.dim(), dd.lambda);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            Matrix m(a.dim(), a.dim());
            for (int k = 0; k < a.dim(); ++k) m.set_col(k, a.bracket(i, j, k));
            r.set_rho(i, j, std::move(m));
        }
    r.dV() = dd.d;
    return r;
}

// Trivial representation on a dimV-dimensional space: rho = 0.
inline Representation trivial_rep(const ThreeLieAlgebra& a, int dimV, Matrix dV, Scalar lambda) {
    Representation r(a.dim(), dimV, std::move(lambda));
    r.dV() = std::move(dV);
    return r;
}

// The lambda-corrected representation rho-hat of the same (V, d_V).
inline Representation hat_rep(const Representation& r, const WeightedDifferential& dd) {
    Representation h(r.n(), r.dimV(), r.lambda());
    h.dV() = r.dV();
    const Scalar& lam = r.lambda();
    for (int i = 0; i < r.n(); ++i)
        for (int j = i + 1; j < r.n(); ++j) {
            Vec di = dd.d.col(i), dj = dd.d.col(j);
            Vec ei = basisv(r.n(), i), ej = basisv(r.n(), j);
            Matrix m = r.rho(i, j) +
                       (r.rho(di, ej) + r.rho(ei, dj) + r.rho(di, dj) * lam) * lam;
            h.set_rho(i, j, std::move(m));
        }
    return h;
}

// Matched pair of weighted differential 3-Lie algebras, certified a
// posteriori by the two core verifiers.
struct MatchedPairResult {
    std::optional<std::pair<ThreeLieAlgebra, WeightedDifferential>> assembled;
    Verdict cert;
};

inline MatchedPairResult matched_pair_assemble(const ThreeLieAlgebra& a1,
                                               const WeightedDifferential& d1,
                                               const ThreeLieAlgebra& a2,
                                               const WeightedDifferential& d2,
                                               const Representation& rho,
                                               const Representation& varrho) {
    if (d1.lambda != d2.lambda) throw std::invalid_argument("weight mismatch");
    const int n1 = a1.dim(), n2 = a2.dim(), n = n1 + n2;
    MatchedPairResult res;
    res.cert.merge(check_representation(a1, d1, rho));
    res.cert.merge(check_representation(a2, d2, varrho));

    ThreeLieAlgebra big(n);
    auto lift1 = [&](const Vec& x) {
        Vec v = zero_vec(n);
        for (int i = 0; i < n1; ++i) v[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
        return v;
    };
    auto lift2 = [&](const Vec& x) {
        Vec v = zero_vec(n);
        for (int i = 0; i < n2; ++i) v[static_cast<std::size_t>(n1 + i)] = x[static_cast<std::size_t>(i)];
        return v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                // g1 indices precede g2 indices, so canonical triples are
                // already grouped by component.
                int in1 = (i < n1) + (j < n1) + (k < n1);
                Vec val;
                if (in1 == 3)
                    val = lift1(a1.bracket(i, j, k));
                else if (in1 == 2)
                    val = lift2(rho.rho(i, j).col(k - n1));
                else if (in1 == 1)
                    val = lift1(varrho.rho(j - n1, k - n1).col(i));
                else
                    val = lift2(a2.bracket(i - n1, j - n1, k - n1));
                big.set_bracket(i, j, k, std::move(val));
            }
    Matrix d(n, n);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) d(i, j) = d1.d(i, j);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) d(n1 + i, n1 + j) = d2.d(i, j);
    WeightedDifferential dd{d, d1.lambda};

    res.cert.merge(check_fundamental_identity(big));
    res.cert.merge(check_weighted_differential(big, dd));
    if (res.cert.pass()) res.assembled = {std::move(big), std::move(dd)};
    return res;
}

} // namespace trilie
