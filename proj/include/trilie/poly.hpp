#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace trilie {

// Sparse multivariate polynomial over Q. A monomial is the sorted multiset of
// its variable indices, so {0, 0, 3} stands for x0^2 * x3.
class Poly {
public:
    using Monomial = std::vector<int>;

    Poly() = default;
    explicit Poly(Scalar c) {
        if (c != 0) terms_[{}] = std::move(c);
    }
    static Poly var(int i) {
        Poly p;
        p.terms_[{i}] = 1;
        return p;
    }

    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly operator+(const Poly& o) const { Poly p = *this; p += o; return p; }
    Poly operator-(const Poly& o) const { Poly p = *this; p -= o; return p; }

    Poly operator*(const Poly& o) const {
        Poly p;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) {
                Monomial m = m1;
                m.insert(m.end(), m2.begin(), m2.end());
                std::sort(m.begin(), m.end());
                p.add_term(m, c1 * c2);
            }
        return p;
    }

    Poly operator*(const Scalar& s) const {
        Poly p;
        if (s == 0) return p;
        for (const auto& [m, c] : terms_) p.terms_[m] = c * s;
        return p;
    }

    // Scale so the leading (lexicographically first) coefficient is 1.
    Poly normalized() const {
        if (terms_.empty()) return Poly();
        return *this * (1 / terms_.begin()->second);
    }

    Scalar eval(const std::vector<Scalar>& values) const {
        Scalar out = 0;
        for (const auto& [m, c] : terms_) {
            Scalar t = c;
            for (int i : m) t *= values[static_cast<std::size_t>(i)];
            out += t;
        }
        return out;
    }

    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

private:
    void add_term(const Monomial& m, const Scalar& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Monomial, Scalar> terms_;
};

using PolyVec = std::vector<Poly>;

inline PolyVec poly_zero_vec(int n) { return PolyVec(static_cast<std::size_t>(n)); }

inline void poly_axpy(PolyVec& a, const Poly& c, const PolyVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

// Trilinear bracket with polynomial-vector arguments.
inline PolyVec bracket_poly(const ThreeLieAlgebra& alg, const PolyVec& u, const PolyVec& v,
                            const PolyVec& w) {
    PolyVec out = poly_zero_vec(alg.dim());
    const int n = alg.dim();
    for (int i = 0; i < n; ++i) {
        if (u[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (j == i || v[static_cast<std::size_t>(j)].is_zero()) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j || w[static_cast<std::size_t>(k)].is_zero()) continue;
                Vec b = alg.bracket(i, j, k);
                if (is_zero(b)) continue;
                Poly c = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] *
                         w[static_cast<std::size_t>(k)];
                for (int r = 0; r < n; ++r)
                    if (b[static_cast<std::size_t>(r)] != 0)
                        out[static_cast<std::size_t>(r)] += c * b[static_cast<std::size_t>(r)];
            }
        }
    }
    return out;
}

// Polynomial equations on the n^2 unknown entries of a weight-lambda
// differential for a fixed algebra. Variable r*n + c is the matrix entry in
// row r, column c.
struct ConstraintSystem {
    int n = 0;
    Scalar lambda;
    // One entry per canonical triple: the defect vector as polynomials.
    std::vector<std::pair<std::array<int, 3>, PolyVec>> by_triple;
    // Deduplicated nonzero equations, leading-coefficient normalized.
    std::vector<Poly> equations;
};

inline ConstraintSystem derive_differential_constraints(const ThreeLieAlgebra& alg,
                                                        Scalar lambda, int max_dim = 6) {
    const int n = alg.dim();
    if (n > max_dim)
        throw std::invalid_argument("symbolic constraint derivation is limited to small dimensions");
    ConstraintSystem sys;
    sys.n = n;
    sys.lambda = lambda;

    auto d_col = [&](int j) {
        PolyVec v = poly_zero_vec(n);
        for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(r)] = Poly::var(r * n + j);
        return v;
    };
    auto basis_poly = [&](int j) {
        PolyVec v = poly_zero_vec(n);
        v[static_cast<std::size_t>(j)] = Poly(Scalar(1));
        return v;
    };

    std::map<Poly, bool> seen;
    Poly lam(lambda);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                PolyVec ei = basis_poly(i), ej = basis_poly(j), ek = basis_poly(k);
                PolyVec di = d_col(i), dj = d_col(j), dk = d_col(k);
                // d[e_i, e_j, e_k] has coordinates sum_u b_u * d_{ru}.
                Vec b = alg.bracket(i, j, k);
                PolyVec lhs = poly_zero_vec(n);
                for (int r = 0; r < n; ++r)
                    for (int u = 0; u < n; ++u)
                        if (b[static_cast<std::size_t>(u)] != 0)
                            lhs[static_cast<std::size_t>(r)] +=
                                Poly::var(r * n + u) * b[static_cast<std::size_t>(u)];
                PolyVec rhs = bracket_poly(alg, di, ej, ek);
                auto acc = [&](PolyVec t, const Poly& w) {
                    for (std::size_t r = 0; r < t.size(); ++r) rhs[r] += w * t[r];
                };
                acc(bracket_poly(alg, ei, dj, ek), Poly(Scalar(1)));
                acc(bracket_poly(alg, ei, ej, dk), Poly(Scalar(1)));
                if (lambda != 0) {
                    acc(bracket_poly(alg, di, dj, ek), lam);
                    acc(bracket_poly(alg, ei, dj, dk), lam);
                    acc(bracket_poly(alg, di, ej, dk), lam);
                    acc(bracket_poly(alg, di, dj, dk), lam * lam);
                }
                PolyVec defect = poly_zero_vec(n);
                for (int r = 0; r < n; ++r) {
                    defect[static_cast<std::size_t>(r)] =
                        lhs[static_cast<std::size_t>(r)] - rhs[static_cast<std::size_t>(r)];
                    Poly norm = defect[static_cast<std::size_t>(r)].normalized();
                    if (!norm.is_zero() && !seen.count(norm)) {
                        seen[norm] = true;
                        sys.equations.push_back(norm);
                    }
                }
                sys.by_triple.push_back({{i, j, k}, std::move(defect)});
            }
    return sys;
}

// Evaluate every per-triple defect at a concrete matrix; matches the verdict
// of check_weighted_differential for the same (d, lambda).
inline Verdict evaluate_constraints(const ConstraintSystem& sys, const Matrix& d) {
    Verdict v;
    std::vector<Scalar> vals;
    vals.reserve(static_cast<std::size_t>(sys.n) * sys.n);
    for (int r = 0; r < sys.n; ++r)
        for (int c = 0; c < sys.n; ++c) vals.push_back(d(r, c));
    for (const auto& [triple, defect] : sys.by_triple) {
        Vec out(defect.size());
        for (std::size_t r = 0; r < defect.size(); ++r) out[r] = defect[r].eval(vals);
        v.report("differential_constraints", {triple[0], triple[1], triple[2]}, std::move(out));
    }
    return v;
}

inline std::string poly_str(const Poly& p, int n) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Scalar a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && !m.empty();
        if (!unit) os << scalar_str(a);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!unit || i > 0) os << "*";
            os << "d" << (m[i] / n + 1) << (m[i] % n + 1);
        }
    }
    return os.str();
}

} // namespace trilie
