#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace trilie {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), Scalar(0)); }

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec& add_to(Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec& axpy(Vec& a, const Scalar& c, const Vec& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
    return a;
}

inline Vec scaled(const Scalar& c, Vec v) {
    for (auto& x : v) x *= c;
    return v;
}

inline Vec sub(Vec a, const Vec& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

// Dense matrix over the rationals, row-major. Linear maps use the column
// convention: column j is the coordinate image of basis vector j.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Scalar(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int r, int c) {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const Scalar& operator()(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Vec col(int c) const {
        Vec v(rows_);
        for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = (*this)(r, c);
        return v;
    }

    void set_col(int c, const Vec& v) {
        assert(static_cast<int>(v.size()) == rows_);
        for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[static_cast<std::size_t>(r)];
    }

    Vec apply(const Vec& x) const {
        assert(static_cast<int>(x.size()) == cols_);
        Vec y = zero_vec(rows_);
        for (int c = 0; c < cols_; ++c) {
            const Scalar& xc = x[static_cast<std::size_t>(c)];
            if (xc == 0) continue;
            for (int r = 0; r < rows_; ++r) y[static_cast<std::size_t>(r)] += (*this)(r, c) * xc;
        }
        return y;
    }

    Matrix operator*(const Matrix& b) const {
        assert(cols_ == b.rows_);
        Matrix c(rows_, b.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Scalar& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    Matrix operator+(const Matrix& b) const {
        assert(rows_ == b.rows_ && cols_ == b.cols_);
        Matrix c = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }

    Matrix operator-(const Matrix& b) const {
        assert(rows_ == b.rows_ && cols_ == b.cols_);
        Matrix c = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }

    Matrix operator*(const Scalar& s) const {
        Matrix c = *this;
        for (auto& x : c.a_) x *= s;
        return c;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> a_;
};

// Fraction-free (Bareiss) elimination on the integer matrix obtained by
// clearing row denominators. Exact rank over Q.
inline int rank(const Matrix& m) {
    const int nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;
    std::vector<std::vector<mpz_class>> z(nr, std::vector<mpz_class>(nc));
    for (int i = 0; i < nr; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (int j = 0; j < nc; ++j) {
            mpq_class q = m(i, j) * Scalar(l);
            z[i][j] = q.get_num();
        }
    }
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (z[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(z[piv], z[r]);
        for (int i = r + 1; i < nr; ++i) {
            for (int j = c + 1; j < nc; ++j) {
                mpz_class t = z[r][c] * z[i][j] - z[i][c] * z[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                z[i][j] = t;
            }
            z[i][c] = 0;
        }
        prev = z[r][c];
        ++r;
    }
    return r;
}

// Reduced row echelon form; returns pivot column indices.
inline std::vector<int> rref_in_place(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        Scalar inv = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Scalar f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Exact basis of the null space; size = cols - rank.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        Vec v = zero_vec(m.cols());
        v[static_cast<std::size_t>(c)] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[static_cast<std::size_t>(pivots[pr])] = -r(static_cast<int>(pr), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Some x with M x = b, or nullopt when b is outside the column space.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    assert(static_cast<int>(b.size()) == m.rows());
    Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x = zero_vec(m.cols());
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
        x[static_cast<std::size_t>(pivots[pr])] = aug(static_cast<int>(pr), m.cols());
    return x;
}

// rank of [A | B] for subspace comparisons.
inline Matrix hconcat(const Matrix& a, const Matrix& b) {
    assert(a.rows() == b.rows());
    Matrix c(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

inline Matrix vconcat(const Matrix& a, const Matrix& b) {
    assert(a.cols() == b.cols());
    Matrix c(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
    }
    return c;
}

inline Matrix from_columns(int rows, const std::vector<Vec>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(static_cast<int>(c), cols[c]);
    return m;
}

} // namespace trilie
