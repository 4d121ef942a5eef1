#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "algebra.hpp"

namespace trilie {

// Degree-p cochains: multilinear maps with p-1 slots on the wedge space L,
// one slot on g, values in V. Basis order is lexicographic in
// (L-slot indices..., g-index, V-coordinate), V fastest.
struct CochainSpace {
    int p = 1;      // degree, >= 1
    int m = 0;      // dim L = n(n-1)/2
    int n = 0;      // dim g
    int dimV = 0;

    CochainSpace() = default;
    CochainSpace(int p_, int n_, int dimV_)
        : p(p_), m(n_ * (n_ - 1) / 2), n(n_), dimV(dimV_) {
        if (p < 1) throw std::invalid_argument("cochain degree must be >= 1");
    }

    std::int64_t dim() const {
        std::int64_t d = 1;
        for (int i = 0; i < p - 1; ++i) d *= m;
        return d * n * dimV;
    }

    std::int64_t index(const std::vector<int>& slots, int g, int v) const {
        std::int64_t idx = 0;
        for (int s : slots) idx = idx * m + s;
        return (idx * n + g) * dimV + v;
    }

    // Index with the V-coordinate stripped (multiply by dimV, add v later).
    std::int64_t base_index(const std::vector<int>& slots, int g) const {
        std::int64_t idx = 0;
        for (int s : slots) idx = idx * m + s;
        return (idx * n + g) * dimV;
    }

    void decode(std::int64_t idx, std::vector<int>& slots, int& g, int& v) const {
        v = static_cast<int>(idx % dimV);
        idx /= dimV;
        g = static_cast<int>(idx % n);
        idx /= n;
        slots.assign(static_cast<std::size_t>(p - 1), 0);
        for (int i = p - 2; i >= 0; --i) {
            slots[static_cast<std::size_t>(i)] = static_cast<int>(idx % m);
            idx /= m;
        }
    }

    bool operator==(const CochainSpace& o) const {
        return p == o.p && m == o.m && n == o.n && dimV == o.dimV;
    }
};

struct Cochain {
    CochainSpace sp;
    Vec c;

    Cochain() = default;
    explicit Cochain(CochainSpace s) : sp(s), c(zero_vec(static_cast<int>(s.dim()))) {}

    Scalar& at(const std::vector<int>& slots, int g, int v) {
        return c[static_cast<std::size_t>(sp.index(slots, g, v))];
    }
    const Scalar& at(const std::vector<int>& slots, int g, int v) const {
        return c[static_cast<std::size_t>(sp.index(slots, g, v))];
    }
};

// Sparse support of a coordinate vector.
inline std::vector<std::pair<int, Scalar>> support(const Vec& v) {
    std::vector<std::pair<int, Scalar>> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back({static_cast<int>(i), v[i]});
    return s;
}

// Expand multilinear arguments (p-1 L-vectors and one g-vector) into basis
// cochain coordinates: pairs of (base index, coefficient).
inline std::vector<std::pair<std::int64_t, Scalar>> expand_args(const CochainSpace& sp,
                                                                const std::vector<const Vec*>& Ls,
                                                                const Vec& g) {
    std::vector<std::pair<std::int64_t, Scalar>> out{{0, Scalar(1)}};
    auto fold = [&](const std::vector<std::pair<int, Scalar>>& sup, int radix) {
        std::vector<std::pair<std::int64_t, Scalar>> next;
        next.reserve(out.size() * sup.size());
        for (const auto& [idx, coeff] : out)
            for (const auto& [i, ci] : sup) next.push_back({idx * radix + i, coeff * ci});
        out = std::move(next);
    };
    for (const Vec* x : Ls) fold(support(*x), sp.m);
    fold(support(g), sp.n);
    for (auto& [idx, coeff] : out) idx *= sp.dimV;
    return out;
}

// Multilinear evaluation of a cochain on vector arguments.
inline Vec eval_cochain(const Cochain& f, const std::vector<const Vec*>& Ls, const Vec& g) {
    if (static_cast<int>(Ls.size()) != f.sp.p - 1)
        throw std::invalid_argument("wrong number of wedge-space arguments");
    Vec out = zero_vec(f.sp.dimV);
    for (const auto& [base, coeff] : expand_args(f.sp, Ls, g))
        for (int v = 0; v < f.sp.dimV; ++v)
            out[static_cast<std::size_t>(v)] += coeff * f.c[static_cast<std::size_t>(base + v)];
    return out;
}

} // namespace trilie
