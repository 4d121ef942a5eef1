#pragma once

#include <array>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace trilie {

// Parity sign of a permutation of {0..m-1}.
inline int perm_sign(std::vector<int> p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
            sign = -sign;
        }
    }
    return sign;
}

// Sorts (a, b, c) and reports the permutation sign; sign 0 on repeats.
struct SortedTriple {
    std::array<int, 3> idx;
    int sign;
};

inline SortedTriple sort_triple(int a, int b, int c) {
    SortedTriple t{{a, b, c}, 1};
    auto& v = t.idx;
    if (v[0] > v[1]) { std::swap(v[0], v[1]); t.sign = -t.sign; }
    if (v[1] > v[2]) { std::swap(v[1], v[2]); t.sign = -t.sign; }
    if (v[0] > v[1]) { std::swap(v[0], v[1]); t.sign = -t.sign; }
    if (v[0] == v[1] || v[1] == v[2]) t.sign = 0;
    return t;
}

// Canonical basis of L = wedge^2 g: all pairs (i, j) with i < j, lexicographic.
class WedgeIndex {
public:
    explicit WedgeIndex(int n) : n_(n) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs_.push_back({i, j});
        pos_.assign(static_cast<std::size_t>(n) * n, -1);
        for (std::size_t a = 0; a < pairs_.size(); ++a)
            pos_[static_cast<std::size_t>(pairs_[a].first) * n + pairs_[a].second] =
                static_cast<int>(a);
    }

    int n() const { return n_; }
    int size() const { return static_cast<int>(pairs_.size()); }
    std::pair<int, int> pair(int a) const { return pairs_[static_cast<std::size_t>(a)]; }

    // Index of e_i ^ e_j with sign; sign 0 when i == j.
    std::pair<int, int> index_signed(int i, int j) const {
        if (i == j) return {-1, 0};
        if (i < j) return {pos_[static_cast<std::size_t>(i) * n_ + j], 1};
        return {pos_[static_cast<std::size_t>(j) * n_ + i], -1};
    }

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> pos_;
};

// Coordinates of u ^ v in the canonical wedge basis.
inline std::vector<Scalar> wedge_coords(const WedgeIndex& w, const std::vector<Scalar>& u,
                                        const std::vector<Scalar>& v) {
    std::vector<Scalar> out(static_cast<std::size_t>(w.size()), Scalar(0));
    for (int a = 0; a < w.size(); ++a) {
        auto [i, j] = w.pair(a);
        out[static_cast<std::size_t>(a)] =
            u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] -
            u[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(i)];
    }
    return out;
}

} // namespace trilie
