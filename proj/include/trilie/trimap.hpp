#pragma once

#include <map>
#include <stdexcept>

#include "comb.hpp"
#include "matrix.hpp"

namespace trilie {

// Alternating trilinear map from a source space of dimension n to a value
// space of dimension dv; only canonical triples i < j < k are stored.
class AltTriMap {
public:
    AltTriMap() = default;
    AltTriMap(int n, int dv) : n_(n), dv_(dv) {}

    int source_dim() const { return n_; }
    int value_dim() const { return dv_; }

    void set(int i, int j, int k, Vec value) {
        if (!(0 <= i && i < j && j < k && k < n_))
            throw std::invalid_argument("key must be strictly increasing and in range");
        if (static_cast<int>(value.size()) != dv_)
            throw std::invalid_argument("value has wrong dimension");
        if (is_zero(value))
            table_.erase({i, j, k});
        else
            table_[{i, j, k}] = std::move(value);
    }

    const std::map<std::array<int, 3>, Vec>& table() const { return table_; }

    bool operator==(const AltTriMap& o) const {
        return n_ == o.n_ && dv_ == o.dv_ && table_ == o.table_;
    }

    Vec value(int i, int j, int k) const {
        SortedTriple t = sort_triple(i, j, k);
        if (t.sign == 0) return zero_vec(dv_);
        auto it = table_.find(t.idx);
        if (it == table_.end()) return zero_vec(dv_);
        return t.sign == 1 ? it->second : scaled(Scalar(-1), it->second);
    }

    Vec value(const Vec& u, const Vec& v, const Vec& w) const {
        Vec out = zero_vec(dv_);
        for (const auto& [idx, val] : table_) {
            auto [i, j, k] = idx;
            Scalar c = u[static_cast<std::size_t>(i)] *
                           (v[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(k)] -
                            v[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(j)]) -
                       u[static_cast<std::size_t>(j)] *
                           (v[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(k)] -
                            v[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(i)]) +
                       u[static_cast<std::size_t>(k)] *
                           (v[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)] -
                            v[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(i)]);
            if (c != 0) axpy(out, c, val);
        }
        return out;
    }

    Vec value(int i, int j, const Vec& w) const {
        Vec out = zero_vec(dv_);
        for (int k = 0; k < n_; ++k)
            if (w[static_cast<std::size_t>(k)] != 0)
                axpy(out, w[static_cast<std::size_t>(k)], value(i, j, k));
        return out;
    }

private:
    int n_ = 0;
    int dv_ = 0;
    std::map<std::array<int, 3>, Vec> table_;
};

} // namespace trilie
