#pragma once

#include "cohomology.hpp"

namespace trilie {

// Bimodule structure on W = Hom(g, V) over the induced Leibniz algebra,
// together with the comparison endomorphism psi. W is coordinatized as
// (g-index, V-coordinate) with V fastest, matching degree-1 cochains.
struct LeibnizModule {
    LeibnizAlgebra alg;
    int n = 0, dimV = 0;
    std::vector<Matrix> left, right;  // one W-endomorphism per basis of L
    Matrix psi;

    int dimW() const { return n * dimV; }

    Matrix left_of(const Vec& x) const { return combine(left, x); }
    Matrix right_of(const Vec& x) const { return combine(right, x); }

private:
    Matrix combine(const std::vector<Matrix>& ms, const Vec& x) const {
        Matrix out(dimW(), dimW());
        for (std::size_t a = 0; a < ms.size(); ++a)
            if (x[a] != 0) out = out + ms[a] * x[a];
        return out;
    }
};

// Build the Hom(g, V) bimodule from a representation. Only meaningful at
// weight 0; callers enforce that.
inline LeibnizModule hom_module(const ThreeLieAlgebra& a, const WeightedDifferential& dd,
                                const Representation& rep) {
    LeibnizModule mod{induced_leibniz(a, dd), a.dim(), rep.dimV(), {}, {}, Matrix()};
    const int n = a.dim(), dv = rep.dimV(), nw = n * dv;
    auto widx = [&](int g, int v) { return g * dv + v; };
    for (int s = 0; s < mod.alg.dim(); ++s) {
        auto [x, y] = mod.alg.wedge().pair(s);
        Matrix l(nw, nw), r(nw, nw);
        Matrix rxy = rep.rho(x, y);
        for (int z = 0; z < n; ++z) {
            Vec br = a.bracket(x, y, z);
            for (int vo = 0; vo < dv; ++vo)
                for (int vi = 0; vi < dv; ++vi) {
                    l(widx(z, vo), widx(z, vi)) += rxy(vo, vi);
                    r(widx(z, vo), widx(z, vi)) -= rxy(vo, vi);
                }
            for (int u = 0; u < n; ++u) {
                const Scalar& c = br[static_cast<std::size_t>(u)];
                if (c == 0) continue;
                for (int v = 0; v < dv; ++v) {
                    l(widx(z, v), widx(u, v)) -= c;
                    r(widx(z, v), widx(u, v)) += c;
                }
            }
            Matrix ryz = rep.rho(y, z), rzx = rep.rho(z, x);
            for (int vo = 0; vo < dv; ++vo)
                for (int vi = 0; vi < dv; ++vi) {
                    r(widx(z, vo), widx(x, vi)) -= ryz(vo, vi);
                    r(widx(z, vo), widx(y, vi)) -= rzx(vo, vi);
                }
        }
        mod.left.push_back(std::move(l));
        mod.right.push_back(std::move(r));
    }
    Matrix psi(nw, nw);
    for (int g = 0; g < n; ++g) {
        for (int vo = 0; vo < dv; ++vo)
            for (int vi = 0; vi < dv; ++vi) psi(widx(g, vo), widx(g, vi)) += rep.dV()(vo, vi);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < dv; ++v) psi(widx(g, v), widx(u, v)) -= dd.d(u, g);
    }
    mod.psi = std::move(psi);
    return mod;
}

// The three Loday module axioms, on basis pairs/triples.
inline Verdict check_leibniz_module(const LeibnizModule& mod) {
    Verdict v;
    const int m = mod.alg.dim();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Matrix lab = mod.left_of(mod.alg.bracket(a, b));
            Matrix rab = mod.right_of(mod.alg.bracket(a, b));
            const Matrix &la = mod.left[static_cast<std::size_t>(a)],
                         &lb = mod.left[static_cast<std::size_t>(b)],
                         &ra = mod.right[static_cast<std::size_t>(a)],
                         &rb = mod.right[static_cast<std::size_t>(b)];
            v.report("module_left_left", {a, b}, flatten(la * lb - lab - lb * la));
            v.report("module_left_right", {a, b}, flatten(la * rb - rb * la - rab));
            v.report("module_right_right", {a, b}, flatten(rab - rb * ra - la * rb));
        }
    return v;
}

namespace detail {

// Expand m wedge-slot arguments over their supports; indices carry the
// W-coordinate stride.
inline std::vector<std::pair<std::int64_t, Scalar>> expand_slots(int radix, int stride,
                                                                 const std::vector<const Vec*>& xs) {
    std::vector<std::pair<std::int64_t, Scalar>> out{{0, Scalar(1)}};
    for (const Vec* x : xs) {
        std::vector<std::pair<std::int64_t, Scalar>> next;
        for (const auto& [idx, coeff] : out)
            for (const auto& [i, ci] : support(*x)) next.push_back({idx * radix + i, coeff * ci});
        out = std::move(next);
    }
    for (auto& [idx, coeff] : out) idx *= stride;
    return out;
}

} // namespace detail

// Coboundary of W-valued Leibniz cochains with m wedge slots; one formula for
// every degree (the right-action term carries (-1)^(m+1)).
inline Matrix leib_partial(const LeibnizModule& mod, int m) {
    const int radix = mod.alg.dim(), nw = mod.dimW();
    std::int64_t in_dim = nw, out_dim = nw;
    for (int i = 0; i < m; ++i) in_dim *= radix;
    for (int i = 0; i < m + 1; ++i) out_dim *= radix;
    Matrix mat(static_cast<int>(out_dim), static_cast<int>(in_dim));
    std::vector<Vec> basisL;
    for (int a = 0; a < radix; ++a) basisL.push_back(basisv(radix, a));

    auto add_scalar = [&](std::int64_t row, const std::vector<const Vec*>& xs, const Scalar& w) {
        for (const auto& [base, coeff] : detail::expand_slots(radix, nw, xs))
            for (int k = 0; k < nw; ++k)
                mat(static_cast<int>(row) + k, static_cast<int>(base) + k) += w * coeff;
    };
    auto add_op = [&](std::int64_t row, const std::vector<const Vec*>& xs, const Matrix& op,
                      const Scalar& w) {
        for (const auto& [base, coeff] : detail::expand_slots(radix, nw, xs))
            for (int ko = 0; ko < nw; ++ko)
                for (int ki = 0; ki < nw; ++ki)
                    if (op(ko, ki) != 0)
                        mat(static_cast<int>(row) + ko, static_cast<int>(base) + ki) +=
                            w * coeff * op(ko, ki);
    };

    std::int64_t tuples = out_dim / nw;
    std::vector<int> slots(static_cast<std::size_t>(m + 1));
    for (std::int64_t t = 0; t < tuples; ++t) {
        std::int64_t rest = t;
        for (int i = m; i >= 0; --i) {
            slots[static_cast<std::size_t>(i)] = static_cast<int>(rest % radix);
            rest /= radix;
        }
        std::int64_t row = t * nw;
        auto args_without = [&](int drop, int subst, const Vec* sv) {
            std::vector<const Vec*> xs;
            for (int s = 0; s <= m; ++s) {
                if (s == drop) continue;
                xs.push_back(s == subst ? sv
                                        : &basisL[static_cast<std::size_t>(
                                              slots[static_cast<std::size_t>(s)])]);
            }
            return xs;
        };
        for (int i = 0; i < m; ++i) {
            Scalar si = (i % 2 == 0) ? Scalar(1) : Scalar(-1);  // (-1)^(i+1), 1-based
            add_op(row, args_without(i, -1, nullptr),
                   mod.left[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])], si);
        }
        {
            Scalar sm = (m % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^(m+1)
            add_op(row, args_without(m, -1, nullptr),
                   mod.right[static_cast<std::size_t>(slots[static_cast<std::size_t>(m)])], sm);
        }
        for (int i = 0; i <= m; ++i) {
            Scalar si = (i % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^i, 1-based
            for (int k = i + 1; k <= m; ++k) {
                Vec br = mod.alg.bracket(slots[static_cast<std::size_t>(i)],
                                         slots[static_cast<std::size_t>(k)]);
                if (is_zero(br)) continue;
                add_scalar(row, args_without(i, k, &br), si);
            }
        }
    }
    return mat;
}

// Comparison map on W-valued cochains: insert the induced differential into
// each wedge slot, minus postcomposition with psi.
inline Matrix leib_delta(const LeibnizModule& mod, int m) {
    const int radix = mod.alg.dim(), nw = mod.dimW();
    std::int64_t dim = nw;
    for (int i = 0; i < m; ++i) dim *= radix;
    Matrix mat(static_cast<int>(dim), static_cast<int>(dim));
    std::vector<Vec> basisL;
    for (int a = 0; a < radix; ++a) basisL.push_back(basisv(radix, a));
    std::int64_t tuples = dim / nw;
    std::vector<int> slots(static_cast<std::size_t>(m));
    for (std::int64_t t = 0; t < tuples; ++t) {
        std::int64_t rest = t;
        for (int i = m - 1; i >= 0; --i) {
            slots[static_cast<std::size_t>(i)] = static_cast<int>(rest % radix);
            rest /= radix;
        }
        std::int64_t row = t * nw;
        for (int k = 0; k < m; ++k) {
            Vec dk = mod.alg.dL().col(slots[static_cast<std::size_t>(k)]);
            std::vector<const Vec*> xs;
            for (int s = 0; s < m; ++s)
                xs.push_back(s == k ? &dk
                                    : &basisL[static_cast<std::size_t>(
                                          slots[static_cast<std::size_t>(s)])]);
            for (const auto& [base, coeff] : detail::expand_slots(radix, nw, xs))
                for (int w = 0; w < nw; ++w)
                    mat(static_cast<int>(row) + w, static_cast<int>(base) + w) += coeff;
        }
        for (int ko = 0; ko < nw; ++ko)
            for (int ki = 0; ki < nw; ++ki)
                if (mod.psi(ko, ki) != 0)
                    mat(static_cast<int>(row) + ko, static_cast<int>(t * nw) + ki) -=
                        mod.psi(ko, ki);
    }
    return mat;
}

// Pair coboundary on C^m x C^(m-1) of W-valued cochains (degree 0 is just W).
inline Matrix leib_pair_partial(const LeibnizModule& mod, int m) {
    Matrix top = leib_partial(mod, m);
    Matrix dl = leib_delta(mod, m);
    Scalar sgn = (m % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^(m+1)
    if (m == 0) {
        Matrix out(top.rows() + dl.rows(), top.cols());
        for (int i = 0; i < top.rows(); ++i)
            for (int j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
        for (int i = 0; i < dl.rows(); ++i)
            for (int j = 0; j < dl.cols(); ++j) out(top.rows() + i, j) = sgn * dl(i, j);
        return out;
    }
    Matrix bot = leib_partial(mod, m - 1);
    Matrix out(top.rows() + top.cols(), top.cols() + bot.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
    for (int i = 0; i < dl.rows(); ++i)
        for (int j = 0; j < dl.cols(); ++j) out(top.rows() + i, j) = sgn * dl(i, j);
    for (int i = 0; i < bot.rows(); ++i)
        for (int j = 0; j < bot.cols(); ++j) out(top.rows() + i, top.cols() + j) = bot(i, j);
    return out;
}

struct BridgeDegree {
    int p;  // degree on the 3-Lie side; the Leibniz side sits at p - 1
    bool partial_match, delta_match, pair_match;
};

struct BridgeReport {
    Verdict module_axioms;
    std::vector<BridgeDegree> degrees;
    bool ok = true;
};

// Coordinate comparison of the two cochain complexes. Weight 0 only: the
// translation to Leibniz data is not available otherwise.
inline BridgeReport leibniz_bridge(Complexes& cc, int max_degree) {
    if (cc.differential().lambda != 0)
        throw std::invalid_argument("the Leibniz comparison requires weight 0");
    LeibnizModule mod = hom_module(cc.algebra(), cc.differential(), cc.rep());
    BridgeReport rep;
    rep.module_axioms = check_leibniz_module(mod);
    if (!rep.module_axioms.pass()) rep.ok = false;
    for (int p = 1; p <= max_degree; ++p) {
        BridgeDegree bd{p, cc.partial(p) == leib_partial(mod, p - 1),
                        cc.delta(p) == leib_delta(mod, p - 1),
                        cc.partial_pair(p) == leib_pair_partial(mod, p - 1)};
        if (!(bd.partial_match && bd.delta_match && bd.pair_match)) rep.ok = false;
        rep.degrees.push_back(bd);
    }
    return rep;
}

} // namespace trilie
