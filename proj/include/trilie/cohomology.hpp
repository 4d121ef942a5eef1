#pragma once

#include <map>
#include <string>

#include "cochain.hpp"

namespace trilie {

// Coboundary matrices for the three cochain complexes attached to a weighted
// differential 3-Lie algebra with a representation: the plain complex, the
// corrected complex (same formula with the corrected representation), and the
// pair complex that glues them along the comparison map delta.
class Complexes {
public:
    Complexes(ThreeLieAlgebra a, WeightedDifferential dd, Representation rho)
        : a_(std::move(a)), dd_(std::move(dd)), rho_(std::move(rho)),
          hat_(hat_rep(rho_, dd_)), l_(induced_leibniz(a_, dd_)) {}

    const ThreeLieAlgebra& algebra() const { return a_; }
    const WeightedDifferential& differential() const { return dd_; }
    const Representation& rep() const { return rho_; }
    const Representation& corrected_rep() const { return hat_; }
    const LeibnizAlgebra& leibniz() const { return l_; }

    CochainSpace space(int p) const { return CochainSpace(p, a_.dim(), rho_.dimV()); }

    std::int64_t pair_dim(int p) const {
        return p == 1 ? space(1).dim() : space(p).dim() + space(p - 1).dim();
    }

    const Matrix& partial(int p) { return memo(partial_, p, [&] { return coboundary(p, rho_); }); }
    const Matrix& partial_corrected(int p) {
        return memo(partial_corr_, p, [&] { return coboundary(p, hat_); });
    }
    const Matrix& delta(int p) { return memo(delta_, p, [&] { return delta_matrix(p); }); }

    // Pair coboundary C^p x C^{p-1} -> C^{p+1} x C^p (degree 1 input is just C^1).
    const Matrix& partial_pair(int p) {
        return memo(pair_, p, [&] {
            CochainSpace sp = space(p), sq = space(p + 1);
            const Matrix& top = partial(p);
            const Matrix& dl = delta(p);
            int rows = static_cast<int>(sq.dim() + sp.dim());
            if (p == 1) {
                Matrix m(rows, static_cast<int>(sp.dim()));
                paste(m, top, 0, 0);
                paste(m, dl * Scalar(-1), static_cast<int>(sq.dim()), 0);
                return m;
            }
            CochainSpace sr = space(p - 1);
            const Matrix& bot = partial_corrected(p - 1);
            Matrix m(rows, static_cast<int>(sp.dim() + sr.dim()));
            paste(m, top, 0, 0);
            Scalar sgn = (p % 2 == 0) ? Scalar(1) : Scalar(-1);
            paste(m, dl * sgn, static_cast<int>(sq.dim()), 0);
            paste(m, bot, static_cast<int>(sq.dim()), static_cast<int>(sp.dim()));
            return m;
        });
    }

private:
    template <typename F>
    const Matrix& memo(std::map<int, Matrix>& cache, int p, F make) {
        auto it = cache.find(p);
        if (it == cache.end()) it = cache.emplace(p, make()).first;
        return it->second;
    }

    static void paste(Matrix& dst, const Matrix& src, int r0, int c0) {
        for (int i = 0; i < src.rows(); ++i)
            for (int j = 0; j < src.cols(); ++j) dst(r0 + i, c0 + j) = src(i, j);
    }

    void add_scalar_term(Matrix& mat, const CochainSpace& in_sp, std::int64_t row_base,
                         const std::vector<const Vec*>& Ls, const Vec& g, const Scalar& w) {
        if (w == 0) return;
        for (const auto& [base, coeff] : expand_args(in_sp, Ls, g)) {
            Scalar f = w * coeff;
            for (int v = 0; v < in_sp.dimV; ++v)
                mat(static_cast<int>(row_base) + v, static_cast<int>(base) + v) += f;
        }
    }

    void add_matrix_term(Matrix& mat, const CochainSpace& in_sp, std::int64_t row_base,
                         const std::vector<const Vec*>& Ls, const Vec& g, const Matrix& op,
                         const Scalar& w) {
        if (w == 0 || op.is_zero()) return;
        for (const auto& [base, coeff] : expand_args(in_sp, Ls, g)) {
            Scalar f = w * coeff;
            for (int vo = 0; vo < in_sp.dimV; ++vo)
                for (int vi = 0; vi < in_sp.dimV; ++vi)
                    if (op(vo, vi) != 0)
                        mat(static_cast<int>(row_base) + vo, static_cast<int>(base) + vi) +=
                            f * op(vo, vi);
        }
    }

    // The coboundary C^p -> C^{p+1}; the representation argument selects the
    // plain or the corrected variant.
    Matrix coboundary(int p, const Representation& rep) {
        CochainSpace in_sp = space(p), out_sp = space(p + 1);
        const int n = a_.dim(), m = l_.dim();
        Matrix mat(static_cast<int>(out_sp.dim()), static_cast<int>(in_sp.dim()));
        std::vector<Vec> basisL, basisg;
        for (int x = 0; x < m; ++x) basisL.push_back(basisv(m, x));
        for (int i = 0; i < n; ++i) basisg.push_back(basisv(n, i));

        std::int64_t tuples = out_sp.dim() / out_sp.dimV;
        std::vector<int> oslots;
        for (std::int64_t t = 0; t < tuples; ++t) {
            int g, v;
            out_sp.decode(t * out_sp.dimV, oslots, g, v);
            std::int64_t row_base = t * out_sp.dimV;

            // remaining slots after dropping slot i, optionally substituting
            // a vector at slot k
            auto args_without = [&](int drop, int subst, const Vec* sv) {
                std::vector<const Vec*> ls;
                for (int s = 0; s < p; ++s) {
                    if (s == drop) continue;
                    ls.push_back(s == subst ? sv
                                            : &basisL[static_cast<std::size_t>(
                                                  oslots[static_cast<std::size_t>(s)])]);
                }
                return ls;
            };

            for (int i = 0; i < p; ++i) {
                Scalar si = (i % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^(i+1), 1-based
                auto [xi, yi] = l_.wedge().pair(oslots[static_cast<std::size_t>(i)]);
                for (int k = i + 1; k < p; ++k) {
                    Vec br = l_.bracket(oslots[static_cast<std::size_t>(i)],
                                        oslots[static_cast<std::size_t>(k)]);
                    if (is_zero(br)) continue;
                    add_scalar_term(mat, in_sp, row_base, args_without(i, k, &br), basisg[static_cast<std::size_t>(g)], si);
                }
                Vec bg = a_.bracket(xi, yi, g);
                if (!is_zero(bg))
                    add_scalar_term(mat, in_sp, row_base, args_without(i, -1, nullptr), bg, si);
                add_matrix_term(mat, in_sp, row_base, args_without(i, -1, nullptr),
                                basisg[static_cast<std::size_t>(g)], rep.rho(xi, yi), -si);
            }
            {
                auto [xp, yp] = l_.wedge().pair(oslots[static_cast<std::size_t>(p - 1)]);
                Scalar sp_sign = (p % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^(p+1)
                std::vector<const Vec*> head;
                for (int s = 0; s < p - 1; ++s)
                    head.push_back(&basisL[static_cast<std::size_t>(oslots[static_cast<std::size_t>(s)])]);
                add_matrix_term(mat, in_sp, row_base, head, basisg[static_cast<std::size_t>(xp)],
                                rep.rho(yp, g), sp_sign);
                add_matrix_term(mat, in_sp, row_base, head, basisg[static_cast<std::size_t>(yp)],
                                rep.rho(g, xp), sp_sign);
            }
        }
        return mat;
    }

    // Comparison map C^p -> C^p: sum over nonempty subsets of the 2p-1
    // underlying g-slots of inserting d, weighted by lambda^(|S|-1), minus
    // postcomposition with d_V.
    Matrix delta_matrix(int p) {
        CochainSpace sp = space(p);
        const int n = a_.dim();
        Matrix mat(static_cast<int>(sp.dim()), static_cast<int>(sp.dim()));
        std::vector<Vec> basisg, dcol;
        for (int i = 0; i < n; ++i) {
            basisg.push_back(basisv(n, i));
            dcol.push_back(dd_.d.col(i));
        }
        const int nslots = 2 * p - 1;
        std::vector<Scalar> lampow(static_cast<std::size_t>(nslots), Scalar(1));
        for (int k = 1; k < nslots; ++k)
            lampow[static_cast<std::size_t>(k)] = lampow[static_cast<std::size_t>(k - 1)] * dd_.lambda;

        std::int64_t tuples = sp.dim() / sp.dimV;
        std::vector<int> slots;
        for (std::int64_t t = 0; t < tuples; ++t) {
            int g, v;
            sp.decode(t * sp.dimV, slots, g, v);
            std::int64_t row_base = t * sp.dimV;
            for (int mask = 1; mask < (1 << nslots); ++mask) {
                int bits = __builtin_popcount(static_cast<unsigned>(mask));
                const Scalar& w = lampow[static_cast<std::size_t>(bits - 1)];
                if (w == 0) continue;
                std::vector<Vec> largs(static_cast<std::size_t>(p - 1));
                std::vector<const Vec*> ls;
                for (int s = 0; s < p - 1; ++s) {
                    auto [x, y] = l_.wedge().pair(slots[static_cast<std::size_t>(s)]);
                    const Vec& u = (mask >> (2 * s)) & 1 ? dcol[static_cast<std::size_t>(x)]
                                                         : basisg[static_cast<std::size_t>(x)];
                    const Vec& vv = (mask >> (2 * s + 1)) & 1 ? dcol[static_cast<std::size_t>(y)]
                                                              : basisg[static_cast<std::size_t>(y)];
                    largs[static_cast<std::size_t>(s)] = wedge_coords(l_.wedge(), u, vv);
                    ls.push_back(&largs[static_cast<std::size_t>(s)]);
                }
                const Vec& garg = (mask >> (2 * p - 2)) & 1 ? dcol[static_cast<std::size_t>(g)]
                                                            : basisg[static_cast<std::size_t>(g)];
                add_scalar_term(mat, sp, row_base, ls, garg, w);
            }
            std::vector<Vec> lbasis;
            for (int s : slots) lbasis.push_back(basisv(l_.dim(), s));
            std::vector<const Vec*> ls;
            for (const Vec& b : lbasis) ls.push_back(&b);
            add_matrix_term(mat, sp, row_base, ls, basisg[static_cast<std::size_t>(g)], rho_.dV(),
                            Scalar(-1));
        }
        return mat;
    }

    ThreeLieAlgebra a_;
    WeightedDifferential dd_;
    Representation rho_;
    Representation hat_;
    LeibnizAlgebra l_;
    std::map<int, Matrix> partial_, partial_corr_, delta_, pair_;
};

enum class Complex { Plain, Corrected, Pair };

inline const Matrix& boundary_of(Complexes& cc, Complex which, int p) {
    switch (which) {
        case Complex::Plain: return cc.partial(p);
        case Complex::Corrected: return cc.partial_corrected(p);
        default: return cc.partial_pair(p);
    }
}

inline std::int64_t space_dim_of(Complexes& cc, Complex which, int p) {
    return which == Complex::Pair ? cc.pair_dim(p) : cc.space(p).dim();
}

struct CohomologyDegree {
    int p;
    std::int64_t dim_space, dim_cocycles, dim_coboundaries, dim_cohomology;
};

struct CohomologyReport {
    std::vector<CohomologyDegree> degrees;
    bool chain_property = true;  // consecutive coboundaries compose to zero
};

inline CohomologyReport cohomology_report(Complexes& cc, Complex which, int max_degree) {
    CohomologyReport rep;
    for (int p = 1; p <= max_degree; ++p) {
        const Matrix& d = boundary_of(cc, which, p);
        std::int64_t dim = space_dim_of(cc, which, p);
        std::int64_t z = dim - rank(d);
        std::int64_t b = (p == 1) ? 0 : rank(boundary_of(cc, which, p - 1));
        rep.degrees.push_back({p, dim, z, b, z - b});
        if (p > 1 && !(d * boundary_of(cc, which, p - 1)).is_zero()) rep.chain_property = false;
    }
    return rep;
}

inline bool is_cocycle(Complexes& cc, Complex which, int p, const Vec& f) {
    return is_zero(boundary_of(cc, which, p).apply(f));
}

// Witness g with f1 - f2 = boundary(g), when one exists. Degree 1 classes
// coincide only when the cochains are equal.
inline std::optional<Vec> cohomologous(Complexes& cc, Complex which, int p, const Vec& f1,
                                       const Vec& f2) {
    Vec diff = sub(f1, f2);
    if (p == 1) {
        if (is_zero(diff)) return zero_vec(0);
        return std::nullopt;
    }
    return solve(boundary_of(cc, which, p - 1), diff);
}

// One position of the long exact sequence built from the inclusion of the
// corrected complex into the pair complex and the projection onto the plain
// complex; the connecting map is (-1)^p times the comparison map.
struct LesPosition {
    std::string at;
    int degree;
    std::int64_t dim_h, dim_image_in, dim_kernel_out;
    bool composite_zero, exact;
};

struct LesReport {
    std::vector<LesPosition> positions;
    bool exact = true;
};

namespace detail {

inline Matrix cocycle_matrix(const Matrix& boundary) {
    auto ker = kernel_basis(boundary);
    return from_columns(boundary.cols(), ker);
}

inline std::int64_t induced_image_dim(const Matrix& f, const Matrix& zx, const Matrix& by) {
    Matrix img = f * zx;
    return rank(hconcat(img, by)) - rank(by);
}

inline bool composite_lands_in_coboundaries(const Matrix& g, const Matrix& f, const Matrix& zx,
                                            const Matrix& bz) {
    Matrix comp = g * (f * zx);
    std::int64_t rb = rank(bz);
    return rank(hconcat(bz, comp)) == rb;
}

} // namespace detail

inline LesReport les_check(Complexes& cc, int max_degree) {
    LesReport rep;
    auto plain_dim = [&](int p) { return cc.space(p).dim(); };
    auto pairdim = [&](int p) { return static_cast<int>(cc.pair_dim(p)); };

    // cochain-level maps
    auto incl = [&](int p) {  // corrected degree p-1 -> pair degree p
        Matrix m(pairdim(p), static_cast<int>(plain_dim(p - 1)));
        int off = static_cast<int>(plain_dim(p));
        for (int j = 0; j < m.cols(); ++j) m(off + j, j) = 1;
        return m;
    };
    auto proj = [&](int p) {  // pair degree p -> plain degree p
        Matrix m(static_cast<int>(plain_dim(p)), pairdim(p));
        for (int i = 0; i < m.rows(); ++i) m(i, i) = 1;
        return m;
    };
    auto connecting = [&](int p) {
        return cc.delta(p) * ((p % 2 == 0) ? Scalar(1) : Scalar(-1));
    };

    auto prev_b = [&](Complex w, int p) {
        if (p <= 1) return Matrix(static_cast<int>(space_dim_of(cc, w, p)), 0);
        return Matrix(boundary_of(cc, w, p - 1));
    };

    auto zmat = [&](Complex w, int p) { return detail::cocycle_matrix(boundary_of(cc, w, p)); };

    auto check_position = [&](const std::string& at, int degree, const Matrix& f, const Matrix& zx,
                              const Matrix& g, Complex wy, int py, Complex wz, int pz) {
        Matrix by = prev_b(wy, py);
        Matrix bz = prev_b(wz, pz);
        Matrix zy = zmat(wy, py);
        std::int64_t dim_h = zy.cols() - rank(by);
        std::int64_t im_in = detail::induced_image_dim(f, zx, by);
        std::int64_t im_out = detail::induced_image_dim(g, zy, bz);
        bool comp0 = detail::composite_lands_in_coboundaries(g, f, zx, bz);
        LesPosition pos{at, degree, dim_h, im_in, dim_h - im_out, comp0,
                        comp0 && im_in == dim_h - im_out};
        if (!pos.exact) rep.exact = false;
        rep.positions.push_back(pos);
    };

    for (int p = 1; p <= max_degree; ++p) {
        // at the pair term of degree p
        if (p == 1) {
            Matrix zero_in(pairdim(1), 0);
            check_position("pair", 1, zero_in, Matrix(0, 0), proj(1), Complex::Pair, 1,
                           Complex::Plain, 1);
        } else {
            check_position("pair", p, incl(p), zmat(Complex::Corrected, p - 1), proj(p),
                           Complex::Pair, p, Complex::Plain, p);
        }
        // at the plain term of degree p
        check_position("plain", p, proj(p), zmat(Complex::Pair, p), connecting(p), Complex::Plain,
                       p, Complex::Corrected, p);
        // at the corrected term of degree p
        check_position("corrected", p, connecting(p), zmat(Complex::Plain, p), incl(p + 1),
                       Complex::Corrected, p, Complex::Pair, p + 1);
    }
    return rep;
}

} // namespace trilie
