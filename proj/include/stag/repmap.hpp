// Morphisms of poset representations and the abelian-category toolbox:
// Hom bases, kernels, cokernels, images, socles, minimal injective
// envelopes and resolutions, plus the section functors along closed and
// open subsets that the derived layer applies termwise to injectives.

#pragma once

#include <optional>
#include <vector>

#include "stag/rep.hpp"

namespace stag {

/// A morphism src -> dst: one matrix per poset element, commuting with the
/// structure maps. Validated on construction.
class RepMap {
public:
    RepMap(PosetRep src, PosetRep dst, std::vector<Matrix> comp)
        : src_(std::move(src)), dst_(std::move(dst)), comp_(std::move(comp)) {
        validate();
    }

    static RepMap zero(const PosetRep& src, const PosetRep& dst) {
        std::vector<Matrix> c;
        for (std::size_t x = 0; x < src.poset()->size(); ++x)
            c.emplace_back(src.field(), dst.dim(x), src.dim(x));
        return RepMap(src, dst, std::move(c));
    }

    static RepMap identity(const PosetRep& a) {
        std::vector<Matrix> c;
        for (std::size_t x = 0; x < a.poset()->size(); ++x)
            c.push_back(Matrix::identity(a.field(), a.dim(x)));
        return RepMap(a, a, std::move(c));
    }

    const PosetRep& src() const { return src_; }
    const PosetRep& dst() const { return dst_; }
    const Matrix& at(std::size_t x) const { return comp_[x]; }

    bool is_zero() const {
        for (const auto& m : comp_) if (!m.is_zero()) return false;
        return true;
    }
    bool is_injective() const {
        for (std::size_t x = 0; x < comp_.size(); ++x)
            if (comp_[x].rank() != src_.dim(x)) return false;
        return true;
    }
    bool is_surjective() const {
        for (std::size_t x = 0; x < comp_.size(); ++x)
            if (comp_[x].rank() != dst_.dim(x)) return false;
        return true;
    }
    bool is_iso() const { return is_injective() && is_surjective(); }

    RepMap operator+(const RepMap& o) const {
        std::vector<Matrix> c;
        for (std::size_t x = 0; x < comp_.size(); ++x) c.push_back(comp_[x] + o.comp_[x]);
        return RepMap(src_, dst_, std::move(c));
    }
    RepMap operator-(const RepMap& o) const {
        std::vector<Matrix> c;
        for (std::size_t x = 0; x < comp_.size(); ++x) c.push_back(comp_[x] - o.comp_[x]);
        return RepMap(src_, dst_, std::move(c));
    }
    RepMap operator-() const {
        std::vector<Matrix> c;
        for (const auto& m : comp_) c.push_back(-m);
        return RepMap(src_, dst_, std::move(c));
    }
    RepMap scaled(const Scalar& s) const {
        std::vector<Matrix> c;
        for (const auto& m : comp_) c.push_back(m.scaled(s));
        return RepMap(src_, dst_, std::move(c));
    }

    bool operator==(const RepMap& o) const {
        return src_ == o.src_ && dst_ == o.dst_ && comp_ == o.comp_;
    }
    bool operator!=(const RepMap& o) const { return !(*this == o); }

    /// g.compose(f) = g after f.
    RepMap compose(const RepMap& f) const {
        std::vector<Matrix> c;
        for (std::size_t x = 0; x < comp_.size(); ++x) c.push_back(comp_[x] * f.comp_[x]);
        return RepMap(f.src_, dst_, std::move(c));
    }

    /// Transposed morphism D(dst) -> D(src) on the opposite poset.
    RepMap dual() const {
        std::vector<Matrix> c;
        for (const auto& m : comp_) c.push_back(m.transpose());
        return RepMap(dst_.dual(), src_.dual(), std::move(c));
    }

private:
    void validate() const {
        const auto& p = *src_.poset();
        if (!p.same_as(*dst_.poset()) || src_.field() != dst_.field() ||
            comp_.size() != p.size())
            throw std::invalid_argument("RepMap: incompatible objects");
        for (std::size_t x = 0; x < p.size(); ++x)
            if (comp_[x].rows() != dst_.dim(x) || comp_[x].cols() != src_.dim(x))
                throw std::invalid_argument("RepMap: component shape mismatch");
        for (const auto& [x, y] : p.covers())
            if (dst_.map(x, y) * comp_[x] != comp_[y] * src_.map(x, y))
                throw std::invalid_argument("RepMap: does not commute with structure maps");
    }

    PosetRep src_, dst_;
    std::vector<Matrix> comp_;
};

/// f ⊕ g acting on the direct sums of sources and targets.
inline RepMap map_direct_sum(const RepMap& f, const RepMap& g) {
    std::vector<Matrix> comp;
    for (std::size_t x = 0; x < f.src().poset()->size(); ++x)
        comp.push_back(Matrix::direct_sum(f.at(x), g.at(x)));
    return RepMap(PosetRep::direct_sum(f.src(), g.src()),
                  PosetRep::direct_sum(f.dst(), g.dst()), std::move(comp));
}

/// 2x2 block morphism A1 ⊕ A2 -> B1 ⊕ B2 from its four components.
inline RepMap map_block2(const RepMap& f11, const RepMap& f12, const RepMap& f21,
                         const RepMap& f22) {
    std::vector<Matrix> comp;
    for (std::size_t x = 0; x < f11.src().poset()->size(); ++x)
        comp.push_back(f11.at(x).hstack(f12.at(x)).vstack(f21.at(x).hstack(f22.at(x))));
    return RepMap(PosetRep::direct_sum(f11.src(), f12.src()),
                  PosetRep::direct_sum(f11.dst(), f21.dst()), std::move(comp));
}

/// Canonical inclusion of the first summand into A ⊕ B.
inline RepMap incl_first(const PosetRep& a, const PosetRep& b) {
    const Field k = a.field();
    std::vector<Matrix> comp;
    for (std::size_t x = 0; x < a.poset()->size(); ++x)
        comp.push_back(Matrix::identity(k, a.dim(x)).vstack(Matrix(k, b.dim(x), a.dim(x))));
    return RepMap(a, PosetRep::direct_sum(a, b), std::move(comp));
}

/// Canonical inclusion of the second summand into A ⊕ B.
inline RepMap incl_second(const PosetRep& a, const PosetRep& b) {
    const Field k = a.field();
    std::vector<Matrix> comp;
    for (std::size_t x = 0; x < a.poset()->size(); ++x)
        comp.push_back(Matrix(k, a.dim(x), b.dim(x)).vstack(Matrix::identity(k, b.dim(x))));
    return RepMap(b, PosetRep::direct_sum(a, b), std::move(comp));
}

/// Canonical projection of A ⊕ B onto the first summand.
inline RepMap proj_first(const PosetRep& a, const PosetRep& b) {
    const Field k = a.field();
    std::vector<Matrix> comp;
    for (std::size_t x = 0; x < a.poset()->size(); ++x)
        comp.push_back(Matrix::identity(k, a.dim(x)).hstack(Matrix(k, a.dim(x), b.dim(x))));
    return RepMap(PosetRep::direct_sum(a, b), a, std::move(comp));
}

/// Canonical projection of A ⊕ B onto the second summand.
inline RepMap proj_second(const PosetRep& a, const PosetRep& b) {
    const Field k = a.field();
    std::vector<Matrix> comp;
    for (std::size_t x = 0; x < a.poset()->size(); ++x)
        comp.push_back(Matrix(k, b.dim(x), a.dim(x)).hstack(Matrix::identity(k, b.dim(x))));
    return RepMap(PosetRep::direct_sum(a, b), b, std::move(comp));
}

/// Basis of Hom(F, G) as a list of morphisms; deterministic order.
inline std::vector<RepMap> hom_basis(const PosetRep& f, const PosetRep& g) {
    const auto& p = *f.poset();
    const Field k = f.field();
    LinearSystem sys(k);
    std::vector<std::size_t> u;
    for (std::size_t x = 0; x < p.size(); ++x)
        u.push_back(sys.add_unknown(g.dim(x), f.dim(x)));
    for (const auto& [x, y] : p.covers())
        sys.add_constraint({{u[x], g.map(x, y), Matrix::identity(k, f.dim(x))},
                            {u[y], -Matrix::identity(k, g.dim(y)), f.map(x, y)}},
                           Matrix(k, g.dim(y), f.dim(x)));
    Matrix basis = sys.nullspace();
    std::vector<RepMap> out;
    for (std::size_t col = 0; col < basis.cols(); ++col) {
        std::vector<Matrix> comp;
        for (std::size_t x = 0; x < p.size(); ++x)
            comp.push_back(sys.extract_column(basis, col, u[x]));
        out.emplace_back(f, g, std::move(comp));
    }
    return out;
}

inline std::size_t hom_dim(const PosetRep& f, const PosetRep& g) {
    return hom_basis(f, g).size();
}

/// A subobject or quotient together with its structural morphism.
struct SubObject {
    PosetRep obj;
    RepMap incl;  // obj -> ambient
};
struct QuotObject {
    PosetRep obj;
    RepMap proj;  // ambient -> obj
};

namespace detail {

/// Induced structure maps on stalkwise subspaces: bases[x] spans a subspace
/// of amb.dim(x) closed under the structure maps.
inline PosetRep sub_from_bases(const PosetRep& amb, const std::vector<Matrix>& bases) {
    const auto& p = *amb.poset();
    const std::size_t n = p.size();
    std::vector<std::size_t> dims(n);
    for (std::size_t x = 0; x < n; ++x) dims[x] = bases[x].cols();
    std::vector<std::vector<Matrix>> maps(n, std::vector<Matrix>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (p.leq(x, y)) {
                auto m = solve_linear(bases[y], amb.map(x, y) * bases[x]);
                if (!m)
                    throw std::logic_error("sub_from_bases: not closed under maps");
                maps[x][y] = *m;
            }
    return PosetRep(amb.poset(), amb.field(), std::move(dims), std::move(maps));
}

/// Induced structure maps on stalkwise quotients given surjections projs[x]
/// whose kernels are preserved by the structure maps.
inline PosetRep quot_from_projs(const PosetRep& amb, const std::vector<Matrix>& projs) {
    const auto& p = *amb.poset();
    const std::size_t n = p.size();
    std::vector<std::size_t> dims(n);
    for (std::size_t x = 0; x < n; ++x) dims[x] = projs[x].rows();
    std::vector<std::vector<Matrix>> maps(n, std::vector<Matrix>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (p.leq(x, y)) {
                // solve M · projs[x] = projs[y] · amb.map(x,y)
                Matrix rhs = projs[y] * amb.map(x, y);
                auto mt = solve_linear(projs[x].transpose(), rhs.transpose());
                if (!mt)
                    throw std::logic_error("quot_from_projs: kernel not preserved");
                maps[x][y] = mt->transpose();
            }
    return PosetRep(amb.poset(), amb.field(), std::move(dims), std::move(maps));
}

}  // namespace detail

inline SubObject kernel(const RepMap& f) {
    const auto& p = *f.src().poset();
    std::vector<Matrix> bases;
    for (std::size_t x = 0; x < p.size(); ++x) bases.push_back(f.at(x).kernel_basis());
    PosetRep k = detail::sub_from_bases(f.src(), bases);
    return {k, RepMap(k, f.src(), std::move(bases))};
}

inline QuotObject cokernel(const RepMap& f) {
    const auto& p = *f.src().poset();
    std::vector<Matrix> projs;
    for (std::size_t x = 0; x < p.size(); ++x) projs.push_back(cokernel_projection(f.at(x)));
    PosetRep c = detail::quot_from_projs(f.dst(), projs);
    return {c, RepMap(f.dst(), c, std::move(projs))};
}

struct ImageObject {
    PosetRep obj;
    RepMap incl;  // obj -> dst(f)
    RepMap proj;  // src(f) -> obj
};

inline ImageObject image(const RepMap& f) {
    SubObject im = kernel(cokernel(f).proj);
    std::vector<Matrix> proj;
    for (std::size_t x = 0; x < f.src().poset()->size(); ++x) {
        auto m = solve_linear(im.incl.at(x), f.at(x));
        if (!m) throw std::logic_error("image: factorization failed");
        proj.push_back(*m);
    }
    return {im.obj, im.incl, RepMap(f.src(), im.obj, std::move(proj))};
}

/// Socle dimensions: at x, the subspace killed by every map to a cover of x.
inline std::vector<Matrix> socle_bases(const PosetRep& f) {
    const auto& p = *f.poset();
    std::vector<Matrix> out;
    for (std::size_t x = 0; x < p.size(); ++x) {
        Matrix stacked(f.field(), 0, f.dim(x));
        for (const auto& [a, b] : p.covers())
            if (a == x) stacked = stacked.vstack(f.map(a, b));
        out.push_back(stacked.kernel_basis());
    }
    return out;
}

inline std::vector<std::size_t> socle_dims(const PosetRep& f) {
    std::vector<std::size_t> d;
    for (const auto& b : socle_bases(f)) d.push_back(b.cols());
    return d;
}

struct Envelope {
    PosetRep obj;
    RepMap emb;  // source -> obj, injective
};

/// Minimal injective envelope: E(F) = direct sum of I(x) with multiplicity
/// dim soc_x(F). The embedding extends the dual basis of each socle.
inline Envelope injective_envelope(const PosetRep& f) {
    const auto& p = *f.poset();
    const Field k = f.field();
    const std::size_t n = p.size();
    std::vector<Matrix> soc = socle_bases(f);
    std::vector<std::size_t> mult(n);
    std::vector<Matrix> functionals(n);  // Phi_x : F_x -> k^{mult[x]}, Phi·soc = id
    for (std::size_t x = 0; x < n; ++x) {
        mult[x] = soc[x].cols();
        auto phi_t = solve_linear(soc[x].transpose(), Matrix::identity(k, mult[x]));
        functionals[x] = phi_t->transpose();
    }
    // E_y = direct sum over x >= y of k^{mult[x]}, identity transition maps
    std::vector<std::size_t> dims(n, 0);
    std::vector<std::vector<std::size_t>> offset(n, std::vector<std::size_t>(n, 0));
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            if (p.leq(y, x)) {
                offset[y][x] = dims[y];
                dims[y] += mult[x];
            }
    std::vector<std::vector<Matrix>> maps(n, std::vector<Matrix>(n));
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
            if (!p.leq(y, z)) continue;
            Matrix m(k, dims[z], dims[y]);
            for (std::size_t x = 0; x < n; ++x)
                if (p.leq(z, x))
                    for (std::size_t i = 0; i < mult[x]; ++i)
                        m.at(offset[z][x] + i, offset[y][x] + i) = k.one();
            maps[y][z] = std::move(m);
        }
    PosetRep e(f.poset(), k, dims, std::move(maps));
    std::vector<Matrix> comp;
    for (std::size_t y = 0; y < n; ++y) {
        Matrix m(k, dims[y], f.dim(y));
        for (std::size_t x = 0; x < n; ++x) {
            if (!p.leq(y, x) || mult[x] == 0) continue;
            Matrix blockm = functionals[x] * f.map(y, x);
            for (std::size_t i = 0; i < mult[x]; ++i)
                for (std::size_t j = 0; j < f.dim(y); ++j)
                    m.at(offset[y][x] + i, j) = blockm.at(i, j);
        }
        comp.push_back(std::move(m));
    }
    RepMap emb(f, e, std::move(comp));
    if (!emb.is_injective())
        throw std::logic_error("injective_envelope: embedding not injective");
    return {std::move(e), std::move(emb)};
}

struct Resolution {
    std::vector<PosetRep> terms;   // injective terms in degrees 0, 1, ...
    std::vector<RepMap> maps;      // maps[i]: terms[i] -> terms[i+1]
    RepMap aug;                    // source -> terms[0], quasi-isomorphism
};

/// Minimal injective resolution 0 -> F -> E^0 -> E^1 -> ...; terminates
/// within longest_chain()+1 steps on a finite poset.
inline Resolution injective_resolution(const PosetRep& f) {
    Envelope e0 = injective_envelope(f);
    Resolution r{{e0.obj}, {}, e0.emb};
    RepMap last_emb = e0.emb;  // current cosyzygy -> terms.back()
    std::size_t fuel = f.poset()->longest_chain() + 2;
    while (true) {
        QuotObject c = cokernel(last_emb);
        if (c.obj.is_zero()) break;
        if (fuel-- == 0) throw std::logic_error("injective_resolution: no termination");
        Envelope e = injective_envelope(c.obj);
        r.maps.push_back(e.emb.compose(c.proj));
        r.terms.push_back(e.obj);
        last_emb = e.emb;
    }
    return r;
}

/// Largest subobject supported on the set z; any map into f from an object
/// supported on z factors through it. For arbitrary z the stalkwise formula
/// still yields a subrepresentation.
inline SubObject max_sub_supported(const PosetRep& f, const std::vector<bool>& z) {
    const auto& p = *f.poset();
    std::vector<Matrix> bases;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (!z[x]) {
            bases.emplace_back(f.field(), f.dim(x), 0);
            continue;
        }
        Matrix stacked(f.field(), 0, f.dim(x));
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.leq(x, y) && !z[y]) stacked = stacked.vstack(f.map(x, y));
        bases.push_back(stacked.kernel_basis());
    }
    PosetRep s = detail::sub_from_bases(f, bases);
    return {s, RepMap(s, f, std::move(bases))};
}

/// Functoriality of max_sub_supported on morphisms.
inline RepMap max_sub_supported_map(const RepMap& f, const std::vector<bool>& z) {
    SubObject a = max_sub_supported(f.src(), z);
    SubObject b = max_sub_supported(f.dst(), z);
    std::vector<Matrix> comp;
    for (std::size_t x = 0; x < f.src().poset()->size(); ++x) {
        auto m = solve_linear(b.incl.at(x), f.at(x) * a.incl.at(x));
        if (!m) throw std::logic_error("max_sub_supported_map: not induced");
        comp.push_back(*m);
    }
    return RepMap(a.obj, b.obj, std::move(comp));
}

/// Largest quotient supported on the set u; any map from f to an object
/// supported on u factors through it.
inline QuotObject max_quot_supported(const PosetRep& f, const std::vector<bool>& u) {
    const auto& p = *f.poset();
    std::vector<Matrix> projs;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (!u[x]) {
            projs.push_back(cokernel_projection(Matrix::identity(f.field(), f.dim(x))));
            continue;
        }
        // kill everything arriving from outside u
        Matrix images(f.field(), f.dim(x), 0);
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.leq(y, x) && !u[y]) images = images.hstack(f.map(y, x));
        projs.push_back(cokernel_projection(images));
    }
    PosetRep q = detail::quot_from_projs(f, projs);
    return {q, RepMap(f, q, std::move(projs))};
}

struct Sections {
    PosetRep obj;
    RepMap unit;  // source -> obj
};

namespace detail {

/// Elements of up(x) ∩ u in index order.
inline std::vector<std::size_t> above_in(const StratPoset& p, const std::vector<bool>& u,
                                         std::size_t x) {
    std::vector<std::size_t> idx;
    for (std::size_t y = 0; y < p.size(); ++y)
        if (p.leq(x, y) && u[y]) idx.push_back(y);
    return idx;
}

/// Inclusion of lim_{y in up(x) ∩ u} F_y into the stacked space ⊕ F_y,
/// as a (sum of dims) x (limit dim) matrix; deterministic.
inline Matrix limit_basis(const PosetRep& f, const std::vector<bool>& u, std::size_t x) {
    const auto& p = *f.poset();
    const Field k = f.field();
    auto idx = above_in(p, u, x);
    std::size_t total = 0;
    std::vector<std::size_t> off;
    for (auto y : idx) { off.push_back(total); total += f.dim(y); }
    // tuples (v_y) with map(y,z)·v_y = v_z for every relation y <= z in idx
    Matrix constraints(k, 0, total);
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) {
            std::size_t y = idx[a], z = idx[b];
            if (y == z || !p.leq(y, z)) continue;
            Matrix row(k, f.dim(z), total);
            const Matrix& m = f.map(y, z);
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    row.at(i, off[a] + j) = m.at(i, j);
            for (std::size_t i = 0; i < f.dim(z); ++i) row.at(i, off[b] + i) -= k.one();
            constraints = constraints.vstack(row);
        }
    return constraints.kernel_basis();
}

/// Coordinate projection from tuples over up(x) ∩ u to tuples over
/// up(x2) ∩ u for x <= x2.
inline Matrix tuple_restriction(const PosetRep& f, const std::vector<bool>& u,
                                std::size_t x, std::size_t x2) {
    const auto& p = *f.poset();
    const Field k = f.field();
    auto idx = above_in(p, u, x), idx2 = above_in(p, u, x2);
    std::size_t total = 0, total2 = 0;
    for (auto y : idx) total += f.dim(y);
    for (auto y : idx2) total2 += f.dim(y);
    Matrix pi(k, total2, total);
    std::size_t r0 = 0;
    for (auto y2 : idx2) {
        std::size_t c0 = 0;
        for (auto y : idx) {
            if (y == y2)
                for (std::size_t i = 0; i < f.dim(y); ++i) pi.at(r0 + i, c0 + i) = k.one();
            c0 += f.dim(y);
        }
        r0 += f.dim(y2);
    }
    return pi;
}

}  // namespace detail

/// Sections over an up-closed set u: (jF)_x = lim of F over the part of u
/// above x. Left exact; applied termwise to injectives it computes the
/// derived pushforward from the open set.
inline Sections sections_over_open(const PosetRep& f, const std::vector<bool>& u) {
    const auto& p = *f.poset();
    if (!p.is_up_closed(u))
        throw std::invalid_argument("sections_over_open: set not up-closed");
    const Field k = f.field();
    const std::size_t n = p.size();
    std::vector<Matrix> lim(n);
    for (std::size_t x = 0; x < n; ++x) lim[x] = detail::limit_basis(f, u, x);
    std::vector<std::size_t> dims(n);
    for (std::size_t x = 0; x < n; ++x) dims[x] = lim[x].cols();
    std::vector<std::vector<Matrix>> maps(n, std::vector<Matrix>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t x2 = 0; x2 < n; ++x2) {
            if (!p.leq(x, x2)) continue;
            Matrix pi = detail::tuple_restriction(f, u, x, x2);
            auto m = solve_linear(lim[x2], pi * lim[x]);
            if (!m) throw std::logic_error("sections_over_open: restriction escapes limit");
            maps[x][x2] = *m;
        }
    PosetRep s(f.poset(), k, dims, std::move(maps));
    // unit: v at x goes to the compatible tuple (map(x,y)·v)
    std::vector<Matrix> comp;
    for (std::size_t x = 0; x < n; ++x) {
        Matrix tuple(k, 0, f.dim(x));
        for (auto y : detail::above_in(p, u, x)) tuple = tuple.vstack(f.map(x, y));
        auto m = solve_linear(lim[x], tuple);
        if (!m) throw std::logic_error("sections_over_open: unit escapes limit");
        comp.push_back(*m);
    }
    return {s, RepMap(f, s, std::move(comp))};
}

/// Restriction to a full sub-poset built with sub_poset(p, t). Exact.
inline PosetRep restrict_rep(const PosetRep& f, PosetPtr subp, const std::vector<bool>& t) {
    const auto& p = *f.poset();
    std::vector<std::size_t> keep;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (t[x]) keep.push_back(x);
    std::vector<std::size_t> dims;
    for (auto x : keep) dims.push_back(f.dim(x));
    std::vector<std::vector<Matrix>> maps(keep.size(), std::vector<Matrix>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (p.leq(keep[i], keep[j])) maps[i][j] = f.map(keep[i], keep[j]);
    return PosetRep(std::move(subp), f.field(), std::move(dims), std::move(maps));
}

inline RepMap restrict_rep_map(const RepMap& f, PosetPtr subp, const std::vector<bool>& t) {
    std::vector<Matrix> comp;
    for (std::size_t x = 0; x < f.src().poset()->size(); ++x)
        if (t[x]) comp.push_back(f.at(x));
    return RepMap(restrict_rep(f.src(), subp, t), restrict_rep(f.dst(), subp, t),
                  std::move(comp));
}

/// Extension by zero from a full sub-poset onto the whole poset. Exact; the
/// masked set must be up-closed (open: computes j_!) or down-closed (closed:
/// computes i_*), otherwise a zero stalk would interrupt a structure map.
inline PosetRep extend_rep_by_zero(const PosetRep& f, PosetPtr full,
                                   const std::vector<bool>& t) {
    const auto& p = *full;
    if (!p.is_up_closed(t) && !p.is_down_closed(t))
        throw std::invalid_argument("extend_rep_by_zero: set neither open nor closed");
    std::vector<std::size_t> back(p.size(), 0);
    std::size_t pos = 0;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (t[x]) back[x] = pos++;
    const Field k = f.field();
    std::vector<std::size_t> dims(p.size(), 0);
    for (std::size_t x = 0; x < p.size(); ++x)
        if (t[x]) dims[x] = f.dim(back[x]);
    std::vector<std::vector<Matrix>> maps(p.size(), std::vector<Matrix>(p.size()));
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.leq(x, y))
                maps[x][y] = (t[x] && t[y]) ? f.map(back[x], back[y])
                                            : Matrix(k, dims[y], dims[x]);
    return PosetRep(std::move(full), k, std::move(dims), std::move(maps));
}

inline RepMap extend_rep_map_by_zero(const RepMap& f, PosetPtr full,
                                     const std::vector<bool>& t) {
    const Field k = f.src().field();
    PosetRep s = extend_rep_by_zero(f.src(), full, t);
    PosetRep d = extend_rep_by_zero(f.dst(), full, t);
    std::vector<Matrix> comp;
    std::size_t pos = 0;
    for (std::size_t x = 0; x < full->size(); ++x)
        comp.push_back(t[x] ? f.at(pos++) : Matrix(k, 0, 0));
    return RepMap(std::move(s), std::move(d), std::move(comp));
}

/// Functoriality of sections_over_open on morphisms.
inline RepMap sections_over_open_map(const RepMap& f, const std::vector<bool>& u) {
    Sections a = sections_over_open(f.src(), u);
    Sections b = sections_over_open(f.dst(), u);
    const auto& p = *f.src().poset();
    const Field k = f.src().field();
    std::vector<Matrix> comp;
    for (std::size_t x = 0; x < p.size(); ++x) {
        Matrix blk(k, 0, 0);
        for (auto y : detail::above_in(p, u, x)) blk = Matrix::direct_sum(blk, f.at(y));
        Matrix lim_a = detail::limit_basis(f.src(), u, x);
        Matrix lim_b = detail::limit_basis(f.dst(), u, x);
        auto m = solve_linear(lim_b, blk * lim_a);
        if (!m) throw std::logic_error("sections_over_open_map: not induced");
        comp.push_back(*m);
    }
    return RepMap(a.obj, b.obj, std::move(comp));
}

}  // namespace stag
