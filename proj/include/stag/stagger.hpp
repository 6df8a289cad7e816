// Staggered t-structures: interleaving the standard t-structure with a baric
// truncation. An object lies in sD^{<=n} when its m-th cohomology has weights
// <= -m+n, and in sD^{>=n} when every beta_{<=k} part lies in D^{>= -k+n}.
// The heart is an abelian category; this header provides the truncation
// triangles, heart cohomology, kernels/cokernels, minimal extensions of
// heart objects across closed strata and composition-series lengths, all
// with machine-checked postconditions.
//
// Every operation that relies on the interleaving being well behaved demands
// a compatibility certificate on the context first (certify_compatibility).

#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stag/baric.hpp"

namespace stag {

/// Per-stratum integer shift of the level map ("perversity").
struct PerversityMap {
    std::vector<int> q;

    static PerversityMap zero(const PosetPtr& p) {
        return {std::vector<int>(p->size(), 0)};
    }
    PerversityMap negated() const {
        PerversityMap r = *this;
        for (int& v : r.q) v = -v;
        return r;
    }
};

/// Realization with effective levels level(x) - q(x). The shifted level map
/// must stay monotone along the order; a graded realization turns into a
/// stratified one over its weight poset.
inline BaricRealization apply_perversity(const BaricRealization& b, const PerversityMap& pm) {
    if (b.kind() == BaricRealization::Kind::exceptional)
        throw std::invalid_argument("apply_perversity: needs a stratified realization");
    if (pm.q.size() != b.poset()->size())
        throw std::invalid_argument("apply_perversity: one shift per stratum");
    std::vector<int> lv;
    for (std::size_t x = 0; x < b.poset()->size(); ++x)
        lv.push_back(b.level_of(x) - pm.q[x]);
    return BaricRealization::support_level(b.poset(), std::move(lv));
}

/// A baric realization together with the staggered bookkeeping: a step
/// budget for the truncation recursion (0 = derive one per object) and the
/// compatibility certificate flag set by certify_compatibility.
struct StaggerContext {
    BaricRealization baric;
    std::size_t fuel = 0;
    bool certified = false;
};

/// Standard-t membership: no cohomology above n.
inline bool in_std_leq(const Complex& x, int n) {
    for (int m = std::max(x.lo(), n + 1); m <= x.hi(); ++m)
        if (x.cohomology_dim(m) != 0) return false;
    return true;
}

/// Standard-t membership: no cohomology below n.
inline bool in_std_geq(const Complex& x, int n) {
    for (int m = x.lo(); m <= x.hi() && m < n; ++m)
        if (x.cohomology_dim(m) != 0) return false;
    return true;
}

/// X in sD^{<=n}: every h^m(X) lies in D_{<= -m+n}.
inline bool in_sD_leq(const StaggerContext& ctx, const Complex& x, int n) {
    for (int m = x.lo(); m <= x.hi(); ++m) {
        PosetRep h = x.cohomology(m);
        if (h.is_zero()) continue;
        if (!member_leq(ctx.baric, Complex::from_rep(h, 0), -m + n)) return false;
    }
    return true;
}

/// X in sD^{>=n}: beta_{<=k}X lies in D^{>= -k+n} for every weight k.
inline bool in_sD_geq(const StaggerContext& ctx, const Complex& x, int n) {
    if (x.is_zero_complex()) return true;
    for (int k = ctx.baric.window_lo(); k <= ctx.baric.window_hi(); ++k)
        if (!in_std_geq(beta_leq(ctx.baric, x, k).obj, -k + n)) return false;
    return true;
}

inline bool in_heart(const StaggerContext& ctx, const Complex& x) {
    return in_sD_leq(ctx, x, 0) && in_sD_geq(ctx, x, 0);
}

/// Compatibility certificate for the interleaving, checked on a sample of
/// objects: standard truncations preserve the baric bound from above and
/// baric truncations preserve the standard bound from below. Marks the
/// context certified when every check passes.
inline Report certify_compatibility(StaggerContext& ctx, const std::vector<Complex>& sample) {
    const BaricRealization& b = ctx.baric;
    Report r;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const Complex& x = sample[i];
        std::string tag = "/obj" + std::to_string(i);
        bool tau_ok = true;
        std::string tau_wit;
        for (int n = x.lo() - 1; n <= x.hi() + 1 && tau_ok; ++n) {
            Complex lo = truncate_std_leq(x, n).obj;
            Complex hi = truncate_std_geq(x, n).obj;
            for (int w = b.window_lo() - 1; w <= b.window_hi() && tau_ok; ++w) {
                if (!member_leq(b, x, w)) continue;
                if (!member_leq(b, lo, w) || !member_leq(b, hi, w)) {
                    tau_ok = false;
                    tau_wit = "truncation at n=" + std::to_string(n) +
                              " leaves D_{<=" + std::to_string(w) + "}";
                }
            }
        }
        r.add("tau-baryexact" + tag, tau_ok, tau_wit);
        bool beta_ok = true;
        std::string beta_wit;
        if (auto a = x.min_cohomology_degree()) {
            for (int w = b.window_lo(); w <= b.window_hi() && beta_ok; ++w) {
                if (!in_std_geq(beta_leq(b, x, w).obj, *a) ||
                    !in_std_geq(beta_geq(b, x, w).obj, *a)) {
                    beta_ok = false;
                    beta_wit = "weight truncation at w=" + std::to_string(w) +
                               " leaves D^{>=" + std::to_string(*a) + "}";
                }
            }
        }
        r.add("beta-t-exact" + tag, beta_ok, beta_wit);
    }
    r.sort_by_id();
    ctx.certified = r.all_pass();
    return r;
}

/// Staggered truncation triangle low -> mid <- X -> high. The mid term is a
/// model carrying the literal maps, rep is a quasi-isomorphism onto it and
/// high is the literal cone of incl, so (incl, proj) is distinguished.
struct StagTriangle {
    Complex low, mid, high;
    ChainMap rep;   // X -> mid, quasi-isomorphism
    ChainMap incl;  // low -> mid
    ChainMap proj;  // mid -> high
};

namespace detail {

inline void require_certified(const StaggerContext& ctx) {
    if (!ctx.certified)
        throw std::logic_error("staggered operation without a compatibility certificate");
}

inline StagTriangle shift_stag(const StagTriangle& t, int k) {
    return {t.low.shift(k), t.mid.shift(k),  t.high.shift(k),
            t.rep.shift(k), t.incl.shift(k), t.proj.shift(k)};
}

/// Induction on the lowest cohomology degree n: cut off the weights <= -n,
/// standard-truncate the cut above n and recurse; the low part is the cocone
/// of the composite into the recursion's high part.
inline StagTriangle stag_decompose_rec(const StaggerContext& ctx, const Complex& x,
                                       std::size_t fuel) {
    if (x.is_zero_complex() || x.is_acyclic()) {
        Complex z(x.poset(), x.field());
        return {z, x, x, ChainMap::identity(x), ChainMap::zero(z, x),
                ChainMap::identity(x)};
    }
    if (fuel == 0) throw std::runtime_error("stag_decompose: step budget exhausted");
    int n = *x.min_cohomology_degree();
    BaricTriangle tri = baric_triangle_impl(ctx.baric, x, -n);
    const Complex& c = tri.low;
    Complex a = c;
    ChainMap incl_a = tri.incl;
    TruncationPart xp = truncate_std_geq(c, n + 1);
    if (!xp.obj.is_acyclic()) {
        StagTriangle sub = stag_decompose_rec(ctx, xp.obj, fuel - 1);
        ChainMap g = sub.proj.compose(sub.rep).compose(xp.map);
        Triangle t = cone(g);
        a = t.c.shift(-1);
        incl_a = tri.incl.compose(t.h.shift(-1));
    }
    Triangle tb = cone(incl_a);
    return {std::move(a), tri.mid, std::move(tb.c), tri.rep, std::move(incl_a),
            std::move(tb.g)};
}

inline std::size_t stag_fuel(const StaggerContext& ctx, const Complex& x) {
    if (ctx.fuel) return ctx.fuel;
    std::size_t len = x.is_zero_complex() ? 1 : std::size_t(x.hi() - x.lo() + 1);
    std::size_t lv = std::size_t(ctx.baric.window_hi() - ctx.baric.window_lo() + 1);
    return len * lv + 2;
}

/// Stalkwise Euler characteristic; a quasi-isomorphism invariant.
inline std::vector<long long> euler_stalks(const Complex& x) {
    std::vector<long long> v(x.poset()->size(), 0);
    for (int n = x.lo(); n <= x.hi(); ++n)
        for (std::size_t e = 0; e < x.poset()->size(); ++e)
            v[e] += (n % 2 == 0 ? 1 : -1) * (long long)(x.term(n).dim(e));
    return v;
}

}  // namespace detail

/// The truncation triangle for the cut sD^{<=0} / sD^{>=1}, with both
/// memberships asserted.
inline StagTriangle stag_decompose(const StaggerContext& ctx, const Complex& x) {
    detail::require_certified(ctx);
    StagTriangle t = detail::stag_decompose_rec(ctx, x, detail::stag_fuel(ctx, x));
    if (!in_sD_leq(ctx, t.low, 0))
        throw std::logic_error("stag_decompose: low part escapes sD^{<=0}");
    if (!in_sD_geq(ctx, t.high, 1))
        throw std::logic_error("stag_decompose: high part escapes sD^{>=1}");
    return t;
}

/// Truncation triangle for the cut at n: low in sD^{<=n}, high in sD^{>=n+1}.
inline StagTriangle stag_decompose_at(const StaggerContext& ctx, const Complex& x, int n) {
    return detail::shift_stag(stag_decompose(ctx, x.shift(n)), -n);
}

enum class StagDir { leq, geq };

/// One staggered truncation with its structural map and model.
struct StagPart {
    Complex obj;
    ChainMap map;  // obj -> mid for leq, mid -> obj for geq
    Complex mid;
    ChainMap rep;  // X -> mid, quasi-isomorphism
};

inline StagPart stag_truncate(const StaggerContext& ctx, const Complex& x, StagDir dir,
                              int n) {
    if (dir == StagDir::leq) {
        StagTriangle t = stag_decompose_at(ctx, x, n);
        return {std::move(t.low), std::move(t.incl), std::move(t.mid), std::move(t.rep)};
    }
    StagTriangle t = stag_decompose_at(ctx, x, n - 1);
    return {std::move(t.high), std::move(t.proj), std::move(t.mid), std::move(t.rep)};
}

/// sh^n(X), normalized into the heart: truncate on both sides of n and shift
/// the result to the cut at zero.
inline Complex stag_cohomology(const StaggerContext& ctx, const Complex& x, int n) {
    StagTriangle t1 = stag_decompose_at(ctx, x, n);
    StagTriangle t2 = stag_decompose_at(ctx, t1.low, n - 1);
    Complex h = minimize_model(t2.high.shift(n));
    if (!in_heart(ctx, h)) throw std::logic_error("stag_cohomology: escaped the heart");
    return h;
}

/// The two short exact sequences around a heart morphism f: A -> B,
/// 0 -> ker -> A -> im -> 0 and 0 -> im -> B -> coker -> 0, with stalkwise
/// Euler additivity of both asserted.
struct HeartSES {
    Complex ker, im, coker;
};

inline HeartSES heart_kernel_cokernel(const StaggerContext& ctx, const ChainMap& f) {
    detail::require_certified(ctx);
    if (!in_heart(ctx, f.src()) || !in_heart(ctx, f.dst()))
        throw std::invalid_argument("heart_kernel_cokernel: not a heart morphism");
    Replacement ra = injective_replacement(f.src());
    Replacement rb = injective_replacement(f.dst());
    auto ft = factor_through(rb.qis.compose(f), ra.qis);
    if (!ft) throw std::logic_error("heart_kernel_cokernel: model transport failed");
    Triangle t = cone(*ft);
    // the kernel is the low staggered part of the shifted cone ...
    StagTriangle tc = stag_decompose_at(ctx, t.c, -1);
    Complex ker = minimize_model(tc.low.shift(-1));
    // ... and its map to A is the connecting map, descended to the model
    ChainMap theta = t.h.shift(-1);
    auto eta = factor_through(theta, tc.rep.shift(-1));
    if (!eta) throw std::logic_error("heart_kernel_cokernel: kernel map does not descend");
    ChainMap k = eta->compose(tc.incl.shift(-1));
    Complex im = stag_cohomology(ctx, cone(k).c, 0);
    Complex coker = stag_cohomology(ctx, t.c, 0);
    if (!in_heart(ctx, ker))
        throw std::logic_error("heart_kernel_cokernel: kernel escapes the heart");
    auto ek = detail::euler_stalks(ker), ea = detail::euler_stalks(f.src()),
         ei = detail::euler_stalks(im), eb = detail::euler_stalks(f.dst()),
         ec = detail::euler_stalks(coker);
    for (std::size_t e = 0; e < ek.size(); ++e)
        if (ek[e] - ea[e] + ei[e] != 0 || ei[e] - eb[e] + ec[e] != 0)
            throw std::logic_error("heart_kernel_cokernel: Euler additivity failed");
    return {std::move(ker), std::move(im), std::move(coker)};
}

/// Minimal extension of a heart object living on an open union of strata:
/// the heart image of the canonical map from the extension by zero to the
/// derived sections. Postconditions checked: the result restricts back to
/// the input, and it has no degree-zero maps to or from the shifted simple
/// objects on the closed complement.
inline Complex intermediate_extension(const StaggerContext& ctx, const std::vector<bool>& u,
                                      const Complex& f) {
    detail::require_certified(ctx);
    const BaricRealization& b = ctx.baric;
    if (b.kind() == BaricRealization::Kind::exceptional)
        throw std::invalid_argument("intermediate_extension: needs a stratified realization");
    if (u.size() != b.poset()->size() || !b.poset()->is_up_closed(u))
        throw std::invalid_argument("intermediate_extension: the stratum set must be open");
    if (f.is_zero_complex() || f.is_acyclic()) return Complex(b.poset(), f.field());
    PosetPtr subp = sub_poset(*b.poset(), u);
    if (!f.poset()->same_as(*subp))
        throw std::invalid_argument("intermediate_extension: input not over the open part");
    std::vector<int> sublev;
    for (std::size_t x = 0; x < b.poset()->size(); ++x)
        if (u[x]) sublev.push_back(b.level_of(x));
    StaggerContext sctx{BaricRealization::support_level(subp, std::move(sublev)), ctx.fuel,
                        ctx.certified};
    if (!in_heart(sctx, f))
        throw std::invalid_argument("intermediate_extension: input is not a heart object");
    Complex jl = extend_complex_by_zero(f, b.poset(), u);
    bool whole = true;
    for (bool v : u) whole = whole && v;
    if (whole) return jl;
    if (!in_sD_leq(ctx, jl, 0))
        throw std::logic_error("intermediate_extension: zero-extension escapes sD^{<=0}");
    // derived sections over the open part, with the canonical comparison map
    Replacement r = injective_replacement(jl);
    auto [s, unit] = detail::sections_pushforward(r.obj, u);
    ChainMap g0 = unit.compose(r.qis);
    if (!in_sD_geq(ctx, s, 0))
        throw std::logic_error("intermediate_extension: derived sections escape sD^{>=0}");
    // descend to the degree-zero heart piece of the zero-extension
    StagTriangle tp = stag_decompose_at(ctx, jl, -1);
    ChainMap projp = tp.proj.compose(tp.rep);
    auto psi = factor_through(g0, projp);
    if (!psi) throw std::logic_error("intermediate_extension: no descent to the heart piece");
    // lift into the degree-zero heart piece of the derived sections
    StagTriangle tq = stag_decompose_at(ctx, s, 0);
    Replacement rq = injective_replacement(tq.low);
    Replacement rm = injective_replacement(tq.mid);
    auto lam = factor_through(rm.qis.compose(tq.incl), rq.qis);
    if (!lam) throw std::logic_error("intermediate_extension: model transport failed");
    auto chi = lift_through(rm.qis.compose(tq.rep).compose(*psi), *lam);
    if (!chi) throw std::logic_error("intermediate_extension: no lift into sD^{<=0}");
    Complex ic = heart_kernel_cokernel(ctx, *chi).im;
    // restricts back to the input
    Complex back = restrict_complex(ic, subp, u);
    for (int n = std::min(back.lo(), f.lo()); n <= std::max(back.hi(), f.hi()); ++n) {
        PosetRep hb = back.cohomology(n), hf = f.cohomology(n);
        for (std::size_t e = 0; e < subp->size(); ++e)
            if (hb.dim(e) != hf.dim(e))
                throw std::logic_error("intermediate_extension: restriction mismatch");
    }
    // no degree-zero maps against the shifted simples on the complement
    for (std::size_t x = 0; x < b.poset()->size(); ++x) {
        if (u[x]) continue;
        Complex tx = Complex::from_rep(PosetRep::simple(b.poset(), f.field(), x), 0)
                         .shift(b.level_of(x));
        if (ext_dim(ic, tx, 0) != 0 || ext_dim(tx, ic, 0) != 0)
            throw std::logic_error("intermediate_extension: support leaks to the boundary");
    }
    return ic;
}

/// Simple heart object attached to a stratum: the rank-one object on the
/// open stratum, placed in degree -s, minimally extended across the closure
/// and pushed forward by zero to the whole poset.
inline Complex ic_object(const StaggerContext& ctx, std::size_t x, int s, const Field& k) {
    detail::require_certified(ctx);
    const BaricRealization& b = ctx.baric;
    if (b.kind() == BaricRealization::Kind::exceptional)
        throw std::invalid_argument("ic_object: needs a stratified realization");
    std::vector<bool> cl(b.poset()->size(), false);
    for (std::size_t y : b.poset()->down_set(x)) cl[y] = true;
    PosetPtr pc = sub_poset(*b.poset(), cl);
    std::vector<int> lv;
    for (std::size_t y = 0; y < b.poset()->size(); ++y)
        if (cl[y]) lv.push_back(b.level_of(y));
    StaggerContext cctx{BaricRealization::support_level(pc, std::move(lv)), ctx.fuel,
                        ctx.certified};
    std::vector<bool> uu(pc->size(), false);
    uu[pc->index_of(b.poset()->name(x))] = true;
    PosetPtr px = sub_poset(*pc, uu);
    Complex f0 = Complex::from_rep(PosetRep::simple(px, k, 0), 0).shift(s);
    Complex icc = intermediate_extension(cctx, uu, f0);
    Complex ic = extend_complex_by_zero(icc, b.poset(), cl);
    if (!in_heart(ctx, ic)) throw std::logic_error("ic_object: escaped the heart");
    if (ext_dim(ic, ic, 0) != 1)
        throw std::logic_error("ic_object: endomorphisms are not one-dimensional");
    return ic;
}

/// Composition-series length of a heart object: greedily split off simple
/// subobjects (stratum objects tried lowest level first) and recurse on the
/// cokernel.
inline std::size_t heart_length(const StaggerContext& ctx, Complex f) {
    detail::require_certified(ctx);
    const BaricRealization& b = ctx.baric;
    if (b.kind() == BaricRealization::Kind::exceptional)
        throw std::invalid_argument("heart_length: needs a stratified realization");
    if (!in_heart(ctx, f)) throw std::invalid_argument("heart_length: not a heart object");
    if (f.is_zero_complex() || f.is_acyclic()) return 0;
    Field k = f.field();
    std::vector<std::size_t> order(b.poset()->size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return b.level_of(l) < b.level_of(r);
    });
    std::vector<Complex> simples;
    for (std::size_t x : order) simples.push_back(ic_object(ctx, x, b.level_of(x), k));
    std::size_t len = 0;
    std::size_t budget = f.total_dim() + 2;
    f = minimize_model(f);
    while (!f.is_acyclic()) {
        if (budget-- == 0) throw std::runtime_error("heart_length: step budget exhausted");
        bool found = false;
        Replacement rf = injective_replacement(f);
        for (const Complex& s : simples) {
            std::vector<ChainMap> maps = homotopy_hom_basis(s, rf.obj);
            if (maps.empty()) continue;
            HeartSES ses = heart_kernel_cokernel(ctx, maps.front());
            if (ses.im.is_acyclic()) continue;
            f = ses.coker;
            ++len;
            found = true;
            break;
        }
        if (!found) throw std::logic_error("heart_length: no simple subobject found");
    }
    return len;
}

}  // namespace stag
