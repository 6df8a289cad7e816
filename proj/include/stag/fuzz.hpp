// Deterministic pseudo-random generators for representations, chain maps
// and bounded complexes. Every draw is a pure function of the seed, so
// fuzzing runs are reproducible bit for bit across platforms.

#pragma once

#include <cstdint>
#include <vector>

#include "stag/complex.hpp"

namespace stag {

/// splitmix64 stream: tiny, well-mixed, and stable across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::size_t below(std::size_t n) { return n == 0 ? 0 : std::size_t(next() % n); }

    int in_range(int lo, int hi) { return lo + int(below(std::size_t(hi - lo + 1))); }

    /// Independent stream for case number idx under the same master seed.
    Rng split(std::uint64_t idx) const {
        Rng r(state_ ^ (0x9e3779b97f4a7c15ull * (idx + 0x632be59bd9b4e019ull)));
        r.next();
        return r;
    }

private:
    std::uint64_t state_;
};

struct FuzzBounds {
    std::size_t max_summands = 2;  // structure summands in a seed representation
    std::size_t stalk_cap = 3;     // stop growing once a stalk reaches this
    std::size_t cone_depth = 2;    // extension steps per complex
    int deg_lo = -2, deg_hi = 2;   // placement degrees for the seed terms
};

/// Random direct sum of structure representations (simples, injectives,
/// projectives at random elements, occasionally the constant one).
inline PosetRep random_rep(Rng& rng, const PosetPtr& p, const Field& k,
                           std::size_t max_summands) {
    PosetRep r(p, k);
    std::size_t n = 1 + rng.below(max_summands);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t e = rng.below(p->size());
        switch (rng.below(4)) {
            case 0: r = PosetRep::direct_sum(r, PosetRep::simple(p, k, e)); break;
            case 1: r = PosetRep::direct_sum(r, PosetRep::injective(p, k, e)); break;
            case 2: r = PosetRep::direct_sum(r, PosetRep::projective(p, k, e)); break;
            default: r = PosetRep::direct_sum(r, PosetRep::constant(p, k)); break;
        }
    }
    return r;
}

inline Scalar random_scalar(Rng& rng, const Field& k) {
    return k.from_int(rng.in_range(-2, 2));
}

/// Random element of Hom(a, b), as a combination of basis morphisms with
/// small integer coefficients.
inline RepMap random_rep_map(Rng& rng, const PosetRep& a, const PosetRep& b) {
    RepMap m = RepMap::zero(a, b);
    for (const RepMap& f : hom_basis(a, b)) m = m + f.scaled(random_scalar(rng, a.field()));
    return m;
}

/// Random bounded complex: a seed representation placed in a random degree,
/// extended a few times by cones over random (up-to-homotopy) morphisms
/// from further one-term complexes. The differential squares to zero by
/// construction and stalk dimensions stay small.
inline Complex random_complex(Rng& rng, const PosetPtr& p, const Field& k,
                              const FuzzBounds& b = {}) {
    Complex x = Complex::from_rep(random_rep(rng, p, k, b.max_summands),
                                  rng.in_range(b.deg_lo, b.deg_hi));
    std::size_t depth = rng.below(b.cone_depth + 1);
    for (std::size_t i = 0; i < depth; ++i) {
        std::size_t widest = 0;
        for (int n = x.lo(); n <= x.hi(); ++n)
            for (std::size_t e = 0; e < p->size(); ++e)
                widest = std::max(widest, x.term(n).dim(e));
        if (widest >= b.stalk_cap) break;
        Complex y = Complex::from_rep(random_rep(rng, p, k, 1),
                                      rng.in_range(b.deg_lo, b.deg_hi));
        std::vector<ChainMap> basis = homotopy_hom_basis(y, x);
        ChainMap f = ChainMap::zero(y, x);
        for (const ChainMap& g : basis) f = f + g.scaled(random_scalar(rng, k));
        x = cone(f).c;
    }
    return x;
}

/// A batch of complexes drawn from independent per-index streams of the
/// master seed, so batch i is stable under changes to batch j.
inline std::vector<Complex> random_complexes(std::uint64_t seed, std::size_t count,
                                             const PosetPtr& p, const Field& k,
                                             const FuzzBounds& b = {}) {
    std::vector<Complex> out;
    out.reserve(count);
    Rng master(seed);
    for (std::size_t i = 0; i < count; ++i) {
        Rng r = master.split(i);
        out.push_back(random_complex(r, p, k, b));
    }
    return out;
}

}  // namespace stag
