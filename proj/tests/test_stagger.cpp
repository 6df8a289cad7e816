#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stag/stagger.hpp"

using namespace stag;

namespace {

struct Fix {
    PosetPtr p = chain_poset({"c", "o"});
    Field q = Field::Q();
    std::size_t c = p->index_of("c"), o = p->index_of("o");
    PosetRep sc = PosetRep::simple(p, q, c);
    PosetRep so = PosetRep::simple(p, q, o);
    PosetRep cst = PosetRep::constant(p, q);
    Complex xc = Complex::from_rep(sc, 0);
    Complex xo = Complex::from_rep(so, 0);
    Complex xcst = Complex::from_rep(cst, 0);
    StaggerContext ctx{BaricRealization::support_level(p), 0, false};

    Fix() { certify_compatibility(ctx, {xc, xo, xcst, xcst.shift(1)}); }
};

Complex line(const BaricRealization& b, Field q, int w, int d) {
    return Complex::from_rep(PosetRep::simple(b.poset(), q, b.weight_index(w)), d);
}

StaggerContext graded_ctx(int lo, int hi) {
    StaggerContext g{BaricRealization::graded_weight(lo, hi), 0, false};
    Field q = Field::Q();
    std::vector<Complex> sample;
    for (int w = lo; w <= hi; ++w) sample.push_back(line(g.baric, q, w, -w));
    certify_compatibility(g, sample);
    return g;
}

bool same_cohomology(const Complex& a, const Complex& b, int lo = -4, int hi = 4) {
    for (int n = lo; n <= hi; ++n)
        if (a.cohomology(n).dims() != b.cohomology(n).dims()) return false;
    return true;
}

}  // namespace

TEST_CASE("perversity shifts") {
    Fix f;
    PerversityMap z = PerversityMap::zero(f.p);
    BaricRealization b0 = apply_perversity(f.ctx.baric, z);
    CHECK(b0.level_of(f.c) == 0);
    CHECK(b0.level_of(f.o) == 1);
    PerversityMap one{{1, 1}};
    CHECK(apply_perversity(f.ctx.baric, one).level_of(f.o) == 0);
    CHECK(one.negated().q == std::vector<int>{-1, -1});
    // shifts breaking monotonicity are rejected
    CHECK_THROWS_AS(apply_perversity(f.ctx.baric, PerversityMap{{-1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_perversity(f.ctx.baric, PerversityMap{{1}}),
                    std::invalid_argument);
    auto e = BaricRealization::exceptional({f.xo, f.xc});
    CHECK_THROWS_AS(apply_perversity(e, z), std::invalid_argument);
}

TEST_CASE("staggered membership") {
    Fix f;
    // the open simple in degree zero is too heavy for sD^{<=0}
    CHECK(!in_sD_leq(f.ctx, f.xo, 0));
    CHECK(in_sD_leq(f.ctx, f.xo, 1));
    CHECK(in_sD_geq(f.ctx, f.xo, 1));
    // heart objects: the closed simple, the shifted open simple and the
    // shifted constant object
    CHECK(in_heart(f.ctx, f.xc));
    CHECK(in_heart(f.ctx, f.xo.shift(1)));
    CHECK(in_heart(f.ctx, f.xcst.shift(1)));
    CHECK(!in_heart(f.ctx, f.xcst));
    CHECK(!in_sD_geq(f.ctx, f.xc.shift(1), 0));
    CHECK(in_heart(f.ctx, Complex(f.p, f.q)));
    // standard helpers
    CHECK(in_std_leq(f.xc, 0));
    CHECK(!in_std_leq(f.xc, -1));
    CHECK(in_std_geq(f.xc.shift(-2), 2));
    CHECK(in_std_geq(Complex(f.p, f.q), 5));
}

TEST_CASE("compatibility certificate gates the operations") {
    Fix f;
    StaggerContext raw{BaricRealization::support_level(f.p), 0, false};
    CHECK_THROWS_AS(stag_decompose(raw, f.xc), std::logic_error);
    CHECK_THROWS_AS(heart_length(raw, f.xc), std::logic_error);
    Report r = certify_compatibility(raw, {f.xc, f.xo, f.xcst});
    CHECK(r.all_pass());
    CHECK(raw.certified);
    bool saw_tau = false, saw_beta = false;
    for (const auto& ck : r.checks) {
        saw_tau |= ck.id.rfind("tau-baryexact", 0) == 0;
        saw_beta |= ck.id.rfind("beta-t-exact", 0) == 0;
    }
    CHECK(saw_tau);
    CHECK(saw_beta);
    CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                         [](const CheckResult& a, const CheckResult& b) {
                             return a.id <= b.id;
                         }));
    // once certified, operations run
    CHECK(stag_decompose(raw, f.xc).low.cohomology(0) == f.sc);
}

TEST_CASE("staggered decomposition") {
    Fix f;
    // the constant object in degree zero has no low part
    StagTriangle t = stag_decompose(f.ctx, f.xcst);
    CHECK(t.low.is_acyclic());
    CHECK(same_cohomology(t.high, f.xcst));
    CHECK(is_distinguished(t.incl, t.proj));
    CHECK(is_quasi_iso(t.rep));
    // heart objects are entirely low
    StagTriangle h = stag_decompose(f.ctx, f.xcst.shift(1));
    CHECK(h.high.is_acyclic());
    CHECK(same_cohomology(h.low, f.xcst.shift(1)));
    // the open simple needs the recursive step: still no low part
    StagTriangle s = stag_decompose(f.ctx, f.xo);
    CHECK(s.low.is_acyclic());
    CHECK(same_cohomology(s.high, f.xo));
    CHECK(is_distinguished(s.incl, s.proj));
    // cuts at other degrees via shifting
    StagTriangle s1 = stag_decompose_at(f.ctx, f.xo, 1);
    CHECK(same_cohomology(s1.low, f.xo));
    CHECK(s1.high.is_acyclic());
    // a genuinely mixed object splits into its heart layers
    Complex mix = Complex::direct_sum(f.xc, f.xo);
    StagTriangle m = stag_decompose(f.ctx, mix);
    CHECK(m.low.cohomology(0) == f.sc);
    CHECK(m.high.cohomology(0) == f.so);
    CHECK(is_distinguished(m.incl, m.proj));
    // zero input
    StagTriangle z = stag_decompose(f.ctx, Complex(f.p, f.q));
    CHECK(z.low.is_zero_complex());
    CHECK(z.high.is_zero_complex());
    // truncation wrapper exposes the same pieces
    StagPart lo = stag_truncate(f.ctx, mix, StagDir::leq, 0);
    CHECK(lo.obj.cohomology(0) == f.sc);
    StagPart hi = stag_truncate(f.ctx, mix, StagDir::geq, 1);
    CHECK(hi.obj.cohomology(0) == f.so);
    // an exhausted step budget is reported, not looped on
    StaggerContext tight{BaricRealization::support_level(f.p), 1, false};
    certify_compatibility(tight, {f.xo});
    CHECK_THROWS_AS(stag_decompose(tight, f.xo), std::runtime_error);
}

TEST_CASE("staggered cohomology") {
    Fix f;
    Complex x = f.xcst.shift(1);
    CHECK(same_cohomology(stag_cohomology(f.ctx, x, 0), x));
    CHECK(same_cohomology(stag_cohomology(f.ctx, x.shift(1), -1), x));
    CHECK(stag_cohomology(f.ctx, x, 1).is_acyclic());
    CHECK(stag_cohomology(f.ctx, x, -1).is_acyclic());
    // the open simple in degree zero is concentrated in staggered degree 1
    CHECK(stag_cohomology(f.ctx, f.xo, 0).is_acyclic());
    CHECK(same_cohomology(stag_cohomology(f.ctx, f.xo, 1), f.xo.shift(1)));
}

TEST_CASE("heart kernels and cokernels") {
    Fix f;
    Complex xo1 = f.xo.shift(1);
    Replacement rb = injective_replacement(xo1);
    // the one-dimensional space of heart maps S(c) -> S(o)[1]
    std::vector<ChainMap> maps = homotopy_hom_basis(f.xc, rb.obj);
    REQUIRE(maps.size() == 1);
    HeartSES ses = heart_kernel_cokernel(f.ctx, maps[0]);
    CHECK(ses.ker.is_acyclic());
    CHECK(ses.im.cohomology(0) == f.sc);
    CHECK(ses.coker.cohomology(-1) == f.cst);
    // identity: kernel and cokernel vanish
    HeartSES id = heart_kernel_cokernel(f.ctx, ChainMap::identity(f.xc));
    CHECK(id.ker.is_acyclic());
    CHECK(id.im.cohomology(0) == f.sc);
    CHECK(id.coker.is_acyclic());
    // zero map: kernel is the source, cokernel the target
    Complex cst1 = f.xcst.shift(1);
    Replacement rc = injective_replacement(cst1);
    HeartSES zz = heart_kernel_cokernel(f.ctx, ChainMap::zero(f.xc, rc.obj));
    CHECK(zz.ker.cohomology(0) == f.sc);
    CHECK(zz.im.is_acyclic());
    CHECK(zz.coker.cohomology(-1) == f.cst);
    // non-heart endpoints are rejected
    CHECK_THROWS_AS(heart_kernel_cokernel(f.ctx, ChainMap::identity(f.xcst)),
                    std::invalid_argument);
}

TEST_CASE("minimal extension across a closed stratum") {
    Fix f;
    std::vector<bool> u{false, true};
    PosetPtr pu = sub_poset(*f.p, u);
    Complex f0 = Complex::from_rep(PosetRep::simple(pu, f.q, 0), 0).shift(1);
    Complex ic = intermediate_extension(f.ctx, u, f0);
    CHECK(ic.cohomology(-1) == f.cst);
    CHECK(ic.cohomology_dim(0) == 0);
    CHECK(in_heart(f.ctx, ic));
    // the whole poset: extension by zero is already minimal
    std::vector<bool> all{true, true};
    Complex fw = Complex::from_rep(PosetRep::simple(sub_poset(*f.p, all), f.q, 0), 0);
    CHECK(same_cohomology(intermediate_extension(f.ctx, all, fw), f.xc));
    // a closed (non-open) stratum set is rejected
    CHECK_THROWS_AS(intermediate_extension(f.ctx, {true, false}, f0),
                    std::invalid_argument);
    // the unshifted input is not a heart object over the open stratum
    Complex bad = Complex::from_rep(PosetRep::simple(pu, f.q, 0), 0);
    CHECK_THROWS_AS(intermediate_extension(f.ctx, u, bad), std::invalid_argument);
    // zero input
    CHECK(intermediate_extension(f.ctx, u, Complex(pu, f.q)).is_zero_complex());
}

TEST_CASE("stratum objects") {
    Fix f;
    // the minimal stratum gives the skyscraper
    Complex icc = ic_object(f.ctx, f.c, 0, f.q);
    CHECK(icc.cohomology(0) == f.sc);
    // the open stratum gives the shifted constant object
    Complex ico = ic_object(f.ctx, f.o, 1, f.q);
    CHECK(ico.cohomology(-1) == f.cst);
    CHECK(in_heart(f.ctx, ico));
    // a wrong placement degree never reaches the heart
    CHECK_THROWS_AS(ic_object(f.ctx, f.o, 0, f.q), std::invalid_argument);
}

TEST_CASE("composition series length") {
    Fix f;
    CHECK(heart_length(f.ctx, f.xc) == 1);
    CHECK(heart_length(f.ctx, f.xcst.shift(1)) == 1);
    // S(o)[1] is the extension of the shifted constant object by S(c)
    CHECK(heart_length(f.ctx, f.xo.shift(1)) == 2);
    CHECK(heart_length(f.ctx, Complex::direct_sum(f.xc, f.xo.shift(1))) == 3);
    CHECK(heart_length(f.ctx, Complex(f.p, f.q)) == 0);
    CHECK_THROWS_AS(heart_length(f.ctx, f.xo), std::invalid_argument);
}

TEST_CASE("graded purity") {
    StaggerContext g = graded_ctx(-3, 3);
    Field q = Field::Q();
    // heart objects are pure: weight w in degree -w
    CHECK(in_heart(g, line(g.baric, q, 0, 0)));
    CHECK(in_heart(g, line(g.baric, q, 2, -2)));
    CHECK(!in_heart(g, line(g.baric, q, 2, 0)));
    Complex x = Complex::direct_sum(line(g.baric, q, 1, -1), line(g.baric, q, 2, 0));
    CHECK(!in_sD_leq(g, x, 0));
    StagTriangle t = stag_decompose(g, x);
    CHECK(same_cohomology(t.low, line(g.baric, q, 1, -1)));
    CHECK(same_cohomology(t.high, line(g.baric, q, 2, 0)));
    CHECK(same_cohomology(stag_cohomology(g, x, 0), line(g.baric, q, 1, -1)));
    CHECK(stag_cohomology(g, x, 1).is_acyclic());
    CHECK(same_cohomology(stag_cohomology(g, x, 2), line(g.baric, q, 2, -2)));
    // stratum objects on a discrete poset are the pure lines
    CHECK(same_cohomology(ic_object(g, g.baric.weight_index(2), 2, q),
                          line(g.baric, q, 2, -2)));
    Complex pure =
        Complex::direct_sum(line(g.baric, q, 1, -1), line(g.baric, q, 2, -2));
    CHECK(heart_length(g, pure) == 2);
}

TEST_CASE("membership duality across opposite perversities") {
    Field q = Field::Q();
    auto b = BaricRealization::graded_weight(-2, 2);
    PerversityMap pm{std::vector<int>(b.poset()->size(), 1)};
    StaggerContext cq{apply_perversity(b, pm), 0, false};
    StaggerContext cqd{apply_perversity(b, pm.negated()), 0, false};
    std::vector<Complex> sample{line(b, q, 2, 1), line(b, q, -2, -1), line(b, q, 0, 0)};
    certify_compatibility(cq, sample);
    certify_compatibility(cqd, sample);
    for (int w = -2; w <= 2; ++w)
        for (int d = -1; d <= 1; ++d) {
            Complex x = line(b, q, w, d);
            Complex dx = graded_dual(b, x);
            for (int n = -3; n <= 3; ++n) {
                CHECK(in_sD_leq(cq, x, n) == in_sD_geq(cqd, dx, -n));
                CHECK(in_sD_geq(cq, x, n) == in_sD_leq(cqd, dx, -n));
            }
        }
}

TEST_CASE("heart operations over a prime field") {
    PosetPtr p = chain_poset({"c", "o"});
    Field f5 = Field::Fp(5);
    Complex xc = Complex::from_rep(PosetRep::simple(p, f5, 0), 0);
    Complex xo1 = Complex::from_rep(PosetRep::simple(p, f5, 1), 0).shift(1);
    StaggerContext ctx{BaricRealization::support_level(p), 0, false};
    certify_compatibility(ctx, {xc, xo1});
    CHECK(in_heart(ctx, xo1));
    CHECK(heart_length(ctx, xo1) == 2);
    Replacement rb = injective_replacement(xo1);
    std::vector<ChainMap> maps = homotopy_hom_basis(xc, rb.obj);
    REQUIRE(maps.size() == 1);
    HeartSES ses = heart_kernel_cokernel(ctx, maps[0]);
    CHECK(ses.ker.is_acyclic());
    CHECK(ses.coker.cohomology_dim(-1) == 2);
}
