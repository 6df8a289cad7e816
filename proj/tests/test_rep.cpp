#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stag/repmap.hpp"

using namespace stag;

namespace {

// chain with closed point c below open point o
PosetPtr chain2() { return chain_poset({"c", "o"}); }

Matrix mat(Field f, std::size_t r, std::size_t c, std::vector<std::int64_t> v) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_int(v[i * c + j]);
    return m;
}

}  // namespace

TEST_CASE("poset construction and closure") {
    auto p = chain_poset({"a", "b", "c"});
    CHECK(p->leq(p->index_of("a"), p->index_of("c")));
    CHECK(!p->leq(p->index_of("c"), p->index_of("a")));
    CHECK(p->covers().size() == 2);
    CHECK(p->longest_chain() == 2);
    CHECK(p->level(p->index_of("c")) == 2);
    CHECK(p->is_down_closed({true, true, false}));
    CHECK(!p->is_down_closed({false, true, false}));
    CHECK(p->is_up_closed({false, true, true}));
    auto op = opposite_poset(*p);
    CHECK(op->leq(op->index_of("c"), op->index_of("a")));
    CHECK(opposite_poset(*op)->same_as(*p));
    CHECK_THROWS_AS(StratPoset({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {0, 1}),
                    std::invalid_argument);
}

TEST_CASE("standard objects on the two-element chain") {
    auto p = chain2();
    Field q = Field::Q();
    std::size_t c = p->index_of("c"), o = p->index_of("o");

    PosetRep sc = PosetRep::simple(p, q, c);
    PosetRep so = PosetRep::simple(p, q, o);
    PosetRep cst = PosetRep::constant(p, q);
    CHECK(PosetRep::injective(p, q, c) == sc);      // I(c) has stalks on {c}
    CHECK(PosetRep::injective(p, q, o) == cst);     // I(o) is the constant rep
    CHECK(PosetRep::projective(p, q, c) == cst);    // P(c) is the constant rep
    CHECK(PosetRep::projective(p, q, o) == so);
    CHECK(cst.total_dim() == 2);
    CHECK(PosetRep::direct_sum(sc, so).dims() == std::vector<std::size_t>{1, 1});
    CHECK(PosetRep::tensor(cst, cst) == cst);
}

TEST_CASE("hom spaces match the injectivity contract") {
    auto p = chain2();
    Field q = Field::Q();
    std::size_t c = p->index_of("c"), o = p->index_of("o");
    PosetRep sc = PosetRep::simple(p, q, c);
    PosetRep so = PosetRep::simple(p, q, o);
    PosetRep cst = PosetRep::constant(p, q);

    CHECK(hom_dim(cst, sc) == 1);
    CHECK(hom_dim(sc, cst) == 0);
    CHECK(hom_dim(cst, cst) == 1);
    CHECK(hom_dim(so, cst) == 1);
    CHECK(hom_dim(cst, so) == 0);  // constant = P(c) has top S(c) only
    CHECK(hom_dim(sc, so) == 0);
    CHECK(hom_dim(so, sc) == 0);
    // dim Hom(F, I(x)) = dim F_x for every F
    for (const auto& f : {sc, so, cst})
        for (std::size_t x : {c, o})
            CHECK(hom_dim(f, PosetRep::injective(p, q, x)) == f.dim(x));
}

TEST_CASE("kernel, cokernel and image of a morphism") {
    auto p = chain2();
    Field q = Field::Q();
    PosetRep cst = PosetRep::constant(p, q);
    PosetRep sc = PosetRep::simple(p, q, p->index_of("c"));
    // the unique (up to scale) surjection constant -> S(c)
    auto maps = hom_basis(cst, sc);
    REQUIRE(maps.size() == 1);
    const RepMap& f = maps[0];
    CHECK(f.is_surjective());
    SubObject k = kernel(f);
    CHECK(k.obj == PosetRep::simple(p, q, p->index_of("o")));
    CHECK(k.incl.is_injective());
    QuotObject co = cokernel(f);
    CHECK(co.obj.is_zero());
    ImageObject im = image(f);
    CHECK(im.obj == sc);
    CHECK(im.incl.compose(im.proj) == f);
    // kernel of the zero map is everything
    CHECK(kernel(RepMap::zero(cst, sc)).obj == cst);
    CHECK(cokernel(RepMap::zero(cst, sc)).obj == sc);
}

TEST_CASE("socle and minimal injective envelope") {
    auto p = chain2();
    Field q = Field::Q();
    std::size_t c = p->index_of("c"), o = p->index_of("o");
    PosetRep cst = PosetRep::constant(p, q);
    PosetRep so = PosetRep::simple(p, q, o);
    PosetRep sc = PosetRep::simple(p, q, c);

    CHECK(socle_dims(cst) == std::vector<std::size_t>{0, 1});
    CHECK(socle_dims(sc) == std::vector<std::size_t>{1, 0});
    Envelope ec = injective_envelope(cst);
    CHECK(ec.obj == cst);  // the constant rep is already injective
    CHECK(ec.emb.is_iso());
    Envelope eo = injective_envelope(so);
    CHECK(eo.obj == cst);  // hull of the open-point simple is I(o)
    CHECK(eo.emb.is_injective());
    CHECK(!eo.emb.is_surjective());
}

TEST_CASE("injective resolutions") {
    auto p = chain2();
    Field q = Field::Q();
    std::size_t c = p->index_of("c"), o = p->index_of("o");
    PosetRep so = PosetRep::simple(p, q, o);
    Resolution r = injective_resolution(so);
    REQUIRE(r.terms.size() == 2);
    CHECK(r.terms[0] == PosetRep::constant(p, q));
    CHECK(r.terms[1] == PosetRep::simple(p, q, c));
    CHECK(r.maps[0].is_surjective());
    CHECK(r.maps[0].compose(r.aug).is_zero());
    CHECK(kernel(r.maps[0]).obj.total_dim() == image(r.aug).obj.total_dim());
    // an injective resolves in a single step
    CHECK(injective_resolution(PosetRep::constant(p, q)).terms.size() == 1);
}

TEST_CASE("resolutions over a prime field") {
    auto p = chain_poset({"a", "b", "c"});
    Field f5 = Field::Fp(5);
    PosetRep s = PosetRep::simple(p, f5, p->index_of("c"));
    Resolution r = injective_resolution(s);
    CHECK(r.terms.size() <= 3);
    for (std::size_t i = 0; i + 1 < r.terms.size(); ++i)
        CHECK(r.maps[i].compose(i == 0 ? r.aug : r.maps[i - 1]).is_zero());
}

TEST_CASE("support and section functors") {
    auto p = chain2();
    Field q = Field::Q();
    std::size_t c = p->index_of("c"), o = p->index_of("o");
    PosetRep cst = PosetRep::constant(p, q);
    PosetRep sc = PosetRep::simple(p, q, c);
    PosetRep so = PosetRep::simple(p, q, o);
    std::vector<bool> closed{true, false}, open{false, true};

    CHECK(max_sub_supported(cst, closed).obj.is_zero());
    CHECK(max_sub_supported(sc, closed).obj == sc);
    CHECK(max_sub_supported(PosetRep::direct_sum(sc, cst), closed).obj == sc);
    // arbitrary support sets are allowed: the formula still gives a subobject
    CHECK(max_sub_supported(cst, open).obj == so);

    CHECK(max_quot_supported(cst, open).obj.is_zero());
    CHECK(max_quot_supported(so, open).obj == so);
    CHECK(max_quot_supported(sc, open).obj.is_zero());

    Sections s1 = sections_over_open(cst, open);
    CHECK(s1.obj == cst);
    CHECK(s1.unit.is_iso());
    CHECK(sections_over_open(sc, open).obj.is_zero());
    Sections s2 = sections_over_open(so, open);
    CHECK(s2.obj == cst);
    CHECK(s2.unit.is_injective());

    // functoriality on the surjection constant -> S(c)
    RepMap f = hom_basis(cst, sc)[0];
    CHECK(sections_over_open_map(f, open).is_zero());
    RepMap g = max_sub_supported_map(RepMap::identity(cst), closed);
    CHECK(g.src().is_zero());
}

TEST_CASE("duality is an exact involution") {
    auto p = chain_poset({"a", "b", "c"});
    Field q = Field::Q();
    PosetRep f = PosetRep::from_covers(
        p, q, {2, 2, 1},
        {{"a", "b", mat(q, 2, 2, {1, 1, 0, 1})}, {"b", "c", mat(q, 1, 2, {1, 2})}});
    PosetRep dd = f.dual().dual();
    CHECK(dd == f);
    // duality swaps injectives and projectives
    PosetRep ic = PosetRep::injective(p, q, p->index_of("c"));
    PosetRep icd = ic.dual();
    CHECK(icd == PosetRep::projective(icd.poset(), q, icd.poset()->index_of("c")));
    // duality preserves hom dimensions with arguments swapped
    PosetRep g = PosetRep::simple(p, q, p->index_of("b"));
    CHECK(hom_dim(f, g) == hom_dim(g.dual(), f.dual()));
}

TEST_CASE("functoriality violations are rejected") {
    auto p = chain2();
    Field q = Field::Q();
    PosetRep cst = PosetRep::constant(p, q);
    // a stalkwise map that does not commute with the structure maps
    CHECK_THROWS_AS(RepMap(cst, cst, {mat(q, 1, 1, {1}), mat(q, 1, 1, {0})}),
                    std::invalid_argument);
    // non-functorial structure maps are rejected at construction
    CHECK_THROWS_AS(PosetRep::from_covers(chain_poset({"a", "b", "c"}), q, {1, 1, 1},
                                          {{"a", "b", mat(q, 1, 1, {1})},
                                           {"b", "c", mat(q, 1, 1, {1})},
                                           {"a", "c", mat(q, 1, 1, {2})}}),
                    std::invalid_argument);
}
