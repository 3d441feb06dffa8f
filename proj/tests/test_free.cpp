#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nomsets/fifo.hpp"
#include "nomsets/free.hpp"
#include "nomsets/sampling.hpp"
#include "support/oracles.hpp"

using namespace nomsets;

namespace {

Atom a(std::uint32_t id) { return Atom{id}; }
Value at(std::uint32_t id) { return Value::atom(a(id)); }

const SetDesc A = SetDesc::atoms();
const SetDesc A2 = SetDesc::sep_product(A, A);  // distinct pairs
const SetDesc AxA = SetDesc::product(A, A);

Value pair(std::uint32_t x, std::uint32_t y) {
  return Value::tuple({at(x), at(y)});
}

SetDesc sep_power(std::size_t n) {
  SetDesc p = SetDesc::unit();
  for (std::size_t i = 1; i <= n; ++i)
    p = (i == 1) ? A : SetDesc::sep_product(p, A);
  return p;
}

}  // namespace

TEST_CASE("free_elem normalizes pairs (m, x)") {
  FreeElem e = free_elem(Subst{}, pair(0, 1), A2);
  CHECK(e.base == orbit_shape(pair(0, 1), A2));
  CHECK(e.images == std::vector<Atom>{a(0), a(1)});

  // A collapsing substitution collapses the image tuple only.
  FreeElem c = free_elem(Subst::from_pairs({{a(1), a(0)}}), pair(0, 1), A2);
  CHECK(c.base == e.base);
  CHECK(c.images == std::vector<Atom>{a(0), a(0)});

  // (m, gx) ~ (mg, x): both sides normalize identically.
  Perm g = Perm::transposition(a(0), a(5));
  CHECK(free_elem(g.as_subst(), pair(0, 1), A2) ==
        free_elem(Subst{}, pair(5, 1), A2));
}

TEST_CASE("sim_oracle decides the defining equivalence directly") {
  Rng rng(1);
  Subst m = sample_subst(rng);
  CHECK(sim_oracle(m, pair(0, 1), m, pair(0, 1), A2));
  CHECK_FALSE(sim_oracle(Subst{}, pair(0, 1), Subst{}, pair(1, 0), A2));
}

TEST_CASE("normal-form equality agrees with sim_oracle on random pairs") {
  Rng rng(301);
  std::vector<SetDesc> descs = {A, AxA, A2, SetDesc::words_up_to(A, 3)};
  int equal_cases = 0;
  for (int i = 0; i < 1000; ++i) {
    const SetDesc& X = descs[rng.below(descs.size())];
    Subst m1 = sample_subst(rng);
    Value x1 = sample_value(X, rng);
    Subst m2;
    Value x2;
    if (rng.coin()) {
      Perm g = sample_perm_over(support(x1), rng);
      x2 = act(g, x1, X);
      m2 = compose(m1, g.inverse().as_subst());
    } else {
      m2 = sample_subst(rng);
      x2 = sample_value(X, rng);
    }
    bool nf = free_elem(m1, x1, X) == free_elem(m2, x2, X);
    bool oracle = sim_oracle(m1, x1, m2, x2, X);
    CHECK(nf == oracle);
    if (nf) ++equal_cases;
  }
  CHECK(equal_cases > 100);  // both outcomes exercised
}

TEST_CASE("act_free maps image atoms") {
  FreeElem e = free_elem(Subst{}, pair(0, 1), A2);
  CHECK(act_free(Subst{}, e) == e);
  CHECK(act_free(Subst::from_pairs({{a(0), a(3)}}), e).images ==
        std::vector<Atom>{a(3), a(1)});
  CHECK(act_free(Subst::from_pairs({{a(1), a(0)}}), e).images ==
        std::vector<Atom>{a(0), a(0)});
  // n . [m, x] = [nm, x]
  Rng rng(302);
  for (int i = 0; i < 300; ++i) {
    Subst n = sample_subst(rng), m = sample_subst(rng);
    Value x = sample_value(AxA, rng);
    CHECK(act_free(n, free_elem(m, x, AxA)) ==
          free_elem(compose(n, m), x, AxA));
  }
}

TEST_CASE("unit embeds values") {
  FreeElem e = unit(at(3), A);
  CHECK(e.images == std::vector<Atom>{a(3)});
  SetDesc d = SetDesc::discrete({kBottom});
  CHECK(unit(Value::label(kBottom), d).images.empty());
  CHECK(unit(pair(0, 1), A2).images == std::vector<Atom>{a(0), a(1)});
}

TEST_CASE("counit applies the recorded images") {
  Rng rng(303);
  for (int i = 0; i < 300; ++i) {
    Value v = sample_value(AxA, rng);
    CHECK(counit(unit(v, AxA), AxA) == v);
  }
  CHECK(counit(FreeElem{orbit_shape(at(0), A), {a(7)}}, A) == at(7));
  CHECK(counit(FreeElem{orbit_shape(pair(0, 1), AxA), {a(0), a(0)}}, AxA) ==
        pair(0, 0));
  CHECK_THROWS_AS(counit(unit(pair(0, 1), A2), A2), std::invalid_argument);
}

TEST_CASE("sharp computes m . f(x)") {
  ValueMap ident = [](const Value& v) { return v; };
  FreeMap counit_like = sharp(ident, A);
  Rng rng(304);
  for (int i = 0; i < 200; ++i) {
    FreeElem e = sample_free_elem(A, rng);
    CHECK(counit_like(e) == counit(e, A));
  }

  ValueMap fst = [](const Value& v) { return v.items()[0]; };
  FreeElem e{orbit_shape(pair(0, 1), A2), {a(5), a(5)}};
  CHECK(sharp(fst, A)(e) == at(5));

  // sb-equivariance of sharp(f).
  for (int i = 0; i < 500; ++i) {
    FreeElem s = sample_free_elem(A2, rng);
    Subst n = sample_subst(rng);
    CHECK(sharp(fst, A)(act_free(n, s)) == act(n, sharp(fst, A)(s), A));
  }
}

TEST_CASE("flat and sharp are mutually inverse transpositions") {
  ValueMap fst = [](const Value& v) { return v.items()[0]; };
  Rng rng(305);
  for (int i = 0; i < 500; ++i) {
    Value x = sample_value(A2, rng);
    CHECK(flat(sharp(fst, A), A2)(x) == fst(x));
  }
  FreeMap h = sharp(fst, A);
  for (int i = 0; i < 500; ++i) {
    FreeElem e = sample_free_elem(A2, rng);
    CHECK(sharp(flat(h, A2), A)(e) == h(e));
  }
  // flat(counit) embeds U(Y) identically.
  FreeMap eps = [](const FreeElem& e) { return counit(e, A); };
  for (int i = 0; i < 100; ++i) {
    Value y = sample_value(A, rng);
    CHECK(flat(eps, A)(y) == y);
  }
}

TEST_CASE("monoidal split and pair") {
  // p([id, (a, b)]) = ([id, a], [id, b])
  FreeElem e = free_elem(Subst{}, pair(0, 1), A2);
  auto [l, r] = monoidal_split(e, A, A);
  CHECK(l == unit(at(0), A));
  CHECK(r == unit(at(1), A));

  // Shared images are fine; only the base pair is separated.
  FreeElem shared{orbit_shape(pair(0, 1), A2), {a(3), a(3)}};
  auto [sl, sr] = monoidal_split(shared, A, A);
  CHECK(sl == FreeElem{orbit_shape(at(0), A), {a(3)}});
  CHECK(sr == FreeElem{orbit_shape(at(0), A), {a(3)}});

  // p_inv(unit(a), unit(a)): fresh base pair, images both a.
  FreeElem both = monoidal_pair(unit(at(4), A), unit(at(4), A), A, A);
  CHECK(both.base == orbit_shape(pair(0, 1), A2));
  CHECK(both.images == std::vector<Atom>{a(4), a(4)});

  Rng rng(306);
  std::vector<std::pair<SetDesc, SetDesc>> pairs = {
      {A, A}, {AxA, A}, {A, A2}, {SetDesc::words_up_to(A, 2), AxA}};
  for (int i = 0; i < 500; ++i) {
    const auto& [X, Y] = pairs[rng.below(pairs.size())];
    FreeElem e1 = sample_free_elem(X, rng);
    FreeElem e2 = sample_free_elem(Y, rng);
    auto [f1, f2] = monoidal_split(monoidal_pair(e1, e2, X, Y), X, Y);
    CHECK(f1 == e1);
    CHECK(f2 == e2);

    SetDesc sep = SetDesc::sep_product(X, Y);
    FreeElem w = sample_free_elem(sep, rng);
    auto [w1, w2] = monoidal_split(w, X, Y);
    CHECK(monoidal_pair(w1, w2, X, Y) == w);
  }
}

TEST_CASE("free orbit counts match the known isomorphisms") {
  CHECK(orbits_free(A).size() == 1);               // F(A) = A
  CHECK(orbits_free(AxA).size() == 3);             // F(AxA) = A^2 + A
  CHECK(orbits_free(SetDesc::unit()).size() == 1); // F(1) = 1

  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(orbits_free(sep_power(n)).size() ==
          oracles::brute_force_pattern_count(n));
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(orbits_free(SetDesc::sep_words_up_to(A, n)).size() ==
          orbits(SetDesc::words_up_to(A, n)).size());
  }
  // Orbit-level reading of the monoidal isomorphism: the free set over a
  // separated product has the orbits of the product of the free sets.
  CHECK(orbits_free(SetDesc::sep_product(A, A)).size() ==
        orbits(SetDesc::product(SetDesc::free(A), SetDesc::free(A))).size());
  CHECK(orbits_free(SetDesc::sep_product(AxA, A)).size() ==
        orbits(SetDesc::product(SetDesc::free(AxA), SetDesc::free(A)))
            .size());
}

TEST_CASE("one-dimensional units and counits are isomorphisms") {
  CHECK(one_dim_isos(A, 300, 7).passed);
  CHECK(one_dim_isos(SetDesc::coproduct(SetDesc::discrete({"s"}), A), 300, 7)
            .passed);
  try {
    one_dim_isos(AxA, 10, 7);
    FAIL("expected DimensionError");
  } catch (const DimensionError& e) {
    CHECK(e.witness_orbit() == "(0,1)");
  }
}

TEST_CASE("functor laws and triangle identities") {
  Rng rng(307);
  ValueMap ident = [](const Value& v) { return v; };
  ValueMap fst = [](const Value& v) { return v.items()[0]; };
  ValueMap dup = [](const Value& v) { return Value::tuple({v, v}); };
  for (int i = 0; i < 300; ++i) {
    FreeElem e = sample_free_elem(AxA, rng);
    CHECK(map_free(ident, e, AxA) == e);
    // F(g . f) = F(g) . F(f) with f = fst, g = dup.
    ValueMap comp = [&](const Value& v) { return dup(fst(v)); };
    CHECK(map_free(comp, e, SetDesc::product(A, A)) ==
          map_free(dup, map_free(fst, e, A), SetDesc::product(A, A)));

    // Triangle: counit after the free image of the unit is the identity.
    SetDesc freeA2 = SetDesc::free(AxA);
    ValueMap unit_enc = [](const Value& x) { return unit(x, AxA).to_value(); };
    FreeElem lifted = map_free(unit_enc, e, freeA2);
    CHECK(FreeElem::from_value(counit(lifted, freeA2), AxA) == e);
  }
}

TEST_CASE("value encoding round-trips") {
  Rng rng(308);
  for (int i = 0; i < 200; ++i) {
    FreeElem e = sample_free_elem(AxA, rng);
    CHECK(FreeElem::from_value(e.to_value(), AxA) == e);
    CHECK(contains(SetDesc::free(AxA), e.to_value()));
  }
  CHECK_FALSE(contains(SetDesc::free(A), at(0)));
}

TEST_CASE("descriptor-level action coincides with act_free") {
  SetDesc freeAxA = SetDesc::free(AxA);
  Rng rng(310);
  for (int i = 0; i < 300; ++i) {
    FreeElem e = sample_free_elem(AxA, rng);
    Subst m = sample_subst(rng);
    CHECK(act(m, e.to_value(), freeAxA) == act_free(m, e).to_value());
  }
}

TEST_CASE("free orbit count is the Bell sum over base supports") {
  for (const SetDesc& X :
       {SetDesc::words_up_to(A, 3), SetDesc::coproduct(A, AxA),
        SetDesc::sep_words_up_to(A, 4)}) {
    std::size_t expected = 0;
    for (const OrbitShape& o : orbits(X))
      expected += oracles::brute_force_pattern_count(o.support_size());
    CHECK(orbits_free(X).size() == expected);
  }
}

TEST_CASE("sharp is the unique factorization through the unit") {
  ValueMap fst = [](const Value& v) { return v.items()[0]; };
  Rng rng(309);
  for (int i = 0; i < 500; ++i) {
    FreeElem e = sample_free_elem(A2, rng);
    CHECK(sharp(fst, A)(unit(e.base.representative(), A2)) ==
          fst(e.base.representative()));
    // Any candidate agreeing with f on units is forced to sharp(f): follow
    // the forcing h([m,x]) = m.h([id,x]) = m.f(x) on a random
    // decomposition of e.
    Perm g = sample_perm(rng);
    Value x = act(g, e.base.representative(), A2);
    Subst m = compose(e.image_subst(), g.inverse().as_subst());
    CHECK(free_elem(m, x, A2) == e);  // really a decomposition
    CHECK(act(m, fst(x), A) == sharp(fst, A)(e));
  }
}
