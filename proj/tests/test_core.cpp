#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nomsets/equivariance.hpp"
#include "nomsets/fifo.hpp"
#include "nomsets/orbit.hpp"
#include "nomsets/sampling.hpp"
#include "support/oracles.hpp"

using namespace nomsets;

namespace {

Atom a(std::uint32_t id) { return Atom{id}; }
Value at(std::uint32_t id) { return Value::atom(a(id)); }

Value word(std::initializer_list<std::uint32_t> ids) {
  std::vector<Value> items;
  for (std::uint32_t id : ids) items.push_back(at(id));
  return Value::tuple(std::move(items));
}

const SetDesc A = SetDesc::atoms();
const SetDesc AxA = SetDesc::product(A, A);
const SetDesc W3 = SetDesc::words_up_to(A, 3);

// The n-fold separated power, a single orbit of support n.
SetDesc sep_power(std::size_t n) {
  SetDesc p = SetDesc::unit();
  for (std::size_t i = 1; i <= n; ++i)
    p = (i == 1) ? A : SetDesc::sep_product(p, A);
  return p;
}

}  // namespace

TEST_CASE("support is the set of occurring atoms") {
  CHECK(support(word({1, 2, 1})) == AtomSet{a(1), a(2)});
  CHECK(support(Value::label(kBottom)).empty());
  CHECK(support(word({1, 2, 1})) == support(word({2, 1, 2})));
}

TEST_CASE("act replaces atoms pointwise") {
  Value v = Value::tuple({at(1), at(2)});
  CHECK(act(Subst{}, v, AxA) == v);
  CHECK(act(Perm::transposition(a(1), a(2)), v, AxA) ==
        Value::tuple({at(2), at(1)}));
  CHECK(act(Subst::from_pairs({{a(2), a(1)}}), v, AxA) ==
        Value::tuple({at(1), at(1)}));
}

TEST_CASE("act rejects non-bijective maps on permutation-only sets") {
  SetDesc sep = SetDesc::sep_product(A, A);
  Value v = Value::tuple({at(1), at(2)});
  CHECK(act(Perm::transposition(a(1), a(3)), v, sep) ==
        Value::tuple({at(3), at(2)}));
  CHECK_THROWS_AS(act(Subst::from_pairs({{a(2), a(1)}}), v, sep),
                  std::invalid_argument);
  CHECK_THROWS_AS(act(Subst{}, at(1), AxA), std::invalid_argument);  // not a member
}

TEST_CASE("orbit_shape is invariant under permutations and nothing else") {
  CHECK(orbit_shape(word({1, 1, 2}), W3) == orbit_shape(word({3, 3, 7}), W3));
  CHECK_FALSE(orbit_shape(Value::tuple({at(1), at(2)}), AxA) ==
              orbit_shape(Value::tuple({at(1), at(1)}), AxA));
  std::size_t triples = 0;
  for (const OrbitShape& o : orbits(W3)) {
    if (o.representative().items().size() == 3) ++triples;
  }
  CHECK(triples == 5);
}

TEST_CASE("orbit enumeration of the basic constructors") {
  CHECK(orbits(AxA).size() == 2);
  CHECK(orbits(SetDesc::sep_product(A, A)).size() == 1);
  CHECK(orbits(W3).size() == 9);  // 1 + 1 + 2 + 5 equality patterns
  CHECK(orbits(SetDesc::unit()).size() == 1);
  CHECK(orbits(SetDesc::discrete({"x", "y"})).size() == 2);
  CHECK(orbits(SetDesc::tagged("Put", A)).size() == 1);
}

TEST_CASE("representatives use first-occurrence numbering") {
  CHECK(representative(orbit_shape(Value::tuple({at(7), at(7)}), AxA)) ==
        Value::tuple({at(0), at(0)}));
  SetDesc d = SetDesc::discrete({kBottom});
  CHECK(representative(orbit_shape(Value::label(kBottom), d)) ==
        Value::label(kBottom));
  CHECK(representative(orbit_shape(word({4, 9, 4}), W3)) == word({0, 1, 0}));
}

TEST_CASE("dimension and the one-dimensional decomposition") {
  DimensionInfo d = dimension(A);
  CHECK(d.dimension == 1);
  CHECK(d.zero_support_orbits == 0);
  CHECK(d.one_support_orbits == 1);

  d = dimension(SetDesc::coproduct(SetDesc::discrete({"s"}), A));
  CHECK(d.dimension == 1);
  CHECK(d.zero_support_orbits == 1);
  CHECK(d.one_support_orbits == 1);

  CHECK(dimension(W3).dimension == 3);
}

TEST_CASE("is_equivariant accepts projections and rejects constants") {
  ValueMap fst = [](const Value& v) { return v.items()[0]; };
  CHECK(is_equivariant(fst, AxA, A, 200, 7).passed);

  ValueMap constant = [](const Value&) { return at(7); };
  CheckReport r = is_equivariant(constant, A, A, 200, 7);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.counterexample.empty());

  MooreAutomaton fifo = fifo_automaton(3);
  ValueMap step = [&fifo](const Value& p) {
    return fifo.delta(p.items()[0], p.items()[1]);
  };
  CHECK(is_equivariant(step, SetDesc::product(fifo.states, fifo.alphabet),
                       fifo.states, 300, 7)
            .passed);
}

TEST_CASE("action laws on sampled values") {
  Rng rng(201);
  std::vector<SetDesc> descs = {A, AxA, W3, SetDesc::sep_words_up_to(A, 3),
                                SetDesc::free(AxA)};
  for (int i = 0; i < 400; ++i) {
    const SetDesc& X = descs[rng.below(descs.size())];
    Value v = sample_value(X, rng);
    CHECK(act(Subst{}, v, X) == v);
    Subst m, k;
    if (X.has_sb_action()) {
      m = sample_subst(rng);
      k = sample_subst(rng);
    } else {
      m = sample_perm(rng).as_subst();
      k = sample_perm(rng).as_subst();
    }
    CHECK(act(compose(m, k), v, X) == act(m, act(k, v, X), X));
  }
}

TEST_CASE("supports are minimal") {
  Rng rng(202);
  std::vector<SetDesc> descs = {A, AxA, W3, SetDesc::sep_product(A, AxA)};
  for (int i = 0; i < 300; ++i) {
    const SetDesc& X = descs[rng.below(descs.size())];
    Value v = sample_value(X, rng);
    AtomSet supp = support(v);
    std::vector<Atom> outside = fresh_atoms(supp, 2);
    CHECK(act(Perm::transposition(outside[0], outside[1]), v, X) == v);
    for (Atom x : supp) {
      Perm g = Perm::transposition(x, fresh_atoms(supp, 1)[0]);
      CHECK_FALSE(act(g, v, X) == v);
    }
  }
}

TEST_CASE("permutations transfer supports exactly") {
  Rng rng(203);
  for (int i = 0; i < 500; ++i) {
    Value v = sample_value(W3, rng);
    Perm g = sample_perm_over(support(v), rng);
    std::vector<Atom> mapped;
    for (Atom x : support(v)) mapped.push_back(g(x));
    CHECK(support(act(g, v, W3)) == AtomSet(mapped));
  }
}

TEST_CASE("orbit_shape is a perfect invariant") {
  Rng rng(204);
  std::vector<SetDesc> descs = {A, AxA, W3};
  for (int i = 0; i < 400; ++i) {
    const SetDesc& X = descs[rng.below(descs.size())];
    Value v = sample_value(X, rng);
    Value w = sample_value(X, rng);
    // The first-occurrence alignment is the only candidate permutation:
    // shapes agree iff it maps v onto w.
    std::vector<Atom> cv, cw;
    for (Atom x : atom_occurrences(v)) {
      if (!AtomSet(cv).contains(x)) cv.push_back(x);
    }
    for (Atom x : atom_occurrences(w)) {
      if (!AtomSet(cw).contains(x)) cw.push_back(x);
    }
    bool aligned = false;
    if (cv.size() == cw.size()) {
      std::vector<std::pair<Atom, Atom>> pairs;
      for (std::size_t j = 0; j < cv.size(); ++j)
        pairs.emplace_back(cv[j], cw[j]);
      bool injective = true;
      AtomSet images(cw);
      if (images.size() != cw.size()) injective = false;
      if (injective)
        aligned = rename_atoms(v, Subst::from_pairs(pairs)) == w;
    }
    CHECK((orbit_shape(v, X) == orbit_shape(w, X)) == aligned);
  }
}

TEST_CASE("separated product multiplies orbit counts") {
  std::vector<SetDesc> descs = {A, AxA, W3, SetDesc::discrete({"p", "q"})};
  for (const SetDesc& x : descs) {
    for (const SetDesc& y : descs) {
      CHECK(orbits(SetDesc::sep_product(x, y)).size() ==
            orbits(x).size() * orbits(y).size());
    }
  }
}

TEST_CASE("product orbits count partial injections between supports") {
  for (std::size_t k = 0; k <= 3; ++k) {
    for (std::size_t j = 0; j <= 3; ++j) {
      SetDesc prod = SetDesc::product(sep_power(k), sep_power(j));
      CHECK(orbits(prod).size() == oracles::count_partial_injections(k, j));
    }
  }
}

TEST_CASE("words enumerate equality patterns, one layer per length") {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::size_t expected = 0;
    for (std::size_t k = 0; k <= n; ++k)
      expected += oracles::brute_force_pattern_count(k);
    CHECK(orbits(SetDesc::words_up_to(A, n)).size() == expected);
    CHECK(orbits(SetDesc::sep_words_up_to(A, n)).size() == n + 1);
  }
}

TEST_CASE("membership respects separation and bounds") {
  SetDesc sep = SetDesc::sep_product(A, A);
  CHECK(contains(sep, Value::tuple({at(1), at(2)})));
  CHECK_FALSE(contains(sep, Value::tuple({at(1), at(1)})));
  CHECK_FALSE(contains(W3, word({1, 2, 3, 4})));
  CHECK(contains(SetDesc::sep_words_up_to(A, 3), word({1, 2})));
  CHECK_FALSE(contains(SetDesc::sep_words_up_to(A, 3), word({1, 1})));
}

TEST_CASE("ambiguous coproducts are rejected") {
  CHECK_THROWS_AS(SetDesc::coproduct(A, A), std::invalid_argument);
  CHECK_THROWS_AS(SetDesc::coproduct(SetDesc::unit(), W3),
                  std::invalid_argument);
  // Tagging restores disjointness.
  SetDesc ok = SetDesc::coproduct(SetDesc::tagged("l", A), A);
  CHECK(orbits(ok).size() == 2);
}
