#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nomsets/atoms.hpp"
#include "nomsets/rng.hpp"
#include "nomsets/sampling.hpp"

using namespace nomsets;

namespace {
Atom a(std::uint32_t id) { return Atom{id}; }
}  // namespace

TEST_CASE("compose evaluates pointwise over the union of domains") {
  CHECK(compose(Subst{}, Subst{}) == Subst{});
  // outer {1->2}, inner {2->1}: 2 -> 1 -> 2 drops out, 1 -> 1 -> 2 stays.
  Subst outer = Subst::from_pairs({{a(1), a(2)}});
  Subst inner = Subst::from_pairs({{a(2), a(1)}});
  CHECK(compose(outer, inner) == Subst::from_pairs({{a(1), a(2)}}));
  Perm s = Perm::transposition(a(1), a(2));
  CHECK(compose(s, s).is_identity());
}

TEST_CASE("apply uses the stored entry and is the identity elsewhere") {
  Subst m = Subst::from_pairs({{a(1), a(2)}});
  CHECK(m(a(1)) == a(2));
  CHECK(m(a(3)) == a(3));
  CHECK(Perm::transposition(a(1), a(2))(a(2)) == a(1));
}

TEST_CASE("transpositions") {
  CHECK(Perm::transposition(a(1), a(2))(a(1)) == a(2));
  CHECK(Perm::transposition(a(1), a(1)).is_identity());
  CHECK(Perm::transposition(a(1), a(2))(a(5)) == a(5));
}

TEST_CASE("inverse") {
  CHECK(Perm{}.inverse().is_identity());
  Perm s = Perm::transposition(a(1), a(2));
  CHECK(s.inverse() == s);
  Perm cycle(Subst::from_pairs({{a(1), a(2)}, {a(2), a(3)}, {a(3), a(1)}}));
  CHECK(cycle.inverse() ==
        Perm(Subst::from_pairs({{a(1), a(3)}, {a(2), a(1)}, {a(3), a(2)}})));
}

TEST_CASE("extend_injection") {
  CHECK(extend_injection({}).is_identity());
  CHECK(extend_injection({{a(1), a(1)}}).is_identity());
  CHECK(extend_injection({{a(1), a(2)}}) == Perm::transposition(a(1), a(2)));
  CHECK_THROWS_AS(extend_injection({{a(1), a(3)}, {a(2), a(3)}}),
                  std::invalid_argument);

  // Chains close deterministically: 1->2->4 forces 4->1.
  Perm g = extend_injection({{a(1), a(2)}, {a(2), a(4)}});
  CHECK(g(a(1)) == a(2));
  CHECK(g(a(2)) == a(4));
  CHECK(g(a(4)) == a(1));
}

TEST_CASE("kernel_partition groups atoms mapped to the same image") {
  AtomSet c{a(1), a(2)};
  CHECK(kernel_partition(Subst{}, c) ==
        std::vector<AtomSet>{AtomSet{a(1)}, AtomSet{a(2)}});
  CHECK(kernel_partition(Subst::from_pairs({{a(2), a(1)}}), c) ==
        std::vector<AtomSet>{AtomSet{a(1), a(2)}});
  CHECK(kernel_partition(Subst::from_pairs({{a(2), a(1)}}),
                         AtomSet{a(3), a(4)}) ==
        std::vector<AtomSet>{AtomSet{a(3)}, AtomSet{a(4)}});
}

TEST_CASE("fresh_atoms picks the smallest unused naturals") {
  CHECK(fresh_atoms(AtomSet{}, 2) == std::vector<Atom>{a(0), a(1)});
  CHECK(fresh_atoms(AtomSet{a(0), a(1), a(3)}, 2) ==
        std::vector<Atom>{a(2), a(4)});
  CHECK(fresh_atoms(AtomSet{a(5)}, 0).empty());
}

TEST_CASE("normalization drops fixpoints so equality is extensional") {
  CHECK(Subst::from_pairs({{a(3), a(3)}}) == Subst{});
  CHECK(Subst::from_pairs({{a(1), a(2)}, {a(3), a(3)}}) ==
        Subst::from_pairs({{a(1), a(2)}}));
}

TEST_CASE("monoid laws hold on sampled substitutions") {
  Rng rng(101);
  for (int i = 0; i < 500; ++i) {
    Subst x = sample_subst(rng), y = sample_subst(rng), z = sample_subst(rng);
    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
    CHECK(compose(Subst{}, x) == x);
    CHECK(compose(x, Subst{}) == x);
  }
}

TEST_CASE("permutations form a submonoid with inverses") {
  Rng rng(102);
  for (int i = 0; i < 500; ++i) {
    Perm g = sample_perm(rng), h = sample_perm(rng);
    CHECK(compose(g, h).as_subst().is_permutation());
    CHECK(compose(g, g.inverse()).is_identity());
    CHECK(compose(g.inverse(), g).is_identity());
  }
}

TEST_CASE("apply commutes with compose") {
  Rng rng(103);
  for (int i = 0; i < 500; ++i) {
    Subst m = sample_subst(rng), k = sample_subst(rng);
    Atom x{static_cast<std::uint32_t>(rng.below(12))};
    CHECK(compose(m, k)(x) == m(k(x)));
  }
}

TEST_CASE("extend_injection restricted to its domain is exact") {
  Rng rng(104);
  for (int i = 0; i < 500; ++i) {
    // Random injective partial map out of a random permutation.
    Perm g = sample_perm(rng);
    std::vector<std::pair<Atom, Atom>> partial;
    for (const auto& e : g.as_subst().entries()) {
      if (rng.coin()) partial.push_back(e);
    }
    Perm ext = extend_injection(partial);
    CHECK(ext.as_subst().is_permutation());
    for (const auto& [from, to] : partial) CHECK(ext(from) == to);
  }
}

TEST_CASE("fresh output is disjoint and duplicate-free") {
  Rng rng(105);
  for (int i = 0; i < 500; ++i) {
    AtomSet avoid = sample_subst(rng, 16, 6).moved();
    std::size_t count = rng.below(6);
    std::vector<Atom> got = fresh_atoms(avoid, count);
    CHECK(got.size() == count);
    CHECK(AtomSet(got).size() == count);
    CHECK_FALSE(AtomSet(got).intersects(avoid));
  }
}
