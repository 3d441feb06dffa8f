#include "nomsets/verify.hpp"

#include <functional>
#include <map>
#include <optional>

#include "nomsets/automata.hpp"
#include "nomsets/fifo.hpp"
#include "nomsets/free.hpp"
#include "nomsets/nuclear.hpp"
#include "nomsets/sampling.hpp"

namespace nomsets {

namespace {

using Check = std::function<std::optional<std::string>(Rng&, std::size_t)>;

class Recorder {
public:
  Recorder(std::uint64_t seed, std::size_t samples)
      : seed_(seed), samples_(samples) {}

  void add(const std::string& name, const Check& check) {
    CheckResult result;
    result.name = name;
    result.samples = samples_;
    Rng rng(seed_ ^ (0x9e3779b97f4a7c15ull * (results_.size() + 1)));
    try {
      if (auto cex = check(rng, samples_)) {
        result.passed = false;
        result.counterexample = *cex;
      }
    } catch (const std::exception& e) {
      result.passed = false;
      result.counterexample = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(result));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

private:
  std::uint64_t seed_;
  std::size_t samples_;
  std::vector<CheckResult> results_;
};

std::optional<std::string> ok() { return std::nullopt; }

// Bell numbers by the Bell-triangle recurrence.
std::vector<std::uint64_t> bell_numbers(std::size_t up_to) {
  std::vector<std::uint64_t> bells{1};
  std::vector<std::uint64_t> row{1};
  for (std::size_t n = 1; n <= up_to; ++n) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
    bells.push_back(row.front());
  }
  return bells;
}

// A language that is permutation- but not substitution-equivariant:
// outputs "yes" once the first letter shows up again.
MooreAutomaton repeat_acceptor() {
  MooreAutomaton a;
  a.states = SetDesc::coproduct(
      SetDesc::coproduct(SetDesc::unit(), SetDesc::atoms()),
      SetDesc::discrete({"seen"}));
  a.alphabet = SetDesc::atoms();
  a.output = SetDesc::discrete({"no", "yes"});
  a.initial = Value::tuple({});
  a.delta = [](const Value& state, const Value& letter) {
    if (state.kind() == ValueKind::Label) return state;
    if (state.kind() == ValueKind::Tuple) return letter;  // remember first
    return state == letter ? Value::label("seen") : state;
  };
  a.out = [](const Value& state) {
    return Value::label(state.kind() == ValueKind::Label ? "yes" : "no");
  };
  return a;
}

const SetDesc kAtoms = SetDesc::atoms();
const SetDesc kPair = SetDesc::product(SetDesc::atoms(), SetDesc::atoms());
const SetDesc kSepPair =
    SetDesc::sep_product(SetDesc::atoms(), SetDesc::atoms());

std::vector<SetDesc> sb_descriptors() {
  return {kAtoms, kPair, SetDesc::words_up_to(kAtoms, 3),
          fifo_automaton(3).states};
}

std::vector<SetDesc> perm_descriptors() {
  std::vector<SetDesc> out = sb_descriptors();
  out.push_back(kSepPair);
  out.push_back(SetDesc::sep_words_up_to(kAtoms, 3));
  return out;
}

void suite_actions(Recorder& rec) {
  rec.add("compose_associative", [](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      Subst a = sample_subst(rng), b = sample_subst(rng), c = sample_subst(rng);
      if (!(compose(compose(a, b), c) == compose(a, compose(b, c))))
        return std::optional<std::string>(to_string(a) + ", " + to_string(b) +
                                          ", " + to_string(c));
    }
    return ok();
  });
  rec.add("identity_unit", [](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      Subst m = sample_subst(rng);
      if (!(compose(Subst{}, m) == m && compose(m, Subst{}) == m))
        return std::optional<std::string>(to_string(m));
    }
    return ok();
  });
  rec.add("perm_submonoid", [](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      Perm g = sample_perm(rng), h = sample_perm(rng);
      Perm gh = compose(g, h);
      if (!gh.as_subst().is_permutation())
        return std::optional<std::string>("compose left Perm");
      if (!compose(g, g.inverse()).is_identity() ||
          !compose(g.inverse(), g).is_identity())
        return std::optional<std::string>("inverse failed on " +
                                          to_string(g.as_subst()));
    }
    return ok();
  });
  rec.add("apply_compose", [](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      Subst m = sample_subst(rng), k = sample_subst(rng);
      Atom a{static_cast<std::uint32_t>(rng.below(10))};
      if (compose(m, k)(a) != m(k(a)))
        return std::optional<std::string>(to_string(m) + " after " +
                                          to_string(k) + " at " + to_string(a));
    }
    return ok();
  });
  rec.add("extend_injection_agrees", [](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      Perm g = sample_perm(rng);
      std::vector<std::pair<Atom, Atom>> partial;
      for (const auto& e : g.as_subst().entries()) {
        if (rng.coin()) partial.push_back(e);
      }
      Perm ext = extend_injection(partial);
      for (const auto& [a, b] : partial) {
        if (ext(a) != b)
          return std::optional<std::string>("disagrees at " + to_string(a));
      }
    }
    return ok();
  });
  rec.add("fresh_disjoint", [](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      AtomSet avoid = sample_subst(rng).moved();
      std::vector<Atom> got = fresh_atoms(avoid, rng.below(5));
      AtomSet set(got);
      if (set.size() != got.size() || set.intersects(avoid))
        return std::optional<std::string>("fresh clash");
    }
    return ok();
  });
  rec.add("action_laws", [](Rng& rng, std::size_t n) {
    std::vector<SetDesc> descs = perm_descriptors();
    for (std::size_t i = 0; i < n; ++i) {
      const SetDesc& X = descs[rng.below(descs.size())];
      Value v = sample_value(X, rng);
      if (!(act(Subst{}, v, X) == v))
        return std::optional<std::string>("identity law at " + to_text(v));
      Subst m, k;
      if (X.has_sb_action()) {
        m = sample_subst(rng);
        k = sample_subst(rng);
      } else {
        m = sample_perm(rng).as_subst();
        k = sample_perm(rng).as_subst();
      }
      if (!(act(compose(m, k), v, X) == act(m, act(k, v, X), X)))
        return std::optional<std::string>("composition law at " + to_text(v));
    }
    return ok();
  });
}

void suite_supports(Recorder& rec) {
  rec.add("transfer_support", [](Rng& rng, std::size_t n) {
    std::vector<SetDesc> descs = perm_descriptors();
    for (std::size_t i = 0; i < n; ++i) {
      const SetDesc& X = descs[rng.below(descs.size())];
      Value v = sample_value(X, rng);
      Perm g = sample_perm_over(support(v), rng);
      AtomSet lhs = support(act(g, v, X));
      std::vector<Atom> mapped;
      for (Atom a : support(v)) mapped.push_back(g(a));
      if (!(lhs == AtomSet(mapped)))
        return std::optional<std::string>("supp(g.x) != g.supp(x) at " +
                                          to_text(v));
    }
    return ok();
  });
  rec.add("support_minimality", [](Rng& rng, std::size_t n) {
    std::vector<SetDesc> descs = perm_descriptors();
    for (std::size_t i = 0; i < n; ++i) {
      const SetDesc& X = descs[rng.below(descs.size())];
      Value v = sample_value(X, rng);
      AtomSet supp = support(v);
      // A permutation moving only non-support atoms fixes v.
      std::vector<Atom> outside = fresh_atoms(supp, 3);
      Perm g = compose(Perm::transposition(outside[0], outside[1]),
                       Perm::transposition(outside[1], outside[2]));
      if (!(act(g, v, X) == v))
        return std::optional<std::string>("fresh swap moved " + to_text(v));
      // Moving any support atom moves v.
      for (Atom a : supp) {
        AtomSet avoid = supp;
        Perm h = Perm::transposition(a, fresh_atoms(avoid, 1)[0]);
        if (act(h, v, X) == v)
          return std::optional<std::string>("support atom " + to_string(a) +
                                            " is redundant in " + to_text(v));
      }
    }
    return ok();
  });
  rec.add("perm_sb_support_agreement", [](Rng& rng, std::size_t n) {
    std::vector<SetDesc> descs = sb_descriptors();
    for (std::size_t i = 0; i < n; ++i) {
      const SetDesc& X = descs[rng.below(descs.size())];
      Value v = sample_value(X, rng);
      AtomSet supp = support(v);
      // The full support passes both kinds of randomized tests.
      Subst m1 = sample_subst(rng);
      std::vector<std::pair<Atom, Atom>> delta;
      for (Atom a : fresh_atoms(supp, 2))
        delta.emplace_back(a, Atom{a.id + 100});
      Subst m2 = compose(m1, Subst::from_pairs(delta));  // agrees on supp
      if (!(rename_atoms(v, m1) == rename_atoms(v, m2)))
        return std::optional<std::string>("sb support failed at " +
                                          to_text(v));
      // Dropping an atom fails both: a permutation witness and a
      // substitution witness exist.
      if (!supp.empty()) {
        Atom a = *supp.begin();
        Atom b = fresh_atoms(supp, 1)[0];
        bool perm_broken =
            !(act(Perm::transposition(a, b), v, X) == v);
        bool sb_broken =
            !(act(Subst::from_pairs({{a, b}}), v, X) == v);
        if (perm_broken != sb_broken)
          return std::optional<std::string>(
              "perm/sb support witnesses disagree at " + to_text(v));
        if (!perm_broken)
          return std::optional<std::string>("support atom removable at " +
                                            to_text(v));
      }
    }
    return ok();
  });
  rec.add("equivariant_maps_preserve_support", [](Rng&, std::size_t n) {
    ValueMap first = [](const Value& v) { return v.items()[0]; };
    CheckReport r = is_equivariant(first, kPair, kAtoms, n, 17);
    if (!r.passed) return std::optional<std::string>(r.counterexample);
    return ok();
  });
}

void suite_adjunction(Recorder& rec) {
  struct HomSet {
    SetDesc domain;
    SetDesc codomain;
    ValueMap f;
    std::string name;
  };
  const SetDesc fifo_states = fifo_automaton(3).states;
  auto word_of_pair = [](const Value& v) {
    return Value::tuple({v.items()[0], v.items()[1]});
  };
  std::vector<HomSet> homs = {
      {kAtoms, kAtoms, [](const Value& v) { return v; }, "id"},
      {kAtoms, fifo_states,
       [](const Value& v) { return Value::tuple({v}); }, "singleton_word"},
      {kSepPair, kAtoms, [](const Value& v) { return v.items()[0]; },
       "fst_sep"},
      {kPair, kAtoms, [](const Value& v) { return v.items()[1]; }, "snd"},
      {kPair, fifo_states, word_of_pair, "pair_word"},
  };

  rec.add("unit_is_equivariant", [](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      Value x = sample_value(kPair, rng);
      Perm g = sample_perm_over(support(x), rng);
      if (!(unit(act(g, x, kPair), kPair) ==
            act_free(g.as_subst(), unit(x, kPair))))
        return std::optional<std::string>("unit not equivariant at " +
                                          to_text(x));
    }
    return ok();
  });
  rec.add("sharp_factors_through_unit", [homs](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const HomSet& hs = homs[rng.below(homs.size())];
      Value x = sample_value(hs.domain, rng);
      FreeMap fs = sharp(hs.f, hs.codomain);
      if (!(fs(unit(x, hs.domain)) == hs.f(x)))
        return std::optional<std::string>(hs.name + " at " + to_text(x));
    }
    return ok();
  });
  rec.add("sharp_is_sb_equivariant", [homs](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const HomSet& hs = homs[rng.below(homs.size())];
      FreeElem e = sample_free_elem(hs.domain, rng);
      Subst m = sample_subst(rng);
      FreeMap fs = sharp(hs.f, hs.codomain);
      if (!(fs(act_free(m, e)) == act(m, fs(e), hs.codomain)))
        return std::optional<std::string>(hs.name + " at " + to_string(e));
    }
    return ok();
  });
  rec.add("flat_sharp_roundtrip", [homs](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const HomSet& hs = homs[rng.below(homs.size())];
      Value x = sample_value(hs.domain, rng);
      ValueMap back = flat(sharp(hs.f, hs.codomain), hs.domain);
      if (!(back(x) == hs.f(x)))
        return std::optional<std::string>(hs.name + " at " + to_text(x));
    }
    return ok();
  });
  rec.add("sharp_flat_roundtrip", [homs](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const HomSet& hs = homs[rng.below(homs.size())];
      FreeElem e = sample_free_elem(hs.domain, rng);
      FreeMap h = sharp(hs.f, hs.codomain);  // an sb-equivariant map
      FreeMap again = sharp(flat(h, hs.domain), hs.codomain);
      if (!(again(e) == h(e)))
        return std::optional<std::string>(hs.name + " at " + to_string(e));
    }
    return ok();
  });
  rec.add("sharp_unique", [homs](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const HomSet& hs = homs[rng.below(homs.size())];
      FreeElem e = sample_free_elem(hs.domain, rng);
      // Any map h with h([id,x]) = f(x) is forced to sharp(f) on every
      // decomposition [m, x] of e: evaluate m.f(x) over a random one.
      Perm g = sample_perm(rng);
      Value x = act(g, e.base.representative(), hs.domain);
      Subst m = compose(e.image_subst(), g.inverse().as_subst());
      Value forced = act(m, hs.f(x), hs.codomain);
      if (!(forced == sharp(hs.f, hs.codomain)(e)))
        return std::optional<std::string>(hs.name + " at " + to_string(e));
    }
    return ok();
  });
  rec.add("triangle_counit_after_free_unit", [](Rng& rng, std::size_t n) {
    std::vector<SetDesc> descs = {kAtoms, kPair, kSepPair};
    for (std::size_t i = 0; i < n; ++i) {
      const SetDesc& X = descs[rng.below(descs.size())];
      SetDesc freeX = SetDesc::free(X);
      FreeElem e = sample_free_elem(X, rng);
      ValueMap unit_map = [&X](const Value& x) {
        return unit(x, X).to_value();
      };
      FreeElem lifted = map_free(unit_map, e, freeX);
      if (!(FreeElem::from_value(counit(lifted, freeX), X) == e))
        return std::optional<std::string>("on " + X.to_text() + " at " +
                                          to_string(e));
    }
    return ok();
  });
  rec.add("triangle_flat_counit_identity", [](Rng& rng, std::size_t n) {
    std::vector<SetDesc> descs = {kAtoms, kPair};
    for (std::size_t i = 0; i < n; ++i) {
      const SetDesc& Y = descs[rng.below(descs.size())];
      Value y = sample_value(Y, rng);
      ValueMap emb = flat([&Y](const FreeElem& e) { return counit(e, Y); }, Y);
      if (!(emb(y) == y))
        return std::optional<std::string>("on " + Y.to_text() + " at " +
                                          to_text(y));
    }
    return ok();
  });
  rec.add("normal_form_matches_sim_oracle", [](Rng& rng, std::size_t n) {
    std::vector<SetDesc> descs = {kAtoms, kPair, kSepPair,
                                  SetDesc::words_up_to(kAtoms, 3)};
    for (std::size_t i = 0; i < n; ++i) {
      const SetDesc& X = descs[rng.below(descs.size())];
      Subst m1 = sample_subst(rng);
      Value x1 = sample_value(X, rng);
      Subst m2;
      Value x2 = Value::tuple({});
      if (rng.coin()) {
        // Build an equivalent pair through the defining relations.
        Perm g = sample_perm_over(support(x1), rng);
        x2 = act(g, x1, X);
        m2 = compose(m1, g.inverse().as_subst());
        if (rng.coin()) {
          // Tweak m2 outside the support of x2.
          Atom off = fresh_atoms(support(x2), 1)[0];
          m2 = compose(Subst::from_pairs({{Atom{off.id + 50}, off}}), m2);
        }
      } else {
        m2 = sample_subst(rng);
        x2 = sample_value(X, rng);
      }
      bool nf = free_elem(m1, x1, X) == free_elem(m2, x2, X);
      bool oracle = sim_oracle(m1, x1, m2, x2, X);
      if (nf != oracle)
        return std::optional<std::string>(
            "disagree on (" + to_string(m1) + ", " + to_text(x1) + ") ~ (" +
            to_string(m2) + ", " + to_text(x2) + "): normal form " +
            (nf ? "yes" : "no"));
    }
    return ok();
  });
  rec.add("functor_laws", [homs](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      FreeElem e = sample_free_elem(kPair, rng);
      ValueMap ident = [](const Value& v) { return v; };
      if (!(map_free(ident, e, kPair) == e))
        return std::optional<std::string>("identity law at " + to_string(e));
      ValueMap swap_pair = [](const Value& v) {
        return Value::tuple({v.items()[1], v.items()[0]});
      };
      ValueMap snd = [](const Value& v) { return v.items()[1]; };
      FreeElem lhs = map_free(snd, map_free(swap_pair, e, kPair), kAtoms);
      ValueMap composed = [&](const Value& v) { return snd(swap_pair(v)); };
      if (!(map_free(composed, e, kAtoms) == lhs))
        return std::optional<std::string>("composition law at " +
                                          to_string(e));
    }
    return ok();
  });
}

void suite_monoidal(Recorder& rec) {
  struct PairDesc {
    SetDesc x, y;
  };
  std::vector<PairDesc> pairs = {
      {kAtoms, kAtoms}, {kPair, kAtoms}, {kAtoms, kSepPair}};

  rec.add("split_matches_definition", [pairs](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const PairDesc& pd = pairs[rng.below(pairs.size())];
      SetDesc sep = SetDesc::sep_product(pd.x, pd.y);
      Value pair = sample_value(sep, rng);
      Subst m = sample_subst(rng);
      auto [e1, e2] = monoidal_split(free_elem(m, pair, sep), pd.x, pd.y);
      if (!(e1 == free_elem(m, pair.items()[0], pd.x)) ||
          !(e2 == free_elem(m, pair.items()[1], pd.y)))
        return std::optional<std::string>("p([m,(x,y)]) != ([m,x],[m,y]) at " +
                                          to_text(pair));
    }
    return ok();
  });
  rec.add("pair_then_split", [pairs](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const PairDesc& pd = pairs[rng.below(pairs.size())];
      FreeElem e1 = sample_free_elem(pd.x, rng);
      FreeElem e2 = sample_free_elem(pd.y, rng);
      auto [f1, f2] = monoidal_split(monoidal_pair(e1, e2, pd.x, pd.y), pd.x,
                                     pd.y);
      if (!(f1 == e1 && f2 == e2))
        return std::optional<std::string>("p(p_inv(e1,e2)) != (e1,e2) at " +
                                          to_string(e1) + ", " +
                                          to_string(e2));
    }
    return ok();
  });
  rec.add("split_then_pair", [pairs](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const PairDesc& pd = pairs[rng.below(pairs.size())];
      SetDesc sep = SetDesc::sep_product(pd.x, pd.y);
      FreeElem e = sample_free_elem(sep, rng);
      auto [e1, e2] = monoidal_split(e, pd.x, pd.y);
      if (!(monoidal_pair(e1, e2, pd.x, pd.y) == e))
        return std::optional<std::string>("p_inv(p(e)) != e at " +
                                          to_string(e));
    }
    return ok();
  });
  rec.add("free_unit_is_singleton", [](Rng& rng, std::size_t n) {
    if (orbits_free(SetDesc::unit()).size() != 1)
      return std::optional<std::string>("orbit count != 1");
    FreeElem one = unit(Value::tuple({}), SetDesc::unit());
    for (std::size_t i = 0; i < n; ++i) {
      if (!(free_elem(sample_subst(rng), Value::tuple({}), SetDesc::unit()) ==
            one))
        return std::optional<std::string>("[m, 1] != [id, 1]");
    }
    return ok();
  });
  rec.add("orbit_count_isos", [](Rng&, std::size_t) {
    if (orbits_free(kAtoms).size() != 1)
      return std::optional<std::string>("free(A) should have 1 orbit");
    if (orbits_free(kPair).size() != 3)
      return std::optional<std::string>("free(AxA) should have 3 orbits");
    std::vector<std::uint64_t> bells = bell_numbers(5);
    SetDesc power = SetDesc::unit();
    for (std::size_t k = 1; k <= 5; ++k) {
      power = (k == 1) ? kAtoms : SetDesc::sep_product(power, kAtoms);
      if (orbits_free(power).size() != bells[k])
        return std::optional<std::string>(
            "free separated power " + std::to_string(k) + ": expected Bell " +
            std::to_string(bells[k]));
    }
    return ok();
  });
  rec.add("separated_words_iso", [](Rng&, std::size_t) {
    for (std::size_t n = 0; n <= 4; ++n) {
      std::size_t lhs =
          orbits_free(SetDesc::sep_words_up_to(kAtoms, n)).size();
      std::size_t rhs = orbits(SetDesc::words_up_to(kAtoms, n)).size();
      if (lhs != rhs)
        return std::optional<std::string>(
            "n = " + std::to_string(n) + ": " + std::to_string(lhs) +
            " != " + std::to_string(rhs));
    }
    return ok();
  });
}

void suite_onedim(Recorder& rec) {
  std::vector<SetDesc> descs = {
      kAtoms,
      SetDesc::coproduct(SetDesc::discrete({"s"}), kAtoms),
      SetDesc::discrete({"a", "b"}),
      SetDesc::unit(),
  };
  for (const SetDesc& X : descs) {
    rec.add("one_dim_isos " + X.to_text(), [X](Rng& rng, std::size_t n) {
      OneDimReport r = one_dim_isos(X, n, rng.next_u64());
      if (!r.passed) return std::optional<std::string>(r.detail);
      return ok();
    });
  }
  rec.add("rejects_two_dimensional", [](Rng&, std::size_t) {
    try {
      one_dim_isos(kPair, 1, 0);
    } catch (const DimensionError& e) {
      if (e.witness_orbit() == "(0,1)") return ok();
      return std::optional<std::string>("unexpected witness " +
                                        e.witness_orbit());
    }
    return std::optional<std::string>("no rejection");
  });
  rec.add("char_dim_one_decomposition", [descs](Rng&, std::size_t) {
    std::vector<std::pair<std::size_t, std::size_t>> expected = {
        {0, 1}, {1, 1}, {2, 0}, {1, 0}};
    for (std::size_t i = 0; i < descs.size(); ++i) {
      DimensionInfo info = dimension(descs[i]);
      if (info.dimension > 1 ||
          info.zero_support_orbits != expected[i].first ||
          info.one_support_orbits != expected[i].second)
        return std::optional<std::string>("decomposition of " +
                                          descs[i].to_text());
    }
    return ok();
  });
}

void suite_automata(Recorder& rec) {
  rec.add("fifo_delta_out_equivariant", [](Rng& rng, std::size_t n) {
    MooreAutomaton fifo = fifo_automaton(3);
    validate_automaton(fifo);
    CheckReport r = check_equivariance(fifo, n, rng.next_u64());
    if (!r.passed) return std::optional<std::string>(r.counterexample);
    return ok();
  });
  rec.add("compositional_semantics", [](Rng& rng, std::size_t n) {
    MooreAutomaton fifo = fifo_automaton(3);
    for (std::size_t i = 0; i < n; ++i) {
      Value state = sample_value(fifo.states, rng);
      Word u = sample_word(fifo.alphabet, 3, false, rng);
      Word v = sample_word(fifo.alphabet, 3, false, rng);
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      if (!(run_from(fifo, state, uv) ==
            run_from(fifo, delta_star(fifo, state, u), v)))
        return std::optional<std::string>("l(x,uv) != l(d(x,u),v) at " +
                                          to_text(state));
    }
    return ok();
  });
  rec.add("language_perm_equivariant", [](Rng& rng, std::size_t n) {
    MooreAutomaton fifo = fifo_automaton(3);
    for (std::size_t i = 0; i < n; ++i) {
      Word w = sample_word(fifo.alphabet, 6, false, rng);
      Perm g = sample_perm(rng);
      Word gw;
      for (const Value& letter : w) gw.push_back(act(g, letter, fifo.alphabet));
      if (!(run(fifo, gw) == act(g, run(fifo, w), fifo.output)))
        return std::optional<std::string>("L(g.w) != g.L(w) at " + to_text(w));
    }
    return ok();
  });
  rec.add("reachability_counts", [](Rng&, std::size_t) {
    std::vector<std::uint64_t> bells = bell_numbers(3);
    for (std::size_t n = 0; n <= 3; ++n) {
      MooreAutomaton fifo = fifo_automaton(n);
      std::uint64_t expected = 1;
      for (std::size_t k = 0; k <= n; ++k) expected += bells[k];
      if (reachable_orbits(fifo).size() != expected)
        return std::optional<std::string>("nominal count at n = " +
                                          std::to_string(n));
      if (reachable_orbits(restricted(fifo)).size() != n + 2)
        return std::optional<std::string>("separated count at n = " +
                                          std::to_string(n));
    }
    return ok();
  });
  rec.add("restriction_agrees_on_separated_words",
          [](Rng& rng, std::size_t n) {
            MooreAutomaton fifo = fifo_automaton(3);
            MooreAutomaton sep = restricted(fifo);
            for (std::size_t i = 0; i < n; ++i) {
              Word w = sample_word(fifo.alphabet, 5, true, rng);
              if (!(run_separated(sep, w) == run(fifo, w)))
                return std::optional<std::string>("disagree on " + to_text(w));
            }
            return ok();
          });
  rec.add("restricted_reach_subset", [](Rng&, std::size_t) {
    for (std::size_t n = 0; n <= 4; ++n) {
      MooreAutomaton fifo = fifo_automaton(n);
      std::vector<OrbitShape> full = reachable_orbits(fifo);
      auto in_full = [&](const OrbitShape& o) {
        for (const OrbitShape& f : full) {
          if (f == o) return true;
        }
        return false;
      };
      for (const OrbitShape& o : reachable_orbits(restricted(fifo))) {
        if (!in_full(o))
          return std::optional<std::string>("orbit " + o.key() +
                                            " escapes at n = " +
                                            std::to_string(n));
      }
    }
    return ok();
  });
  rec.add("reach_order_independent", [](Rng&, std::size_t) {
    for (std::size_t n = 0; n <= 3; ++n) {
      MooreAutomaton fifo = fifo_automaton(n);
      std::vector<std::string> a, b;
      for (const OrbitShape& o : reachable_orbits(fifo)) a.push_back(o.key());
      for (const OrbitShape& o : reachable_orbits_reversed(fifo))
        b.push_back(o.key());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b)
        return std::optional<std::string>("different orbit sets at n = " +
                                          std::to_string(n));
    }
    return ok();
  });
}

void suite_extension(Recorder& rec) {
  rec.add("extension_example", [](Rng&, std::size_t) {
    MooreAutomaton sep = restricted(fifo_automaton(3));
    Word w = {Value::tagged("Put", Value::atom(Atom{1})),
              Value::tagged("Put", Value::atom(Atom{1})),
              Value::label("Pop")};
    if (!(extend_language(sep, w) == Value::atom(Atom{1})))
      return std::optional<std::string>("Put(1);Put(1);Pop should output 1");
    return ok();
  });
  rec.add("extension_equals_full_language", [](Rng& rng, std::size_t n) {
    MooreAutomaton fifo = fifo_automaton(3);
    MooreAutomaton sep = restricted(fifo);
    for (std::size_t i = 0; i < n; ++i) {
      Word w = sample_word(fifo.alphabet, 6, false, rng);
      if (!(extend_language(sep, w) == run(fifo, w)))
        return std::optional<std::string>("disagree on " + to_text(w));
    }
    return ok();
  });
  rec.add("extension_fresh_choice_invariant", [](Rng& rng, std::size_t n) {
    MooreAutomaton sep = restricted(fifo_automaton(3));
    for (std::size_t i = 0; i < n; ++i) {
      Word w = sample_word(sep.alphabet, 6, false, rng);
      if (!(extend_language(sep, w, 0) == extend_language(sep, w, 3)))
        return std::optional<std::string>("fresh choice leaked on " +
                                          to_text(w));
    }
    return ok();
  });
  rec.add("extension_restricts_to_separated_semantics",
          [](Rng& rng, std::size_t n) {
            MooreAutomaton sep = restricted(fifo_automaton(3));
            for (std::size_t i = 0; i < n; ++i) {
              Word w = sample_word(sep.alphabet, 5, true, rng);
              if (!(extend_language(sep, w) == run_separated(sep, w)))
                return std::optional<std::string>("disagree on " + to_text(w));
            }
            return ok();
          });
  rec.add("fifo_language_sb_equivariant", [](Rng& rng, std::size_t n) {
    CheckReport r =
        check_sb_equivariance(fifo_automaton(3), n, rng.next_u64());
    if (!r.passed) return std::optional<std::string>(r.counterexample);
    return ok();
  });
}

void suite_counterexamples(Recorder& rec) {
  rec.add("nuclear_action_laws", [](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      Value v = rng.coin()
                    ? NuclearSet::star()
                    : NuclearSet::of_atom(
                          Atom{static_cast<std::uint32_t>(rng.below(8))});
      if (!(NuclearSet::act(Subst{}, v) == v))
        return std::optional<std::string>("identity law at " + to_text(v));
      Subst m = sample_subst(rng), k = sample_subst(rng);
      if (!(NuclearSet::act(compose(m, k), v) ==
            NuclearSet::act(m, NuclearSet::act(k, v))))
        return std::optional<std::string>("composition law at " + to_text(v) +
                                          " with " + to_string(m) + ", " +
                                          to_string(k));
    }
    return ok();
  });
  rec.add("nuclear_witness_for_every_support", [](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      Atom a{static_cast<std::uint32_t>(rng.below(8))};
      std::vector<Atom> atoms;
      for (std::size_t j = rng.below(6); j > 0; --j)
        atoms.push_back(Atom{static_cast<std::uint32_t>(rng.below(40))});
      AtomSet c(atoms);
      auto [m1, m2] = nuclear_witness(a, c);
      for (Atom x : c) {
        if (m1(x) != m2(x))
          return std::optional<std::string>("witnesses disagree on C");
      }
      if (NuclearSet::act(m1, NuclearSet::of_atom(a)) ==
          NuclearSet::act(m2, NuclearSet::of_atom(a)))
        return std::optional<std::string>(
            "no collapse: C = " + std::to_string(c.size()) + " atoms, a = " +
            to_string(a));
    }
    return ok();
  });
  rec.add("star_has_empty_support", [](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      Subst m = sample_subst(rng);
      if (!(NuclearSet::act(m, NuclearSet::star()) == NuclearSet::star()))
        return std::optional<std::string>("star moved by " + to_string(m));
    }
    return ok();
  });
  rec.add("nuclear_atoms_keep_perm_support", [](Rng& rng, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      Atom a{static_cast<std::uint32_t>(rng.below(8))};
      Perm g1 = sample_perm(rng);
      // A second permutation agreeing with g1 on {a}: post-compose a
      // transposition of two atoms away from a and g1(a).
      std::vector<Atom> off = fresh_atoms(AtomSet{a, g1(a)}, 2);
      Perm g2 = compose(Perm::transposition(off[0], off[1]), g1);
      if (!(NuclearSet::act(g1.as_subst(), NuclearSet::of_atom(a)) ==
            Value::atom(g1(a))))
        return std::optional<std::string>("perm action broken");
      if (!(NuclearSet::act(g2.as_subst(), NuclearSet::of_atom(a)) ==
            Value::atom(g1(a))))
        return std::optional<std::string>("{a} fails as a perm support");
    }
    return ok();
  });
  rec.add("repeat_acceptor_not_sb_equivariant", [](Rng& rng, std::size_t n) {
    CheckReport r = check_sb_equivariance(repeat_acceptor(), n,
                                          rng.next_u64());
    if (r.passed)
      return std::optional<std::string>(
          "expected a substitution counterexample, none found");
    return ok();
  });
  rec.add("constant_map_not_equivariant", [](Rng& rng, std::size_t n) {
    ValueMap constant = [](const Value&) { return Value::atom(Atom{7}); };
    CheckReport r = is_equivariant(constant, kAtoms, kAtoms, n,
                                   rng.next_u64());
    if (r.passed)
      return std::optional<std::string>("constant map slipped through");
    return ok();
  });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"actions",  "supports",  "adjunction",      "monoidal",
          "onedim",   "automata",  "extension",       "counterexamples",
          "all"};
}

SuiteResult run_suite(const std::string& suite, std::uint64_t seed,
                      std::size_t samples) {
  static const std::map<std::string, void (*)(Recorder&)> table = {
      {"actions", suite_actions},
      {"supports", suite_supports},
      {"adjunction", suite_adjunction},
      {"monoidal", suite_monoidal},
      {"onedim", suite_onedim},
      {"automata", suite_automata},
      {"extension", suite_extension},
      {"counterexamples", suite_counterexamples},
  };
  SuiteResult result;
  result.suite = suite;
  result.seed = seed;
  Recorder rec(seed, samples);
  if (suite == "all") {
    for (const auto& [name, fn] : table) fn(rec);
  } else {
    auto it = table.find(suite);
    if (it == table.end())
      throw std::invalid_argument("unknown suite '" + suite + "'");
    it->second(rec);
  }
  result.checks = rec.take();
  return result;
}

}  // namespace nomsets
