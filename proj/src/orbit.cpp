#include "nomsets/orbit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace nomsets {

namespace {

Value canonicalize(const Value& v, std::size_t& out_support) {
  std::map<Atom, Atom> renaming;
  for (Atom a : atom_occurrences(v)) {
    Atom next{static_cast<std::uint32_t>(renaming.size())};
    renaming.emplace(a, next);
  }
  out_support = renaming.size();
  std::vector<std::pair<Atom, Atom>> pairs(renaming.begin(), renaming.end());
  return rename_atoms(v, Subst::from_pairs(std::move(pairs)));
}

}  // namespace

OrbitShape OrbitShape::from_canonical(Value rep) {
  std::size_t k = 0;
  Value canon = canonicalize(rep, k);
  if (!(canon == rep))
    throw std::invalid_argument("value is not in canonical form: " +
                                to_text(rep));
  return OrbitShape(std::move(canon), k);
}

std::vector<unsigned> OrbitShape::pattern() const {
  std::vector<unsigned> out;
  for (Atom a : atom_occurrences(rep_)) out.push_back(a.id);
  return out;
}

OrbitShape orbit_shape(const Value& v, const SetDesc& X) {
  if (!contains(X, v))
    throw std::invalid_argument("orbit_shape: " + to_text(v) +
                                " is not a member of " + X.to_text());
  std::size_t k = 0;
  Value rep = canonicalize(v, k);
  return OrbitShape::from_canonical(std::move(rep));
}

Value representative(const OrbitShape& s) { return s.representative(); }

namespace {

// Extends a list of already-built tuple prefixes by one component. Every
// new component orbit is instantiated with all injective assignments of
// its support blocks to atoms of the prefix or fresh atoms (fresh ones
// allocated past the prefix support, in block order); separated mode keeps
// only the all-fresh assignment. The constructed values stay canonical, so
// no renumbering or deduplication is needed afterwards.
void glue_component(const std::vector<Value>& prefixes,
                    const std::vector<OrbitShape>& component, bool separated,
                    std::vector<Value>& out,
                    const std::function<Value(const Value&, const Value&)>&
                        combine) {
  for (const Value& prefix : prefixes) {
    std::size_t used = support(prefix).size();
    for (const OrbitShape& o : component) {
      std::size_t k = o.support_size();
      // assignment[i]: target atom for block i of the component orbit.
      std::vector<std::pair<Atom, Atom>> assignment;
      std::vector<bool> taken(used, false);
      std::size_t fresh_used = 0;
      auto emit = [&]() {
        Subst m = Subst::from_pairs(assignment);
        out.push_back(combine(prefix, rename_atoms(o.representative(), m)));
      };
      std::function<void(std::size_t)> rec = [&](std::size_t block) {
        if (block == k) {
          emit();
          return;
        }
        Atom src{static_cast<std::uint32_t>(block)};
        if (!separated) {
          for (std::size_t t = 0; t < used; ++t) {
            if (taken[t]) continue;
            taken[t] = true;
            assignment.emplace_back(src, Atom{static_cast<std::uint32_t>(t)});
            rec(block + 1);
            assignment.pop_back();
            taken[t] = false;
          }
        }
        Atom fresh{static_cast<std::uint32_t>(used + fresh_used)};
        ++fresh_used;
        assignment.emplace_back(src, fresh);
        rec(block + 1);
        assignment.pop_back();
        --fresh_used;
      };
      rec(0);
    }
  }
}

std::vector<Value> orbit_reps(const SetDesc& X);

std::vector<Value> pair_reps(const SetDesc& X, bool separated) {
  std::vector<Value> lefts = orbit_reps(X.left());
  std::vector<OrbitShape> rights;
  for (Value& r : orbit_reps(X.right()))
    rights.push_back(OrbitShape::from_canonical(std::move(r)));
  std::vector<Value> out;
  glue_component(lefts, rights, separated, out,
                 [](const Value& a, const Value& b) {
                   return Value::tuple({a, b});
                 });
  return out;
}

std::vector<Value> word_reps(const SetDesc& X, bool separated) {
  std::vector<OrbitShape> letters;
  for (Value& r : orbit_reps(X.child()))
    letters.push_back(OrbitShape::from_canonical(std::move(r)));
  auto append = [](const Value& w, const Value& letter) {
    std::vector<Value> items = w.items();
    items.push_back(letter);
    return Value::tuple(std::move(items));
  };
  std::vector<Value> out{Value::tuple({})};
  std::vector<Value> layer{Value::tuple({})};
  for (std::size_t len = 1; len <= X.bound(); ++len) {
    std::vector<Value> next;
    glue_component(layer, letters, separated, next, append);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Set partitions of {0..n-1} as restricted growth strings, lexicographic.
void restricted_growth_strings(std::size_t n,
                               const std::function<void(
                                   const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> rgs(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i,
                                                       unsigned max_block) {
    if (i == n) {
      visit(rgs);
      return;
    }
    for (unsigned b = 0; b <= max_block + 1 && b <= i; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(max_block, b));
    }
  };
  if (n == 0) {
    visit(rgs);
    return;
  }
  rgs[0] = 0;
  rec(1, 0);
}

std::vector<Value> free_reps(const SetDesc& X) {
  std::vector<Value> out;
  for (const OrbitShape& base : orbits(X.child())) {
    restricted_growth_strings(
        base.support_size(), [&](const std::vector<unsigned>& rgs) {
          std::vector<Value> images;
          images.reserve(rgs.size());
          for (unsigned block : rgs) images.push_back(Value::atom(Atom{block}));
          out.push_back(Value::tagged(
              kFreeTag, Value::tuple({Value::label(base.key()),
                                      Value::tuple(std::move(images))})));
        });
  }
  return out;
}

std::vector<Value> orbit_reps(const SetDesc& X) {
  switch (X.kind()) {
    case SetKind::Atoms:
      return {Value::atom(Atom{0})};
    case SetKind::Unit:
      return {Value::tuple({})};
    case SetKind::Discrete: {
      std::vector<Value> out;
      for (const std::string& s : X.labels()) out.push_back(Value::label(s));
      return out;
    }
    case SetKind::Product:
      return pair_reps(X, /*separated=*/false);
    case SetKind::SepProduct:
      return pair_reps(X, /*separated=*/true);
    case SetKind::Coproduct: {
      std::vector<Value> out = orbit_reps(X.left());
      std::vector<Value> right = orbit_reps(X.right());
      out.insert(out.end(), right.begin(), right.end());
      return out;
    }
    case SetKind::WordsUpTo:
      return word_reps(X, /*separated=*/false);
    case SetKind::SepWordsUpTo:
      return word_reps(X, /*separated=*/true);
    case SetKind::Free:
      return free_reps(X);
    case SetKind::Tagged: {
      std::vector<Value> out;
      for (Value& r : orbit_reps(X.child()))
        out.push_back(Value::tagged(X.tag(), std::move(r)));
      return out;
    }
  }
  return {};
}

}  // namespace

std::vector<OrbitShape> orbits(const SetDesc& X) {
  std::vector<OrbitShape> out;
  for (Value& rep : orbit_reps(X))
    out.push_back(OrbitShape::from_canonical(std::move(rep)));
  return out;
}

DimensionInfo dimension(const SetDesc& X) {
  DimensionInfo info;
  for (const OrbitShape& o : orbits(X)) {
    info.dimension = std::max(info.dimension, o.support_size());
    if (o.support_size() == 0) ++info.zero_support_orbits;
    if (o.support_size() == 1) ++info.one_support_orbits;
  }
  return info;
}

}  // namespace nomsets
