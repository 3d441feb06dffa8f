#include "nomsets/sampling.hpp"

#include <algorithm>

#include "nomsets/orbit.hpp"

namespace nomsets {

Value separate_value(const Value& v, const AtomSet& avoid) {
  AtomSet mine = support(v);
  std::vector<Atom> clashes;
  for (Atom a : mine) {
    if (avoid.contains(a)) clashes.push_back(a);
  }
  if (clashes.empty()) return v;
  AtomSet all = mine;
  all.unite(avoid);
  std::vector<Atom> repl = fresh_atoms(all, clashes.size());
  std::vector<std::pair<Atom, Atom>> pairs;
  for (std::size_t i = 0; i < clashes.size(); ++i)
    pairs.emplace_back(clashes[i], repl[i]);
  return rename_atoms(v, Subst::from_pairs(std::move(pairs)));
}

Value sample_value(const SetDesc& X, Rng& rng, std::uint32_t atom_range) {
  auto random_atom = [&]() {
    return Atom{static_cast<std::uint32_t>(rng.below(atom_range))};
  };
  switch (X.kind()) {
    case SetKind::Atoms:
      return Value::atom(random_atom());
    case SetKind::Unit:
      return Value::tuple({});
    case SetKind::Discrete:
      return Value::label(X.labels()[rng.below(X.labels().size())]);
    case SetKind::Product:
      return Value::tuple({sample_value(X.left(), rng, atom_range),
                           sample_value(X.right(), rng, atom_range)});
    case SetKind::SepProduct: {
      Value a = sample_value(X.left(), rng, atom_range);
      Value b = separate_value(sample_value(X.right(), rng, atom_range),
                              support(a));
      return Value::tuple({std::move(a), std::move(b)});
    }
    case SetKind::Coproduct:
      return rng.coin() ? sample_value(X.left(), rng, atom_range)
                        : sample_value(X.right(), rng, atom_range);
    case SetKind::WordsUpTo:
    case SetKind::SepWordsUpTo: {
      std::size_t len = rng.below(X.bound() + 1);
      std::vector<Value> letters;
      AtomSet used;
      for (std::size_t i = 0; i < len; ++i) {
        Value letter = sample_value(X.child(), rng, atom_range);
        if (X.kind() == SetKind::SepWordsUpTo)
          letter = separate_value(letter, used);
        used.unite(support(letter));
        letters.push_back(std::move(letter));
      }
      return Value::tuple(std::move(letters));
    }
    case SetKind::Tagged:
      return Value::tagged(X.tag(), sample_value(X.child(), rng, atom_range));
    case SetKind::Free: {
      OrbitShape base = orbit_shape(sample_value(X.child(), rng, atom_range),
                                    X.child());
      std::vector<Value> images;
      for (std::size_t i = 0; i < base.support_size(); ++i)
        images.push_back(Value::atom(random_atom()));
      return Value::tagged(kFreeTag,
                           Value::tuple({Value::label(base.key()),
                                         Value::tuple(std::move(images))}));
    }
  }
  return Value::tuple({});
}

Subst sample_subst(Rng& rng, std::uint32_t atom_range, std::size_t max_moved) {
  std::size_t moved = rng.below(max_moved + 1);
  std::vector<std::pair<Atom, Atom>> pairs;
  std::vector<bool> used(atom_range, false);
  for (std::size_t i = 0; i < moved; ++i) {
    std::uint32_t a = static_cast<std::uint32_t>(rng.below(atom_range));
    if (used[a]) continue;
    used[a] = true;
    pairs.emplace_back(Atom{a},
                       Atom{static_cast<std::uint32_t>(rng.below(atom_range))});
  }
  return Subst::from_pairs(std::move(pairs));
}

Perm sample_perm(Rng& rng, std::uint32_t atom_range) {
  return sample_perm_over(AtomSet{}, rng, atom_range);
}

Perm sample_perm_over(const AtomSet& pool, Rng& rng,
                      std::uint32_t atom_range) {
  std::vector<Atom> atoms(pool.begin(), pool.end());
  for (std::uint32_t a = 0; a < atom_range; ++a) {
    Atom atom{a};
    if (!pool.contains(atom)) atoms.push_back(atom);
  }
  // Fisher-Yates with the deterministic generator.
  std::vector<Atom> image = atoms;
  for (std::size_t i = image.size(); i > 1; --i) {
    std::size_t j = rng.below(i);
    std::swap(image[i - 1], image[j]);
  }
  std::vector<std::pair<Atom, Atom>> pairs;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    pairs.emplace_back(atoms[i], image[i]);
  return Perm(Subst::from_pairs(std::move(pairs)));
}

}  // namespace nomsets
