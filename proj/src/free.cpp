#include "nomsets/free.hpp"

#include <algorithm>

#include "nomsets/sampling.hpp"

namespace nomsets {

namespace {

// Distinct atoms of v in first-occurrence order: the canonical support
// order that aligns v with its orbit representative.
std::vector<Atom> canonical_support_order(const Value& v) {
  std::vector<Atom> order;
  for (Atom a : atom_occurrences(v)) {
    if (std::find(order.begin(), order.end(), a) == order.end())
      order.push_back(a);
  }
  return order;
}

}  // namespace

Subst FreeElem::image_subst() const {
  std::vector<std::pair<Atom, Atom>> pairs;
  for (std::size_t i = 0; i < images.size(); ++i)
    pairs.emplace_back(Atom{static_cast<std::uint32_t>(i)}, images[i]);
  return Subst::from_pairs(std::move(pairs));
}

Value FreeElem::to_value() const {
  std::vector<Value> image_items;
  image_items.reserve(images.size());
  for (Atom a : images) image_items.push_back(Value::atom(a));
  return Value::tagged(kFreeTag,
                       Value::tuple({Value::label(base.key()),
                                     Value::tuple(std::move(image_items))}));
}

FreeElem FreeElem::from_value(const Value& v, const SetDesc& base_desc) {
  if (!contains(SetDesc::free(base_desc), v))
    throw std::invalid_argument("not a free-element encoding over " +
                                base_desc.to_text() + ": " + to_text(v));
  const std::string& key = v.item().items()[0].name();
  for (const OrbitShape& o : orbits(base_desc)) {
    if (o.key() == key) {
      std::vector<Atom> images;
      for (const Value& img : v.item().items()[1].items())
        images.push_back(img.atom_id());
      return FreeElem{o, std::move(images)};
    }
  }
  throw std::invalid_argument("unknown base orbit key: " + key);
}

std::string to_string(const FreeElem& e) { return to_text(e.to_value()); }

FreeElem free_elem(const Subst& m, const Value& x, const SetDesc& X) {
  OrbitShape base = orbit_shape(x, X);
  std::vector<Atom> images;
  for (Atom c : canonical_support_order(x)) images.push_back(m(c));
  return FreeElem{std::move(base), std::move(images)};
}

bool sim_oracle(const Subst& m1, const Value& x1, const Subst& m2,
                const Value& x2, const SetDesc& X) {
  if (!contains(X, x1) || !contains(X, x2))
    throw std::invalid_argument("sim_oracle: arguments outside " +
                                X.to_text());
  std::vector<Atom> c1 = canonical_support_order(x1);
  std::vector<Atom> c2 = canonical_support_order(x2);
  if (c1.size() != c2.size()) return false;
  // Try every bijection supp(x1) -> supp(x2) as the alignment g; one of
  // the finitely many candidates must move x1 onto x2 and reconcile the
  // substitutions on the support.
  std::sort(c2.begin(), c2.end());
  do {
    std::vector<std::pair<Atom, Atom>> pairs;
    for (std::size_t i = 0; i < c1.size(); ++i)
      pairs.emplace_back(c1[i], c2[i]);
    Subst g = Subst::from_pairs(pairs);
    if (!(rename_atoms(x1, g) == x2)) continue;
    bool agrees = true;
    for (Atom c : c1) {
      if (m1(c) != m2(g(c))) {
        agrees = false;
        break;
      }
    }
    if (agrees) return true;
  } while (std::next_permutation(c2.begin(), c2.end()));
  return false;
}

FreeElem act_free(const Subst& n, const FreeElem& e) {
  std::vector<Atom> images = e.images;
  for (Atom& a : images) a = n(a);
  return FreeElem{e.base, std::move(images)};
}

FreeElem unit(const Value& x, const SetDesc& X) {
  return free_elem(Subst{}, x, X);
}

Value counit(const FreeElem& e, const SetDesc& Y) {
  if (!Y.has_sb_action())
    throw std::invalid_argument(
        "counit needs the substitution action on " + Y.to_text());
  const Value& rep = e.base.representative();
  if (!contains(Y, rep))
    throw std::invalid_argument("counit: base orbit " + e.base.key() +
                                " is not an orbit of " + Y.to_text());
  return rename_atoms(rep, e.image_subst());
}

FreeMap sharp(ValueMap f, SetDesc Y) {
  return [f = std::move(f), Y = std::move(Y)](const FreeElem& e) {
    return act(e.image_subst(), f(e.base.representative()), Y);
  };
}

ValueMap flat(FreeMap h, SetDesc X) {
  return [h = std::move(h), X = std::move(X)](const Value& x) {
    return h(unit(x, X));
  };
}

FreeElem map_free(const ValueMap& f, const FreeElem& e, const SetDesc& Y) {
  return free_elem(e.image_subst(), f(e.base.representative()), Y);
}

std::pair<FreeElem, FreeElem> monoidal_split(const FreeElem& e,
                                             const SetDesc& X,
                                             const SetDesc& Y) {
  const Value& rep = e.base.representative();
  if (rep.kind() != ValueKind::Tuple || rep.items().size() != 2)
    throw std::invalid_argument(
        "monoidal_split: base is not a separated pair: " + e.base.key());
  const Value& x = rep.items()[0];
  const Value& y = rep.items()[1];
  // The pair is canonical and separated, so x owns blocks 0..kx-1 and y
  // the remaining ones, in order.
  std::size_t kx = support(x).size();
  FreeElem e1{orbit_shape(x, X),
              std::vector<Atom>(e.images.begin(), e.images.begin() + kx)};
  FreeElem e2{orbit_shape(y, Y),
              std::vector<Atom>(e.images.begin() + kx, e.images.end())};
  return {std::move(e1), std::move(e2)};
}

FreeElem monoidal_pair(const FreeElem& e1, const FreeElem& e2,
                       const SetDesc& X, const SetDesc& Y) {
  const Value& x = e1.base.representative();
  const Value& y = e2.base.representative();
  std::vector<Atom> target =
      fresh_atoms(support(x), e2.base.support_size());
  std::vector<std::pair<Atom, Atom>> shift;
  for (std::size_t j = 0; j < target.size(); ++j)
    shift.emplace_back(Atom{static_cast<std::uint32_t>(j)}, target[j]);
  Value pair =
      Value::tuple({x, rename_atoms(y, Subst::from_pairs(std::move(shift)))});
  OrbitShape base = orbit_shape(pair, SetDesc::sep_product(X, Y));
  std::vector<Atom> images = e1.images;
  images.insert(images.end(), e2.images.begin(), e2.images.end());
  return FreeElem{std::move(base), std::move(images)};
}

std::vector<OrbitShape> orbits_free(const SetDesc& X) {
  return orbits(SetDesc::free(X));
}

OneDimReport one_dim_isos(const SetDesc& X, std::size_t samples,
                          std::uint64_t seed) {
  std::vector<OrbitShape> base_orbits = orbits(X);
  for (const OrbitShape& o : base_orbits) {
    if (o.support_size() > 1) throw DimensionError(o.key());
  }

  OneDimReport report;
  auto fail = [&](std::string what) {
    report.passed = false;
    report.detail = std::move(what);
  };

  // Unit is a bijection at the orbit level: each base orbit has exactly
  // one image partition when its support has at most one atom.
  if (orbits_free(X).size() != base_orbits.size()) {
    fail("unit is not an orbit-level bijection on " + X.to_text());
    return report;
  }

  Rng rng(seed);
  for (std::size_t i = 0; i < samples && report.passed; ++i) {
    ++report.samples_run;
    Value x = sample_value(X, rng);
    Value x2 = sample_value(X, rng);

    // Injectivity of the unit.
    if (!(x == x2) && unit(x, X) == unit(x2, X)) {
      fail("unit collides on " + to_text(x) + " and " + to_text(x2));
      break;
    }

    // Surjectivity of the unit: invert [m, x] explicitly.
    FreeElem e = sample_free_elem(X, rng);
    Value preimage = e.base.representative();
    if (e.base.support_size() == 1) {
      preimage = rename_atoms(
          preimage, Subst::from_pairs({{Atom{0}, e.images[0]}}));
    }
    if (!(unit(preimage, X) == e)) {
      fail("no unit preimage found for " + to_string(e));
      break;
    }

    if (!X.has_sb_action()) continue;

    // Counit surjectivity and injectivity.
    if (!(counit(unit(x, X), X) == x)) {
      fail("counit(unit(x)) != x at x = " + to_text(x));
      break;
    }
    FreeElem e2 = sample_free_elem(X, rng);
    if (!(e == e2) && counit(e, X) == counit(e2, X)) {
      fail("counit collides on " + to_string(e) + " and " + to_string(e2));
      break;
    }

    // Every substitution image of a one-dimensional element is already a
    // permutation image: m.y = (a b).y for b = m(a).
    Subst m = sample_subst(rng);
    AtomSet supp = support(x);
    Perm g;
    if (!supp.empty()) {
      Atom a = *supp.begin();
      g = Perm::transposition(a, m(a));
    }
    if (!(act(m, x, X) == act(g, x, X))) {
      fail("m.y escaped the permutation orbit at y = " + to_text(x) +
           ", m = " + to_string(m));
      break;
    }
  }
  return report;
}

FreeElem sample_free_elem(const SetDesc& X, Rng& rng) {
  Subst m = sample_subst(rng);
  Value x = sample_value(X, rng);
  return free_elem(m, x, X);
}

}  // namespace nomsets
