#include "nomsets/atoms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nomsets {

AtomSet::AtomSet(std::initializer_list<Atom> atoms)
    : AtomSet(std::vector<Atom>(atoms)) {}

AtomSet::AtomSet(std::vector<Atom> atoms) : elems_(std::move(atoms)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool AtomSet::contains(Atom a) const {
  return std::binary_search(elems_.begin(), elems_.end(), a);
}

void AtomSet::insert(Atom a) {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), a);
  if (it == elems_.end() || *it != a) elems_.insert(it, a);
}

void AtomSet::unite(const AtomSet& other) {
  std::vector<Atom> merged;
  merged.reserve(elems_.size() + other.elems_.size());
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                 other.elems_.end(), std::back_inserter(merged));
  elems_ = std::move(merged);
}

bool AtomSet::intersects(const AtomSet& other) const {
  auto it = elems_.begin();
  auto jt = other.elems_.begin();
  while (it != elems_.end() && jt != other.elems_.end()) {
    if (*it == *jt) return true;
    if (*it < *jt)
      ++it;
    else
      ++jt;
  }
  return false;
}

Subst Subst::from_pairs(std::vector<std::pair<Atom, Atom>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].first == pairs[i - 1].first &&
        pairs[i].second != pairs[i - 1].second) {
      throw std::invalid_argument("substitution maps atom " +
                                  to_string(pairs[i].first) + " twice");
    }
  }
  Subst m;
  for (const auto& [a, b] : pairs) {
    if (a == b) continue;  // normalize: fixpoints are implicit
    if (!m.entries_.empty() && m.entries_.back().first == a) continue;
    m.entries_.emplace_back(a, b);
  }
  return m;
}

Subst Subst::from_pairs(std::initializer_list<std::pair<Atom, Atom>> pairs) {
  return from_pairs(std::vector<std::pair<Atom, Atom>>(pairs));
}

Atom Subst::operator()(Atom a) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), a,
      [](const std::pair<Atom, Atom>& e, Atom key) { return e.first < key; });
  if (it != entries_.end() && it->first == a) return it->second;
  return a;
}

bool Subst::is_permutation() const {
  // Injective on the moved set and image equal to it.
  std::set<Atom> image;
  for (const auto& [a, b] : entries_) image.insert(b);
  if (image.size() != entries_.size()) return false;
  for (const auto& [a, b] : entries_) {
    if (image.find(a) == image.end()) return false;
  }
  return true;
}

AtomSet Subst::moved() const {
  std::vector<Atom> atoms;
  atoms.reserve(entries_.size());
  for (const auto& [a, b] : entries_) atoms.push_back(a);
  return AtomSet(std::move(atoms));
}

Subst compose(const Subst& outer, const Subst& inner) {
  std::vector<std::pair<Atom, Atom>> pairs;
  for (const auto& [a, b] : inner.entries()) pairs.emplace_back(a, outer(b));
  for (const auto& [a, b] : outer.entries()) {
    if (inner(a) == a) pairs.emplace_back(a, b);
  }
  return Subst::from_pairs(std::move(pairs));
}

Perm::Perm(Subst s) : sub_(std::move(s)) {
  if (!sub_.is_permutation())
    throw std::invalid_argument("not a permutation: " + to_string(sub_));
}

Perm Perm::transposition(Atom a, Atom b) {
  if (a == b) return Perm{};
  return Perm(Subst::from_pairs({{a, b}, {b, a}}));
}

Perm Perm::inverse() const {
  std::vector<std::pair<Atom, Atom>> pairs;
  for (const auto& [a, b] : sub_.entries()) pairs.emplace_back(b, a);
  return Perm(Subst::from_pairs(std::move(pairs)));
}

Perm compose(const Perm& outer, const Perm& inner) {
  Perm g;
  g.sub_ = compose(outer.sub_, inner.sub_);
  return g;
}

Perm extend_injection(const std::vector<std::pair<Atom, Atom>>& partial) {
  std::map<Atom, Atom> fwd;
  std::set<Atom> image;
  for (const auto& [a, b] : partial) {
    auto [it, inserted] = fwd.emplace(a, b);
    if (!inserted && it->second != b)
      throw std::invalid_argument("partial map is not a function");
    image.insert(b);
  }
  if (image.size() != fwd.size())
    throw std::invalid_argument("partial map is not injective");

  // Atoms that are images but have no image yet must flow back to atoms
  // that are in the domain but not hit; pairing both ascending closes
  // every open chain.
  std::vector<Atom> pending, unhit;
  for (const auto& [a, b] : fwd) {
    if (image.find(a) == image.end()) unhit.push_back(a);
  }
  for (Atom b : image) {
    if (fwd.find(b) == fwd.end()) pending.push_back(b);
  }
  std::vector<std::pair<Atom, Atom>> pairs(fwd.begin(), fwd.end());
  for (std::size_t i = 0; i < pending.size(); ++i)
    pairs.emplace_back(pending[i], unhit[i]);
  return Perm(Subst::from_pairs(std::move(pairs)));
}

std::vector<AtomSet> kernel_partition(const Subst& m, const AtomSet& c) {
  std::map<Atom, std::vector<Atom>> by_image;
  for (Atom a : c) by_image[m(a)].push_back(a);
  std::vector<AtomSet> blocks;
  blocks.reserve(by_image.size());
  for (auto& [img, block] : by_image) blocks.emplace_back(std::move(block));
  std::sort(blocks.begin(), blocks.end(),
            [](const AtomSet& x, const AtomSet& y) {
              return x.elems().front() < y.elems().front();
            });
  return blocks;
}

std::vector<Atom> fresh_atoms(const AtomSet& avoid, std::size_t count) {
  std::vector<Atom> out;
  out.reserve(count);
  std::uint32_t next = 0;
  while (out.size() < count) {
    Atom a{next++};
    if (!avoid.contains(a)) out.push_back(a);
  }
  return out;
}

std::string to_string(Atom a) { return std::to_string(a.id); }

std::string to_string(const Subst& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, b] : m.entries()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(a) + "->" + to_string(b);
  }
  return out + "}";
}

}  // namespace nomsets
