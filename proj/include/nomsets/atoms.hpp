#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nomsets {

/// A name from the countable atom universe. Atoms carry no structure
/// besides equality; ids double as the deterministic freshness order.
struct Atom {
  std::uint32_t id = 0;

  friend constexpr auto operator<=>(Atom, Atom) = default;
};

/// Finite set of atoms, kept sorted and duplicate-free.
class AtomSet {
public:
  AtomSet() = default;
  AtomSet(std::initializer_list<Atom> atoms);
  explicit AtomSet(std::vector<Atom> atoms);

  bool contains(Atom a) const;
  void insert(Atom a);
  void unite(const AtomSet& other);
  bool intersects(const AtomSet& other) const;
  bool disjoint_from(const AtomSet& other) const { return !intersects(other); }

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<Atom>& elems() const { return elems_; }

  friend bool operator==(const AtomSet&, const AtomSet&) = default;

private:
  std::vector<Atom> elems_;
};

/// A finite substitution: maps atoms to atoms, identity outside a finite
/// domain. Normalized so that no fixpoint a -> a is ever stored; two
/// substitutions are extensionally equal iff their entries compare equal.
class Subst {
public:
  Subst() = default;

  static Subst from_pairs(std::vector<std::pair<Atom, Atom>> pairs);
  static Subst from_pairs(std::initializer_list<std::pair<Atom, Atom>> pairs);

  Atom operator()(Atom a) const;

  bool is_identity() const { return entries_.empty(); }

  /// True iff the substitution is a bijection, i.e. lies in the submonoid
  /// of permutations. For finite substitutions this is equivalent to the
  /// moved set being mapped onto itself.
  bool is_permutation() const;

  /// Atoms a with m(a) != a, ascending.
  AtomSet moved() const;

  /// Entries sorted by source atom, fixpoints dropped.
  const std::vector<std::pair<Atom, Atom>>& entries() const { return entries_; }

  friend bool operator==(const Subst&, const Subst&) = default;

private:
  std::vector<std::pair<Atom, Atom>> entries_;
};

/// result(a) = outer(inner(a)) for every atom.
Subst compose(const Subst& outer, const Subst& inner);

/// A finite permutation of atoms: a Subst whose bijection invariant is
/// checked at construction. Perm is a submonoid of Subst.
class Perm {
public:
  Perm() = default;  // identity

  /// Throws std::invalid_argument if s is not bijective.
  explicit Perm(Subst s);

  /// Exchanges a and b, identity elsewhere; transposition(a, a) == id.
  static Perm transposition(Atom a, Atom b);

  Atom operator()(Atom a) const { return sub_(a); }
  const Subst& as_subst() const { return sub_; }
  bool is_identity() const { return sub_.is_identity(); }
  AtomSet moved() const { return sub_.moved(); }

  Perm inverse() const;

  friend Perm compose(const Perm& outer, const Perm& inner);
  friend bool operator==(const Perm&, const Perm&) = default;

private:
  Subst sub_;
};

/// Extends a finite partial injection to a permutation agreeing with it on
/// its domain. Leftover image atoms are matched back to leftover domain
/// atoms in ascending order, so the completion is deterministic.
/// Throws std::invalid_argument if the input is not injective.
Perm extend_injection(const std::vector<std::pair<Atom, Atom>>& partial);

/// Partition of c where two atoms share a block iff m maps them to the
/// same atom. Blocks and their contents come out ascending.
std::vector<AtomSet> kernel_partition(const Subst& m, const AtomSet& c);

/// The `count` smallest atoms not in `avoid`, ascending.
std::vector<Atom> fresh_atoms(const AtomSet& avoid, std::size_t count);

std::string to_string(Atom a);
std::string to_string(const Subst& m);

}  // namespace nomsets

template <>
struct std::hash<nomsets::Atom> {
  std::size_t operator()(nomsets::Atom a) const noexcept {
    return std::hash<std::uint32_t>{}(a.id);
  }
};
