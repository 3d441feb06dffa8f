#pragma once

#include <utility>

#include "nomsets/atoms.hpp"
#include "nomsets/value.hpp"

namespace nomsets {

/// The renaming set A + 1 in which a non-injective substitution collapses
/// every atom to the star element. A lawful monoid action, yet no atom
/// element has a finite substitution support - while forgetting down to
/// permutations gives a perfectly nominal set. It sits outside the
/// descriptor grammar precisely because its action is not pointwise.
struct NuclearSet {
  static Value star() { return Value::label("∗"); }  // ∗
  static Value of_atom(Atom a) { return Value::atom(a); }
  static bool is_member(const Value& v);

  /// m . a = m(a) for bijective m, star otherwise; star is fixed.
  static Value act(const Subst& m, const Value& v);
};

/// Substitutions m1 (bijective) and m2 (non-injective) agreeing on c but
/// acting differently on the atom a in NuclearSet: witnesses that c is not
/// a substitution support of a.
std::pair<Subst, Subst> nuclear_witness(Atom a, const AtomSet& c);

}  // namespace nomsets
