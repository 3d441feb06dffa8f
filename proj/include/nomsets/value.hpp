#pragma once

#include <string>
#include <vector>

#include "nomsets/atoms.hpp"

namespace nomsets {

enum class ValueKind { Atom, Label, Tuple, Tagged };

/// A concrete element of a nominal set: a finite tree whose leaves are
/// atoms or labels. The atom occurrences, read left-to-right depth-first,
/// fix the canonical support order used everywhere else.
class Value {
public:
  Value() : kind_(ValueKind::Tuple) {}  // empty tuple, the unit element

  static Value atom(Atom a);
  static Value label(std::string name);
  static Value tuple(std::vector<Value> items);
  static Value tagged(std::string name, Value item);

  ValueKind kind() const { return kind_; }
  Atom atom_id() const { return atom_; }
  const std::string& name() const { return name_; }
  const std::vector<Value>& items() const { return items_; }
  const Value& item() const { return items_.front(); }

  friend bool operator==(const Value&, const Value&) = default;

private:
  ValueKind kind_;
  Atom atom_{};               // Atom
  std::string name_;          // Label / Tagged
  std::vector<Value> items_;  // Tuple children / Tagged single child
};

/// Atom occurrences in depth-first order, with repeats.
std::vector<Atom> atom_occurrences(const Value& v);

/// The set of atoms occurring in v. For every set built from the
/// descriptor grammar this is the least support.
AtomSet support(const Value& v);

/// Replaces every atom leaf a by m(a). Unchecked - callers that need the
/// action's preconditions go through act() in set_desc.hpp.
Value rename_atoms(const Value& v, const Subst& m);

/// Canonical text form. Atoms print as decimals, labels bare when they
/// look like identifiers and single-quoted otherwise, tuples as (x,y),
/// tagged nodes as Name(x).
std::string to_text(const Value& v);

}  // namespace nomsets
