#include "nomsets/nuclear.hpp"

#include <stdexcept>

namespace nomsets {

bool NuclearSet::is_member(const Value& v) {
  return v.kind() == ValueKind::Atom || v == star();
}

Value NuclearSet::act(const Subst& m, const Value& v) {
  if (!is_member(v))
    throw std::invalid_argument("not a nuclear-set member: " + to_text(v));
  if (v == star()) return star();
  if (m.is_permutation()) return Value::atom(m(v.atom_id()));
  return star();
}

std::pair<Subst, Subst> nuclear_witness(Atom a, const AtomSet& c) {
  AtomSet avoid = c;
  avoid.insert(a);
  std::vector<Atom> b = fresh_atoms(avoid, 2);
  // Identity versus a collapse far away from both c and a: they agree on
  // c, yet the collapse sends a to star.
  return {Subst{}, Subst::from_pairs({{b[0], b[1]}})};
}

}  // namespace nomsets
