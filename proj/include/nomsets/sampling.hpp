#pragma once

#include "nomsets/atoms.hpp"
#include "nomsets/rng.hpp"
#include "nomsets/set_desc.hpp"
#include "nomsets/value.hpp"

namespace nomsets {

/// Random member of X. Atoms are drawn from 0..atom_range-1, so collisions
/// between independently sampled parts are common on purpose; separated
/// constructors rename collisions away.
Value sample_value(const SetDesc& X, Rng& rng, std::uint32_t atom_range = 8);

/// Random substitution moving at most max_moved atoms of 0..atom_range-1.
Subst sample_subst(Rng& rng, std::uint32_t atom_range = 8,
                   std::size_t max_moved = 4);

/// Random permutation of a few atoms of 0..atom_range-1.
Perm sample_perm(Rng& rng, std::uint32_t atom_range = 8);

/// Random permutation whose moved atoms are drawn from pool plus
/// 0..atom_range-1; guarantees the sampled pool atoms can actually move.
Perm sample_perm_over(const AtomSet& pool, Rng& rng,
                      std::uint32_t atom_range = 8);

/// Renames the atoms of v clashing with `avoid` to fresh atoms outside
/// both; stays within v's orbit.
Value separate_value(const Value& v, const AtomSet& avoid);

}  // namespace nomsets
