#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nomsets/set_desc.hpp"
#include "nomsets/value.hpp"

namespace nomsets {

/// Canonical identifier of an orbit under the permutation action: the
/// unique member whose atoms are 0..k-1 in first-occurrence order. The
/// equality pattern of the atom occurrences is exactly the atom sequence
/// of this representative, and its tree with atoms erased is the skeleton,
/// so one canonical value carries the whole (skeleton, pattern) pair.
class OrbitShape {
public:
  /// Wraps a value that is already canonical; orbit_shape() is the checked
  /// way in.
  static OrbitShape from_canonical(Value rep);

  const Value& representative() const { return rep_; }

  /// Number of distinct atoms, which equals the least-support size of
  /// every member of the orbit.
  std::size_t support_size() const { return support_size_; }

  /// Block index of each atom occurrence, depth-first; blocks are numbered
  /// by first occurrence, so the first entry (if any) is 0.
  std::vector<unsigned> pattern() const;

  /// Text of the canonical representative; a perfect orbit key within one
  /// set descriptor.
  std::string key() const { return to_text(rep_); }

  friend bool operator==(const OrbitShape& a, const OrbitShape& b) {
    return a.rep_ == b.rep_;
  }

private:
  explicit OrbitShape(Value rep, std::size_t k)
      : rep_(std::move(rep)), support_size_(k) {}
  Value rep_;
  std::size_t support_size_;
};

/// Renumbers the atoms of v to 0..k-1 in first-occurrence order.
/// Membership in X is checked; two members of X get equal shapes iff some
/// permutation maps one to the other.
OrbitShape orbit_shape(const Value& v, const SetDesc& X);

/// Complete, duplicate-free, deterministically ordered enumeration of the
/// orbits of X. Product orbits are glued from component orbits by partial
/// injections between their support blocks; separated constructors admit
/// only the empty gluing; Free(X) pairs each base orbit with every set
/// partition of its support positions.
std::vector<OrbitShape> orbits(const SetDesc& X);

/// The canonical member of the orbit (atoms 0..k-1, first-occurrence
/// order); orbit_shape(representative(s), X) == s.
Value representative(const OrbitShape& s);

struct DimensionInfo {
  std::size_t dimension = 0;
  std::size_t zero_support_orbits = 0;
  std::size_t one_support_orbits = 0;
};

/// Maximum support size over all orbits. When the dimension is <= 1 the
/// set splits as  Y + I x A  with |Y| = zero_support_orbits and
/// |I| = one_support_orbits.
DimensionInfo dimension(const SetDesc& X);

}  // namespace nomsets
