#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nomsets/orbit.hpp"
#include "nomsets/rng.hpp"
#include "nomsets/set_desc.hpp"

namespace nomsets {

/// Normal form of an element [m, x] of the free renaming set over a
/// permutation set X: the orbit of x together with the m-images of the
/// canonical support atoms of the orbit representative. Two normal forms
/// are equal iff the underlying pairs are related by the defining
/// equivalence (validated against sim_oracle, the direct decision
/// procedure).
struct FreeElem {
  OrbitShape base;
  std::vector<Atom> images;

  friend bool operator==(const FreeElem&, const FreeElem&) = default;

  /// The substitution sending the representative's atom i to images[i].
  Subst image_subst() const;

  /// Value encoding used by the Free(X) descriptor: the base orbit key as
  /// a label plus the image tuple, so the generic pointwise action and
  /// orbit machinery apply unchanged.
  Value to_value() const;

  /// Decodes; base_desc is X, not Free(X). Throws on malformed input.
  static FreeElem from_value(const Value& v, const SetDesc& base_desc);
};

std::string to_string(const FreeElem& e);

/// Normalizes the pair (m, x) with x a member of X.
FreeElem free_elem(const Subst& m, const Value& x, const SetDesc& X);

/// Decides the defining equivalence of pairs directly: searches for a
/// support alignment g with g.x1 == x2 and m1 agreeing with m2 after g on
/// the support of x1. Independent of the normal form; used to validate it.
bool sim_oracle(const Subst& m1, const Value& x1, const Subst& m2,
                const Value& x2, const SetDesc& X);

/// The renaming action  n . [m, x] = [nm, x]: maps each image atom
/// through n.
FreeElem act_free(const Subst& n, const FreeElem& e);

/// unit(x) = [id, x].
FreeElem unit(const Value& x, const SetDesc& X);

/// counit([m, x]) = m . x for Y carrying the substitution action; e must
/// be built over U(Y), i.e. its base must be an orbit of Y.
Value counit(const FreeElem& e, const SetDesc& Y);

using FreeMap = std::function<Value(const FreeElem&)>;
using ValueMap = std::function<Value(const Value&)>;

/// Transposes an equivariant f : X -> U(Y) to sharp(f) : Free(X) -> Y,
/// sharp(f)([m, x]) = m . f(x).
FreeMap sharp(ValueMap f, SetDesc Y);

/// Transposes h : Free(X) -> Y back to flat(h) : X -> U(Y),
/// flat(h)(x) = h([id, x]).
ValueMap flat(FreeMap h, SetDesc X);

/// Functorial action: [m, x] -> [m, f(x)] for equivariant f with
/// codomain Y.
FreeElem map_free(const ValueMap& f, const FreeElem& e, const SetDesc& Y);

/// Half of the monoidal isomorphism: splits an element over a separated
/// product into the pair of component elements,
/// p([m, (x, y)]) = ([m, x], [m, y]).
std::pair<FreeElem, FreeElem> monoidal_split(const FreeElem& e,
                                             const SetDesc& X,
                                             const SetDesc& Y);

/// Its inverse: renames the second base representative fresh for the
/// first, pairs them, and concatenates the image tuples.
FreeElem monoidal_pair(const FreeElem& e1, const FreeElem& e2,
                       const SetDesc& X, const SetDesc& Y);

/// Orbits of the free set over X: one per base orbit and set partition of
/// its support positions. Same enumeration as orbits(SetDesc::free(X)).
std::vector<OrbitShape> orbits_free(const SetDesc& X);

struct OneDimReport {
  bool passed = true;
  std::size_t samples_run = 0;
  std::string detail;
};

class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(std::string witness_orbit)
      : std::invalid_argument("dimension exceeds 1, witness orbit " +
                              witness_orbit),
        witness_(std::move(witness_orbit)) {}
  const std::string& witness_orbit() const { return witness_; }

private:
  std::string witness_;
};

/// For dim(X) <= 1, verifies on all orbits plus samples that the unit is
/// bijective and, when X also carries the substitution action, that the
/// counit is bijective and every m . y is matched by some permutation
/// image g . y. Throws DimensionError with a witness orbit otherwise.
OneDimReport one_dim_isos(const SetDesc& X, std::size_t samples,
                          std::uint64_t seed);

/// Random element as a normalized random pair (m, x).
FreeElem sample_free_elem(const SetDesc& X, Rng& rng);

}  // namespace nomsets
