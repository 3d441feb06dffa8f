#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "nomsets/set_desc.hpp"

namespace nomsets {

using ValueMap = std::function<Value(const Value&)>;

/// Which monoid the sampled maps come from.
enum class ActionMonoid { Perm, Sb };

/// Outcome of a randomized check; a failure is a report with the first
/// counterexample, not an error.
struct CheckReport {
  bool passed = true;
  std::size_t samples_run = 0;
  std::string counterexample;
};

/// Samples pairs (m, x) and tests m . f(x) == f(m . x). With the Perm
/// monoid only permutations are drawn; with Sb half the draws are
/// non-injective substitutions (both sets must then carry the substitution
/// action). Each sample also checks that the support of x still supports
/// f(x), i.e. that supp(f(x)) is contained in supp(x).
CheckReport is_equivariant(const ValueMap& f, const SetDesc& X,
                           const SetDesc& Y, std::size_t samples,
                           std::uint64_t seed,
                           ActionMonoid monoid = ActionMonoid::Perm);

}  // namespace nomsets
