#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomsets/equivariance.hpp"
#include "nomsets/orbit.hpp"
#include "nomsets/rng.hpp"
#include "nomsets/set_desc.hpp"

namespace nomsets {

enum class AutomatonKind { Full, Separated };

/// Moore automaton over orbit-finite nominal sets. Transitions and outputs
/// are computable oracles on concrete values rather than tables, so one
/// definition covers a whole parameter family. The initial state must have
/// empty support; delta is expected to be equivariant (checked by
/// sampling, see validate_automaton).
struct MooreAutomaton {
  SetDesc states = SetDesc::unit();
  SetDesc alphabet = SetDesc::unit();
  SetDesc output = SetDesc::unit();
  Value initial;
  std::function<Value(const Value&, const Value&)> delta;
  std::function<Value(const Value&)> out;
  AutomatonKind kind = AutomatonKind::Full;
};

using Word = std::vector<Value>;

class SeparationError : public std::runtime_error {
public:
  explicit SeparationError(std::size_t position)
      : std::runtime_error("separation violation at position " +
                           std::to_string(position)),
        position_(position) {}
  /// 1-based offending letter index.
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Checks the structural invariants that do not need sampling: membership
/// of the initial state and emptiness of its support. Throws on failure.
void validate_automaton(const MooreAutomaton& a);

/// Equivariance of delta and out by sampling, via is_equivariant over the
/// product of states and alphabet.
CheckReport check_equivariance(const MooreAutomaton& a, std::size_t samples,
                               std::uint64_t seed);

/// Final state after consuming w from `state`.
Value delta_star(const MooreAutomaton& a, Value state, const Word& w);

/// Language semantics from an arbitrary state: output of the final state.
Value run_from(const MooreAutomaton& a, Value state, const Word& w);

/// Language of the automaton: run_from the initial state. Full kind only.
Value run(const MooreAutomaton& a, const Word& w);

/// Separated-language semantics: requires pairwise-separated letters, each
/// also separated from the current state when consumed. Violations raise
/// SeparationError with the 1-based letter position.
Value run_separated(const MooreAutomaton& a, const Word& w);

/// The induced separated automaton: same data, transitions consulted only
/// on separated state-letter pairs.
MooreAutomaton restricted(const MooreAutomaton& a);

/// Orbit-level reachability: breadth-first over state orbits. From each
/// reached representative, every alphabet orbit is instantiated with all
/// injective assignments of its support blocks to state-support atoms or
/// fresh atoms; separated automata admit only the all-fresh instantiation,
/// which is where the exponential-to-linear gap shows up.
std::vector<OrbitShape> reachable_orbits(const MooreAutomaton& a);

/// Same search with the letter enumeration reversed; reachable_orbits must
/// agree with it as a set.
std::vector<OrbitShape> reachable_orbits_reversed(const MooreAutomaton& a);

/// Extends the separated language of a separated automaton to all words:
/// freshens the atom-carrying letters, runs the separated semantics, and
/// maps the fresh atoms back. Requires substitution actions on alphabet
/// and output and dim(alphabet) <= 1 (DimensionError otherwise). The
/// result does not depend on the freshness choice; fresh_shift picks a
/// different batch of fresh atoms to exercise exactly that.
Value extend_language(const MooreAutomaton& a, const Word& w,
                      std::uint32_t fresh_shift = 0);

/// Samples words w and substitutions m and compares the language values
/// L(m.w) and m.L(w); the hypothesis under which the restricted automaton
/// still represents the full language.
CheckReport check_sb_equivariance(const MooreAutomaton& a,
                                  std::size_t samples, std::uint64_t seed,
                                  std::size_t max_len = 6);

/// Random word over the alphabet, length <= max_len; separated words when
/// `separated`.
Word sample_word(const SetDesc& alphabet, std::size_t max_len, bool separated,
                 Rng& rng);

std::string to_text(const Word& w);

}  // namespace nomsets
