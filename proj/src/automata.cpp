#include "nomsets/automata.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "nomsets/free.hpp"
#include "nomsets/sampling.hpp"

namespace nomsets {

void validate_automaton(const MooreAutomaton& a) {
  if (!contains(a.states, a.initial))
    throw std::invalid_argument("initial state is not a member of " +
                                a.states.to_text());
  if (!support(a.initial).empty())
    throw std::invalid_argument("initial state must have empty support, got " +
                                to_text(a.initial));
}

CheckReport check_equivariance(const MooreAutomaton& a, std::size_t samples,
                               std::uint64_t seed) {
  SetDesc domain = SetDesc::product(a.states, a.alphabet);
  ValueMap step = [&a](const Value& pair) {
    return a.delta(pair.items()[0], pair.items()[1]);
  };
  CheckReport r = is_equivariant(step, domain, a.states, samples, seed);
  if (!r.passed) {
    r.counterexample = "delta: " + r.counterexample;
    return r;
  }
  CheckReport ro = is_equivariant(a.out, a.states, a.output, samples, seed);
  if (!ro.passed) ro.counterexample = "out: " + ro.counterexample;
  ro.samples_run += r.samples_run;
  return ro;
}

namespace {

void check_letter(const MooreAutomaton& a, const Value& letter,
                  std::size_t position) {
  if (!contains(a.alphabet, letter))
    throw std::invalid_argument("letter " + std::to_string(position) + " (" +
                                to_text(letter) + ") is not in alphabet " +
                                a.alphabet.to_text());
}

}  // namespace

Value delta_star(const MooreAutomaton& a, Value state, const Word& w) {
  std::size_t pos = 1;
  for (const Value& letter : w) {
    check_letter(a, letter, pos++);
    state = a.delta(state, letter);
  }
  return state;
}

Value run_from(const MooreAutomaton& a, Value state, const Word& w) {
  return a.out(delta_star(a, std::move(state), w));
}

Value run(const MooreAutomaton& a, const Word& w) {
  if (a.kind != AutomatonKind::Full)
    throw std::invalid_argument("run needs a full automaton");
  return run_from(a, a.initial, w);
}

Value run_separated(const MooreAutomaton& a, const Word& w) {
  if (a.kind != AutomatonKind::Separated)
    throw std::invalid_argument("run_separated needs a separated automaton");
  Value state = a.initial;
  AtomSet consumed;  // union of letter supports seen so far
  std::size_t pos = 1;
  for (const Value& letter : w) {
    check_letter(a, letter, pos);
    AtomSet ls = support(letter);
    if (ls.intersects(consumed) || ls.intersects(support(state)))
      throw SeparationError(pos);
    consumed.unite(ls);
    state = a.delta(state, letter);
    ++pos;
  }
  return a.out(state);
}

MooreAutomaton restricted(const MooreAutomaton& a) {
  if (a.kind != AutomatonKind::Full)
    throw std::invalid_argument("restriction applies to full automata");
  MooreAutomaton b = a;
  b.kind = AutomatonKind::Separated;
  return b;
}

namespace {

std::vector<OrbitShape> reach(const MooreAutomaton& a, bool reversed) {
  validate_automaton(a);
  bool separated = a.kind == AutomatonKind::Separated;
  std::vector<OrbitShape> letter_orbits = orbits(a.alphabet);
  if (reversed) std::reverse(letter_orbits.begin(), letter_orbits.end());

  std::vector<OrbitShape> found;
  std::set<std::string> seen;
  std::deque<OrbitShape> frontier;
  auto visit = [&](OrbitShape shape) {
    if (seen.insert(shape.key()).second) {
      found.push_back(shape);
      frontier.push_back(std::move(shape));
    }
  };
  visit(orbit_shape(a.initial, a.states));

  while (!frontier.empty()) {
    OrbitShape current = std::move(frontier.front());
    frontier.pop_front();
    const Value state = current.representative();
    std::size_t state_atoms = current.support_size();  // atoms 0..k-1

    for (const OrbitShape& lo : letter_orbits) {
      std::size_t blocks = lo.support_size();
      // Assign letter blocks to state atoms or fresh atoms, injectively;
      // fresh atoms are handed out past the state support in block order.
      std::vector<std::pair<Atom, Atom>> assignment;
      std::vector<bool> taken(state_atoms, false);
      std::size_t fresh_used = 0;
      std::function<void(std::size_t)> instantiate = [&](std::size_t block) {
        if (block == blocks) {
          Value letter =
              rename_atoms(lo.representative(), Subst::from_pairs(assignment));
          visit(orbit_shape(a.delta(state, letter), a.states));
          return;
        }
        Atom src{static_cast<std::uint32_t>(block)};
        if (!separated) {
          for (std::size_t t = 0; t < state_atoms; ++t) {
            if (taken[t]) continue;
            taken[t] = true;
            assignment.emplace_back(src, Atom{static_cast<std::uint32_t>(t)});
            instantiate(block + 1);
            assignment.pop_back();
            taken[t] = false;
          }
        }
        assignment.emplace_back(
            src, Atom{static_cast<std::uint32_t>(state_atoms + fresh_used)});
        ++fresh_used;
        instantiate(block + 1);
        --fresh_used;
        assignment.pop_back();
      };
      instantiate(0);
    }
  }
  return found;
}

}  // namespace

std::vector<OrbitShape> reachable_orbits(const MooreAutomaton& a) {
  return reach(a, /*reversed=*/false);
}

std::vector<OrbitShape> reachable_orbits_reversed(const MooreAutomaton& a) {
  return reach(a, /*reversed=*/true);
}

Value extend_language(const MooreAutomaton& a, const Word& w,
                      std::uint32_t fresh_shift) {
  if (a.kind != AutomatonKind::Separated)
    throw std::invalid_argument("extend_language needs a separated automaton");
  if (!a.alphabet.has_sb_action() || !a.output.has_sb_action())
    throw std::invalid_argument(
        "extend_language needs substitution actions on alphabet and output");
  DimensionInfo dim = dimension(a.alphabet);
  if (dim.dimension > 1) {
    for (const OrbitShape& o : orbits(a.alphabet)) {
      if (o.support_size() > 1) throw DimensionError(o.key());
    }
  }

  AtomSet avoid;
  std::size_t carriers = 0;
  for (const Value& letter : w) {
    avoid.unite(support(letter));
    if (!support(letter).empty()) ++carriers;
  }
  std::vector<Atom> pool = fresh_atoms(avoid, carriers + fresh_shift);
  pool.erase(pool.begin(), pool.begin() + fresh_shift);

  // Freshen each atom-carrying letter (one atom each, by the dimension
  // bound) and remember where the fresh atom must go back to.
  Word freshened;
  std::vector<std::pair<Atom, Atom>> back;
  std::size_t next = 0;
  for (const Value& letter : w) {
    AtomSet ls = support(letter);
    if (ls.empty()) {
      freshened.push_back(letter);
      continue;
    }
    Atom original = *ls.begin();
    Atom b = pool[next++];
    freshened.push_back(
        rename_atoms(letter, Subst::from_pairs({{original, b}})));
    back.emplace_back(b, original);
  }

  Value separated_value = run_separated(a, freshened);
  return rename_atoms(separated_value, Subst::from_pairs(std::move(back)));
}

CheckReport check_sb_equivariance(const MooreAutomaton& a,
                                  std::size_t samples, std::uint64_t seed,
                                  std::size_t max_len) {
  if (!a.alphabet.has_sb_action() || !a.output.has_sb_action())
    throw std::invalid_argument(
        "sb-equivariance needs substitution actions on alphabet and output");
  CheckReport report;
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    ++report.samples_run;
    Word w = sample_word(a.alphabet, max_len, /*separated=*/false, rng);
    Subst m = sample_subst(rng);
    Word mw;
    for (const Value& letter : w) mw.push_back(act(m, letter, a.alphabet));
    Value lhs = run(a, mw);
    Value rhs = act(m, run(a, w), a.output);
    if (!(lhs == rhs)) {
      report.passed = false;
      report.counterexample = "w = " + to_text(w) + ", m = " + to_string(m) +
                              ": L(m.w) = " + to_text(lhs) +
                              " but m.L(w) = " + to_text(rhs);
      return report;
    }
  }
  return report;
}

Word sample_word(const SetDesc& alphabet, std::size_t max_len, bool separated,
                 Rng& rng) {
  std::size_t len = rng.below(max_len + 1);
  Word w;
  AtomSet used;
  for (std::size_t i = 0; i < len; ++i) {
    Value letter = sample_value(alphabet, rng);
    if (separated) {
      letter = separate_value(letter, used);
      used.unite(support(letter));
    }
    w.push_back(std::move(letter));
  }
  return w;
}

std::string to_text(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ";";
    out += to_text(w[i]);
  }
  return out;
}

}  // namespace nomsets
