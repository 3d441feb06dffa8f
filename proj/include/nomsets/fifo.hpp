#pragma once

#include <cstddef>

#include "nomsets/automata.hpp"

namespace nomsets {

inline const std::string kBottom = "⊥";  // ⊥

/// Moore automaton of a bounded FIFO queue of the given capacity. States
/// are queue contents (words over the atoms, repeats allowed) plus a sink;
/// letters push a value or pop the front; the output is the front of the
/// queue, or the null label when the queue is empty or the run has sunk.
MooreAutomaton fifo_automaton(std::size_t capacity);

}  // namespace nomsets
