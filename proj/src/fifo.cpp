#include "nomsets/fifo.hpp"

namespace nomsets {

MooreAutomaton fifo_automaton(std::size_t capacity) {
  MooreAutomaton a;
  a.states = SetDesc::coproduct(
      SetDesc::words_up_to(SetDesc::atoms(), capacity),
      SetDesc::discrete({kBottom}));
  a.alphabet = SetDesc::coproduct(
      SetDesc::tagged("Put", SetDesc::atoms()), SetDesc::discrete({"Pop"}));
  a.output =
      SetDesc::coproduct(SetDesc::atoms(), SetDesc::discrete({kBottom}));
  a.initial = Value::tuple({});
  Value sink = Value::label(kBottom);

  a.delta = [capacity, sink](const Value& state, const Value& letter) {
    if (state == sink) return sink;
    const std::vector<Value>& queue = state.items();
    if (letter.kind() == ValueKind::Tagged) {  // Put(b)
      if (queue.size() >= capacity) return sink;
      std::vector<Value> next = queue;
      next.push_back(letter.item());
      return Value::tuple(std::move(next));
    }
    // Pop
    if (queue.empty()) return sink;
    return Value::tuple(std::vector<Value>(queue.begin() + 1, queue.end()));
  };

  a.out = [sink](const Value& state) {
    if (state == sink || state.items().empty()) return sink;
    return state.items().front();
  };

  return a;
}

}  // namespace nomsets
