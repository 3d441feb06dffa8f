#include "nomsets/value.hpp"

#include <utility>

namespace nomsets {

Value Value::atom(Atom a) {
  Value v;
  v.kind_ = ValueKind::Atom;
  v.atom_ = a;
  return v;
}

Value Value::label(std::string name) {
  Value v;
  v.kind_ = ValueKind::Label;
  v.name_ = std::move(name);
  return v;
}

Value Value::tuple(std::vector<Value> items) {
  Value v;
  v.kind_ = ValueKind::Tuple;
  v.items_ = std::move(items);
  return v;
}

Value Value::tagged(std::string name, Value item) {
  Value v;
  v.kind_ = ValueKind::Tagged;
  v.name_ = std::move(name);
  v.items_.push_back(std::move(item));
  return v;
}

namespace {

void collect_atoms(const Value& v, std::vector<Atom>& out) {
  switch (v.kind()) {
    case ValueKind::Atom:
      out.push_back(v.atom_id());
      break;
    case ValueKind::Label:
      break;
    case ValueKind::Tuple:
    case ValueKind::Tagged:
      for (const Value& child : v.items()) collect_atoms(child, out);
      break;
  }
}

bool is_bare_label(const std::string& s) {
  if (s.empty()) return false;
  if (s == "⊥" || s == "∗") return true;  // ⊥ and ∗
  if (s[0] >= '0' && s[0] <= '9') return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::string quote_label(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  return out + "'";
}

}  // namespace

std::vector<Atom> atom_occurrences(const Value& v) {
  std::vector<Atom> out;
  collect_atoms(v, out);
  return out;
}

AtomSet support(const Value& v) { return AtomSet(atom_occurrences(v)); }

Value rename_atoms(const Value& v, const Subst& m) {
  switch (v.kind()) {
    case ValueKind::Atom:
      return Value::atom(m(v.atom_id()));
    case ValueKind::Label:
      return v;
    case ValueKind::Tuple: {
      std::vector<Value> items;
      items.reserve(v.items().size());
      for (const Value& child : v.items())
        items.push_back(rename_atoms(child, m));
      return Value::tuple(std::move(items));
    }
    case ValueKind::Tagged:
      return Value::tagged(v.name(), rename_atoms(v.item(), m));
  }
  return v;  // unreachable
}

std::string to_text(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Atom:
      return to_string(v.atom_id());
    case ValueKind::Label:
      return is_bare_label(v.name()) ? v.name() : quote_label(v.name());
    case ValueKind::Tuple: {
      std::string out = "(";
      bool first = true;
      for (const Value& child : v.items()) {
        if (!first) out += ",";
        first = false;
        out += to_text(child);
      }
      return out + ")";
    }
    case ValueKind::Tagged: {
      std::string head =
          is_bare_label(v.name()) ? v.name() : quote_label(v.name());
      return head + "(" + to_text(v.item()) + ")";
    }
  }
  return {};
}

}  // namespace nomsets
