#include "nomsets/parse.hpp"

#include <cctype>

namespace nomsets {

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view input) : input_(input) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= input_.size(); }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(input_[pos_])))
      ++pos_;
  }

  char peek() const { return done() ? '\0' : input_[pos_]; }

  bool try_consume(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    skip_ws();
    if (!try_consume(c))
      throw ParseError(pos_, std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(pos_, what);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (!done()) {
      unsigned char c = static_cast<unsigned char>(input_[pos_]);
      if (std::isalnum(c) || c == '_' || c >= 0x80) {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected a name");
    return std::string(input_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::size_t value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(input_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  void expect_end() {
    skip_ws();
    if (!done()) fail("trailing input");
  }

private:
  std::string_view input_;
  std::size_t pos_ = 0;
};

SetDesc parse_expr(Cursor& cur) {
  cur.skip_ws();
  if (cur.try_consume('1')) return SetDesc::unit();
  std::size_t at = cur.pos();
  std::string head = cur.ident();
  if (head == "A") return SetDesc::atoms();
  if (head == "D") {
    cur.expect('{');
    std::vector<std::string> labels;
    if (!cur.try_consume('}')) {
      labels.push_back(cur.ident());
      while (cur.try_consume(',')) labels.push_back(cur.ident());
      cur.expect('}');
    }
    if (labels.empty()) cur.fail("discrete set needs at least one label");
    return SetDesc::discrete(std::move(labels));
  }
  auto binary = [&](auto make) {
    cur.expect('(');
    SetDesc left = parse_expr(cur);
    cur.expect(',');
    SetDesc right = parse_expr(cur);
    cur.expect(')');
    return make(std::move(left), std::move(right));
  };
  auto bounded = [&](auto make) {
    cur.expect('(');
    SetDesc child = parse_expr(cur);
    cur.expect(',');
    std::size_t n = cur.number();
    cur.expect(')');
    return make(std::move(child), n);
  };
  try {
    if (head == "prod") return binary(SetDesc::product);
    if (head == "sep") return binary(SetDesc::sep_product);
    if (head == "sum") return binary(SetDesc::coproduct);
    if (head == "wordsle") return bounded(SetDesc::words_up_to);
    if (head == "sepwordsle") return bounded(SetDesc::sep_words_up_to);
    if (head == "free") {
      cur.expect('(');
      SetDesc child = parse_expr(cur);
      cur.expect(')');
      return SetDesc::free(std::move(child));
    }
    if (head == "tag") {
      cur.expect('(');
      std::string name = cur.ident();
      if (name == kFreeTag) cur.fail("tag name is reserved");
      cur.expect(',');
      SetDesc child = parse_expr(cur);
      cur.expect(')');
      return SetDesc::tagged(std::move(name), std::move(child));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(at, e.what());
  }
  throw ParseError(at, "unknown constructor '" + head + "'");
}

}  // namespace

SetDesc parse_set_expr(std::string_view input) {
  Cursor cur(input);
  SetDesc out = parse_expr(cur);
  cur.expect_end();
  return out;
}

Word parse_word(std::string_view input, const SetDesc& alphabet) {
  Word w;
  Cursor cur(input);
  cur.skip_ws();
  if (cur.done()) return w;
  for (;;) {
    cur.skip_ws();
    std::size_t at = cur.pos();
    Value letter = Value::tuple({});
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      letter = Value::atom(Atom{static_cast<std::uint32_t>(cur.number())});
    } else {
      std::string name = cur.ident();
      if (cur.try_consume('(')) {
        std::size_t id = cur.number();
        cur.expect(')');
        letter = Value::tagged(
            name, Value::atom(Atom{static_cast<std::uint32_t>(id)}));
      } else {
        letter = Value::label(name);
      }
    }
    if (!contains(alphabet, letter))
      throw ParseError(at, "letter " + to_text(letter) +
                               " is not in alphabet " + alphabet.to_text());
    w.push_back(std::move(letter));
    cur.skip_ws();
    if (cur.done()) break;
    cur.expect(';');
  }
  return w;
}

Subst parse_subst(std::string_view input) {
  Cursor cur(input);
  cur.expect('{');
  std::vector<std::pair<Atom, Atom>> pairs;
  if (!cur.try_consume('}')) {
    for (;;) {
      Atom from{static_cast<std::uint32_t>(cur.number())};
      cur.expect('-');
      cur.expect('>');
      Atom to{static_cast<std::uint32_t>(cur.number())};
      pairs.emplace_back(from, to);
      if (cur.try_consume('}')) break;
      cur.expect(',');
    }
  }
  cur.expect_end();
  try {
    return Subst::from_pairs(std::move(pairs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace nomsets
