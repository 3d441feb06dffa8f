#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nomsets/automata.hpp"
#include "nomsets/set_desc.hpp"

namespace nomsets {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Set expressions: A | 1 | D{s1,s2} | prod(E,E) | sep(E,E) | sum(E,E) |
/// wordsle(E,n) | sepwordsle(E,n) | free(E) | tag(Name,E).
SetDesc parse_set_expr(std::string_view input);

/// Words: letters separated by ';'. A letter is a bare atom `7`, a bare
/// label `Pop`, or a tagged atom `Put(7)`; each letter must be a member of
/// the alphabet.
Word parse_word(std::string_view input, const SetDesc& alphabet);

/// Substitution literals: {1->2, 3->2}; {} is the identity.
Subst parse_subst(std::string_view input);

}  // namespace nomsets
