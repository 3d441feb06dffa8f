#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "nomsets/value.hpp"

namespace nomsets {

enum class SetKind {
  Atoms,
  Unit,
  Discrete,
  Product,
  SepProduct,
  Coproduct,
  WordsUpTo,
  SepWordsUpTo,
  Free,
  Tagged,
};

/// Constructor tree describing an orbit-finite nominal set. Every orbit of
/// every constructible set has trivial stabilizer, which is what lets the
/// orbit machinery identify orbits with equality patterns.
///
/// Immutable value type; copies share the underlying node.
class SetDesc {
public:
  static SetDesc atoms();
  static SetDesc unit();
  static SetDesc discrete(std::vector<std::string> labels);
  static SetDesc product(SetDesc left, SetDesc right);
  static SetDesc sep_product(SetDesc left, SetDesc right);
  /// Throws std::invalid_argument when the components can share a value;
  /// wrap one side in tagged() to force disjointness.
  static SetDesc coproduct(SetDesc left, SetDesc right);
  static SetDesc words_up_to(SetDesc letters, std::size_t max_len);
  static SetDesc sep_words_up_to(SetDesc letters, std::size_t max_len);
  static SetDesc free(SetDesc base);
  static SetDesc tagged(std::string tag, SetDesc base);

  SetKind kind() const;
  const SetDesc& left() const;   // Product/SepProduct/Coproduct
  const SetDesc& right() const;
  const SetDesc& child() const;  // WordsUpTo/SepWordsUpTo/Free/Tagged
  const std::vector<std::string>& labels() const;  // Discrete, sorted
  std::size_t bound() const;                       // WordsUpTo/SepWordsUpTo
  const std::string& tag() const;                  // Tagged

  /// True when the set carries the full substitution action: Atoms, Unit,
  /// Discrete and Free always do; Product, Coproduct, WordsUpTo and Tagged
  /// inherit from their parts; separated constructors never do.
  bool has_sb_action() const;

  /// Expression syntax accepted back by parse_set_expr().
  std::string to_text() const;

  friend bool operator==(const SetDesc& a, const SetDesc& b) {
    return a.to_text() == b.to_text();
  }

  struct Node;  // defined in set_desc.cpp; descriptors are built through
                // the named constructors above
  explicit SetDesc(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

private:
  std::shared_ptr<const Node> node_;
};

/// Membership in the set described by X.
bool contains(const SetDesc& X, const Value& v);

/// Conservative: false guarantees no value lies in both sets. Used to
/// reject ambiguous coproducts.
bool may_overlap(const SetDesc& X, const SetDesc& Y);

/// The monoid action, pointwise on atoms. Throws std::invalid_argument if
/// m is not a permutation and X lacks the substitution action, and
/// std::invalid_argument on membership failure.
Value act(const Subst& m, const Value& v, const SetDesc& X);
Value act(const Perm& g, const Value& v, const SetDesc& X);

/// Tag name reserved for the value encoding of free-construction elements;
/// the expression parser refuses it for user tags.
inline const std::string kFreeTag = "[free]";

}  // namespace nomsets
