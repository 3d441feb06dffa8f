#include "nomsets/set_desc.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "nomsets/orbit.hpp"

namespace nomsets {

struct SetDesc::Node {
  SetKind kind;
  std::vector<SetDesc> children;
  std::vector<std::string> labels;
  std::string tag;
  std::size_t bound = 0;
  bool sb_action = true;
  std::string text;
};

namespace {

std::string render(SetKind kind, const std::vector<SetDesc>& children,
                   const std::vector<std::string>& labels,
                   const std::string& tag, std::size_t bound) {
  switch (kind) {
    case SetKind::Atoms:
      return "A";
    case SetKind::Unit:
      return "1";
    case SetKind::Discrete: {
      std::string out = "D{";
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += labels[i];
      }
      return out + "}";
    }
    case SetKind::Product:
      return "prod(" + children[0].to_text() + "," + children[1].to_text() +
             ")";
    case SetKind::SepProduct:
      return "sep(" + children[0].to_text() + "," + children[1].to_text() +
             ")";
    case SetKind::Coproduct:
      return "sum(" + children[0].to_text() + "," + children[1].to_text() +
             ")";
    case SetKind::WordsUpTo:
      return "wordsle(" + children[0].to_text() + "," + std::to_string(bound) +
             ")";
    case SetKind::SepWordsUpTo:
      return "sepwordsle(" + children[0].to_text() + "," +
             std::to_string(bound) + ")";
    case SetKind::Free:
      return "free(" + children[0].to_text() + ")";
    case SetKind::Tagged:
      return "tag(" + tag + "," + children[0].to_text() + ")";
  }
  return {};
}

SetDesc make(SetKind kind, std::vector<SetDesc> children,
             std::vector<std::string> labels = {}, std::string tag = {},
             std::size_t bound = 0) {
  auto node = std::make_shared<SetDesc::Node>();
  node->kind = kind;
  node->children = std::move(children);
  node->labels = std::move(labels);
  node->tag = std::move(tag);
  node->bound = bound;
  switch (kind) {
    case SetKind::Atoms:
    case SetKind::Unit:
    case SetKind::Discrete:
    case SetKind::Free:
      node->sb_action = true;
      break;
    case SetKind::SepProduct:
    case SetKind::SepWordsUpTo:
      node->sb_action = false;
      break;
    default:
      node->sb_action = true;
      for (const SetDesc& c : node->children)
        node->sb_action = node->sb_action && c.has_sb_action();
      break;
  }
  node->text = render(kind, node->children, node->labels, node->tag, bound);
  return SetDesc(std::move(node));
}

}  // namespace

SetDesc SetDesc::atoms() { return make(SetKind::Atoms, {}); }
SetDesc SetDesc::unit() { return make(SetKind::Unit, {}); }

SetDesc SetDesc::discrete(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty())
    throw std::invalid_argument("discrete set needs at least one label");
  return make(SetKind::Discrete, {}, std::move(labels));
}

SetDesc SetDesc::product(SetDesc left, SetDesc right) {
  return make(SetKind::Product, {std::move(left), std::move(right)});
}

SetDesc SetDesc::sep_product(SetDesc left, SetDesc right) {
  return make(SetKind::SepProduct, {std::move(left), std::move(right)});
}

SetDesc SetDesc::coproduct(SetDesc left, SetDesc right) {
  if (may_overlap(left, right))
    throw std::invalid_argument(
        "coproduct components may share values: " + left.to_text() + " and " +
        right.to_text() + "; wrap one side in tag(...)");
  return make(SetKind::Coproduct, {std::move(left), std::move(right)});
}

SetDesc SetDesc::words_up_to(SetDesc letters, std::size_t max_len) {
  return make(SetKind::WordsUpTo, {std::move(letters)}, {}, {}, max_len);
}

SetDesc SetDesc::sep_words_up_to(SetDesc letters, std::size_t max_len) {
  return make(SetKind::SepWordsUpTo, {std::move(letters)}, {}, {}, max_len);
}

SetDesc SetDesc::free(SetDesc base) {
  return make(SetKind::Free, {std::move(base)});
}

SetDesc SetDesc::tagged(std::string tag, SetDesc base) {
  if (tag.empty()) throw std::invalid_argument("empty tag name");
  return make(SetKind::Tagged, {std::move(base)}, {}, std::move(tag));
}

SetKind SetDesc::kind() const { return node_->kind; }
const SetDesc& SetDesc::left() const { return node_->children[0]; }
const SetDesc& SetDesc::right() const { return node_->children[1]; }
const SetDesc& SetDesc::child() const { return node_->children[0]; }
const std::vector<std::string>& SetDesc::labels() const {
  return node_->labels;
}
std::size_t SetDesc::bound() const { return node_->bound; }
const std::string& SetDesc::tag() const { return node_->tag; }
bool SetDesc::has_sb_action() const { return node_->sb_action; }
std::string SetDesc::to_text() const { return node_->text; }

namespace {

bool pairwise_separated(const std::vector<Value>& items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    AtomSet si = support(items[i]);
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (si.intersects(support(items[j]))) return false;
    }
  }
  return true;
}

bool is_free_encoding(const Value& v) {
  if (v.kind() != ValueKind::Tagged || v.name() != kFreeTag) return false;
  const Value& body = v.item();
  if (body.kind() != ValueKind::Tuple || body.items().size() != 2) return false;
  if (body.items()[0].kind() != ValueKind::Label) return false;
  const Value& images = body.items()[1];
  if (images.kind() != ValueKind::Tuple) return false;
  for (const Value& img : images.items()) {
    if (img.kind() != ValueKind::Atom) return false;
  }
  return true;
}

}  // namespace

bool contains(const SetDesc& X, const Value& v) {
  switch (X.kind()) {
    case SetKind::Atoms:
      return v.kind() == ValueKind::Atom;
    case SetKind::Unit:
      return v.kind() == ValueKind::Tuple && v.items().empty();
    case SetKind::Discrete:
      return v.kind() == ValueKind::Label &&
             std::binary_search(X.labels().begin(), X.labels().end(),
                                v.name());
    case SetKind::Product:
      return v.kind() == ValueKind::Tuple && v.items().size() == 2 &&
             contains(X.left(), v.items()[0]) &&
             contains(X.right(), v.items()[1]);
    case SetKind::SepProduct:
      return v.kind() == ValueKind::Tuple && v.items().size() == 2 &&
             contains(X.left(), v.items()[0]) &&
             contains(X.right(), v.items()[1]) &&
             support(v.items()[0]).disjoint_from(support(v.items()[1]));
    case SetKind::Coproduct:
      return contains(X.left(), v) || contains(X.right(), v);
    case SetKind::WordsUpTo:
    case SetKind::SepWordsUpTo: {
      if (v.kind() != ValueKind::Tuple || v.items().size() > X.bound())
        return false;
      for (const Value& letter : v.items()) {
        if (!contains(X.child(), letter)) return false;
      }
      return X.kind() == SetKind::WordsUpTo || pairwise_separated(v.items());
    }
    case SetKind::Tagged:
      return v.kind() == ValueKind::Tagged && v.name() == X.tag() &&
             contains(X.child(), v.item());
    case SetKind::Free: {
      if (!is_free_encoding(v)) return false;
      const std::string& key = v.item().items()[0].name();
      std::size_t n_images = v.item().items()[1].items().size();
      for (const OrbitShape& o : orbits(X.child())) {
        if (o.key() == key) return o.support_size() == n_images;
      }
      return false;
    }
  }
  return false;
}

namespace {

bool free_orbit_keys_intersect(const SetDesc& X, const SetDesc& Y) {
  std::vector<std::string> keys;
  for (const OrbitShape& o : orbits(X)) keys.push_back(o.key());
  for (const OrbitShape& o : orbits(Y)) {
    if (std::find(keys.begin(), keys.end(), o.key()) != keys.end())
      return true;
  }
  return false;
}

// Can two tuple-shaped sets share a value of the same arity?
bool tuple_overlap(const SetDesc& X, const SetDesc& Y);

bool overlap(const SetDesc& X, const SetDesc& Y) {
  if (X.kind() == SetKind::Coproduct)
    return overlap(X.left(), Y) || overlap(X.right(), Y);
  if (Y.kind() == SetKind::Coproduct)
    return overlap(X, Y.left()) || overlap(X, Y.right());

  auto x = X.kind();
  auto y = Y.kind();
  bool x_tuple = x == SetKind::Unit || x == SetKind::Product ||
                 x == SetKind::SepProduct || x == SetKind::WordsUpTo ||
                 x == SetKind::SepWordsUpTo;
  bool y_tuple = y == SetKind::Unit || y == SetKind::Product ||
                 y == SetKind::SepProduct || y == SetKind::WordsUpTo ||
                 y == SetKind::SepWordsUpTo;
  if (x_tuple != y_tuple) return false;
  if (x_tuple) return tuple_overlap(X, Y);

  if (x == SetKind::Atoms || y == SetKind::Atoms) return x == y;
  if (x == SetKind::Discrete && y == SetKind::Discrete) {
    for (const std::string& s : X.labels()) {
      if (std::binary_search(Y.labels().begin(), Y.labels().end(), s))
        return true;
    }
    return false;
  }
  if (x == SetKind::Discrete || y == SetKind::Discrete) return false;

  // Both sides are Tagged or Free here.
  if (x == SetKind::Free && y == SetKind::Free)
    return free_orbit_keys_intersect(X.child(), Y.child());
  if (x == SetKind::Tagged && y == SetKind::Tagged) {
    if (X.tag() != Y.tag()) return false;
    return overlap(X.child(), Y.child());
  }
  // Tagged vs Free: disjoint unless someone tagged with the reserved name.
  const SetDesc& tagged_side = (x == SetKind::Tagged) ? X : Y;
  return tagged_side.tag() == kFreeTag;
}

bool tuple_overlap(const SetDesc& X, const SetDesc& Y) {
  auto x = X.kind();
  auto y = Y.kind();
  bool x_words = x == SetKind::WordsUpTo || x == SetKind::SepWordsUpTo;
  bool y_words = y == SetKind::WordsUpTo || y == SetKind::SepWordsUpTo;
  if (x == SetKind::Unit)
    return y == SetKind::Unit || y_words;  // empty tuple
  if (y == SetKind::Unit) return x_words;
  if (x_words && y_words) return true;  // both contain the empty word
  bool x_pair = x == SetKind::Product || x == SetKind::SepProduct;
  bool y_pair = y == SetKind::Product || y == SetKind::SepProduct;
  if (x_pair && y_pair)
    return overlap(X.left(), Y.left()) && overlap(X.right(), Y.right());
  if (x_pair && y_words)
    return Y.bound() >= 2 && overlap(X.left(), Y.child()) &&
           overlap(X.right(), Y.child());
  if (x_words && y_pair)
    return X.bound() >= 2 && overlap(X.child(), Y.left()) &&
           overlap(X.child(), Y.right());
  return true;
}

}  // namespace

bool may_overlap(const SetDesc& X, const SetDesc& Y) { return overlap(X, Y); }

Value act(const Subst& m, const Value& v, const SetDesc& X) {
  if (!contains(X, v))
    throw std::invalid_argument("act: " + to_text(v) + " is not a member of " +
                                X.to_text());
  if (!m.is_permutation() && !X.has_sb_action())
    throw std::invalid_argument(
        "act: " + to_string(m) +
        " is not a permutation and " + X.to_text() +
        " only carries the permutation action");
  return rename_atoms(v, m);
}

Value act(const Perm& g, const Value& v, const SetDesc& X) {
  return act(g.as_subst(), v, X);
}

}  // namespace nomsets
