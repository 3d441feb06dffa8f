#include "nomsets/json_io.hpp"

namespace nomsets {

nlohmann::json to_json(const Value& v) {
  nlohmann::json j;
  switch (v.kind()) {
    case ValueKind::Atom:
      j["kind"] = "atom";
      j["id"] = v.atom_id().id;
      break;
    case ValueKind::Label:
      j["kind"] = "label";
      j["name"] = v.name();
      break;
    case ValueKind::Tuple: {
      j["kind"] = "tuple";
      j["items"] = nlohmann::json::array();
      for (const Value& child : v.items()) j["items"].push_back(to_json(child));
      break;
    }
    case ValueKind::Tagged:
      j["kind"] = "tagged";
      j["name"] = v.name();
      j["item"] = to_json(v.item());
      break;
  }
  return j;
}

nlohmann::json to_json(const OrbitShape& s) {
  return {{"key", s.key()}, {"support_size", s.support_size()}};
}

nlohmann::json to_json(const FreeElem& e) {
  nlohmann::json images = nlohmann::json::array();
  for (Atom a : e.images) images.push_back(a.id);
  return {{"base", e.base.key()}, {"images", images}};
}

}  // namespace nomsets
