#pragma once

#include <fstream>
#include <string>

#include "json.hpp"

// Validates a document against the subset of draft-07 the shipped schemas
// use: type, enum, properties, required, items, additionalProperties.
inline bool schema_ok(const nlohmann::json& schema, const nlohmann::json& doc,
                      std::string& why, const std::string& at = "$") {
  using nlohmann::json;
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& v : schema["enum"])
      if (v == doc) hit = true;
    if (!hit) {
      why = at + ": value " + doc.dump() + " not in enum";
      return false;
    }
  }
  if (schema.contains("type")) {
    const std::string t = schema["type"].get<std::string>();
    bool ok = (t == "object" && doc.is_object()) ||
              (t == "array" && doc.is_array()) ||
              (t == "string" && doc.is_string()) ||
              (t == "integer" && doc.is_number_integer()) ||
              (t == "boolean" && doc.is_boolean());
    if (!ok) {
      why = at + ": expected " + t + ", got " + doc.dump().substr(0, 40);
      return false;
    }
  }
  if (schema.contains("required"))
    for (const auto& k : schema["required"])
      if (!doc.contains(k.get<std::string>())) {
        why = at + ": missing required key '" + k.get<std::string>() + "'";
        return false;
      }
  if (doc.is_object()) {
    const json props = schema.value("properties", json::object());
    const bool extra_banned = schema.contains("additionalProperties") &&
                              schema["additionalProperties"] == false;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (props.contains(it.key())) {
        if (!schema_ok(props[it.key()], it.value(), why, at + "." + it.key()))
          return false;
      } else if (extra_banned) {
        why = at + ": unexpected key '" + it.key() + "'";
        return false;
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    std::size_t i = 0;
    for (const auto& v : doc) {
      if (!schema_ok(schema["items"], v, why,
                     at + "[" + std::to_string(i) + "]"))
        return false;
      ++i;
    }
  }
  return true;
}

inline nlohmann::json load_schema(const std::string& name) {
  std::ifstream in(std::string(IRRLAB_SCHEMAS) + "/" + name);
  if (!in) throw std::runtime_error("cannot open schema " + name);
  return nlohmann::json::parse(in);
}
