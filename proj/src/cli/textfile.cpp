#include "germs/textfile.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "germs/error.hpp"

namespace germs::text {

namespace {

std::string kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::String: return "a string";
    case Value::Kind::Integer: return "an integer";
    case Value::Kind::Boolean: return "a boolean";
    case Value::Kind::Array: return "a list";
    case Value::Kind::Table: return "a mapping";
  }
  return "?";
}

Value convert(const YAML::Node& node) {
  Value v;
  const YAML::Mark mark = node.Mark();
  v.line = mark.line + 1;
  v.column = mark.column + 1;
  switch (node.Type()) {
    case YAML::NodeType::Map:
      v.kind = Value::Kind::Table;
      for (const auto& kv : node) {
        Value key = convert(kv.first);
        if (key.kind == Value::Kind::Array || key.kind == Value::Kind::Table) key.fail("keys must be plain words");
        if (v.find(key.str)) key.fail("key '" + key.str + "' appears twice");
        v.fields.emplace_back(key.str, convert(kv.second));
      }
      break;
    case YAML::NodeType::Sequence:
      v.kind = Value::Kind::Array;
      for (const auto& item : node) v.items.push_back(convert(item));
      break;
    case YAML::NodeType::Scalar: {
      static const std::regex integer("[-+]?[0-9]+");
      v.kind = Value::Kind::String;
      v.str = node.Scalar();
      // Quoted scalars carry the tag "!" and always stay strings.
      if (node.Tag() == "!") break;
      if (v.str == "true" || v.str == "false") {
        v.kind = Value::Kind::Boolean;
        v.boolean = v.str == "true";
      } else if (std::regex_match(v.str, integer)) {
        try {
          v.integer = std::stoll(v.str);
          v.kind = Value::Kind::Integer;
        } catch (const std::out_of_range&) {
        }
      }
      break;
    }
    case YAML::NodeType::Null:
    case YAML::NodeType::Undefined:
      v.kind = Value::Kind::String;
      break;
  }
  return v;
}

}  // namespace

void Value::fail(const std::string& msg) const { throw ParseError(msg, line, column); }

const Value* Value::find(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

const Value& Value::at(std::string_view key) const {
  if (kind != Kind::Table) fail("expected a mapping, found " + kind_name(kind));
  if (const Value* v = find(key)) return *v;
  fail("missing key '" + std::string(key) + "'");
}

const std::string& Value::as_string() const {
  if (kind != Kind::String && kind != Kind::Integer) fail("expected a string, found " + kind_name(kind));
  return str;
}

long long Value::as_int() const {
  if (kind != Kind::Integer) fail("expected an integer, found " + kind_name(kind));
  return integer;
}

bool Value::as_bool() const {
  if (kind != Kind::Boolean) fail("expected true or false, found " + kind_name(kind));
  return boolean;
}

const std::vector<Value>& Value::as_array() const {
  if (kind != Kind::Array) fail("expected a list, found " + kind_name(kind));
  return items;
}

const std::vector<Value>& Value::tables(std::string_view key) const {
  static const std::vector<Value> none;
  const Value* v = find(key);
  if (!v) return none;
  for (const auto& item : v->as_array())
    if (item.kind != Kind::Table) item.fail("each '" + std::string(key) + "' entry must be a mapping");
  return v->items;
}

Value parse(std::string_view text) {
  YAML::Node doc;
  try {
    doc = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  if (doc.IsNull()) return Value{};
  Value root = convert(doc);
  if (root.kind != Value::Kind::Table) root.fail("the document must be a mapping");
  return root;
}

Value load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), e.column(), path);
  }
}

}  // namespace germs::text
