#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace germs::text {

/// A node of an input file. Files are YAML (read with yaml-cpp); quoted
/// scalars are strings, plain true/false are booleans and plain integers are
/// integers. Positions are 1-based.
struct Value {
  enum class Kind { String, Integer, Boolean, Array, Table };

  Kind kind = Kind::Table;
  std::string str;
  long long integer = 0;
  bool boolean = false;
  std::vector<Value> items;
  std::vector<std::pair<std::string, Value>> fields;
  int line = 1;
  int column = 1;

  const Value* find(std::string_view key) const;
  /// Throws ParseError at this value when the key is missing.
  const Value& at(std::string_view key) const;

  /// Any non-boolean scalar, as written.
  const std::string& as_string() const;
  long long as_int() const;
  bool as_bool() const;
  const std::vector<Value>& as_array() const;
  /// The list of mappings under `key`; empty when absent.
  const std::vector<Value>& tables(std::string_view key) const;

  /// Throws ParseError pointing at this value.
  [[noreturn]] void fail(const std::string& msg) const;
};

Value parse(std::string_view text);
/// Reads and parses a file; ParseError messages are prefixed with the path.
Value load(const std::string& path);

}  // namespace germs::text
