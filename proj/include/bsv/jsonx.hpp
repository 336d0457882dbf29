#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bsv/errors.hpp"

namespace bsv {

using Int = mpz_class;
using Rat = mpq_class;

/// Rational from numerator/denominator, normalized with positive denominator.
Rat make_rat(const Int& num, const Int& den);

/// JSON document with exact integers: number tokens of any length are kept
/// as arbitrary-precision integers instead of being rounded through double.
/// Floating-point literals are rejected (the file formats used here carry
/// integers, rational strings "p/q" and nested objects only).
class JsonValue {
public:
  enum class Kind { Null, Bool, Integer, String, Array, Object };

  using Array = std::vector<JsonValue>;
  using Object = std::map<std::string, JsonValue>;

  JsonValue() : kind_(Kind::Null) {}
  explicit JsonValue(bool b) : kind_(Kind::Bool), bool_(b) {}
  explicit JsonValue(Int v) : kind_(Kind::Integer), int_(std::move(v)) {}
  explicit JsonValue(std::string s) : kind_(Kind::String), str_(std::move(s)) {}
  explicit JsonValue(Array a) : kind_(Kind::Array), arr_(std::move(a)) {}
  explicit JsonValue(Object o) : kind_(Kind::Object), obj_(std::move(o)) {}

  static JsonValue parse(const std::string& text);
  static JsonValue parse_file(const std::string& path);

  Kind kind() const { return kind_; }
  bool is_integer() const { return kind_ == Kind::Integer; }
  bool is_string() const { return kind_ == Kind::String; }
  bool is_array() const { return kind_ == Kind::Array; }
  bool is_object() const { return kind_ == Kind::Object; }

  bool as_bool() const;
  const Int& as_int() const;
  /// as_int narrowed to long; throws parse_error when out of range.
  long as_long() const;
  const std::string& as_string() const;
  const Array& as_array() const;
  const Object& as_object() const;

  /// Object member access; throws parse_error naming the missing key.
  const JsonValue& at(const std::string& key) const;
  bool has(const std::string& key) const;

private:
  Kind kind_;
  bool bool_ = false;
  Int int_;
  std::string str_;
  Array arr_;
  Object obj_;
};

/// Serializes a JsonValue document (arbitrary-precision integers emitted
/// as plain literals).
std::string write_json(const JsonValue& v, int indent = 0);

}  // namespace bsv
