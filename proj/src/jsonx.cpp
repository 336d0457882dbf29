#include "bsv/jsonx.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace bsv {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw parse_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

// SAX handler building a JsonValue tree. Integer tokens that overflow the
// 64-bit fast path arrive through number_float together with the raw token,
// which is re-parsed exactly with GMP.
class ExactSax {
public:
  JsonValue result;

  bool null() { return emit(JsonValue()); }
  bool boolean(bool b) { return emit(JsonValue(b)); }
  bool number_integer(std::int64_t v) { return emit(JsonValue(Int(static_cast<long>(v)))); }
  bool number_unsigned(std::uint64_t v) {
    Int big;
    mpz_import(big.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return emit(JsonValue(std::move(big)));
  }
  bool number_float(double, const std::string& raw) {
    for (char c : raw) {
      if (c == '.' || c == 'e' || c == 'E') {
        throw bsv::parse_error("floating-point literal not allowed: " + raw);
      }
    }
    Int big;
    if (mpz_set_str(big.get_mpz_t(), raw.c_str(), 10) != 0) {
      throw bsv::parse_error("bad integer literal: " + raw);
    }
    return emit(JsonValue(std::move(big)));
  }
  bool string(std::string& s) { return emit(JsonValue(s)); }
  bool binary(nlohmann::json::binary_t&) { throw bsv::parse_error("binary values not allowed"); }

  bool start_object(std::size_t) {
    stack_.push_back(Frame{JsonValue::Object{}, {}, true});
    return true;
  }
  bool key(std::string& k) {
    stack_.back().key = k;
    return true;
  }
  bool end_object() {
    JsonValue done(std::move(stack_.back().obj));
    stack_.pop_back();
    return emit(std::move(done));
  }
  bool start_array(std::size_t) {
    stack_.push_back(Frame{{}, JsonValue::Array{}, false});
    return true;
  }
  bool end_array() {
    JsonValue done(std::move(stack_.back().arr));
    stack_.pop_back();
    return emit(std::move(done));
  }
  bool parse_error_(std::size_t pos, const std::string&, const std::string& what) {
    throw bsv::parse_error("json parse error at byte " + std::to_string(pos) + ": " + what);
  }
  bool parse_error(std::size_t pos, const std::string& last, const nlohmann::detail::exception& ex) {
    return parse_error_(pos, last, ex.what());
  }

private:
  struct Frame {
    JsonValue::Object obj;
    JsonValue::Array arr;
    bool is_object = false;
    std::string key;
    Frame(JsonValue::Object o, JsonValue::Array a, bool isobj)
        : obj(std::move(o)), arr(std::move(a)), is_object(isobj) {}
    Frame() = default;
  };

  std::vector<Frame> stack_;

  bool emit(JsonValue v) {
    if (stack_.empty()) {
      result = std::move(v);
    } else if (stack_.back().is_object) {
      stack_.back().obj.emplace(std::move(stack_.back().key), std::move(v));
    } else {
      stack_.back().arr.push_back(std::move(v));
    }
    return true;
  }
};

}  // namespace

JsonValue JsonValue::parse(const std::string& text) {
  ExactSax sax;
  if (!nlohmann::json::sax_parse(text, &sax)) {
    throw bsv::parse_error("json parse failed");
  }
  return std::move(sax.result);
}

JsonValue JsonValue::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bsv::parse_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

bool JsonValue::as_bool() const {
  if (kind_ != Kind::Bool) throw bsv::parse_error("expected boolean");
  return bool_;
}

const Int& JsonValue::as_int() const {
  if (kind_ != Kind::Integer) throw bsv::parse_error("expected integer");
  return int_;
}

long JsonValue::as_long() const {
  const Int& v = as_int();
  if (!v.fits_slong_p()) throw bsv::parse_error("integer out of range: " + v.get_str());
  return v.get_si();
}

const std::string& JsonValue::as_string() const {
  if (kind_ != Kind::String) throw bsv::parse_error("expected string");
  return str_;
}

const JsonValue::Array& JsonValue::as_array() const {
  if (kind_ != Kind::Array) throw bsv::parse_error("expected array");
  return arr_;
}

const JsonValue::Object& JsonValue::as_object() const {
  if (kind_ != Kind::Object) throw bsv::parse_error("expected object");
  return obj_;
}

const JsonValue& JsonValue::at(const std::string& key) const {
  const auto& obj = as_object();
  auto it = obj.find(key);
  if (it == obj.end()) throw bsv::parse_error("missing key: " + key);
  return it->second;
}

bool JsonValue::has(const std::string& key) const {
  return kind_ == Kind::Object && obj_.count(key) > 0;
}

namespace {

void write_json_rec(const JsonValue& v, std::ostream& os, int indent, int depth) {
  auto pad = [&](int d) {
    if (indent > 0) {
      os << '\n';
      for (int i = 0; i < d * indent; ++i) os << ' ';
    }
  };
  switch (v.kind()) {
    case JsonValue::Kind::Null:
      os << "null";
      break;
    case JsonValue::Kind::Bool:
      os << (v.as_bool() ? "true" : "false");
      break;
    case JsonValue::Kind::Integer:
      os << v.as_int().get_str();
      break;
    case JsonValue::Kind::String: {
      os << '"';
      for (char c : v.as_string()) {
        switch (c) {
          case '"': os << "\\\""; break;
          case '\\': os << "\\\\"; break;
          case '\n': os << "\\n"; break;
          case '\t': os << "\\t"; break;
          case '\r': os << "\\r"; break;
          default:
            if (static_cast<unsigned char>(c) < 0x20) {
              char buf[8];
              std::snprintf(buf, sizeof buf, "\\u%04x", c);
              os << buf;
            } else {
              os << c;
            }
        }
      }
      os << '"';
      break;
    }
    case JsonValue::Kind::Array: {
      const auto& a = v.as_array();
      os << '[';
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        if (a[i].is_object() || a[i].is_array()) pad(depth + 1);
        write_json_rec(a[i], os, indent, depth + 1);
      }
      os << ']';
      break;
    }
    case JsonValue::Kind::Object: {
      const auto& o = v.as_object();
      os << '{';
      bool first = true;
      for (const auto& [k, val] : o) {
        if (!first) os << ',';
        first = false;
        pad(depth + 1);
        os << '"' << k << "\":";
        if (indent > 0) os << ' ';
        write_json_rec(val, os, indent, depth + 1);
      }
      pad(depth);
      os << '}';
      break;
    }
  }
}

}  // namespace

std::string write_json(const JsonValue& v, int indent) {
  std::ostringstream os;
  write_json_rec(v, os, indent, 0);
  return os.str();
}

}  // namespace bsv
