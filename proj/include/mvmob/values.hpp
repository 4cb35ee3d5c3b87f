// Runtime values: the scalars that condition expressions compare, plus entity
// instances as produced by the simulator store. Comparison semantics are
// total: undefined pairings yield "undefined" (nullopt) and the caller maps
// that to false.
#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mvmob {

struct EntityInstance;

// Calendar date, ISO "YYYY-MM-DD"; lexicographic order is chronological.
struct Date {
  std::string iso;
  bool operator==(const Date&) const = default;
  auto operator<=>(const Date&) const = default;
};

inline bool isIsoDate(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

class Value {
 public:
  using Storage = std::variant<std::nullptr_t, bool, long long, double,
                               std::string, Date, std::shared_ptr<EntityInstance>>;

  Value() : storage_(nullptr) {}
  Value(std::nullptr_t) : storage_(nullptr) {}
  Value(bool b) : storage_(b) {}
  Value(long long i) : storage_(i) {}
  Value(int i) : storage_(static_cast<long long>(i)) {}
  Value(double d) : storage_(d) {}
  Value(std::string s) : storage_(std::move(s)) {}
  Value(const char* s) : storage_(std::string(s)) {}
  Value(Date d) : storage_(std::move(d)) {}
  Value(std::shared_ptr<EntityInstance> inst) : storage_(std::move(inst)) {}

  bool isNull() const { return std::holds_alternative<std::nullptr_t>(storage_); }
  bool isBool() const { return std::holds_alternative<bool>(storage_); }
  bool isInt() const { return std::holds_alternative<long long>(storage_); }
  bool isFloat() const { return std::holds_alternative<double>(storage_); }
  bool isNumeric() const { return isInt() || isFloat(); }
  bool isString() const { return std::holds_alternative<std::string>(storage_); }
  bool isDate() const { return std::holds_alternative<Date>(storage_); }
  bool isInstance() const {
    return std::holds_alternative<std::shared_ptr<EntityInstance>>(storage_);
  }

  bool asBool() const { return std::get<bool>(storage_); }
  long long asInt() const { return std::get<long long>(storage_); }
  double asFloat() const { return std::get<double>(storage_); }
  const std::string& asString() const { return std::get<std::string>(storage_); }
  const Date& asDate() const { return std::get<Date>(storage_); }
  const std::shared_ptr<EntityInstance>& asInstance() const {
    return std::get<std::shared_ptr<EntityInstance>>(storage_);
  }

  double asNumber() const { return isInt() ? static_cast<double>(asInt()) : asFloat(); }

  const Storage& storage() const { return storage_; }

 private:
  Storage storage_;
};

struct EntityInstance {
  std::string entity;
  long long id = 0;
  std::map<std::string, Value> properties;
  std::map<std::string, Value> references;
};

// Shortest round-trip rendering; used by printers, traces, and uiUpdate.
inline std::string renderDouble(double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  std::string text(buf, end);
  if (text.find('.') == std::string::npos &&
      text.find('e') == std::string::npos &&
      text.find("inf") == std::string::npos &&
      text.find("nan") == std::string::npos)
    text += ".0";
  return text;
}

// Source-literal form of a string: double quotes plus backslash escapes.
inline std::string quoteString(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

inline std::string renderValue(const Value& v) {
  if (v.isNull()) return "null";
  if (v.isBool()) return v.asBool() ? "true" : "false";
  if (v.isInt()) return std::to_string(v.asInt());
  if (v.isFloat()) return renderDouble(v.asFloat());
  if (v.isString()) return v.asString();
  if (v.isDate()) return v.asDate().iso;
  const auto& inst = v.asInstance();
  if (!inst) return "null";
  return inst->entity + "#" + std::to_string(inst->id);
}

// Equality across kinds: defined for same-kind scalars, mixed numerics,
// instance identity, and anything versus null. Undefined pairs -> nullopt.
inline std::optional<bool> valueEquals(const Value& a, const Value& b) {
  if (a.isNull() || b.isNull()) return a.isNull() && b.isNull();
  if (a.isNumeric() && b.isNumeric()) {
    if (a.isInt() && b.isInt()) return a.asInt() == b.asInt();
    return a.asNumber() == b.asNumber();
  }
  if (a.isBool() && b.isBool()) return a.asBool() == b.asBool();
  if (a.isString() && b.isString()) return a.asString() == b.asString();
  if (a.isDate() && b.isDate()) return a.asDate() == b.asDate();
  if (a.isInstance() && b.isInstance()) {
    const auto& x = a.asInstance();
    const auto& y = b.asInstance();
    if (!x || !y) return x == y;
    return x->entity == y->entity && x->id == y->id;
  }
  return std::nullopt;
}

// Ordering: mixed numerics and dates only. Returns <0, 0, >0, or nullopt.
inline std::optional<int> valueCompare(const Value& a, const Value& b) {
  if (a.isNumeric() && b.isNumeric()) {
    if (a.isInt() && b.isInt()) {
      long long x = a.asInt(), y = b.asInt();
      return x < y ? -1 : x > y ? 1 : 0;
    }
    double x = a.asNumber(), y = b.asNumber();
    if (x < y) return -1;
    if (x > y) return 1;
    if (x == y) return 0;
    return std::nullopt;  // NaN involved
  }
  if (a.isDate() && b.isDate()) {
    const std::string& x = a.asDate().iso;
    const std::string& y = b.asDate().iso;
    return x < y ? -1 : x > y ? 1 : 0;
  }
  return std::nullopt;
}

struct Environment {
  std::map<std::string, Value> bindings;
};

// Walks a dotted path through bindings, instance properties, references, and
// the implicit integer "id". Absence is a value: nullopt, never a throw.
inline std::optional<Value> resolvePath(const Environment& env,
                                        const std::vector<std::string>& path) {
  if (path.empty()) return std::nullopt;
  auto it = env.bindings.find(path[0]);
  if (it == env.bindings.end()) return std::nullopt;
  Value current = it->second;
  for (size_t i = 1; i < path.size(); ++i) {
    if (!current.isInstance() || !current.asInstance()) return std::nullopt;
    const EntityInstance& inst = *current.asInstance();
    const std::string& seg = path[i];
    if (auto p = inst.properties.find(seg); p != inst.properties.end()) {
      current = p->second;
    } else if (auto r = inst.references.find(seg); r != inst.references.end()) {
      current = r->second;
    } else if (seg == "id") {
      current = Value(inst.id);
    } else {
      return std::nullopt;
    }
  }
  return current;
}

}  // namespace mvmob
