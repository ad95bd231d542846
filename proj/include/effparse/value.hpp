#pragma once

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "effparse/cfg/sem_value.hpp"
#include "effparse/regex/regex.hpp"
#include "effparse/text.hpp"

namespace effparse {

struct Value;

struct Unit {
  friend bool operator==(Unit, Unit) { return true; }
  friend std::strong_ordering operator<=>(Unit, Unit) { return std::strong_ordering::equal; }
};

struct PairValue {
  std::shared_ptr<const Value> first;
  std::shared_ptr<const Value> second;
};

struct ListValue {
  std::vector<Value> items;
};

struct SplitValue {
  Text prefix;
  Text suffix;
  friend bool operator==(const SplitValue&, const SplitValue&) = default;
  friend auto operator<=>(const SplitValue&, const SplitValue&) = default;
};

/// Universal result and response domain shared by every effect row.
///
/// The parser-with-lookahead effect answers `nothing` as Unit and `just c`
/// as a Ch value.
struct Value {
  using Variant = std::variant<Unit, bool, char32_t, Text, PairValue, ListValue, regex::ParseTree,
                               cfg::SemValue, SplitValue, regex::Regex>;
  Variant v;

  Value() : v(Unit{}) {}
  Value(Unit u) : v(u) {}
  Value(bool b) : v(b) {}
  Value(char32_t c) : v(c) {}
  Value(Text s) : v(std::move(s)) {}
  Value(PairValue p) : v(std::move(p)) {}
  Value(ListValue l) : v(std::move(l)) {}
  Value(regex::ParseTree t) : v(std::move(t)) {}
  Value(cfg::SemValue n) : v(std::move(n)) {}
  Value(SplitValue s) : v(std::move(s)) {}
  Value(regex::Regex r) : v(std::move(r)) {}

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(v);
  }
  /// Throws ShapeError when the value holds a different alternative.
  template <typename T>
  const T& as() const;

  friend bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
};

/// A value did not have the shape an operation required.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T>
const T& Value::as() const {
  if (const T* p = std::get_if<T>(&v)) return *p;
  throw ShapeError("value has unexpected shape");
}

Value make_pair(Value a, Value b);
Value make_list(std::vector<Value> items);
const Value& pair_first(const Value& p);
const Value& pair_second(const Value& p);

/// Debug rendering; stable across runs.
std::string to_string(const Value& v);

}  // namespace effparse
