#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace effparse::cfg {

/// Semantic value synthesized by a production: the nonterminal, the
/// production's index in the grammar, and one child per nonterminal on the
/// right-hand side (terminals contribute nothing).
struct SemValue {
  std::string nonterminal;
  std::size_t production = 0;
  std::vector<SemValue> children;

  friend bool operator==(const SemValue&, const SemValue&) = default;
  friend std::strong_ordering operator<=>(const SemValue& a, const SemValue& b);
};

/// `(node E 0 child...)`
std::string to_sexpr(const SemValue& v);

}  // namespace effparse::cfg
