#pragma once

#include <cstddef>
#include <vector>

#include "effparse/regex/regex.hpp"
#include "effparse/text.hpp"

// Brute-force view of the inductive match relation: a decision procedure for
// membership and an enumerator of its witnesses. Both are independent of the
// effectful matchers and serve as their oracle.

namespace effparse::regex {

/// Whether `t` has the shape of a parse tree for `r`. A Singleton accepts a
/// CharT of any character; the match relation pins the character.
bool tree_shape_ok(const Regex& r, const ParseTree& t);

/// Decides Match r s t.
bool is_match(const Regex& r, TextView s, const ParseTree& t);

/// The characters of `t` in order, i.e. the string it matches.
Text yield(const ParseTree& t);

/// Restriction on star derivations. Without one the witness set is
/// infinite whenever a star body matches the empty string.
struct EnumerationMode {
  // Empty iterations allowed in each star's list; 0 means every iteration
  // consumes at least one character.
  std::size_t empty_iterations = 0;

  static EnumerationMode consuming_star() { return {0}; }
  static EnumerationMode bounded(std::size_t k) { return {k}; }
};

/// Every t with is_match(r, s, t) permitted by `mode`, without duplicates,
/// ordered by: Alt left before right, Cat splits by increasing prefix,
/// Star: the empty list, then first iterations by increasing length.
std::vector<ParseTree> enumerate_matches(const Regex& r, TextView s,
                                         EnumerationMode mode = EnumerationMode::consuming_star());

/// No Star node occurs anywhere in `r`.
bool has_no_star(const Regex& r);

}  // namespace effparse::regex
