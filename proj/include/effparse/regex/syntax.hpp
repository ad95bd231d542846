#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "effparse/regex/regex.hpp"
#include "effparse/text.hpp"

namespace effparse::regex {

struct SyntaxError : std::runtime_error {
  SyntaxError(std::size_t pos, const std::string& what)
      : std::runtime_error(what), position(pos) {}
  // Offset in code points.
  std::size_t position;
};

/// Concrete syntax: `|` (lowest), juxtaposition, postfix `*`, parentheses,
/// `\0` for Empty, `\e` for Epsilon, and `\|`, `\*`, `\(`, `\)`, `\\` for
/// literal metacharacters. Any other character stands for itself. An empty
/// alternative denotes Epsilon.
Regex parse_regex(TextView source);

/// Display form; concatenation is separated by a single space.
std::string to_string(const Regex& r);

}  // namespace effparse::regex
