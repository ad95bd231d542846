#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace effparse::cfg {

/// A terminal character or a nonterminal name.
struct GSymbol {
  enum class Kind { Term, NonTerm };
  Kind kind = Kind::Term;
  char32_t ch = 0;
  std::string name;

  static GSymbol term(char32_t c) { return {Kind::Term, c, {}}; }
  static GSymbol nonterm(std::string n) { return {Kind::NonTerm, 0, std::move(n)}; }
  bool is_term() const { return kind == Kind::Term; }

  friend bool operator==(const GSymbol&, const GSymbol&) = default;
};

struct Production {
  std::string lhs;
  std::vector<GSymbol> rhs;
  std::size_t index = 0;

  std::size_t arity() const;  // nonterminals on the rhs
  friend bool operator==(const Production&, const Production&) = default;
};

/// Malformed grammar text or an undefined nonterminal. `line` is 1-based,
/// or 0 when the problem is not tied to a line.
struct GrammarError : std::runtime_error {
  GrammarError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line(line) {}
  std::size_t line;
};

class Grammar {
 public:
  Grammar() = default;
  /// Indices are assigned from the order of `rules`. Throws GrammarError
  /// when a rhs names a nonterminal that has no production.
  explicit Grammar(std::vector<std::pair<std::string, std::vector<GSymbol>>> rules);

  const std::vector<Production>& productions() const { return prods_; }
  /// Nonterminals in order of first definition.
  const std::vector<std::string>& nonterminals() const { return nts_; }
  bool defines(std::string_view nt) const;

 private:
  std::vector<Production> prods_;
  std::vector<std::string> nts_;
};

/// Reads the line-based grammar format:
///
///     # comment
///     E -> 'a' E | 'b'
///     R ->            (empty alternative)
///
/// Terminals are single characters in single quotes with escapes \' \\ \n \t.
Grammar parse_grammar(std::string_view source);
Grammar load_grammar(const std::string& path);

std::string to_string(const GSymbol& s);
/// `E -> 'a' E`
std::string to_string(const Production& p);

}  // namespace effparse::cfg
