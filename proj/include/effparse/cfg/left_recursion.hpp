#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "effparse/cfg/grammar.hpp"
#include "effparse/text.hpp"

namespace effparse::cfg {

/// `from` can call `to` without consuming input: `to` occurs in the
/// leading run of nonterminals of production `production` of `from`.
struct Link {
  std::string from;
  std::string to;
  std::size_t production = 0;

  friend bool operator==(const Link&, const Link&) = default;
  friend auto operator<=>(const Link&, const Link&) = default;
};

struct ChainReport {
  std::vector<Link> links;
  /// Least n such that every link chain is shorter than n; absent iff cyclic.
  std::optional<std::size_t> bound;
  bool cyclic = false;
  /// For a cyclic grammar, a cycle A -> ... -> A (first and last equal).
  std::vector<std::string> witness;
};

/// Links in production order, then rhs order, without repeats.
std::vector<Link> left_rec_links(const Grammar& g);
ChainReport chain_bound(const Grammar& g);

/// `A -> B -> A`
std::string format_cycle(const std::vector<std::string>& witness);

struct CyclicGrammarError : std::runtime_error {
  explicit CyclicGrammarError(std::vector<std::string> cycle)
      : std::runtime_error("left-recursive cycle " + format_cycle(cycle)),
        witness(std::move(cycle)) {}
  std::vector<std::string> witness;
};

/// A recursive call edge from a frame (caller, state at its entry) to the
/// callee and the state at the call.
struct CallEdge {
  std::string caller;
  Text caller_state;
  std::string callee;
  Text callee_state;
};

struct VariantReport {
  std::size_t edges = 0;
  std::vector<CallEdge> violations;
  bool ok() const { return violations.empty(); }
};

/// Runs the parser for `start` on `input` with an instrumented evaluator
/// and checks that every call edge either consumes input or follows a
/// link with no input growth. Throws CyclicGrammarError on cyclic grammars.
VariantReport check_variant(const Grammar& g, const std::string& start, TextView input);

/// check_variant over every (start, input) sample.
bool check_variant(const Grammar& g,
                   const std::vector<std::pair<std::string, Text>>& samples);

}  // namespace effparse::cfg
