#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "effparse/computation.hpp"
#include "effparse/wp.hpp"

namespace effparse {

/// A generally recursive function: its body runs over `row`, whose head
/// effect is Rec, and issues `call` for recursive invocations.
struct RecursiveFn {
  EffectRow row;
  std::function<Computation(const Value&)> body;

  Computation operator()(const Value& input) const { return body(input); }
};

/// Outcome of fuel-bounded evaluation.
struct Exhausted {
  friend bool operator==(Exhausted, Exhausted) { return true; }
};
struct Done {
  std::vector<Outcome> results;
  friend bool operator==(const Done&, const Done&) = default;
};
using FuelOutcome = std::variant<Exhausted, Done>;

inline bool is_done(const FuelOutcome& o) { return std::holds_alternative<Done>(o); }

/// List-of-successes handler for computations over Nondet and the strict
/// parser effect. A pure leaf only counts as a success once the whole input
/// has been consumed.
std::vector<std::pair<Value, Text>> run_parser(const Computation& m, TextView input);

/// Sub-handler variant of run_parser: pure leaves succeed with whatever
/// input remains.
std::vector<std::pair<Value, Text>> run_parser_partial(const Computation& m, TextView input);

/// Handler for the lookahead parser's Symbol: ("" ↦ nothing, x::xs ↦ just x).
std::pair<Value, Text> h_parser(const Command& cmd, TextView state);

using StateHandler = std::function<std::pair<Value, Text>(const Command&, TextView)>;

/// Folds `handler` over the second effect of `f`'s row. The result takes
/// (input, state) pairs, runs over the row with that effect removed, and
/// pairs every recursive call's input with the state current at the call.
RecursiveFn handle_rec(StateHandler handler, RecursiveFn f);

/// Whether `m` finishes within `fuel` unfoldings of `f`'s recursive calls.
/// `tail` gives the semantics of the effects after Rec.
bool terminates_in(const SemanticsRow& tail, const RecursiveFn& f, const Computation& m,
                   std::size_t fuel);

/// terminates_in(m, n) implies terminates_in(fmap(g, m), n).
bool terminates_fmap_law(const SemanticsRow& tail, const RecursiveFn& f,
                         const std::function<Value(const Value&)>& g, const Computation& m,
                         std::size_t fuel);

/// Runs `f(input)`, expanding each recursive call into the body at the
/// cost of one unit of fuel along the current path. Nondeterminism is
/// explored exhaustively; parser effects consume `state`. Exhausted if any
/// path reaches a call with no fuel left.
FuelOutcome run_with_fuel(const RecursiveFn& f, const Value& input, std::size_t fuel,
                          const std::optional<Text>& state = std::nullopt);

}  // namespace effparse
