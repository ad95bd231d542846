#pragma once

#include <optional>
#include <vector>

#include "effparse/computation.hpp"
#include "effparse/handlers.hpp"
#include "effparse/regex/regex.hpp"

namespace effparse::regex {

/// Canonical parse tree of r on the empty string, if any: Alt prefers the
/// left branch and stars take no iterations.
std::optional<ParseTree> nullable(const Regex& r);

/// Brzozowski derivative, without simplification.
Regex derivative(const Regex& r, char32_t c);

/// Maps a tree for derivative(r, c) back to a tree for r.
/// Throws ShapeError when `t` does not fit derivative(r, c).
ParseTree integral_tree(const Regex& r, char32_t c, const ParseTree& t);

/// Row of dmatch: [Rec, ParserMaybe, Nondet].
const EffectRow& dmatch_row();

/// Reads one symbol; on `just x` matches the derivative by x recursively,
/// on `nothing` returns the nullable witness.
RecursiveFn dmatch_fn();

/// dmatch with the parser effect handled: input PairV(RegexV, Str), row
/// [Rec, Nondet].
RecursiveFn dmatch_prime();

/// Runs dmatch' on (r, s) with |s| units of fuel. Throws std::logic_error
/// if the run is Exhausted.
std::vector<ParseTree> dmatch_run(const Regex& r, TextView s);

}  // namespace effparse::regex
