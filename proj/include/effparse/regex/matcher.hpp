#pragma once

#include "effparse/computation.hpp"
#include "effparse/handlers.hpp"
#include "effparse/regex/regex.hpp"
#include "effparse/wp.hpp"

namespace effparse::regex {

/// Row of the structural matcher: [Rec, Nondet].
const EffectRow& structural_row();

/// Every (prefix, suffix) split of `xs` as SplitValue results, ("", xs)
/// first. `row` must contain Nondet.
Computation all_splits(const EffectRow& row, TextView xs);
Computation all_splits(TextView xs);

/// Structural matcher over [Rec, Nondet]. Alt and Cat recurse inline on
/// their subexpressions; a star on nonempty input calls the matcher on
/// (Cat(r, Star r), xs) and unfolds the pair into a list.
Computation match_structural(const Regex& r, TextView xs);

/// match_structural as a recursive function of PairV(RegexV, Str).
RecursiveFn match_structural_fn();

/// Input encoding shared by the regex matchers.
Value match_input(const Regex& r, TextView xs);

/// is_match on (r, xs), enumerated in consuming-star mode.
Invariant match_spec_invariant();

}  // namespace effparse::regex
