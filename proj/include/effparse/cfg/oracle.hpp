#pragma once

#include <string>
#include <vector>

#include "effparse/cfg/grammar.hpp"
#include "effparse/cfg/parser.hpp"
#include "effparse/wp.hpp"

namespace effparse::cfg {

/// Every derivation of `nt` on a prefix of `input`, as (value, remainder),
/// by direct search over the grammar. Productions are tried in order and
/// each rhs left to right. Throws CyclicGrammarError, since a cyclic
/// grammar admits unboundedly many derivations.
std::vector<ParseResult> spec_produce(const Grammar& g, const std::string& nt, TextView input);

/// The parser specification as an invariant for recursive calls: a call on
/// nonterminal A in state s returns the values and remainders of
/// spec_produce(g, A, s).
StatefulInvariant parser_spec(const Grammar& g);

}  // namespace effparse::cfg
