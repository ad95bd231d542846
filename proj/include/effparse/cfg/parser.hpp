#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "effparse/cfg/grammar.hpp"
#include "effparse/cfg/sem_value.hpp"
#include "effparse/computation.hpp"
#include "effparse/handlers.hpp"

namespace effparse::cfg {

/// Row of the grammar parser: [Rec, Nondet, ParserStrict].
const EffectRow& parser_row();

std::vector<Production> filter_lhs(const Grammar& g, const std::string& nt);

/// Reads one character and fails unless it is `c`.
Computation exact(const EffectRow& row, char32_t c);

/// Parses `rhs` left to right: terminals through `exact`, nonterminals
/// through a recursive call on their name (as Str). Delivers `acc`
/// extended with the children as a ListValue of SemValues.
Computation build_parser(const std::vector<GSymbol>& rhs, std::vector<SemValue> acc = {});

/// Choice over the productions of `nt`, each yielding Node(nt, index, children).
Computation from_prods(const Grammar& g, const std::string& nt);

/// from_prods as a recursive function of the nonterminal name (Str).
RecursiveFn from_prods_fn(const Grammar& g);

using ParseResult = std::pair<SemValue, Text>;

/// (|input|+1)·(B+1) for chain bound B.
std::size_t nominal_fuel(std::size_t input_length, std::size_t chain_bound);

/// Most recursive calls any run of `nt` can make along one path with at
/// most `input_length` characters left. Throws CyclicGrammarError.
std::size_t call_budget(const Grammar& g, const std::string& nt, std::size_t input_length);

/// Fuel used by parse: the larger of nominal_fuel and call_budget.
std::size_t parse_fuel(const Grammar& g, const std::string& nt, std::size_t input_length);

/// Every (value, remainder) for `nt` on `input`. Rejects cyclic grammars
/// with CyclicGrammarError; throws std::logic_error if the run exhausts
/// its fuel.
std::vector<ParseResult> parse(const Grammar& g, const std::string& nt, TextView input);

/// Runs the parser with an explicit fuel, for any grammar.
FuelOutcome parse_with_fuel(const Grammar& g, const std::string& nt, TextView input,
                            std::size_t fuel);

std::vector<ParseResult> to_parse_results(const Done& done);

}  // namespace effparse::cfg
