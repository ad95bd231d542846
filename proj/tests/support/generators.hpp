#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "effparse/cfg/grammar.hpp"
#include "effparse/computation.hpp"
#include "effparse/regex/regex.hpp"

namespace testsupport {

using effparse::Computation;
using effparse::Text;
using effparse::Value;

/// All regexes with exactly `size` nodes over the given alphabet.
std::vector<effparse::regex::Regex> regexes_of_size(std::size_t size,
                                                    const std::vector<char32_t>& alphabet);
/// All regexes with at most `size` nodes.
std::vector<effparse::regex::Regex> regexes_up_to(std::size_t size,
                                                  const std::vector<char32_t>& alphabet);
/// All strings of length at most `length`, shortest first.
std::vector<Text> strings_up_to(std::size_t length, const std::vector<char32_t>& alphabet);

/// Deterministic random computation over [Nondet] with Str leaves.
Computation random_nondet(std::uint64_t seed, int depth);
/// The same shape over any row containing Nondet.
Computation random_nondet(const effparse::EffectRow& row, std::uint64_t seed, int depth);
/// Deterministic random continuation: its result depends on the seed and
/// the value it is applied to.
effparse::Continuation random_continuation(std::uint64_t seed, int depth);

/// Random grammar with nonterminals drawn from S, A, B, C and terminals
/// from `terminals`; may be cyclic.
effparse::cfg::Grammar random_grammar(std::mt19937_64& rng, const std::vector<char32_t>& terminals);

Text T(const char* utf8);

}  // namespace testsupport
