#include "support/generators.hpp"

#include <functional>

namespace testsupport {

using effparse::regex::Regex;

std::vector<Regex> regexes_of_size(std::size_t size, const std::vector<char32_t>& alphabet) {
  std::vector<Regex> out;
  if (size == 0) return out;
  if (size == 1) {
    out.push_back(Regex::empty());
    out.push_back(Regex::epsilon());
    for (char32_t c : alphabet) out.push_back(Regex::singleton(c));
    return out;
  }
  for (const auto& r : regexes_of_size(size - 1, alphabet)) out.push_back(Regex::star(r));
  for (std::size_t left = 1; left + 1 < size; ++left) {
    auto ls = regexes_of_size(left, alphabet);
    auto rs = regexes_of_size(size - 1 - left, alphabet);
    for (const auto& l : ls) {
      for (const auto& r : rs) {
        out.push_back(Regex::alt(l, r));
        out.push_back(Regex::cat(l, r));
      }
    }
  }
  return out;
}

std::vector<Regex> regexes_up_to(std::size_t size, const std::vector<char32_t>& alphabet) {
  std::vector<Regex> out;
  for (std::size_t n = 1; n <= size; ++n) {
    auto layer = regexes_of_size(n, alphabet);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Text> strings_up_to(std::size_t length, const std::vector<char32_t>& alphabet) {
  std::vector<Text> out{Text{}};
  std::size_t from = 0;
  for (std::size_t n = 1; n <= length; ++n) {
    std::size_t to = out.size();
    for (std::size_t i = from; i < to; ++i) {
      for (char32_t c : alphabet) out.push_back(out[i] + c);
    }
    from = to;
  }
  return out;
}

namespace {

const effparse::EffectRow& nondet_row() {
  static const effparse::EffectRow row{effparse::EffectId::Nondet};
  return row;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Computation random_nondet(std::uint64_t seed, int depth) {
  return random_nondet(nondet_row(), seed, depth);
}

Computation random_nondet(const effparse::EffectRow& row, std::uint64_t seed, int depth) {
  std::mt19937_64 rng(mix(seed));
  const auto pick = rng() % 8;
  if (depth <= 0 || pick < 3) {
    return effparse::pure(Value(Text(1, U'a' + static_cast<char32_t>(rng() % 4))));
  }
  if (pick == 3) return effparse::fail(row);
  return effparse::choice(row, random_nondet(row, rng(), depth - 1),
                          random_nondet(row, rng(), depth - 1));
}

effparse::Continuation random_continuation(std::uint64_t seed, int depth) {
  return [seed, depth](const Value& v) {
    std::uint64_t h = seed;
    for (char32_t c : v.as<Text>()) h = mix(h ^ c);
    std::mt19937_64 rng(h);
    auto m = random_nondet(rng(), depth);
    // Tag results with the input so that the argument visibly flows through.
    Text prefix = v.as<Text>();
    return effparse::fmap(
        [prefix](const Value& w) { return Value(prefix + w.as<Text>()); }, m);
  };
}

effparse::cfg::Grammar random_grammar(std::mt19937_64& rng,
                                      const std::vector<char32_t>& terminals) {
  using effparse::cfg::GSymbol;
  static const std::vector<std::string> names{"S", "A", "B", "C"};
  const std::size_t nts = 1 + rng() % names.size();
  const std::size_t prods = nts + rng() % (7 - nts);
  std::vector<std::pair<std::string, std::vector<GSymbol>>> rules;
  for (std::size_t i = 0; i < prods; ++i) {
    // Every nonterminal gets at least one production.
    std::string lhs = i < nts ? names[i] : names[rng() % nts];
    std::vector<GSymbol> rhs;
    const std::size_t len = rng() % 4;
    for (std::size_t k = 0; k < len; ++k) {
      if (rng() % 2) {
        rhs.push_back(GSymbol::term(terminals[rng() % terminals.size()]));
      } else {
        rhs.push_back(GSymbol::nonterm(names[rng() % nts]));
      }
    }
    rules.emplace_back(std::move(lhs), std::move(rhs));
  }
  return effparse::cfg::Grammar(std::move(rules));
}

Text T(const char* utf8) { return effparse::from_utf8(utf8); }

}  // namespace testsupport
