#include "effparse/cfg/parser.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "effparse/cfg/left_recursion.hpp"

namespace effparse::cfg {

const EffectRow& parser_row() {
  static const EffectRow row{EffectId::Rec, EffectId::Nondet, EffectId::ParserStrict};
  return row;
}

std::vector<Production> filter_lhs(const Grammar& g, const std::string& nt) {
  std::vector<Production> out;
  for (const auto& p : g.productions()) {
    if (p.lhs == nt) out.push_back(p);
  }
  return out;
}

Computation exact(const EffectRow& row, char32_t c) {
  return bind(symbol_strict(row), [c, row](const Value& x) {
    return x.as<char32_t>() == c ? pure(Unit{}) : fail(row);
  });
}

namespace {

Value children_value(const std::vector<SemValue>& acc) {
  std::vector<Value> items(acc.begin(), acc.end());
  return make_list(std::move(items));
}

Computation build_from(std::shared_ptr<const std::vector<GSymbol>> rhs, std::size_t i,
                       std::vector<SemValue> acc) {
  const EffectRow& row = parser_row();
  if (i == rhs->size()) return pure(children_value(acc));
  const GSymbol& s = (*rhs)[i];
  if (s.is_term()) {
    return bind(exact(row, s.ch), [rhs, i, acc](const Value&) { return build_from(rhs, i + 1, acc); });
  }
  return bind(call(row, Value(from_utf8(s.name))), [rhs, i, acc](const Value& child) {
    auto next = acc;
    next.push_back(child.as<SemValue>());
    return build_from(rhs, i + 1, std::move(next));
  });
}

}  // namespace

Computation build_parser(const std::vector<GSymbol>& rhs, std::vector<SemValue> acc) {
  return build_from(std::make_shared<const std::vector<GSymbol>>(rhs), 0, std::move(acc));
}

Computation from_prods(const Grammar& g, const std::string& nt) {
  std::vector<Computation> alternatives;
  for (const auto& p : filter_lhs(g, nt)) {
    std::string lhs = p.lhs;
    std::size_t index = p.index;
    alternatives.push_back(fmap(
        [lhs, index](const Value& kids) {
          SemValue node{lhs, index, {}};
          for (const auto& k : kids.as<ListValue>().items) node.children.push_back(k.as<SemValue>());
          return Value(std::move(node));
        },
        build_parser(p.rhs)));
  }
  return choices(parser_row(), std::move(alternatives));
}

RecursiveFn from_prods_fn(const Grammar& g) {
  auto shared = std::make_shared<const Grammar>(g);
  return RecursiveFn{parser_row(), [shared](const Value& input) {
                       return from_prods(*shared, to_utf8(input.as<Text>()));
                     }};
}

std::size_t nominal_fuel(std::size_t input_length, std::size_t chain_bound) {
  return (input_length + 1) * (chain_bound + 1);
}

namespace {

std::size_t sat_add(std::size_t a, std::size_t b) {
  const std::size_t top = std::numeric_limits<std::size_t>::max();
  return a > top - b ? top : a + b;
}

// calls(A, m): 0 is unreachable for terminals with no input left; a
// nonterminal costs its own call plus the calls of its body. The rest of a
// sequence is bounded with the same m, which over-approximates since calls
// never decrease with more input. Recursion at equal m only follows links.
class Budget {
 public:
  explicit Budget(const Grammar& g) : g_(g) {}

  std::size_t calls(const std::string& nt, std::size_t m) {
    auto key = std::pair{nt, m};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::size_t best = 0;
    for (const auto& p : filter_lhs(g_, nt)) best = std::max(best, sequence(p.rhs, 0, m));
    memo_[key] = best;
    return best;
  }

 private:
  std::size_t sequence(const std::vector<GSymbol>& rhs, std::size_t i, std::size_t m) {
    if (i == rhs.size()) return 0;
    if (rhs[i].is_term()) return m == 0 ? 0 : sequence(rhs, i + 1, m - 1);
    return sat_add(sat_add(1, calls(rhs[i].name, m)), sequence(rhs, i + 1, m));
  }

  const Grammar& g_;
  std::map<std::pair<std::string, std::size_t>, std::size_t> memo_;
};

}  // namespace

std::size_t call_budget(const Grammar& g, const std::string& nt, std::size_t input_length) {
  auto report = chain_bound(g);
  if (report.cyclic) throw CyclicGrammarError(report.witness);
  return Budget(g).calls(nt, input_length);
}

std::size_t parse_fuel(const Grammar& g, const std::string& nt, std::size_t input_length) {
  auto report = chain_bound(g);
  if (report.cyclic) throw CyclicGrammarError(report.witness);
  return std::max(nominal_fuel(input_length, *report.bound), Budget(g).calls(nt, input_length));
}

FuelOutcome parse_with_fuel(const Grammar& g, const std::string& nt, TextView input,
                            std::size_t fuel) {
  return run_with_fuel(from_prods_fn(g), Value(from_utf8(nt)), fuel, Text(input));
}

std::vector<ParseResult> to_parse_results(const Done& done) {
  std::vector<ParseResult> out;
  for (const auto& o : done.results) out.emplace_back(o.value.as<SemValue>(), o.state);
  return out;
}

std::vector<ParseResult> parse(const Grammar& g, const std::string& nt, TextView input) {
  auto outcome = parse_with_fuel(g, nt, input, parse_fuel(g, nt, input.size()));
  if (!is_done(outcome)) {
    throw std::logic_error("grammar parser ran out of fuel on an acyclic grammar");
  }
  return to_parse_results(std::get<Done>(outcome));
}

}  // namespace effparse::cfg
