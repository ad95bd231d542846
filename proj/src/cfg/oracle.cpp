#include "effparse/cfg/oracle.hpp"

#include <map>
#include <memory>

#include "effparse/cfg/left_recursion.hpp"

namespace effparse::cfg {

namespace {

// Results are keyed by the number of characters left, which identifies the
// suffix of the fixed input.
class Producer {
 public:
  Producer(const Grammar& g, TextView input) : g_(g), input_(input) {}

  using Derivations = std::vector<std::pair<SemValue, std::size_t>>;

  const Derivations& produce(const std::string& nt, std::size_t left) {
    auto key = std::pair{nt, left};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Derivations out;
    for (const auto& p : filter_lhs(g_, nt)) {
      sequence(p, 0, left, {}, out);
    }
    return memo_[key] = std::move(out);
  }

 private:
  void sequence(const Production& p, std::size_t i, std::size_t left, std::vector<SemValue> kids,
                Derivations& out) {
    if (i == p.rhs.size()) {
      out.emplace_back(SemValue{p.lhs, p.index, std::move(kids)}, left);
      return;
    }
    const GSymbol& s = p.rhs[i];
    if (s.is_term()) {
      if (left > 0 && input_[input_.size() - left] == s.ch) sequence(p, i + 1, left - 1, kids, out);
      return;
    }
    const Derivations& sub = produce(s.name, left);
    for (const auto& [v, rest] : sub) {
      auto next = kids;
      next.push_back(v);
      sequence(p, i + 1, rest, std::move(next), out);
    }
  }

  const Grammar& g_;
  TextView input_;
  std::map<std::pair<std::string, std::size_t>, Derivations> memo_;
};

}  // namespace

std::vector<ParseResult> spec_produce(const Grammar& g, const std::string& nt, TextView input) {
  auto report = chain_bound(g);
  if (report.cyclic) throw CyclicGrammarError(report.witness);
  Producer producer(g, input);
  std::vector<ParseResult> out;
  for (const auto& [v, left] : producer.produce(nt, input.size())) {
    out.emplace_back(v, Text(input.substr(input.size() - left)));
  }
  return out;
}

StatefulInvariant parser_spec(const Grammar& g) {
  auto shared = std::make_shared<const Grammar>(g);
  StatefulInvariant inv;
  inv.enumerate = [shared](const Value& input, TextView state) {
    std::vector<Outcome> out;
    for (auto& [v, rest] : spec_produce(*shared, to_utf8(input.as<Text>()), state)) {
      out.push_back({Value(std::move(v)), std::move(rest)});
    }
    return out;
  };
  return inv;
}

}  // namespace effparse::cfg
