#include "effparse/cfg/left_recursion.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "effparse/cfg/parser.hpp"

namespace effparse::cfg {

std::vector<Link> left_rec_links(const Grammar& g) {
  std::vector<Link> out;
  for (const auto& p : g.productions()) {
    for (const auto& s : p.rhs) {
      if (s.is_term()) break;
      Link link{p.lhs, s.name, p.index};
      if (std::find(out.begin(), out.end(), link) == out.end()) out.push_back(std::move(link));
    }
  }
  return out;
}

std::string format_cycle(const std::vector<std::string>& witness) {
  std::string out;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += " -> ";
    out += witness[i];
  }
  return out;
}

ChainReport chain_bound(const Grammar& g) {
  ChainReport report;
  report.links = left_rec_links(g);

  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& l : report.links) succ[l.from].push_back(l.to);

  enum Colour { White, Grey, Black };
  std::map<std::string, Colour> colour;
  std::map<std::string, std::size_t> longest;  // links on the longest chain from a node
  std::vector<std::string> stack;

  std::function<bool(const std::string&)> visit = [&](const std::string& a) {
    colour[a] = Grey;
    stack.push_back(a);
    std::size_t best = 0;
    for (const auto& b : succ[a]) {
      if (colour[b] == Grey) {
        auto it = std::find(stack.begin(), stack.end(), b);
        report.witness.assign(it, stack.end());
        report.witness.push_back(b);
        return false;
      }
      if (colour[b] == White && !visit(b)) return false;
      best = std::max(best, longest[b] + 1);
    }
    stack.pop_back();
    colour[a] = Black;
    longest[a] = best;
    return true;
  };

  std::size_t longest_path = 0;
  for (const auto& a : g.nonterminals()) {
    if (colour[a] == White && !visit(a)) {
      report.cyclic = true;
      return report;
    }
    longest_path = std::max(longest_path, longest[a]);
  }
  report.bound = longest_path + 1;
  return report;
}

namespace {

class VariantChecker {
 public:
  VariantChecker(const Grammar& g, std::size_t fuel)
      : body_(from_prods_fn(g)), fuel_(fuel) {
    for (const auto& l : left_rec_links(g)) links_.emplace_back(l.from, l.to);
  }

  std::vector<std::pair<Value, Text>> frame(const std::string& nt, const Text& state) {
    std::vector<std::pair<Value, Text>> out;
    walk(nt, state, body_(Value(from_utf8(nt))), state, out);
    return out;
  }

  VariantReport report;

 private:
  void walk(const std::string& nt, const Text& entry, const Computation& m, const Text& state,
            std::vector<std::pair<Value, Text>>& out) {
    if (m.is_pure()) {
      out.emplace_back(m.value(), state);
      return;
    }
    const Command& c = m.command();
    switch (c.effect) {
      case EffectId::Nondet:
        if (c.kind == CommandKind::Fail) return;
        walk(nt, entry, m.resume(Value(true)), state, out);
        walk(nt, entry, m.resume(Value(false)), state, out);
        return;
      case EffectId::ParserStrict:
        if (state.empty()) return;
        walk(nt, entry, m.resume(Value(state[0])), state.substr(1), out);
        return;
      case EffectId::Rec: {
        if (fuel_ == 0) throw std::logic_error("variant check ran past the call budget");
        --fuel_;
        std::string callee = to_utf8(c.payload.as<Text>());
        record(nt, entry, callee, state);
        for (auto& [v, rest] : frame(callee, state)) walk(nt, entry, m.resume(v), rest, out);
        return;
      }
      default:
        throw std::invalid_argument("unexpected effect in the grammar parser");
    }
  }

  void record(const std::string& caller, const Text& entry, const std::string& callee,
              const Text& state) {
    ++report.edges;
    bool left = state.size() < entry.size();
    bool right = state.size() <= entry.size() &&
                 std::find(links_.begin(), links_.end(), std::pair{caller, callee}) != links_.end();
    if (!left && !right) report.violations.push_back({caller, entry, callee, state});
  }

  RecursiveFn body_;
  std::size_t fuel_;
  std::vector<std::pair<std::string, std::string>> links_;
};

}  // namespace

VariantReport check_variant(const Grammar& g, const std::string& start, TextView input) {
  auto report = chain_bound(g);
  if (report.cyclic) throw CyclicGrammarError(report.witness);
  // Calls are counted over the whole instrumented run, so the budget
  // scales with the number of explored paths; it only guards against bugs.
  VariantChecker checker(g, std::size_t{1} << 24);
  checker.frame(start, Text(input));
  return checker.report;
}

bool check_variant(const Grammar& g,
                   const std::vector<std::pair<std::string, Text>>& samples) {
  for (const auto& [start, input] : samples) {
    if (!check_variant(g, start, input).ok()) return false;
  }
  return true;
}

}  // namespace effparse::cfg
