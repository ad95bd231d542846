#include "effparse/handlers.hpp"

#include <memory>

namespace effparse {

namespace {

void parse_fold(const Computation& m, TextView input, bool require_empty,
                std::vector<std::pair<Value, Text>>& out) {
  if (m.is_pure()) {
    if (!require_empty || input.empty()) out.emplace_back(m.value(), Text(input));
    return;
  }
  const Command& c = m.command();
  switch (c.effect) {
    case EffectId::Nondet:
      if (c.kind == CommandKind::Fail) return;
      parse_fold(m.resume(Value(true)), input, require_empty, out);
      parse_fold(m.resume(Value(false)), input, require_empty, out);
      return;
    case EffectId::ParserStrict:
      if (input.empty()) return;
      parse_fold(m.resume(Value(input.front())), input.substr(1), require_empty, out);
      return;
    default:
      throw std::invalid_argument("run_parser handles only Nondet and the strict parser effect");
  }
}

}  // namespace

std::vector<std::pair<Value, Text>> run_parser(const Computation& m, TextView input) {
  std::vector<std::pair<Value, Text>> out;
  parse_fold(m, input, true, out);
  return out;
}

std::vector<std::pair<Value, Text>> run_parser_partial(const Computation& m, TextView input) {
  std::vector<std::pair<Value, Text>> out;
  parse_fold(m, input, false, out);
  return out;
}

std::pair<Value, Text> h_parser(const Command& cmd, TextView state) {
  if (cmd.effect != EffectId::ParserMaybe || cmd.kind != CommandKind::Symbol) {
    throw std::invalid_argument("h_parser handles the lookahead parser's Symbol only");
  }
  if (state.empty()) return {Value(Unit{}), Text{}};
  return {Value(state.front()), Text(state.substr(1))};
}

namespace {

Computation handle(const std::shared_ptr<const StateHandler>& handler, const EffectRow& row,
                   const Computation& m, const Text& state) {
  if (m.is_pure()) return m;
  const std::size_t i = m.index();
  const Command& c = m.command();
  if (i == 1) {
    auto [response, next] = (*handler)(c, state);
    return handle(handler, row, m.resume(response), next);
  }
  auto k = [handler, row, m, state](const Value& r) {
    return handle(handler, row, m.resume(r), state);
  };
  if (i == 0) {
    return Computation::op(row, 0, Command::call(make_pair(c.payload, Value(state))), k);
  }
  return Computation::op(row, i - 1, c, k);
}

}  // namespace

RecursiveFn handle_rec(StateHandler handler, RecursiveFn f) {
  if (f.row.size() < 2 || f.row[0] != EffectId::Rec) {
    throw ConstructionError("handle_rec needs a row of the form [Rec, E, ...]");
  }
  std::vector<EffectId> rest{EffectId::Rec};
  for (std::size_t i = 2; i < f.row.size(); ++i) rest.push_back(f.row[i]);
  EffectRow row(std::move(rest));
  auto shared = std::make_shared<const StateHandler>(std::move(handler));
  auto body = f.body;
  return RecursiveFn{row, [shared, row, body](const Value& input) {
                       const Text& state = pair_second(input).as<Text>();
                       return handle(shared, row, body(pair_first(input)), state);
                     }};
}

namespace {

Computation expand_call(const RecursiveFn& f, const Computation& m) {
  return bind(f(m.command().payload), [m](const Value& v) { return m.resume(v); });
}

}  // namespace

bool terminates_in(const SemanticsRow& tail, const RecursiveFn& f, const Computation& m,
                   std::size_t fuel) {
  if (m.is_pure()) return true;
  if (m.index() == 0) {
    if (fuel == 0) return false;
    return terminates_in(tail, f, expand_call(f, m), fuel - 1);
  }
  const auto& pt = tail.lookup(m.index() - 1, m.command().effect);
  return pt.transform(m.command(),
                      [&](const Value& r) { return terminates_in(tail, f, m.resume(r), fuel); });
}

bool terminates_fmap_law(const SemanticsRow& tail, const RecursiveFn& f,
                         const std::function<Value(const Value&)>& g, const Computation& m,
                         std::size_t fuel) {
  return !terminates_in(tail, f, m, fuel) || terminates_in(tail, f, fmap(g, m), fuel);
}

namespace {

struct FuelRun {
  const RecursiveFn& f;
  bool exhausted = false;
  std::vector<Outcome> results;

  void explore(const Computation& m, std::size_t fuel, const Text* state) {
    if (exhausted) return;
    if (m.is_pure()) {
      results.push_back({m.value(), state ? *state : Text{}});
      return;
    }
    const Command& c = m.command();
    switch (c.effect) {
      case EffectId::Rec:
        if (fuel == 0) {
          exhausted = true;
          return;
        }
        explore(expand_call(f, m), fuel - 1, state);
        return;
      case EffectId::Nondet:
        if (c.kind == CommandKind::Fail) return;
        explore(m.resume(Value(true)), fuel, state);
        explore(m.resume(Value(false)), fuel, state);
        return;
      case EffectId::ParserMaybe:
      case EffectId::ParserStrict: {
        if (!state) throw std::invalid_argument("parser effect reached without an input state");
        if (state->empty()) {
          if (c.effect == EffectId::ParserMaybe) explore(m.resume(Value(Unit{})), fuel, state);
          return;
        }
        Text rest = state->substr(1);
        explore(m.resume(Value((*state)[0])), fuel, &rest);
        return;
      }
    }
  }
};

}  // namespace

FuelOutcome run_with_fuel(const RecursiveFn& f, const Value& input, std::size_t fuel,
                          const std::optional<Text>& state) {
  if (f.row.size() == 0 || f.row[0] != EffectId::Rec) {
    throw ConstructionError("recursive functions need Rec at the head of their row");
  }
  FuelRun run{f, false, {}};
  run.explore(f(input), fuel, state ? &*state : nullptr);
  if (run.exhausted) return Exhausted{};
  return Done{std::move(run.results)};
}

}  // namespace effparse
