#include "effparse/wp.hpp"

#include <algorithm>
#include <string>

namespace effparse {

std::vector<Value> Invariant::outputs(const Value& input) const {
  auto out = enumerate(input);
  if (out.size() > bound) {
    throw EnumerationOverflow("invariant enumerated " + std::to_string(out.size()) +
                              " outputs, bound is " + std::to_string(bound));
  }
  return out;
}

std::vector<Outcome> StatefulInvariant::outputs(const Value& input, TextView state) const {
  auto out = enumerate(input, state);
  if (out.size() > bound) {
    throw EnumerationOverflow("invariant enumerated " + std::to_string(out.size()) +
                              " outputs, bound is " + std::to_string(bound));
  }
  return out;
}

PredicateTransformer pt_all() {
  return {EffectId::Nondet, [](const Command& c, const Post& p) {
            if (c.kind == CommandKind::Fail) return true;
            return p(Value(true)) && p(Value(false));
          }};
}

PredicateTransformer pt_any() {
  return {EffectId::Nondet, [](const Command& c, const Post& p) {
            if (c.kind == CommandKind::Fail) return false;
            return p(Value(true)) || p(Value(false));
          }};
}

PredicateTransformer pt_rec(Invariant inv) {
  return {EffectId::Rec, [inv = std::move(inv)](const Command& c, const Post& p) {
            for (const auto& o : inv.outputs(c.payload)) {
              if (!p(o)) return false;
            }
            return true;
          }};
}

StatefulTransformer pt_parse_strict() {
  return {EffectId::ParserStrict, [](const Command&, const StatePost& p, TextView s) {
            if (s.empty()) return true;
            return p(Value(s.front()), s.substr(1));
          }};
}

StatefulTransformer pt_parser_maybe() {
  return {EffectId::ParserMaybe, [](const Command&, const StatePost& p, TextView s) {
            if (s.empty()) return p(Value(Unit{}), s);
            return p(Value(s.front()), s.substr(1));
          }};
}

StatefulTransformer pt_rec_stateful(StatefulInvariant inv) {
  return {EffectId::Rec, [inv = std::move(inv)](const Command& c, const StatePost& p, TextView s) {
            for (const auto& o : inv.outputs(c.payload, s)) {
              if (!p(o.value, o.state)) return false;
            }
            return true;
          }};
}

StatefulTransformer lift(PredicateTransformer pt) {
  return {pt.effect, [pt](const Command& c, const StatePost& p, TextView s) {
            return pt.transform(c, [&](const Value& r) { return p(r, s); });
          }};
}

bool wp(const SemanticsRow& row, const Computation& m, const Post& post) {
  if (m.is_pure()) return post(m.value());
  const auto& pt = row.lookup(m.index(), m.command().effect);
  return pt.transform(m.command(), [&](const Value& r) { return wp(row, m.resume(r), post); });
}

bool wp_stateful(const StatefulRow& row, const Computation& m, const StatePost& post,
                 TextView state) {
  if (m.is_pure()) return post(m.value(), state);
  const auto& pt = row.lookup(m.index(), m.command().effect);
  return pt.transform(
      m.command(),
      [&](const Value& r, TextView s) { return wp_stateful(row, m.resume(r), post, s); }, state);
}

bool wp_spec(const Spec& spec, const Post& post, const std::vector<Value>& candidates) {
  if (!spec.pre) return false;
  return std::all_of(candidates.begin(), candidates.end(),
                     [&](const Value& o) { return !spec.post(o) || post(o); });
}

namespace {

void collect(const Computation& m, const DemonicContext& ctx, const Text* state,
             std::vector<Outcome>& out) {
  if (m.is_pure()) {
    out.push_back({m.value(), state ? *state : Text{}});
    return;
  }
  const Command& c = m.command();
  switch (c.effect) {
    case EffectId::Nondet:
      if (c.kind == CommandKind::Fail) return;
      collect(m.resume(Value(true)), ctx, state, out);
      collect(m.resume(Value(false)), ctx, state, out);
      return;
    case EffectId::ParserMaybe:
    case EffectId::ParserStrict: {
      if (!state) throw std::invalid_argument("parser effect reached without an input state");
      if (state->empty()) {
        if (c.effect == EffectId::ParserMaybe) collect(m.resume(Value(Unit{})), ctx, state, out);
        return;
      }
      Text rest = state->substr(1);
      collect(m.resume(Value((*state)[0])), ctx, &rest, out);
      return;
    }
    case EffectId::Rec:
      if (const auto* inv = std::get_if<Invariant>(&ctx.rec)) {
        for (const auto& o : inv->outputs(c.payload)) collect(m.resume(o), ctx, state, out);
        return;
      }
      if (const auto* inv = std::get_if<StatefulInvariant>(&ctx.rec)) {
        if (!state) throw std::invalid_argument("stateful invariant used without an input state");
        for (const auto& o : inv->outputs(c.payload, *state)) {
          collect(m.resume(o.value), ctx, &o.state, out);
        }
        return;
      }
      throw std::invalid_argument("recursive call reached without an invariant");
  }
}

bool subset(const std::vector<Outcome>& small, const std::vector<Outcome>& big) {
  return std::all_of(small.begin(), small.end(), [&](const Outcome& o) {
    return std::find(big.begin(), big.end(), o) != big.end();
  });
}

}  // namespace

std::vector<Outcome> results_demonic(const Computation& m, const DemonicContext& ctx) {
  std::vector<Outcome> out;
  collect(m, ctx, ctx.state ? &*ctx.state : nullptr, out);
  return out;
}

std::vector<Outcome> distinct(const std::vector<Outcome>& outcomes) {
  std::vector<Outcome> out;
  for (const auto& o : outcomes) {
    if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
  }
  return out;
}

std::vector<Value> distinct_values(const std::vector<Outcome>& outcomes) {
  std::vector<Value> out;
  for (const auto& o : outcomes) {
    if (std::find(out.begin(), out.end(), o.value) == out.end()) out.push_back(o.value);
  }
  return out;
}

bool refines_all(const Computation& s, const Computation& t, const DemonicContext& ctx) {
  return subset(results_demonic(t, ctx), results_demonic(s, ctx));
}

bool refines_any(const Computation& s, const Computation& t, const DemonicContext& ctx) {
  return subset(results_demonic(s, ctx), results_demonic(t, ctx));
}

bool in_language(const EffectRow& row, const Computation& m, TextView input,
                 const std::optional<StatefulInvariant>& rec) {
  std::vector<StatefulTransformer> pts;
  for (EffectId e : row.effects()) {
    switch (e) {
      case EffectId::Nondet: pts.push_back(lift(pt_all())); break;
      case EffectId::ParserStrict: pts.push_back(pt_parse_strict()); break;
      case EffectId::ParserMaybe: pts.push_back(pt_parser_maybe()); break;
      case EffectId::Rec:
        if (!rec) throw std::invalid_argument("in_language needs an invariant for Rec");
        pts.push_back(pt_rec_stateful(*rec));
        break;
    }
  }
  return wp_stateful(StatefulRow(std::move(pts)), m,
                     [](const Value&, TextView rest) { return rest.empty(); }, input);
}

std::vector<Value> sample_responses(const Command& c, const std::vector<char32_t>& alphabet) {
  switch (c.kind) {
    case CommandKind::Choice: return {Value(true), Value(false)};
    case CommandKind::Fail: return {};
    case CommandKind::Symbol: {
      std::vector<Value> out;
      if (c.effect == EffectId::ParserMaybe) out.emplace_back(Unit{});
      for (char32_t x : alphabet) out.emplace_back(x);
      return out;
    }
    case CommandKind::Call:
      throw std::invalid_argument("recursive calls have no finite response set");
  }
  return {};
}

}  // namespace effparse
