#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "effparse/computation.hpp"
#include "effparse/text.hpp"

// Predicate-transformer semantics for effect rows.
//
// Propositions are decidable checks, so every transformer yields a bool.
// Quantifiers over unbounded domains (the responses of a recursive call, the
// outputs admitted by a specification) are evaluated over finite,
// caller-supplied enumerations.

namespace effparse {

using Post = std::function<bool(const Value&)>;
using StatePost = std::function<bool(const Value&, TextView)>;

/// A result paired with the parser state it was produced in.
struct Outcome {
  Value value;
  Text state;
  friend bool operator==(const Outcome&, const Outcome&) = default;
  friend std::strong_ordering operator<=>(const Outcome& a, const Outcome& b) {
    if (auto c = a.value <=> b.value; c != 0) return c;
    return a.state.compare(b.state) <=> 0;
  }
};

/// An enumerator produced more outputs than its declared bound.
struct EnumerationOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Per-effect transformer from a postcondition over responses to a
/// precondition. Every shipped transformer is monotone in the postcondition.
struct PredicateTransformer {
  EffectId effect;
  std::function<bool(const Command&, const Post&)> transform;
};

/// Transformer whose pre- and postconditions also see the parser state.
struct StatefulTransformer {
  EffectId effect;
  std::function<bool(const Command&, const StatePost&, TextView)> transform;
};

/// Transformers aligned with an effect row: entry i handles effect i.
template <typename Transformer>
class TransformerRow {
 public:
  TransformerRow() = default;
  explicit TransformerRow(std::vector<Transformer> pts) : pts_(std::move(pts)) {
    std::vector<EffectId> effects;
    for (const auto& pt : pts_) effects.push_back(pt.effect);
    row_ = EffectRow(std::move(effects));
  }

  const EffectRow& effects() const { return row_; }
  std::size_t size() const { return pts_.size(); }

  /// Transformer for an op node; checks alignment with the node's effect.
  const Transformer& lookup(std::size_t index, EffectId effect) const {
    if (index >= pts_.size() || pts_[index].effect != effect) {
      throw ConstructionError("semantics row is not aligned with the computation's effect row");
    }
    return pts_[index];
  }

 private:
  std::vector<Transformer> pts_;
  EffectRow row_;
};

using SemanticsRow = TransformerRow<PredicateTransformer>;
using StatefulRow = TransformerRow<StatefulTransformer>;

/// Loop-invariant-style relation between a recursive call's input and its
/// outputs, together with a finite enumerator of the related outputs.
struct Invariant {
  std::function<bool(const Value& input, const Value& output)> relation;
  std::function<std::vector<Value>(const Value& input)> enumerate;
  std::size_t bound = 100000;

  /// Enumerated outputs; EnumerationOverflow past `bound`.
  std::vector<Value> outputs(const Value& input) const;
};

/// Invariant for recursive calls that also move the parser state: the
/// enumerator lists (output, state after the call) pairs.
struct StatefulInvariant {
  std::function<std::vector<Outcome>(const Value& input, TextView state)> enumerate;
  std::size_t bound = 100000;

  std::vector<Outcome> outputs(const Value& input, TextView state) const;
};

/// Demonic nondeterminism: Fail ↦ true, Choice ↦ P(true) ∧ P(false).
PredicateTransformer pt_all();
/// Angelic nondeterminism: Fail ↦ false, Choice ↦ P(true) ∨ P(false).
PredicateTransformer pt_any();
/// call(i) ↦ P(o) for every enumerated o related to i.
PredicateTransformer pt_rec(Invariant inv);

/// Strict parser: on empty input Symbol ↦ true, on x::xs ↦ P(x, xs).
StatefulTransformer pt_parse_strict();
/// Lookahead parser: on empty input ↦ P(nothing, ""), on x::xs ↦ P(just x, xs).
StatefulTransformer pt_parser_maybe();
StatefulTransformer pt_rec_stateful(StatefulInvariant inv);
/// Stateful view of a plain transformer; the state passes through untouched.
StatefulTransformer lift(PredicateTransformer pt);

/// Weakest precondition of `m` for `post` under `row`.
bool wp(const SemanticsRow& row, const Computation& m, const Post& post);
bool wp_stateful(const StatefulRow& row, const Computation& m, const StatePost& post,
                 TextView state);

/// Pre/postcondition specification.
struct Spec {
  bool pre = true;
  Post post;
};

/// pre ∧ ∀o ∈ candidates. spec.post(o) → post(o). The universal quantifier
/// ranges over the supplied candidates only.
bool wp_spec(const Spec& spec, const Post& post, const std::vector<Value>& candidates);

/// How to resolve effects when enumerating results.
struct DemonicContext {
  std::variant<std::monostate, Invariant, StatefulInvariant> rec;
  std::optional<Text> state;
};

/// All reachable leaves, depth-first with the true branch of each Choice
/// first. Rec nodes resume with every enumerated invariant output; parser
/// effects consume `ctx.state`.
std::vector<Outcome> results_demonic(const Computation& m, const DemonicContext& ctx = {});

/// Removes duplicates, keeping first occurrences.
std::vector<Outcome> distinct(const std::vector<Outcome>& outcomes);
std::vector<Value> distinct_values(const std::vector<Outcome>& outcomes);

/// Demonic refinement S ⊑ T: the results of T are a subset of those of S.
bool refines_all(const Computation& s, const Computation& t, const DemonicContext& ctx = {});
/// Angelic refinement S ⊑ T: the results of S are a subset of those of T.
bool refines_any(const Computation& s, const Computation& t, const DemonicContext& ctx = {});

/// Whether every parse consumes the whole input: the stateful wp with the
/// "remaining input is empty" postcondition under demonic choice. `rec`
/// supplies the semantics of Rec when the row has it.
bool in_language(const EffectRow& row, const Computation& m, TextView input,
                 const std::optional<StatefulInvariant>& rec = std::nullopt);

/// Admissible responses of a command, with Symbol responses drawn from
/// `alphabet`. Rec calls have no finite response set and are rejected.
std::vector<Value> sample_responses(const Command& c, const std::vector<char32_t>& alphabet);

}  // namespace effparse
