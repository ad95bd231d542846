#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "effparse/value.hpp"

namespace effparse {

/// The effect signatures available to computations.
///
/// - Nondet: Choice (responds true or false) and Fail (no response).
/// - ParserMaybe: Symbol responds with the head of the remaining input or
///   `nothing` once it is consumed.
/// - ParserStrict: Symbol responds with the head of the remaining input;
///   on empty input there is no response.
/// - Rec: Call carries an input value; any value is an admissible response.
enum class EffectId { Nondet, ParserMaybe, ParserStrict, Rec };

enum class CommandKind { Choice, Fail, Symbol, Call };

std::string_view name(EffectId e);
std::string_view name(CommandKind c);

/// Thrown when a smart constructor targets a row lacking the effect, or an
/// Op node's index disagrees with the row.
struct ConstructionError : std::logic_error {
  using std::logic_error::logic_error;
};

struct Command {
  EffectId effect;
  CommandKind kind;
  // Call input for Rec; Unit otherwise.
  Value payload;

  static Command choice() { return {EffectId::Nondet, CommandKind::Choice, Unit{}}; }
  static Command fail() { return {EffectId::Nondet, CommandKind::Fail, Unit{}}; }
  static Command symbol_maybe() { return {EffectId::ParserMaybe, CommandKind::Symbol, Unit{}}; }
  static Command symbol_strict() { return {EffectId::ParserStrict, CommandKind::Symbol, Unit{}}; }
  static Command call(Value input) { return {EffectId::Rec, CommandKind::Call, std::move(input)}; }
};

/// Checks that the command belongs to its effect and carries a payload only
/// when it is a Rec call.
void validate(const Command& c);

/// Whether `response` lies in the command's admissible response set.
bool admissible(const Command& c, const Value& response);

/// Ordered list of effects; each effect occurs at most once.
class EffectRow {
 public:
  EffectRow() = default;
  EffectRow(std::initializer_list<EffectId> effects);
  explicit EffectRow(std::vector<EffectId> effects);

  std::size_t size() const { return effects_.size(); }
  EffectId operator[](std::size_t i) const { return effects_.at(i); }
  std::optional<std::size_t> find(EffectId e) const;
  /// Position of `e`; ConstructionError if absent.
  std::size_t index_of(EffectId e) const;
  bool contains(EffectId e) const { return find(e).has_value(); }

  const std::vector<EffectId>& effects() const { return effects_; }
  friend bool operator==(const EffectRow&, const EffectRow&) = default;

 private:
  std::vector<EffectId> effects_;
};

}  // namespace effparse
