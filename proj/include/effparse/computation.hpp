#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "effparse/effect.hpp"
#include "effparse/value.hpp"

namespace effparse {

class Computation;

using Resumption = std::function<Computation(const Value&)>;
using Continuation = std::function<Computation(const Value&)>;

/// Free computation tree over an effect row: either a pure leaf or an
/// operation node holding a row index, a command and a resumption.
///
/// Resumptions are opaque, so two computations are only ever compared
/// observationally, by running them.
class Computation {
 public:
  static Computation pure(Value v);
  /// Validates that `row[index]` is the command's effect.
  static Computation op(const EffectRow& row, std::size_t index, Command cmd, Resumption k);

  bool is_pure() const { return node_->is_pure; }
  const Value& value() const;
  std::size_t index() const;
  const Command& command() const;
  /// Runs the resumption. Throws ShapeError for a response outside the
  /// command's admissible set (a Fail node admits none).
  Computation resume(const Value& response) const;
  /// Same op node with its resumption replaced.
  Computation with_resumption(Resumption k) const;

 private:
  struct Node {
    bool is_pure = true;
    Value value;
    std::size_t index = 0;
    Command command{EffectId::Nondet, CommandKind::Fail, Unit{}};
    Resumption resume;
  };
  explicit Computation(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Computation pure(Value v);
/// Grafts `k` at every pure leaf of `m`.
Computation bind(Computation m, Continuation k);
Computation fmap(std::function<Value(const Value&)> g, Computation m);

Computation fail(const EffectRow& row);
/// Left branch on response true, right on false.
Computation choice(const EffectRow& row, Computation l, Computation r);
/// Right fold of `choice` with `fail` as the unit.
Computation choices(const EffectRow& row, std::vector<Computation> ms);
Computation symbol_maybe(const EffectRow& row);
Computation symbol_strict(const EffectRow& row);
Computation call(const EffectRow& row, Value input);

}  // namespace effparse
