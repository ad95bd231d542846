#include "effparse/computation.hpp"

#include <string>

namespace effparse {

Computation Computation::pure(Value v) {
  Node n;
  n.value = std::move(v);
  return Computation(std::make_shared<const Node>(std::move(n)));
}

Computation Computation::op(const EffectRow& row, std::size_t index, Command cmd, Resumption k) {
  validate(cmd);
  if (index >= row.size()) {
    throw ConstructionError("op index " + std::to_string(index) + " outside an effect row of size " +
                            std::to_string(row.size()));
  }
  if (row[index] != cmd.effect) {
    throw ConstructionError("op index " + std::to_string(index) + " names " +
                            std::string(name(row[index])) + ", not " +
                            std::string(name(cmd.effect)));
  }
  if (!k) throw ConstructionError("op node needs a resumption");
  Node n;
  n.is_pure = false;
  n.index = index;
  n.command = std::move(cmd);
  n.resume = std::move(k);
  return Computation(std::make_shared<const Node>(std::move(n)));
}

const Value& Computation::value() const {
  if (!is_pure()) throw std::logic_error("value() on an op node");
  return node_->value;
}

std::size_t Computation::index() const {
  if (is_pure()) throw std::logic_error("index() on a pure leaf");
  return node_->index;
}

const Command& Computation::command() const {
  if (is_pure()) throw std::logic_error("command() on a pure leaf");
  return node_->command;
}

Computation Computation::resume(const Value& response) const {
  if (is_pure()) throw std::logic_error("resume() on a pure leaf");
  if (!admissible(node_->command, response)) {
    throw ShapeError("response " + to_string(response) + " is not admissible for " +
                     std::string(name(node_->command.kind)));
  }
  return node_->resume(response);
}

Computation pure(Value v) { return Computation::pure(std::move(v)); }

Computation Computation::with_resumption(Resumption k) const {
  if (is_pure()) throw std::logic_error("with_resumption() on a pure leaf");
  Node n = *node_;
  n.resume = std::move(k);
  return Computation(std::make_shared<const Node>(std::move(n)));
}

Computation bind(Computation m, Continuation k) {
  if (m.is_pure()) return k(m.value());
  auto shared_k = std::make_shared<const Continuation>(std::move(k));
  return m.with_resumption(
      [m, shared_k](const Value& x) { return bind(m.resume(x), *shared_k); });
}

Computation fmap(std::function<Value(const Value&)> g, Computation m) {
  return bind(std::move(m), [g = std::move(g)](const Value& x) { return pure(g(x)); });
}

Computation fail(const EffectRow& row) {
  return Computation::op(row, row.index_of(EffectId::Nondet), Command::fail(),
                         [](const Value&) -> Computation {
                           throw std::logic_error("fail has no responses");
                         });
}

Computation choice(const EffectRow& row, Computation l, Computation r) {
  return Computation::op(row, row.index_of(EffectId::Nondet), Command::choice(),
                         [l = std::move(l), r = std::move(r)](const Value& b) {
                           return b.as<bool>() ? l : r;
                         });
}

Computation choices(const EffectRow& row, std::vector<Computation> ms) {
  Computation acc = fail(row);
  for (auto it = ms.rbegin(); it != ms.rend(); ++it) acc = choice(row, *it, acc);
  return acc;
}

Computation symbol_maybe(const EffectRow& row) {
  return Computation::op(row, row.index_of(EffectId::ParserMaybe), Command::symbol_maybe(), pure);
}

Computation symbol_strict(const EffectRow& row) {
  return Computation::op(row, row.index_of(EffectId::ParserStrict), Command::symbol_strict(),
                         pure);
}

Computation call(const EffectRow& row, Value input) {
  return Computation::op(row, row.index_of(EffectId::Rec), Command::call(std::move(input)), pure);
}

}  // namespace effparse
