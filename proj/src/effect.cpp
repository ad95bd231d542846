#include "effparse/effect.hpp"

#include <algorithm>
#include <string>

namespace effparse {

std::string_view name(EffectId e) {
  switch (e) {
    case EffectId::Nondet: return "Nondet";
    case EffectId::ParserMaybe: return "ParserMaybe";
    case EffectId::ParserStrict: return "ParserStrict";
    case EffectId::Rec: return "Rec";
  }
  return "?";
}

std::string_view name(CommandKind c) {
  switch (c) {
    case CommandKind::Choice: return "Choice";
    case CommandKind::Fail: return "Fail";
    case CommandKind::Symbol: return "Symbol";
    case CommandKind::Call: return "Call";
  }
  return "?";
}

void validate(const Command& c) {
  bool ok = false;
  switch (c.effect) {
    case EffectId::Nondet:
      ok = c.kind == CommandKind::Choice || c.kind == CommandKind::Fail;
      break;
    case EffectId::ParserMaybe:
    case EffectId::ParserStrict:
      ok = c.kind == CommandKind::Symbol;
      break;
    case EffectId::Rec:
      ok = c.kind == CommandKind::Call;
      break;
  }
  if (!ok) {
    throw ConstructionError(std::string("command ") + std::string(name(c.kind)) +
                            " does not belong to effect " + std::string(name(c.effect)));
  }
  if (c.effect != EffectId::Rec && !c.payload.is<Unit>()) {
    throw ConstructionError("only Rec commands carry a payload");
  }
}

bool admissible(const Command& c, const Value& response) {
  switch (c.kind) {
    case CommandKind::Choice: return response.is<bool>();
    case CommandKind::Fail: return false;
    case CommandKind::Symbol:
      if (c.effect == EffectId::ParserMaybe) return response.is<Unit>() || response.is<char32_t>();
      return response.is<char32_t>();
    case CommandKind::Call: return true;
  }
  return false;
}

EffectRow::EffectRow(std::initializer_list<EffectId> effects)
    : EffectRow(std::vector<EffectId>(effects)) {}

EffectRow::EffectRow(std::vector<EffectId> effects) : effects_(std::move(effects)) {
  for (std::size_t i = 0; i < effects_.size(); ++i) {
    if (std::find(effects_.begin() + static_cast<std::ptrdiff_t>(i) + 1, effects_.end(),
                  effects_[i]) != effects_.end()) {
      throw ConstructionError("effect " + std::string(name(effects_[i])) +
                              " occurs more than once in a row");
    }
  }
}

std::optional<std::size_t> EffectRow::find(EffectId e) const {
  auto it = std::find(effects_.begin(), effects_.end(), e);
  if (it == effects_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - effects_.begin());
}

std::size_t EffectRow::index_of(EffectId e) const {
  if (auto i = find(e)) return *i;
  throw ConstructionError("effect row lacks " + std::string(name(e)));
}

}  // namespace effparse
