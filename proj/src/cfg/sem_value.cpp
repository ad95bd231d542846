#include "effparse/cfg/sem_value.hpp"

namespace effparse::cfg {

std::strong_ordering operator<=>(const SemValue& a, const SemValue& b) {
  if (auto c = a.nonterminal.compare(b.nonterminal) <=> 0; c != 0) return c;
  if (auto c = a.production <=> b.production; c != 0) return c;
  for (std::size_t i = 0; i < a.children.size() && i < b.children.size(); ++i) {
    if (auto c = a.children[i] <=> b.children[i]; c != 0) return c;
  }
  return a.children.size() <=> b.children.size();
}

std::string to_sexpr(const SemValue& v) {
  std::string out = "(node " + v.nonterminal + " " + std::to_string(v.production);
  for (const auto& child : v.children) out += " " + to_sexpr(child);
  return out + ")";
}

}  // namespace effparse::cfg
