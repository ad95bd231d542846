#include "effparse/regex/derivative.hpp"

#include <stdexcept>

#include "effparse/regex/matcher.hpp"

namespace effparse::regex {

std::optional<ParseTree> nullable(const Regex& r) {
  switch (r.kind()) {
    case Regex::Kind::Empty:
    case Regex::Kind::Singleton:
      return std::nullopt;
    case Regex::Kind::Epsilon:
      return ParseTree::unit();
    case Regex::Kind::Alt:
      if (auto l = nullable(r.left())) return ParseTree::left(*l);
      if (auto rt = nullable(r.right())) return ParseTree::right(*rt);
      return std::nullopt;
    case Regex::Kind::Cat: {
      auto l = nullable(r.left());
      if (!l) return std::nullopt;
      auto rt = nullable(r.right());
      if (!rt) return std::nullopt;
      return ParseTree::pair(*l, *rt);
    }
    case Regex::Kind::Star:
      return ParseTree::list({});
  }
  return std::nullopt;
}

Regex derivative(const Regex& r, char32_t c) {
  switch (r.kind()) {
    case Regex::Kind::Empty:
    case Regex::Kind::Epsilon:
      return Regex::empty();
    case Regex::Kind::Singleton:
      return r.ch() == c ? Regex::epsilon() : Regex::empty();
    case Regex::Kind::Alt:
      return Regex::alt(derivative(r.left(), c), derivative(r.right(), c));
    case Regex::Kind::Cat: {
      Regex dl = Regex::cat(derivative(r.left(), c), r.right());
      if (nullable(r.left())) return Regex::alt(dl, derivative(r.right(), c));
      return dl;
    }
    case Regex::Kind::Star:
      return Regex::cat(derivative(r.body(), c), r);
  }
  return Regex::empty();
}

namespace {

[[noreturn]] void misfit() { throw ShapeError("tree does not fit the derivative"); }

}  // namespace

ParseTree integral_tree(const Regex& r, char32_t c, const ParseTree& t) {
  using T = ParseTree::Kind;
  switch (r.kind()) {
    case Regex::Kind::Empty:
    case Regex::Kind::Epsilon:
      misfit();
    case Regex::Kind::Singleton:
      if (r.ch() != c || t.kind() != T::Unit) misfit();
      return ParseTree::character(c);
    case Regex::Kind::Alt:
      if (t.kind() == T::Left) return ParseTree::left(integral_tree(r.left(), c, t.inner()));
      if (t.kind() == T::Right) return ParseTree::right(integral_tree(r.right(), c, t.inner()));
      misfit();
    case Regex::Kind::Cat: {
      auto witness = nullable(r.left());
      const ParseTree* pair = &t;
      if (witness) {
        if (t.kind() == T::Right) return ParseTree::pair(*witness, integral_tree(r.right(), c, t.inner()));
        if (t.kind() != T::Left) misfit();
        pair = &t.inner();
      }
      if (pair->kind() != T::Pair) misfit();
      return ParseTree::pair(integral_tree(r.left(), c, pair->first()), pair->second());
    }
    case Regex::Kind::Star: {
      if (t.kind() != T::Pair || t.second().kind() != T::List) misfit();
      std::vector<ParseTree> items{integral_tree(r.body(), c, t.first())};
      const auto& tail = t.second().items();
      items.insert(items.end(), tail.begin(), tail.end());
      return ParseTree::list(std::move(items));
    }
  }
  misfit();
}

const EffectRow& dmatch_row() {
  static const EffectRow row{EffectId::Rec, EffectId::ParserMaybe, EffectId::Nondet};
  return row;
}

RecursiveFn dmatch_fn() {
  return RecursiveFn{dmatch_row(), [](const Value& input) {
                       Regex r = input.as<Regex>();
                       const EffectRow& row = dmatch_row();
                       return bind(symbol_maybe(row), [r, &row](const Value& sym) {
                         if (sym.is<char32_t>()) {
                           const char32_t x = sym.as<char32_t>();
                           return fmap(
                               [r, x](const Value& t) {
                                 return Value(integral_tree(r, x, t.as<ParseTree>()));
                               },
                               call(row, Value(derivative(r, x))));
                         }
                         if (auto t = nullable(r)) return pure(*t);
                         return fail(row);
                       });
                     }};
}

RecursiveFn dmatch_prime() {
  static const RecursiveFn f = handle_rec(h_parser, dmatch_fn());
  return f;
}

std::vector<ParseTree> dmatch_run(const Regex& r, TextView s) {
  auto outcome = run_with_fuel(dmatch_prime(), match_input(r, s), s.size());
  if (!is_done(outcome)) {
    throw std::logic_error("dmatch ran out of fuel; the termination bound is broken");
  }
  std::vector<ParseTree> out;
  for (const auto& o : std::get<Done>(outcome).results) out.push_back(o.value.as<ParseTree>());
  return out;
}

}  // namespace effparse::regex
