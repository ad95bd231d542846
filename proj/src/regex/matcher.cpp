#include "effparse/regex/matcher.hpp"

#include "effparse/regex/oracle.hpp"

namespace effparse::regex {

const EffectRow& structural_row() {
  static const EffectRow row{EffectId::Rec, EffectId::Nondet};
  return row;
}

Computation all_splits(const EffectRow& row, TextView xs) {
  if (xs.empty()) return pure(SplitValue{});
  const char32_t x = xs.front();
  auto rest = fmap(
      [x](const Value& v) {
        const auto& s = v.as<SplitValue>();
        return Value(SplitValue{Text(1, x) + s.prefix, s.suffix});
      },
      all_splits(row, xs.substr(1)));
  return choice(row, pure(SplitValue{Text{}, Text(xs)}), rest);
}

Computation all_splits(TextView xs) {
  static const EffectRow row{EffectId::Nondet};
  return all_splits(row, xs);
}

Value match_input(const Regex& r, TextView xs) { return make_pair(Value(r), Value(Text(xs))); }

Computation match_structural(const Regex& r, TextView xs) {
  const EffectRow& row = structural_row();
  switch (r.kind()) {
    case Regex::Kind::Empty:
      return fail(row);
    case Regex::Kind::Epsilon:
      return xs.empty() ? pure(ParseTree::unit()) : fail(row);
    case Regex::Kind::Singleton:
      if (xs.size() == 1 && xs[0] == r.ch()) return pure(ParseTree::character(xs[0]));
      return fail(row);
    case Regex::Kind::Alt: {
      auto l = fmap([](const Value& t) { return Value(ParseTree::left(t.as<ParseTree>())); },
                    match_structural(r.left(), xs));
      auto rt = fmap([](const Value& t) { return Value(ParseTree::right(t.as<ParseTree>())); },
                     match_structural(r.right(), xs));
      return choice(row, l, rt);
    }
    case Regex::Kind::Cat: {
      Regex left = r.left();
      Regex right = r.right();
      return bind(all_splits(row, xs), [left, right](const Value& v) {
        const auto& s = v.as<SplitValue>();
        Text suffix = s.suffix;
        return bind(match_structural(left, s.prefix), [right, suffix](const Value& tl) {
          ParseTree a = tl.as<ParseTree>();
          return fmap([a](const Value& tr) { return Value(ParseTree::pair(a, tr.as<ParseTree>())); },
                      match_structural(right, suffix));
        });
      });
    }
    case Regex::Kind::Star: {
      if (xs.empty()) return pure(ParseTree::list({}));
      Regex unrolled = Regex::cat(r.body(), r);
      return fmap(
          [](const Value& v) {
            const auto& p = v.as<ParseTree>();
            if (p.kind() != ParseTree::Kind::Pair || p.second().kind() != ParseTree::Kind::List) {
              throw ShapeError("star unfolding expects a pair of an element and a list");
            }
            std::vector<ParseTree> items{p.first()};
            const auto& tail = p.second().items();
            items.insert(items.end(), tail.begin(), tail.end());
            return Value(ParseTree::list(std::move(items)));
          },
          call(row, match_input(unrolled, xs)));
    }
  }
  return fail(row);
}

RecursiveFn match_structural_fn() {
  return RecursiveFn{structural_row(), [](const Value& input) {
                       return match_structural(pair_first(input).as<Regex>(),
                                               pair_second(input).as<Text>());
                     }};
}

Invariant match_spec_invariant() {
  Invariant inv;
  inv.relation = [](const Value& input, const Value& output) {
    return output.is<ParseTree>() &&
           is_match(pair_first(input).as<Regex>(), pair_second(input).as<Text>(),
                    output.as<ParseTree>());
  };
  inv.enumerate = [](const Value& input) {
    std::vector<Value> out;
    for (auto& t : enumerate_matches(pair_first(input).as<Regex>(), pair_second(input).as<Text>())) {
      out.emplace_back(std::move(t));
    }
    return out;
  };
  return inv;
}

}  // namespace effparse::regex
