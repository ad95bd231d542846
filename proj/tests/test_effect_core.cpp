#include <catch_amalgamated.hpp>

#include "effparse/handlers.hpp"
#include "effparse/wp.hpp"
#include "support/generators.hpp"

using namespace effparse;
using testsupport::T;

namespace {

const EffectRow kNondet{EffectId::Nondet};
const EffectRow kStrict{EffectId::Nondet, EffectId::ParserStrict};
const EffectRow kMaybe{EffectId::ParserMaybe, EffectId::Nondet};

std::vector<Value> results(const Computation& m) { return distinct_values(results_demonic(m)); }

std::vector<Value> in_order(const Computation& m) {
  std::vector<Value> out;
  for (const auto& o : results_demonic(m)) out.push_back(o.value);
  return out;
}

Value str(const char* s) { return Value(T(s)); }

}  // namespace

TEST_CASE("effect rows reject duplicates and report positions") {
  EffectRow row{EffectId::Rec, EffectId::Nondet};
  REQUIRE(row.size() == 2);
  REQUIRE(row.index_of(EffectId::Nondet) == 1);
  REQUIRE_FALSE(row.contains(EffectId::ParserStrict));
  REQUIRE_THROWS_AS(row.index_of(EffectId::ParserStrict), ConstructionError);
  REQUIRE_THROWS_AS((EffectRow{EffectId::Nondet, EffectId::Nondet}), ConstructionError);
}

TEST_CASE("commands admit exactly their responses") {
  REQUIRE(admissible(Command::choice(), Value(true)));
  REQUIRE_FALSE(admissible(Command::choice(), Value(U'a')));
  REQUIRE_FALSE(admissible(Command::fail(), Value(true)));
  REQUIRE(admissible(Command::symbol_maybe(), Value(Unit{})));
  REQUIRE(admissible(Command::symbol_maybe(), Value(U'x')));
  REQUIRE(admissible(Command::symbol_strict(), Value(U'x')));
  REQUIRE_FALSE(admissible(Command::symbol_strict(), Value(Unit{})));
  REQUIRE(admissible(Command::call(str("i")), str("anything")));
  REQUIRE_THROWS(validate(Command{EffectId::Nondet, CommandKind::Symbol, Unit{}}));
}

TEST_CASE("op nodes must index their own effect") {
  auto k = [](const Value& v) { return pure(v); };
  REQUIRE_THROWS_AS(Computation::op(kNondet, 0, Command::symbol_strict(), k), ConstructionError);
  REQUIRE_THROWS_AS(Computation::op(kNondet, 3, Command::choice(), k), ConstructionError);
  REQUIRE_THROWS_AS(symbol_strict(kNondet), ConstructionError);
  REQUIRE_THROWS_AS(choice(kNondet, pure(Unit{}), pure(Unit{})).resume(Value(U'a')), ShapeError);
  REQUIRE_THROWS_AS(fail(kNondet).resume(Value(true)), ShapeError);
}

TEST_CASE("pure") {
  REQUIRE(run_parser(pure(Unit{}), U"") == std::vector<std::pair<Value, Text>>{{Value(Unit{}), U""}});
  REQUIRE(results(pure(Value(U'a'))) == std::vector<Value>{Value(U'a')});
}

TEST_CASE("bind grafts at the leaves") {
  auto k = [](const Value& v) {
    return choice(kNondet, pure(v), pure(Value(!v.as<bool>())));
  };
  REQUIRE(in_order(bind(pure(Value(true)), k)) == in_order(k(Value(true))));
  REQUIRE(results(bind(fail(kNondet), k)).empty());

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto m = testsupport::random_nondet(seed, 4);
    auto f = testsupport::random_continuation(seed * 7 + 1, 2);
    auto g = testsupport::random_continuation(seed * 7 + 2, 2);
    auto lhs = bind(bind(m, f), g);
    auto rhs = bind(m, [f, g](const Value& x) { return bind(f(x), g); });
    REQUIRE(in_order(lhs) == in_order(rhs));
    REQUIRE(in_order(bind(m, [](const Value& v) { return pure(v); })) == in_order(m));
  }
}

TEST_CASE("fmap") {
  auto id = [](const Value& v) { return v; };
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto m = testsupport::random_nondet(seed, 4);
    REQUIRE(in_order(fmap(id, m)) == in_order(m));
  }
  auto wrap = [](const Value& v) { return Value(regex::ParseTree::left(v.as<regex::ParseTree>())); };
  REQUIRE(in_order(fmap(wrap, pure(regex::ParseTree::unit()))) ==
          std::vector<Value>{Value(regex::ParseTree::left(regex::ParseTree::unit()))});
  REQUIRE(results(fmap(wrap, fail(kNondet))).empty());
}

TEST_CASE("fail under demonic and angelic semantics") {
  REQUIRE(results_demonic(fail(kNondet)).empty());
  Post never = [](const Value&) { return false; };
  Post always = [](const Value&) { return true; };
  REQUIRE(wp(SemanticsRow({pt_all()}), fail(kNondet), never));
  REQUIRE_FALSE(wp(SemanticsRow({pt_any()}), fail(kNondet), always));
}

TEST_CASE("choice") {
  auto m = choice(kNondet, pure(str("1")), pure(str("2")));
  Post is_one = [](const Value& v) { return v == Value(T("1")); };
  REQUIRE_FALSE(wp(SemanticsRow({pt_all()}), m, is_one));
  REQUIRE(wp(SemanticsRow({pt_any()}), m, is_one));
  REQUIRE(in_order(m) == std::vector<Value>{str("1"), str("2")});
  REQUIRE(in_order(choice(kNondet, m, fail(kNondet))) == in_order(m));
}

TEST_CASE("choices") {
  REQUIRE(results(choices(kNondet, {})).empty());
  REQUIRE(in_order(choices(kNondet, {pure(str("a"))})) == std::vector<Value>{str("a")});
  REQUIRE(in_order(choices(kNondet, {pure(str("a")), pure(str("b")), pure(str("c"))})) ==
          std::vector<Value>{str("a"), str("b"), str("c")});
}

TEST_CASE("symbol_maybe under the lookahead handler") {
  REQUIRE(h_parser(Command::symbol_maybe(), U"") == std::pair{Value(Unit{}), Text{}});
  REQUIRE(h_parser(Command::symbol_maybe(), U"ab") == std::pair{Value(U'a'), Text(U"b")});

  auto twice = bind(symbol_maybe(kMaybe), [](const Value& first) {
    return fmap([first](const Value& second) { return make_pair(first, second); },
                symbol_maybe(kMaybe));
  });
  DemonicContext ctx;
  ctx.state = Text(U"a");
  auto rs = results_demonic(twice, ctx);
  REQUIRE(rs.size() == 1);
  REQUIRE(rs[0].value == make_pair(Value(U'a'), Value(Unit{})));
  REQUIRE(rs[0].state.empty());
}

TEST_CASE("symbol_strict under run_parser") {
  auto sym = symbol_strict(kStrict);
  REQUIRE(run_parser(sym, U"x") == std::vector<std::pair<Value, Text>>{{Value(U'x'), U""}});
  REQUIRE(run_parser(sym, U"").empty());
  auto second = bind(sym, [](const Value&) { return symbol_strict(kStrict); });
  REQUIRE(run_parser(second, U"ab") == std::vector<std::pair<Value, Text>>{{Value(U'b'), U""}});
}

TEST_CASE("call") {
  const EffectRow row{EffectId::Rec, EffectId::Nondet};
  // Drops one character per call until the string is empty.
  RecursiveFn f{row, [row](const Value& v) {
                  Text s = v.as<Text>();
                  if (s.empty()) return pure(str("done"));
                  return call(row, Value(s.substr(1)));
                }};
  auto m = call(row, str("aa"));
  REQUIRE_FALSE(is_done(run_with_fuel(f, str("aa"), 1)));
  REQUIRE(run_with_fuel(f, str("a"), 1) == FuelOutcome(Done{{{str("done"), U""}}}));

  Invariant inv;
  inv.relation = [](const Value&, const Value& o) { return o == Value(T("done")); };
  inv.enumerate = [](const Value&) { return std::vector<Value>{Value(T("done"))}; };
  Post is_done_str = [](const Value& v) { return v == Value(T("done")); };
  REQUIRE(wp(SemanticsRow({pt_rec(inv), pt_all()}), m, is_done_str));

  SemanticsRow tail({pt_all()});
  REQUIRE_FALSE(terminates_in(tail, f, m, 0));
  REQUIRE_FALSE(terminates_in(tail, f, m, 2));
  REQUIRE(terminates_in(tail, f, m, 3));
}
