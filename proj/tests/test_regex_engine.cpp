#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "effparse/regex/derivative.hpp"
#include "effparse/regex/matcher.hpp"
#include "effparse/regex/oracle.hpp"
#include "effparse/regex/syntax.hpp"
#include "support/generators.hpp"

using namespace effparse;
using namespace effparse::regex;

namespace {

const std::vector<char32_t> kAB{U'a', U'b'};

Regex a() { return Regex::singleton(U'a'); }
Regex b() { return Regex::singleton(U'b'); }
Regex c() { return Regex::singleton(U'c'); }
ParseTree ch(char32_t x) { return ParseTree::character(x); }

std::set<ParseTree> as_set(const std::vector<ParseTree>& ts) { return {ts.begin(), ts.end()}; }

std::vector<ParseTree> structural(const Regex& r, TextView xs) {
  DemonicContext ctx;
  ctx.rec = match_spec_invariant();
  std::vector<ParseTree> out;
  for (const auto& o : results_demonic(match_structural(r, xs), ctx)) out.push_back(o.value.as<ParseTree>());
  return out;
}

}  // namespace

TEST_CASE("tree_shape_ok") {
  REQUIRE(tree_shape_ok(Regex::epsilon(), ParseTree::unit()));
  REQUIRE_FALSE(tree_shape_ok(Regex::empty(), ParseTree::unit()));
  REQUIRE_FALSE(tree_shape_ok(Regex::empty(), ch(U'a')));
  REQUIRE(tree_shape_ok(Regex::star(a()), ParseTree::list({ch(U'a'), ch(U'b')})));
  REQUIRE_FALSE(is_match(Regex::star(a()), U"ab", ParseTree::list({ch(U'a'), ch(U'b')})));
}

TEST_CASE("is_match") {
  REQUIRE(is_match(a(), U"a", ch(U'a')));
  REQUIRE_FALSE(is_match(Regex::epsilon(), U"a", ParseTree::unit()));
  REQUIRE(is_match(Regex::cat(a(), b()), U"ab", ParseTree::pair(ch(U'a'), ch(U'b'))));
  REQUIRE(is_match(Regex::star(Regex::epsilon()), U"", ParseTree::list({ParseTree::unit(), ParseTree::unit()})));
}

TEST_CASE("enumerate_matches") {
  REQUIRE(enumerate_matches(Regex::epsilon(), U"") == std::vector{ParseTree::unit()});
  auto both = Regex::alt(Regex::epsilon(), Regex::epsilon());
  REQUIRE(enumerate_matches(both, U"") ==
          std::vector{ParseTree::left(ParseTree::unit()), ParseTree::right(ParseTree::unit())});
  REQUIRE(enumerate_matches(Regex::star(a()), U"aa") ==
          std::vector{ParseTree::list({ch(U'a'), ch(U'a')})});

  auto star_eps = Regex::star(Regex::epsilon());
  REQUIRE(enumerate_matches(star_eps, U"").size() == 1);
  REQUIRE(enumerate_matches(star_eps, U"", EnumerationMode::bounded(2)).size() == 3);

  for (const auto& r : testsupport::regexes_up_to(4, kAB)) {
    for (const auto& s : testsupport::strings_up_to(3, kAB)) {
      for (std::size_t k : {0, 1}) {
        auto ts = enumerate_matches(r, s, EnumerationMode::bounded(k));
        REQUIRE(as_set(ts).size() == ts.size());
        for (const auto& t : ts) REQUIRE(is_match(r, s, t));
      }
    }
  }
}

TEST_CASE("has_no_star") {
  REQUIRE(has_no_star(Regex::epsilon()));
  REQUIRE_FALSE(has_no_star(Regex::star(Regex::empty())));
  REQUIRE_FALSE(has_no_star(Regex::cat(Regex::alt(a(), b()), Regex::star(c()))));
}

TEST_CASE("all_splits") {
  auto splits = [](TextView xs) {
    std::vector<SplitValue> out;
    for (const auto& o : results_demonic(all_splits(xs))) out.push_back(o.value.as<SplitValue>());
    return out;
  };
  REQUIRE(splits(U"") == std::vector<SplitValue>{{U"", U""}});
  REQUIRE(splits(U"ab") == std::vector<SplitValue>{{U"", U"ab"}, {U"a", U"b"}, {U"ab", U""}});

  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Text xs;
    const std::size_t n = rng() % 9;
    for (std::size_t k = 0; k < n; ++k) xs.push_back(U'a' + static_cast<char32_t>(rng() % 3));
    auto ss = splits(xs);
    REQUIRE(ss.size() == xs.size() + 1);
    for (const auto& s : ss) REQUIRE(s.prefix + s.suffix == xs);
  }
}

TEST_CASE("match_structural") {
  REQUIRE(match_structural(Regex::star(a()), U"").is_pure());
  REQUIRE(match_structural(Regex::star(a()), U"").value() == Value(ParseTree::list({})));
  REQUIRE(results_demonic(match_structural(c(), U"x")).empty());
  REQUIRE(structural(Regex::alt(a(), Regex::epsilon()), U"a") ==
          std::vector{ParseTree::left(ch(U'a'))});

  auto star = match_structural(Regex::star(a()), U"aa");
  REQUIRE_FALSE(star.is_pure());
  REQUIRE(star.index() == 0);
  REQUIRE(star.command().payload == match_input(Regex::cat(a(), Regex::star(a())), U"aa"));
}

TEST_CASE("match_spec_invariant") {
  auto inv = match_spec_invariant();
  REQUIRE(inv.relation(match_input(Regex::epsilon(), U""), Value(ParseTree::unit())));
  REQUIRE(inv.outputs(match_input(Regex::empty(), U"x")).empty());
  for (const auto& r : testsupport::regexes_up_to(3, kAB)) {
    for (const auto& s : testsupport::strings_up_to(2, kAB)) {
      auto in = match_input(r, s);
      for (const auto& o : inv.outputs(in)) REQUIRE(inv.relation(in, o));
    }
  }
}

TEST_CASE("nullable") {
  REQUIRE(nullable(Regex::epsilon()) == ParseTree::unit());
  REQUIRE_FALSE(nullable(a()));
  auto r = Regex::cat(Regex::star(a()), Regex::alt(Regex::epsilon(), b()));
  REQUIRE(nullable(r) == ParseTree::pair(ParseTree::list({}), ParseTree::left(ParseTree::unit())));
  for (const auto& q : testsupport::regexes_up_to(4, kAB)) {
    auto w = nullable(q);
    REQUIRE(w.has_value() == !enumerate_matches(q, U"").empty());
    if (w) REQUIRE(is_match(q, U"", *w));
  }
}

TEST_CASE("derivative") {
  REQUIRE(derivative(a(), U'a') == Regex::epsilon());
  REQUIRE(derivative(Regex::epsilon(), U'c') == Regex::empty());
  REQUIRE(derivative(Regex::star(a()), U'a') == Regex::cat(Regex::epsilon(), Regex::star(a())));
  REQUIRE(derivative(Regex::cat(Regex::epsilon(), a()), U'a') ==
          Regex::alt(Regex::cat(Regex::empty(), a()), Regex::epsilon()));
}

TEST_CASE("integral_tree") {
  REQUIRE(integral_tree(a(), U'a', ParseTree::unit()) == ch(U'a'));
  auto star_a = Regex::star(a());
  auto t = ParseTree::pair(ParseTree::unit(), ParseTree::list({ch(U'a')}));
  REQUIRE(integral_tree(star_a, U'a', t) == ParseTree::list({ch(U'a'), ch(U'a')}));
  REQUIRE_THROWS_AS(integral_tree(a(), U'b', ParseTree::unit()), ShapeError);
  REQUIRE_THROWS_AS(integral_tree(Regex::epsilon(), U'a', ParseTree::unit()), ShapeError);

  for (const auto& r : testsupport::regexes_up_to(4, kAB)) {
    for (char32_t x : kAB) {
      auto d = derivative(r, x);
      for (const auto& xs : testsupport::strings_up_to(3, kAB)) {
        for (const auto& dt : enumerate_matches(d, xs, EnumerationMode::bounded(1))) {
          auto back = integral_tree(r, x, dt);
          REQUIRE(tree_shape_ok(r, back));
          REQUIRE(is_match(r, x + xs, back));
        }
      }
    }
  }
}

TEST_CASE("dmatch") {
  REQUIRE(dmatch_run(Regex::empty(), U"").empty());
  REQUIRE(dmatch_run(Regex::star(Regex::epsilon()), U"") == std::vector{ParseTree::list({})});
  REQUIRE(dmatch_run(a(), U"a") == std::vector{ch(U'a')});
  REQUIRE(dmatch_run(Regex::epsilon(), U"x").empty());
  REQUIRE(dmatch_fn().row == dmatch_row());

  // The unhandled body reads a symbol first.
  auto m = dmatch_fn()(Value(a()));
  REQUIRE(m.index() == 1);
  REQUIRE(m.command().kind == CommandKind::Symbol);
}

TEST_CASE("dmatch agrees with the oracle") {
  for (const auto& r : testsupport::regexes_up_to(4, kAB)) {
    for (const auto& s : testsupport::strings_up_to(3, kAB)) {
      auto got = dmatch_run(r, s);
      auto bounded = as_set(enumerate_matches(r, s, EnumerationMode::bounded(1)));
      for (const auto& t : got) {
        REQUIRE(bounded.count(t) == 1);
        REQUIRE(tree_shape_ok(r, t));
      }
      REQUIRE(got.empty() == enumerate_matches(r, s).empty());
    }
  }
}

TEST_CASE("structural matching is sound") {
  for (const auto& r : testsupport::regexes_up_to(4, kAB)) {
    for (const auto& s : testsupport::strings_up_to(3, kAB)) {
      for (const auto& t : structural(r, s)) {
        REQUIRE(is_match(r, s, t));
        REQUIRE(tree_shape_ok(r, t));
      }
    }
  }
}

TEST_CASE("concrete syntax") {
  REQUIRE(parse_regex(U"a*") == Regex::star(a()));
  REQUIRE(parse_regex(U"ab|c") == Regex::alt(Regex::cat(a(), b()), c()));
  REQUIRE(parse_regex(U"a(b|c)") == Regex::cat(a(), Regex::alt(b(), c())));
  REQUIRE(parse_regex(U"") == Regex::epsilon());
  REQUIRE(parse_regex(U"a|") == Regex::alt(a(), Regex::epsilon()));
  REQUIRE(parse_regex(U"\\0\\e\\*") ==
          Regex::cat(Regex::cat(Regex::empty(), Regex::epsilon()), Regex::singleton(U'*')));
  REQUIRE(parse_regex(U"é") == Regex::singleton(U'é'));

  auto position = [](TextView src) {
    try {
      parse_regex(src);
    } catch (const SyntaxError& e) {
      return static_cast<long>(e.position);
    }
    return -1L;
  };
  REQUIRE(position(U"(") == 0);
  REQUIRE(position(U"ab)") == 2);
  REQUIRE(position(U"*a") == 0);
  REQUIRE(position(U"a\\") == 1);
  REQUIRE(position(U"\\q") == 0);

  REQUIRE(to_string(Regex::cat(Regex::epsilon(), Regex::star(a()))) == "\\e a*");
  REQUIRE(to_string(Regex::alt(a(), Regex::alt(b(), c()))) == "a|(b|c)");
  REQUIRE(to_string(Regex::star(Regex::cat(a(), Regex::singleton(U'|')))) == "(a \\|)*");
  REQUIRE(to_string(Regex::alt(Regex::empty(), Regex::epsilon())) == "\\0|\\e");
}

TEST_CASE("parse tree s-expressions") {
  auto t = ParseTree::pair(ParseTree::left(ch(U'a')), ParseTree::list({ParseTree::unit()}));
  REQUIRE(to_sexpr(t) == "(pair (inl (char a)) (list unit))");
  REQUIRE(to_sexpr(ParseTree::list({})) == "(list)");
  REQUIRE(to_sexpr(ParseTree::right(ch(U' '))) == "(inr (char \\s))");
}
