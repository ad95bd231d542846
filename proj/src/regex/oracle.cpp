#include "effparse/regex/oracle.hpp"

namespace effparse::regex {

bool tree_shape_ok(const Regex& r, const ParseTree& t) {
  using K = Regex::Kind;
  using T = ParseTree::Kind;
  switch (r.kind()) {
    case K::Empty:
      return false;
    case K::Epsilon:
      return t.kind() == T::Unit;
    case K::Singleton:
      return t.kind() == T::Char;
    case K::Alt:
      if (t.kind() == T::Left) return tree_shape_ok(r.left(), t.inner());
      if (t.kind() == T::Right) return tree_shape_ok(r.right(), t.inner());
      return false;
    case K::Cat:
      return t.kind() == T::Pair && tree_shape_ok(r.left(), t.first()) &&
             tree_shape_ok(r.right(), t.second());
    case K::Star:
      if (t.kind() != T::List) return false;
      for (const auto& item : t.items()) {
        if (!tree_shape_ok(r.body(), item)) return false;
      }
      return true;
  }
  return false;
}

namespace {

bool star_matches(const Regex& body, TextView s, const std::vector<ParseTree>& items,
                  std::size_t from) {
  if (from == items.size()) return s.empty();  // StarNil
  // StarConcat: Cat(body, Star body) with the tail list.
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (is_match(body, s.substr(0, i), items[from]) &&
        star_matches(body, s.substr(i), items, from + 1)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_match(const Regex& r, TextView s, const ParseTree& t) {
  using K = Regex::Kind;
  using T = ParseTree::Kind;
  switch (r.kind()) {
    case K::Empty:
      return false;
    case K::Epsilon:
      return s.empty() && t.kind() == T::Unit;
    case K::Singleton:
      return s.size() == 1 && s[0] == r.ch() && t.kind() == T::Char && t.ch() == r.ch();
    case K::Alt:
      if (t.kind() == T::Left) return is_match(r.left(), s, t.inner());
      if (t.kind() == T::Right) return is_match(r.right(), s, t.inner());
      return false;
    case K::Cat:
      if (t.kind() != T::Pair) return false;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (is_match(r.left(), s.substr(0, i), t.first()) &&
            is_match(r.right(), s.substr(i), t.second())) {
          return true;
        }
      }
      return false;
    case K::Star:
      return t.kind() == T::List && star_matches(r.body(), s, t.items(), 0);
  }
  return false;
}

namespace {

void append_yield(Text& out, const ParseTree& t) {
  switch (t.kind()) {
    case ParseTree::Kind::Unit: return;
    case ParseTree::Kind::Char: out.push_back(t.ch()); return;
    case ParseTree::Kind::Left:
    case ParseTree::Kind::Right: append_yield(out, t.inner()); return;
    case ParseTree::Kind::Pair:
      append_yield(out, t.first());
      append_yield(out, t.second());
      return;
    case ParseTree::Kind::List:
      for (const auto& item : t.items()) append_yield(out, item);
      return;
  }
}

class Enumerator {
 public:
  explicit Enumerator(EnumerationMode mode) : mode_(mode) {}

  std::vector<ParseTree> all(const Regex& r, TextView s) {
    using K = Regex::Kind;
    std::vector<ParseTree> out;
    switch (r.kind()) {
      case K::Empty:
        break;
      case K::Epsilon:
        if (s.empty()) out.push_back(ParseTree::unit());
        break;
      case K::Singleton:
        if (s.size() == 1 && s[0] == r.ch()) out.push_back(ParseTree::character(r.ch()));
        break;
      case K::Alt:
        for (auto& t : all(r.left(), s)) out.push_back(ParseTree::left(std::move(t)));
        for (auto& t : all(r.right(), s)) out.push_back(ParseTree::right(std::move(t)));
        break;
      case K::Cat:
        for (std::size_t i = 0; i <= s.size(); ++i) {
          auto lefts = all(r.left(), s.substr(0, i));
          if (lefts.empty()) continue;
          auto rights = all(r.right(), s.substr(i));
          for (const auto& a : lefts) {
            for (const auto& b : rights) out.push_back(ParseTree::pair(a, b));
          }
        }
        break;
      case K::Star:
        for (auto& items : star(r.body(), s, mode_.empty_iterations)) {
          out.push_back(ParseTree::list(std::move(items)));
        }
        break;
    }
    return out;
  }

 private:
  std::vector<std::vector<ParseTree>> star(const Regex& body, TextView s, std::size_t empties) {
    std::vector<std::vector<ParseTree>> out;
    if (s.empty()) out.emplace_back();
    for (std::size_t i = 0; i <= s.size(); ++i) {
      if (i == 0 && empties == 0) continue;
      auto heads = all(body, s.substr(0, i));
      if (heads.empty()) continue;
      auto tails = star(body, s.substr(i), i == 0 ? empties - 1 : empties);
      for (const auto& h : heads) {
        for (const auto& tail : tails) {
          std::vector<ParseTree> items;
          items.reserve(tail.size() + 1);
          items.push_back(h);
          items.insert(items.end(), tail.begin(), tail.end());
          out.push_back(std::move(items));
        }
      }
    }
    return out;
  }

  EnumerationMode mode_;
};

}  // namespace

Text yield(const ParseTree& t) {
  Text out;
  append_yield(out, t);
  return out;
}

std::vector<ParseTree> enumerate_matches(const Regex& r, TextView s, EnumerationMode mode) {
  return Enumerator(mode).all(r, s);
}

bool has_no_star(const Regex& r) {
  switch (r.kind()) {
    case Regex::Kind::Star: return false;
    case Regex::Kind::Alt:
    case Regex::Kind::Cat: return has_no_star(r.left()) && has_no_star(r.right());
    default: return true;
  }
}

}  // namespace effparse::regex
