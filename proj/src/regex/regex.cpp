#include "effparse/regex/regex.hpp"

#include <stdexcept>

#include "effparse/text.hpp"

namespace effparse::regex {

namespace {

const Regex& kid(const std::vector<Regex>& kids, std::size_t i, const char* what) {
  if (i >= kids.size()) throw std::logic_error(std::string("regex has no ") + what);
  return kids[i];
}

}  // namespace

Regex Regex::empty() { return Regex(std::make_shared<const Node>(Node{Kind::Empty, 0, {}, 1})); }
Regex Regex::epsilon() { return Regex(std::make_shared<const Node>(Node{Kind::Epsilon, 0, {}, 1})); }
Regex Regex::singleton(char32_t c) {
  return Regex(std::make_shared<const Node>(Node{Kind::Singleton, c, {}, 1}));
}
Regex Regex::alt(Regex l, Regex r) {
  std::size_t n = 1 + l.size() + r.size();
  return Regex(std::make_shared<const Node>(Node{Kind::Alt, 0, {std::move(l), std::move(r)}, n}));
}
Regex Regex::cat(Regex l, Regex r) {
  std::size_t n = 1 + l.size() + r.size();
  return Regex(std::make_shared<const Node>(Node{Kind::Cat, 0, {std::move(l), std::move(r)}, n}));
}
Regex Regex::star(Regex r) {
  std::size_t n = 1 + r.size();
  return Regex(std::make_shared<const Node>(Node{Kind::Star, 0, {std::move(r)}, n}));
}

char32_t Regex::ch() const {
  if (kind() != Kind::Singleton) throw std::logic_error("regex is not a singleton");
  return node_->ch;
}
const Regex& Regex::left() const { return kid(node_->kids, 0, "left operand"); }
const Regex& Regex::right() const { return kid(node_->kids, 1, "right operand"); }
const Regex& Regex::body() const {
  if (kind() != Kind::Star) throw std::logic_error("regex is not a star");
  return node_->kids[0];
}

std::strong_ordering operator<=>(const Regex& a, const Regex& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.node_->ch <=> b.node_->ch; c != 0) return c;
  const auto& ka = a.node_->kids;
  const auto& kb = b.node_->kids;
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (auto c = ka[i] <=> kb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const Regex& a, const Regex& b) { return (a <=> b) == 0; }

ParseTree ParseTree::unit() { return ParseTree(std::make_shared<const Node>(Node{Kind::Unit, 0, {}})); }
ParseTree ParseTree::character(char32_t c) {
  return ParseTree(std::make_shared<const Node>(Node{Kind::Char, c, {}}));
}
ParseTree ParseTree::left(ParseTree t) {
  return ParseTree(std::make_shared<const Node>(Node{Kind::Left, 0, {std::move(t)}}));
}
ParseTree ParseTree::right(ParseTree t) {
  return ParseTree(std::make_shared<const Node>(Node{Kind::Right, 0, {std::move(t)}}));
}
ParseTree ParseTree::pair(ParseTree a, ParseTree b) {
  return ParseTree(std::make_shared<const Node>(Node{Kind::Pair, 0, {std::move(a), std::move(b)}}));
}
ParseTree ParseTree::list(std::vector<ParseTree> items) {
  return ParseTree(std::make_shared<const Node>(Node{Kind::List, 0, std::move(items)}));
}

char32_t ParseTree::ch() const {
  if (kind() != Kind::Char) throw std::logic_error("tree is not a char");
  return node_->ch;
}
const ParseTree& ParseTree::inner() const {
  if (kind() != Kind::Left && kind() != Kind::Right) throw std::logic_error("tree is not inl/inr");
  return node_->kids[0];
}
const ParseTree& ParseTree::first() const {
  if (kind() != Kind::Pair) throw std::logic_error("tree is not a pair");
  return node_->kids[0];
}
const ParseTree& ParseTree::second() const {
  if (kind() != Kind::Pair) throw std::logic_error("tree is not a pair");
  return node_->kids[1];
}
const std::vector<ParseTree>& ParseTree::items() const {
  if (kind() != Kind::List) throw std::logic_error("tree is not a list");
  return node_->kids;
}

std::strong_ordering operator<=>(const ParseTree& a, const ParseTree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.node_->ch <=> b.node_->ch; c != 0) return c;
  const auto& ka = a.node_->kids;
  const auto& kb = b.node_->kids;
  for (std::size_t i = 0; i < ka.size() && i < kb.size(); ++i) {
    if (auto c = ka[i] <=> kb[i]; c != 0) return c;
  }
  return ka.size() <=> kb.size();
}

bool operator==(const ParseTree& a, const ParseTree& b) { return (a <=> b) == 0; }

namespace {

void escape_char(std::string& out, char32_t c) {
  switch (c) {
    case U'(': out += "\\("; return;
    case U')': out += "\\)"; return;
    case U'\\': out += "\\\\"; return;
    case U' ': out += "\\s"; return;
    case U'\n': out += "\\n"; return;
    case U'\t': out += "\\t"; return;
    default: out += to_utf8(c);
  }
}

void write_sexpr(std::string& out, const ParseTree& t) {
  switch (t.kind()) {
    case ParseTree::Kind::Unit:
      out += "unit";
      return;
    case ParseTree::Kind::Char:
      out += "(char ";
      escape_char(out, t.ch());
      out += ')';
      return;
    case ParseTree::Kind::Left:
    case ParseTree::Kind::Right:
      out += t.kind() == ParseTree::Kind::Left ? "(inl " : "(inr ";
      write_sexpr(out, t.inner());
      out += ')';
      return;
    case ParseTree::Kind::Pair:
      out += "(pair ";
      write_sexpr(out, t.first());
      out += ' ';
      write_sexpr(out, t.second());
      out += ')';
      return;
    case ParseTree::Kind::List:
      out += "(list";
      for (const auto& item : t.items()) {
        out += ' ';
        write_sexpr(out, item);
      }
      out += ')';
      return;
  }
}

}  // namespace

std::string to_sexpr(const ParseTree& t) {
  std::string out;
  write_sexpr(out, t);
  return out;
}

}  // namespace effparse::regex
