#include "effparse/regex/syntax.hpp"

#include <optional>

namespace effparse::regex {

namespace {

bool is_meta(char32_t c) {
  return c == U'|' || c == U'*' || c == U'(' || c == U')' || c == U'\\';
}

class RegexParser {
 public:
  explicit RegexParser(TextView src) : src_(src) {}

  Regex parse() {
    Regex r = alternation();
    if (pos_ < src_.size()) {
      // Only a stray ')' can stop alternation early.
      throw SyntaxError(pos_, "unmatched ')'");
    }
    return r;
  }

 private:
  Regex alternation() {
    Regex r = sequence();
    while (pos_ < src_.size() && src_[pos_] == U'|') {
      ++pos_;
      r = Regex::alt(r, sequence());
    }
    return r;
  }

  Regex sequence() {
    std::optional<Regex> acc;
    while (pos_ < src_.size() && src_[pos_] != U'|' && src_[pos_] != U')') {
      Regex item = postfix();
      acc = acc ? Regex::cat(*acc, item) : item;
    }
    return acc ? *acc : Regex::epsilon();
  }

  Regex postfix() {
    Regex r = atom();
    while (pos_ < src_.size() && src_[pos_] == U'*') {
      ++pos_;
      r = Regex::star(r);
    }
    return r;
  }

  Regex atom() {
    const std::size_t start = pos_;
    char32_t c = src_[pos_++];
    switch (c) {
      case U'(': {
        Regex inner = alternation();
        if (pos_ >= src_.size() || src_[pos_] != U')') {
          throw SyntaxError(start, "unbalanced '('");
        }
        ++pos_;
        return inner;
      }
      case U'*':
        throw SyntaxError(start, "'*' has nothing to repeat");
      case U'\\': {
        if (pos_ >= src_.size()) throw SyntaxError(start, "dangling '\\'");
        char32_t e = src_[pos_++];
        if (e == U'0') return Regex::empty();
        if (e == U'e') return Regex::epsilon();
        if (is_meta(e)) return Regex::singleton(e);
        throw SyntaxError(start, "unknown escape");
      }
      default:
        return Regex::singleton(c);
    }
  }

  TextView src_;
  std::size_t pos_ = 0;
};

enum Prec { kAlt = 0, kCat = 1, kStar = 2 };

void print(std::string& out, const Regex& r, int ctx) {
  switch (r.kind()) {
    case Regex::Kind::Empty:
      out += "\\0";
      return;
    case Regex::Kind::Epsilon:
      out += "\\e";
      return;
    case Regex::Kind::Singleton:
      if (is_meta(r.ch())) out += '\\';
      out += to_utf8(r.ch());
      return;
    case Regex::Kind::Alt:
      if (ctx > kAlt) out += '(';
      print(out, r.left(), kAlt);
      out += '|';
      print(out, r.right(), kCat);
      if (ctx > kAlt) out += ')';
      return;
    case Regex::Kind::Cat:
      if (ctx > kCat) out += '(';
      print(out, r.left(), kCat);
      out += ' ';
      print(out, r.right(), kStar);
      if (ctx > kCat) out += ')';
      return;
    case Regex::Kind::Star:
      print(out, r.body(), kStar);
      out += '*';
      return;
  }
}

}  // namespace

Regex parse_regex(TextView source) { return RegexParser(source).parse(); }

std::string to_string(const Regex& r) {
  std::string out;
  print(out, r, kAlt);
  return out;
}

}  // namespace effparse::regex
