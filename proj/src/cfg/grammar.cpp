#include "effparse/cfg/grammar.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "effparse/text.hpp"

namespace effparse::cfg {

std::size_t Production::arity() const {
  return static_cast<std::size_t>(
      std::count_if(rhs.begin(), rhs.end(), [](const GSymbol& s) { return !s.is_term(); }));
}

Grammar::Grammar(std::vector<std::pair<std::string, std::vector<GSymbol>>> rules) {
  for (auto& [lhs, rhs] : rules) {
    if (!defines(lhs)) nts_.push_back(lhs);
    prods_.push_back(Production{std::move(lhs), std::move(rhs), prods_.size()});
  }
  for (const auto& p : prods_) {
    for (const auto& s : p.rhs) {
      if (!s.is_term() && !defines(s.name)) {
        throw GrammarError(0, "undefined nonterminal '" + s.name + "'");
      }
    }
  }
}

bool Grammar::defines(std::string_view nt) const {
  return std::find(nts_.begin(), nts_.end(), nt) != nts_.end();
}

namespace {

bool ident_start(char32_t c) {
  return (c >= U'A' && c <= U'Z') || (c >= U'a' && c <= U'z') || c == U'_';
}
bool ident_char(char32_t c) { return ident_start(c) || (c >= U'0' && c <= U'9'); }
bool space(char32_t c) { return c == U' ' || c == U'\t' || c == U'\r'; }

class LineReader {
 public:
  LineReader(Text line, std::size_t number) : s_(std::move(line)), line_(number) {}

  void skip() {
    while (pos_ < s_.size() && space(s_[pos_])) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == U'#') pos_ = s_.size();
  }
  bool done() {
    skip();
    return pos_ == s_.size();
  }
  bool peek(char32_t c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  std::string ident() {
    skip();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected a nonterminal name");
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return to_utf8(TextView(s_).substr(start, pos_ - start));
  }

  void arrow() {
    skip();
    if (s_.compare(pos_, 2, U"->") != 0) fail("expected '->'");
    pos_ += 2;
  }

  GSymbol item() {
    skip();
    if (s_[pos_] != U'\'') return GSymbol::nonterm(ident());
    ++pos_;
    if (pos_ >= s_.size()) fail("unterminated terminal");
    char32_t c = s_[pos_++];
    if (c == U'\\') {
      if (pos_ >= s_.size()) fail("unterminated terminal");
      switch (s_[pos_++]) {
        case U'\'': c = U'\''; break;
        case U'\\': c = U'\\'; break;
        case U'n': c = U'\n'; break;
        case U't': c = U'\t'; break;
        default: fail("unknown escape in terminal");
      }
    } else if (c == U'\'') {
      fail("empty terminal");
    }
    if (pos_ >= s_.size() || s_[pos_] != U'\'') fail("terminal must be a single character");
    ++pos_;
    return GSymbol::term(c);
  }

  void bar() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw GrammarError(line_, "line " + std::to_string(line_) + ": " + what);
  }

 private:
  Text s_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

}  // namespace

Grammar parse_grammar(std::string_view source) {
  std::vector<std::pair<std::string, std::vector<GSymbol>>> rules;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    ++number;
    Text line;
    try {
      line = from_utf8(source.substr(start, end - start));
    } catch (const std::invalid_argument&) {
      throw GrammarError(number, "line " + std::to_string(number) + ": invalid UTF-8");
    }
    start = end + 1;

    LineReader in(std::move(line), number);
    if (in.done()) continue;
    std::string lhs = in.ident();
    in.arrow();
    std::vector<GSymbol> rhs;
    while (!in.done()) {
      if (in.peek(U'|')) {
        in.bar();
        rules.emplace_back(lhs, std::move(rhs));
        rhs.clear();
        continue;
      }
      rhs.push_back(in.item());
    }
    rules.emplace_back(lhs, std::move(rhs));
  }
  return Grammar(std::move(rules));
}

Grammar load_grammar(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GrammarError(0, "cannot read grammar file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grammar(buf.str());
}

std::string to_string(const GSymbol& s) {
  if (!s.is_term()) return s.name;
  switch (s.ch) {
    case U'\'': return "'\\''";
    case U'\\': return "'\\\\'";
    case U'\n': return "'\\n'";
    case U'\t': return "'\\t'";
    default: return "'" + to_utf8(s.ch) + "'";
  }
}

std::string to_string(const Production& p) {
  std::string out = p.lhs + " ->";
  for (const auto& s : p.rhs) out += " " + to_string(s);
  return out;
}

}  // namespace effparse::cfg
