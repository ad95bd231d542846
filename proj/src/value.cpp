#include "effparse/value.hpp"

#include "effparse/text.hpp"

namespace effparse {

namespace {

std::strong_ordering compare_lists(const std::vector<Value>& a, const std::vector<Value>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

struct Compare {
  std::strong_ordering operator()(Unit, Unit) const { return std::strong_ordering::equal; }
  std::strong_ordering operator()(bool a, bool b) const { return a <=> b; }
  std::strong_ordering operator()(char32_t a, char32_t b) const { return a <=> b; }
  std::strong_ordering operator()(const Text& a, const Text& b) const {
    return a.compare(b) <=> 0;
  }
  std::strong_ordering operator()(const PairValue& a, const PairValue& b) const {
    if (auto c = *a.first <=> *b.first; c != 0) return c;
    return *a.second <=> *b.second;
  }
  std::strong_ordering operator()(const ListValue& a, const ListValue& b) const {
    return compare_lists(a.items, b.items);
  }
  std::strong_ordering operator()(const regex::ParseTree& a, const regex::ParseTree& b) const {
    return a <=> b;
  }
  std::strong_ordering operator()(const cfg::SemValue& a, const cfg::SemValue& b) const {
    return a <=> b;
  }
  std::strong_ordering operator()(const SplitValue& a, const SplitValue& b) const {
    if (auto c = a.prefix.compare(b.prefix) <=> 0; c != 0) return c;
    return a.suffix.compare(b.suffix) <=> 0;
  }
  std::strong_ordering operator()(const regex::Regex& a, const regex::Regex& b) const {
    return a <=> b;
  }
  template <typename A, typename B>
  std::strong_ordering operator()(const A&, const B&) const {
    return std::strong_ordering::equal;  // unreachable: indices already differ
  }
};

}  // namespace

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (auto c = a.v.index() <=> b.v.index(); c != 0) return c;
  return std::visit(Compare{}, a.v, b.v);
}

Value make_pair(Value a, Value b) {
  return Value(PairValue{std::make_shared<const Value>(std::move(a)),
                         std::make_shared<const Value>(std::move(b))});
}

Value make_list(std::vector<Value> items) { return Value(ListValue{std::move(items)}); }

const Value& pair_first(const Value& p) { return *p.as<PairValue>().first; }
const Value& pair_second(const Value& p) { return *p.as<PairValue>().second; }

namespace {

struct Render {
  std::string operator()(Unit) const { return "()"; }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(char32_t c) const { return "'" + to_utf8(c) + "'"; }
  std::string operator()(const Text& s) const { return "\"" + to_utf8(s) + "\""; }
  std::string operator()(const PairValue& p) const {
    return "(" + to_string(*p.first) + ", " + to_string(*p.second) + ")";
  }
  std::string operator()(const ListValue& l) const {
    std::string out = "[";
    for (std::size_t i = 0; i < l.items.size(); ++i) {
      if (i) out += ", ";
      out += to_string(l.items[i]);
    }
    return out + "]";
  }
  std::string operator()(const regex::ParseTree& t) const { return regex::to_sexpr(t); }
  std::string operator()(const cfg::SemValue& n) const { return cfg::to_sexpr(n); }
  std::string operator()(const SplitValue& s) const {
    return "split(\"" + to_utf8(s.prefix) + "\", \"" + to_utf8(s.suffix) + "\")";
  }
  std::string operator()(const regex::Regex& r) const {
    return "regex#" + std::to_string(r.size());
  }
};

}  // namespace

std::string to_string(const Value& v) { return std::visit(Render{}, v.v); }

}  // namespace effparse
