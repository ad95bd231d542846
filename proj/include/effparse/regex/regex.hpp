#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace effparse::regex {

/// Regular expression AST. Immutable; copies share structure.
class Regex {
 public:
  enum class Kind { Empty, Epsilon, Singleton, Alt, Cat, Star };

  static Regex empty();
  static Regex epsilon();
  static Regex singleton(char32_t c);
  static Regex alt(Regex l, Regex r);
  static Regex cat(Regex l, Regex r);
  static Regex star(Regex r);

  Kind kind() const { return node_->kind; }
  char32_t ch() const;
  const Regex& left() const;
  const Regex& right() const;
  // Body of a Star.
  const Regex& body() const;

  /// Node count.
  std::size_t size() const { return node_->size; }

  friend bool operator==(const Regex& a, const Regex& b);
  friend std::strong_ordering operator<=>(const Regex& a, const Regex& b);

 private:
  struct Node {
    Kind kind;
    char32_t ch = 0;
    std::vector<Regex> kids;
    std::size_t size = 1;
  };
  explicit Regex(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Parse-tree witness for a Regex. Shape against a regex is checked
/// dynamically by tree_shape_ok.
class ParseTree {
 public:
  enum class Kind { Unit, Char, Left, Right, Pair, List };

  static ParseTree unit();
  static ParseTree character(char32_t c);
  static ParseTree left(ParseTree t);
  static ParseTree right(ParseTree t);
  static ParseTree pair(ParseTree a, ParseTree b);
  static ParseTree list(std::vector<ParseTree> items);

  Kind kind() const { return node_->kind; }
  char32_t ch() const;
  // Payload of Left/Right.
  const ParseTree& inner() const;
  const ParseTree& first() const;
  const ParseTree& second() const;
  const std::vector<ParseTree>& items() const;

  friend bool operator==(const ParseTree& a, const ParseTree& b);
  friend std::strong_ordering operator<=>(const ParseTree& a, const ParseTree& b);

 private:
  struct Node {
    Kind kind;
    char32_t ch = 0;
    std::vector<ParseTree> kids;
  };
  explicit ParseTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// S-expression rendering: unit, (char a), (inl T), (inr T), (pair T T), (list T...).
std::string to_sexpr(const ParseTree& t);

}  // namespace effparse::regex
