#include "effparse/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "effparse/cfg/left_recursion.hpp"
#include "effparse/cfg/parser.hpp"
#include "effparse/regex/derivative.hpp"
#include "effparse/regex/matcher.hpp"
#include "effparse/regex/oracle.hpp"
#include "effparse/regex/syntax.hpp"

namespace effparse::cli {

namespace {

using nlohmann::json;

json to_json(const regex::ParseTree& t) {
  using K = regex::ParseTree::Kind;
  switch (t.kind()) {
    case K::Unit: return json::array({"unit"});
    case K::Char: return json::array({"char", to_utf8(t.ch())});
    case K::Left: return json::array({"inl", to_json(t.inner())});
    case K::Right: return json::array({"inr", to_json(t.inner())});
    case K::Pair: return json::array({"pair", to_json(t.first()), to_json(t.second())});
    case K::List: {
      json j = json::array({"list"});
      for (const auto& item : t.items()) j.push_back(to_json(item));
      return j;
    }
  }
  return nullptr;
}

json to_json(const cfg::SemValue& v) {
  json j = json::array({"node", v.nonterminal, v.production});
  for (const auto& c : v.children) j.push_back(to_json(c));
  return j;
}

struct Options {
  std::optional<std::size_t> fuel;
  std::string format = "sexpr";
  std::optional<std::size_t> max_results;
};

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--fuel", o.fuel, "Recursive-call budget");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"sexpr", "json-lines"}));
  cmd->add_option("--max-results", o.max_results, "Print at most this many results");
}

template <typename T>
int emit(const std::vector<T>& results, const Options& o, std::ostream& out, std::ostream& err) {
  std::size_t shown = results.size();
  if (o.max_results && *o.max_results < shown) shown = *o.max_results;
  for (std::size_t i = 0; i < shown; ++i) {
    if (o.format == "json-lines") {
      out << to_json(results[i]).dump() << '\n';
    } else {
      out << to_sexpr(results[i]) << '\n';
    }
  }
  if (shown < results.size()) {
    err << "showing " << shown << " of " << results.size() << " results\n";
  }
  return results.empty() ? kNone : kFound;
}

Text decode(const std::string& arg, const char* what) {
  try {
    return from_utf8(arg);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError(std::string(what) + " is not valid UTF-8");
  }
}

regex::Regex read_regex(const std::string& source) {
  return regex::parse_regex(decode(source, "regex"));
}

std::vector<regex::ParseTree> trees(const FuelOutcome& outcome) {
  std::vector<regex::ParseTree> out;
  for (const auto& o : std::get<Done>(outcome).results) out.push_back(o.value.as<regex::ParseTree>());
  return out;
}

int cmd_match(const std::string& source, const std::string& input_arg, const std::string& engine,
              const Options& o, std::ostream& out, std::ostream& err) {
  regex::Regex r = read_regex(source);
  Text input = decode(input_arg, "input");
  const Value arg = regex::match_input(r, input);
  FuelOutcome outcome;
  if (engine == "structural") {
    std::size_t fuel = o.fuel.value_or(0);
    if (!regex::has_no_star(r)) {
      if (!o.fuel) {
        err << "error: the structural engine needs --fuel for a regex with a star\n";
        return kUsage;
      }
      err << "warning: structural matching of a star may diverge; fuel " << fuel << "\n";
    }
    outcome = run_with_fuel(regex::match_structural_fn(), arg, fuel);
  } else {
    outcome = run_with_fuel(regex::dmatch_prime(), arg, o.fuel.value_or(input.size()));
  }
  if (!is_done(outcome)) {
    err << "fuel exhausted\n";
    return kExhausted;
  }
  return emit(trees(outcome), o, out, err);
}

int cmd_derive(const std::string& source, const std::string& word, std::ostream& out) {
  regex::Regex r = read_regex(source);
  out << regex::to_string(r) << '\n';
  for (char32_t c : decode(word, "string")) {
    r = regex::derivative(r, c);
    out << regex::to_string(r) << '\n';
  }
  out << "nullable: " << (regex::nullable(r) ? "yes" : "no") << '\n';
  return kFound;
}

int cmd_cfg_check(const std::string& path, std::ostream& out) {
  auto g = cfg::load_grammar(path);
  auto report = cfg::chain_bound(g);
  for (const auto& l : report.links) {
    out << "link: " << l.from << " -> " << l.to << " (production " << l.production << ")\n";
  }
  if (report.cyclic) {
    out << "cyclic: " << cfg::format_cycle(report.witness) << '\n';
    return kNone;
  }
  out << "bound: " << *report.bound << '\n';
  return kFound;
}

int cmd_cfg_parse(const std::string& path, const std::string& start, const std::string& input_arg,
                  const Options& o, std::ostream& out, std::ostream& err) {
  auto g = cfg::load_grammar(path);
  if (!g.defines(start)) {
    err << "error: start symbol '" << start << "' has no productions\n";
    return kUsage;
  }
  Text input = decode(input_arg, "input");
  std::vector<cfg::ParseResult> results;
  if (o.fuel) {
    auto outcome = cfg::parse_with_fuel(g, start, input, *o.fuel);
    if (!is_done(outcome)) {
      err << "fuel exhausted\n";
      return kExhausted;
    }
    results = cfg::to_parse_results(std::get<Done>(outcome));
  } else {
    auto report = cfg::chain_bound(g);
    if (report.cyclic) {
      err << "cyclic: " << cfg::format_cycle(report.witness) << '\n';
      return kNone;
    }
    results = cfg::parse(g, start, input);
  }
  std::vector<cfg::SemValue> full;
  for (auto& [v, rest] : results) {
    if (rest.empty()) full.push_back(std::move(v));
  }
  return emit(full, o, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Effectful regex and grammar parsing", "effparse"};
  app.require_subcommand(1);

  Options o;
  std::string a, b, c;
  std::string engine = "derivative";

  auto* match = app.add_subcommand("match", "Match a regex against a string");
  match->add_option("regex", a, "Regex")->required();
  match->add_option("input", b, "Input string")->required();
  match->add_option("--engine", engine, "Matcher")
      ->check(CLI::IsMember({"derivative", "structural"}));
  add_output_options(match, o);

  auto* derive = app.add_subcommand("derive", "Print successive derivatives");
  derive->add_option("regex", a, "Regex")->required();
  derive->add_option("string", b, "Characters to differentiate by")->required();

  auto* check = app.add_subcommand("cfg-check", "Report left-recursion chains");
  check->add_option("grammar", a, "Grammar file")->required();

  auto* parse = app.add_subcommand("cfg-parse", "Parse a string with a grammar");
  parse->add_option("grammar", a, "Grammar file")->required();
  parse->add_option("start", b, "Start nonterminal")->required();
  parse->add_option("input", c, "Input string")->required();
  add_output_options(parse, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (match->parsed()) return cmd_match(a, b, engine, o, out, err);
    if (derive->parsed()) return cmd_derive(a, b, out);
    if (check->parsed()) return cmd_cfg_check(a, out);
    return cmd_cfg_parse(a, b, c, o, out, err);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kFound;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kFound;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const regex::SyntaxError& e) {
    err << "syntax error at position " << e.position << ": " << e.what() << '\n';
    return kUsage;
  } catch (const cfg::GrammarError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace effparse::cli
