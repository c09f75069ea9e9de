#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <regex>
#include <sstream>

#include "fbrooks/catalog.hpp"
#include "fbrooks/certificate.hpp"
#include "fbrooks/delta4.hpp"
#include "fbrooks/fractional.hpp"
#include "fbrooks/hitting.hpp"
#include "fbrooks/io.hpp"
#include "fbrooks/random_graphs.hpp"

namespace fbrooks::cli {

namespace {

[[noreturn]] void bad_spec(std::string_view spec, const std::string& why) {
  throw Error(ErrorCode::kInvalidArgument,
              "cannot build graph from \"" + std::string(spec) + "\": " + why);
}

std::vector<int> numbers(std::string_view spec, std::string_view args, std::size_t count) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= args.size()) {
    auto comma = args.find(',', start);
    auto piece = args.substr(start, comma == std::string_view::npos ? args.size() - start
                                                                    : comma - start);
    int value = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || end != piece.data() + piece.size() || piece.empty())
      bad_spec(spec, "\"" + std::string(piece) + "\" is not an integer");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != count)
    bad_spec(spec, "expected " + std::to_string(count) + " integer argument(s)");
  return out;
}

void need_positive(std::string_view spec, int n, int low = 1) {
  if (n < low) bad_spec(spec, "order must be at least " + std::to_string(low));
}

}  // namespace

Graph parse_graph_spec(std::string_view spec, std::uint64_t seed) {
  auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    std::string_view head = spec.substr(0, colon), args = spec.substr(colon + 1);
    if (head == "Kn") {
      int n = numbers(spec, args, 1)[0];
      need_positive(spec, n);
      return make_complete(n);
    }
    if (head == "Cn") {
      int n = numbers(spec, args, 1)[0];
      need_positive(spec, n, 3);
      return make_cycle(n);
    }
    if (head == "Pn") {
      int n = numbers(spec, args, 1)[0];
      need_positive(spec, n);
      return make_path(n);
    }
    if (head == "Qn") {
      int d = numbers(spec, args, 1)[0];
      if (d < 0 || d > 8) bad_spec(spec, "dimension must be in 0..8");
      return make_hypercube(d);
    }
    if (head == "CnPow") {
      auto v = numbers(spec, args, 2);
      need_positive(spec, v[0], 3);
      if (v[1] < 1) bad_spec(spec, "power must be at least 1");
      return cycle_power(v[0], v[1]);
    }
    if (head == "StrongProd") {
      auto comma = args.find(',');
      if (comma == std::string_view::npos) bad_spec(spec, "expected two graph6 strings");
      return strong_product(from_graph6(args.substr(0, comma)),
                            from_graph6(args.substr(comma + 1)));
    }
    if (head == "catalog") return catalog_graph(args);
    if (head == "RandomK4free") {
      auto v = numbers(spec, args, 2);
      need_positive(spec, v[0]);
      std::mt19937_64 rng(seed);
      return random_k4free_graph(v[0], v[1], 1.0, rng);
    }
  }
  if (spec == "Petersen") return make_petersen();

  static const std::regex power(R"(C(\d+)\^(\d+))"), times(R"(C(\d+)xK(\d+))"),
      complete(R"(K(\d+))"), cycle(R"(C(\d+))");
  std::cmatch m;
  const char* b = spec.data();
  const char* e = spec.data() + spec.size();
  if (std::regex_match(b, e, m, power)) return cycle_power(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(b, e, m, times))
    return strong_product(make_cycle(std::stoi(m[1])), make_complete(std::stoi(m[2])));
  if (std::regex_match(b, e, m, complete)) return make_complete(std::stoi(m[1]));
  if (std::regex_match(b, e, m, cycle)) return make_cycle(std::stoi(m[1]));
  return parse_graph_text(spec);
}

std::string read_text(const std::string& path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Graph load_graph(const std::optional<std::string>& spec, const std::optional<std::string>& file,
                 std::uint64_t seed) {
  if (spec && file)
    throw Error(ErrorCode::kInvalidArgument, "give either --graph or --file, not both");
  if (spec) return parse_graph_spec(*spec, seed);
  return parse_graph_text(read_text(file.value_or("-")));
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidVertex: return 2;
    case ErrorCode::kResourceLimit: return 3;
    default: return 1;
  }
}

nlohmann::ordered_json error_json(const Error& e) {
  nlohmann::ordered_json j;
  j["error"] = std::string(to_string(e.code()));
  j["message"] = e.what();
  if (auto* p = dynamic_cast<const ParseError*>(&e)) {
    j["line"] = p->line();
    j["offset"] = p->offset();
  }
  if (auto* r = dynamic_cast<const ResourceLimitError*>(&e)) {
    j["nodes"] = r->nodes();
    if (r->lower()) j["lower"] = *r->lower();
    if (r->upper()) j["upper"] = *r->upper();
  }
  if (auto* l = dynamic_cast<const LpLimitError*>(&e)) {
    j["lower"] = l->lower().str();
    if (l->upper()) j["upper"] = l->upper()->str();
  }
  if (auto* h = dynamic_cast<const NotHitError*>(&e)) {
    j["pattern"] = h->pattern();
    j["witness"] = to_json(h->witness());
  }
  if (auto* s = dynamic_cast<const NoValidSelectionError*>(&e)) {
    j["pattern"] = s->pattern();
    j["s1"] = to_json(s->s1());
    j["s2"] = to_json(s->s2());
    j["witness"] = to_json(s->witness());
  }
  if (auto* c = dynamic_cast<const NotFourColorableError*>(&e)) {
    j["critical"] = to_json(c->critical());
    j["degree_four"] = to_json(c->degree_four());
    j["gallai_forest"] = c->gallai_forest();
  }
  if (auto* p = dynamic_cast<const PipelineError*>(&e)) j["stage"] = p->stage();
  return j;
}

SearchBudget budget_from_env() {
  SearchBudget b;
  if (const char* env = std::getenv("FBROOKS_NODE_BUDGET")) {
    std::string_view s(env);
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size() || value == 0)
      throw Error(ErrorCode::kInvalidArgument,
                  "FBROOKS_NODE_BUDGET must be a positive integer, got \"" + std::string(s) + "\"");
    b.max_nodes = value;
  }
  return b;
}

}  // namespace fbrooks::cli
