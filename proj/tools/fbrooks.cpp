#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "fbrooks/bounds.hpp"
#include "fbrooks/catalog.hpp"
#include "fbrooks/certificate.hpp"
#include "fbrooks/delta4.hpp"
#include "fbrooks/fold.hpp"
#include "fbrooks/fractional.hpp"
#include "fbrooks/hitting.hpp"
#include "fbrooks/io.hpp"
#include "fbrooks/structure.hpp"
#include "fbrooks/sweep.hpp"

using namespace fbrooks;
using nlohmann::ordered_json;

namespace {

struct Input {
  std::string graph, file;
  CLI::Option* graph_opt = nullptr;
  CLI::Option* file_opt = nullptr;

  void attach(CLI::App* sub) {
    graph_opt = sub->add_option("-g,--graph", graph, "graph6, edge list, or named constructor");
    file_opt = sub->add_option("-f,--file", file, "file holding graph6 or an edge list, - for stdin");
    graph_opt->excludes(file_opt);
  }

  Graph load(std::uint64_t seed) const {
    std::optional<std::string> g, f;
    if (graph_opt->count()) g = graph;
    if (file_opt->count()) f = file;
    return cli::load_graph(g, f, seed);
  }
};

void print(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

std::vector<Vertex> parse_ids(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream s(text);
  for (std::string item; std::getline(s, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "\"" + item + "\" is not a vertex id");
    }
  }
  return out;
}

ordered_json optional_str(const std::optional<Rational>& r) {
  return r ? ordered_json(r->str()) : ordered_json(nullptr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional chromatic number tools: exact LP, classification, fold colorings"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::uint64_t node_budget = 0;
  app.add_option("--seed", seed, "seed for randomized constructors")->capture_default_str();
  app.add_option("--node-budget", node_budget,
                 "search node budget (overrides FBROOKS_NODE_BUDGET)");

  // chi-f
  auto* chi = app.add_subcommand("chi-f", "exact fractional chromatic number");
  Input chi_in;
  chi_in.attach(chi);
  bool chi_cert = false, chi_json = false, chi_vt = false;
  std::string chi_lp = "auto";
  chi->add_flag("--certificate", chi_cert, "print primal and dual certificates as JSON");
  chi->add_flag("--json", chi_json, "print {graph, chi_f} as JSON");
  chi->add_flag("--vertex-transitive", chi_vt, "use |V|/alpha (checks transitivity)");
  chi->add_option("--lp", chi_lp, "auto, enumerate or colgen")
      ->check(CLI::IsMember({"auto", "enumerate", "colgen"}));

  auto* cls = app.add_subcommand("classify", "category of a connected graph");
  Input cls_in;
  cls_in.attach(cls);
  bool cls_strict = false;
  cls->add_flag("--strict", cls_strict, "also solve the LP and check the category against it");

  auto* color = app.add_subcommand("color", "find an a:b coloring");
  Input color_in;
  color_in.attach(color);
  int color_a = 0, color_b = 1;
  auto* a_opt = color->add_option("-a", color_a, "palette size (default: smallest possible)");
  color->add_option("-b", color_b, "colors per vertex")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check a fold or fractional certificate");
  Input verify_in;
  verify_in.attach(verify);
  std::string cert_path;
  verify->add_option("-c,--certificate", cert_path, "certificate JSON file, - for stdin")
      ->required();

  auto* bound = app.add_subcommand("bound", "(omega + Delta + 1) / 2");
  Input bound_in;
  bound_in.attach(bound);

  auto* cut = app.add_subcommand("cut2", "chi_f bound across a two-vertex cut");
  Input cut_in;
  cut_in.attach(cut);
  int cut_u = -1, cut_v = -1;
  std::string cut_side;
  bool cut_list = false;
  auto* u_opt = cut->add_option("-u", cut_u, "first cut vertex");
  auto* v_opt = cut->add_option("-v", cut_v, "second cut vertex");
  auto* side_opt = cut->add_option("--side", cut_side,
                                   "comma-separated vertices of the first side "
                                   "(default: first component of g - {u,v})");
  cut->add_flag("--list", cut_list, "list all two-vertex cuts");

  auto* hit = app.add_subcommand("hitting", "independent set meeting every pattern copy");
  Input hit_in;
  hit_in.attach(hit);
  std::vector<std::string> hit_family;
  std::string hit_lemma, hit_mode = "induced";
  bool hit_max_cliques = false, hit_maximal = false;
  hit->add_option("--family", hit_family, "pattern specs (graph grammar), comma separated")
      ->delimiter(',');
  hit->add_option("--lemma", hit_lemma, "6to5, 5to41 or 5to42: fixed family plus hypothesis check")
      ->check(CLI::IsMember({"6to5", "5to41", "5to42"}));
  hit->add_option("--copy-mode", hit_mode, "induced or subgraph")
      ->check(CLI::IsMember({"induced", "subgraph"}));
  hit->add_flag("--max-cliques", hit_max_cliques, "meet every maximum clique instead");
  hit->add_flag("--maximal", hit_maximal, "extend the result to a maximal independent set");

  auto* d4 = app.add_subcommand("delta4", "fold coloring for K4-free graphs with Delta <= 4");
  Input d4_in;
  d4_in.attach(d4);
  std::string d4_mode = "pattern", d4_cert, d4_report;
  bool d4_timings = false, d4_no_retry = false, d4_strict_sel = false;
  d4->add_option("--mode", d4_mode, "pattern or conservative")
      ->check(CLI::IsMember({"pattern", "conservative"}));
  d4->add_option("--emit-certificate", d4_cert, "write the fold coloring JSON here");
  d4->add_option("--emit-report", d4_report, "write the report JSON here");
  d4->add_flag("--timings", d4_timings, "include per-stage timings in the report");
  d4->add_flag("--no-retry", d4_no_retry, "do not fall back to conservative mode");
  d4->add_flag("--strict-selection", d4_strict_sel,
               "fail when a double pair cannot avoid K5minus and G0");

  auto* sweep = app.add_subcommand("sweep", "gap Delta - chi_f over a graph6 stream");
  int sweep_k = 4, sweep_threads = 0;
  std::string sweep_input = "-", sweep_checkpoint, sweep_records;
  sweep->add_option("-k", sweep_k, "maximum degree to keep")->capture_default_str();
  sweep->add_option("-i,--input", sweep_input, "graph6 file, - for stdin");
  sweep->add_option("--checkpoint", sweep_checkpoint, "resumable record file");
  sweep->add_option("--threads", sweep_threads, "worker threads (0: all cores)");
  sweep->add_option("--records", sweep_records, "also write every record to this file");

  auto* cat = app.add_subcommand("catalog", "named pattern graphs");
  std::string cat_name, cat_format = "edges";
  bool cat_list = false;
  cat->add_option("name", cat_name, "catalog entry");
  cat->add_flag("--list", cat_list, "list the entry names");
  cat->add_option("--format", cat_format, "edges or g6")->check(CLI::IsMember({"edges", "g6"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    SearchBudget budget = cli::budget_from_env();
    if (node_budget) budget.max_nodes = node_budget;

    if (chi->parsed()) {
      Graph g = chi_in.load(seed);
      if (chi_vt) {
        Rational r = chi_f_vertex_transitive(g, budget);
        if (chi_json) print({{"graph", to_graph6(g)}, {"chi_f", r.str()}});
        else std::cout << r << '\n';
        return 0;
      }
      ChiFOptions o;
      o.budget = budget;
      o.with_dual = chi_cert;
      o.mode = chi_lp == "enumerate" ? LpMode::kEnumerate
               : chi_lp == "colgen"  ? LpMode::kColumnGeneration
                                     : LpMode::kAuto;
      auto [value, sol] = chi_f_exact(g, o);
      if (chi_cert) print(fractional_to_json(g, sol));
      else if (chi_json) print({{"graph", to_graph6(g)}, {"chi_f", value.str()}});
      else std::cout << value << '\n';
      return 0;
    }

    if (cls->parsed()) {
      Graph g = cls_in.load(seed);
      auto v = classify(g, {cls_strict, budget});
      ordered_json j;
      j["category"] = to_string(v.category);
      j["delta"] = v.delta;
      j["omega"] = v.omega;
      j["clique"] = to_json(v.clique);
      j["isomorphism"] = v.isomorphism ? ordered_json(*v.isomorphism) : ordered_json(nullptr);
      j["chi_f"] = optional_str(v.chi_f);
      print(j);
      return 0;
    }

    if (color->parsed()) {
      Graph g = color_in.load(seed);
      int a = a_opt->count() ? color_a : chi_b(g, color_b, budget);
      if (a < color_b) throw Error(ErrorCode::kInvalidArgument, "need a >= b");
      auto c = find_ab_coloring(g, a, color_b, budget);
      if (!c)
        throw Error(ErrorCode::kNotFound, "no " + std::to_string(a) + ":" +
                                              std::to_string(color_b) + " coloring exists");
      print(fold_to_json(g, *c));
      return 0;
    }

    if (verify->parsed()) {
      auto cert = nlohmann::json::parse(cli::read_text(cert_path), nullptr, false);
      if (cert.is_discarded())
        throw Error(ErrorCode::kParse, "certificate is not valid JSON");
      if (!cert.is_object())
        throw Error(ErrorCode::kInvalidArgument, "certificate must be a JSON object");
      if (verify_in.graph_opt->count() || verify_in.file_opt->count())
        cert["graph"] = to_graph6(verify_in.load(seed));
      ordered_json out;
      bool ok = false;
      if (cert.contains("chi_f")) {
        if (!cert.contains("graph") || !cert["graph"].is_string())
          throw Error(ErrorCode::kInvalidArgument, "certificate needs a graph");
        Graph g = from_graph6(cert["graph"].get<std::string>());
        auto check = verify_fractional_solution(g, fractional_from_json(cert), budget);
        ok = check.valid;
        out["valid"] = ok;
        out["kind"] = "fractional";
        out["problem"] = ok ? ordered_json(nullptr) : ordered_json(check.problem);
      } else {
        auto [g, fold] = fold_from_json(cert);
        auto verdict = verify_fold_coloring(g, fold);
        ok = verdict.valid();
        out["valid"] = ok;
        out["kind"] = "fold";
        out["a"] = fold.a();
        out["b"] = fold.b();
        if (verdict.violation) {
          static const char* kinds[] = {"vertex-count", "wrong-size", "out-of-palette",
                                        "repeated-color", "edge-overlap"};
          const auto& v = *verdict.violation;
          ordered_json vj;
          vj["kind"] = kinds[static_cast<int>(v.kind)];
          vj["u"] = v.u;
          vj["v"] = v.v;
          vj["color"] = v.color;
          vj["message"] = v.describe();
          out["violation"] = vj;
        } else {
          out["violation"] = nullptr;
        }
      }
      print(out);
      return ok ? 0 : 1;
    }

    if (bound->parsed()) {
      Graph g = bound_in.load(seed);
      print({{"omega", g.order() ? clique_number(g, budget) : 0},
             {"delta", max_degree(g)},
             {"molloy_reed", molloy_reed_bound(g, budget).str()}});
      return 0;
    }

    if (cut->parsed()) {
      Graph g = cut_in.load(seed);
      if (cut_list) {
        auto cuts = ordered_json::array();
        for (auto [u, v] : find_two_cuts(g)) cuts.push_back({u, v});
        print({{"cuts", cuts}});
        return 0;
      }
      if (!u_opt->count() || !v_opt->count())
        throw Error(ErrorCode::kInvalidArgument, "cut2 needs -u and -v (or --list)");
      if (!g.has_vertex(cut_u) || !g.has_vertex(cut_v))
        throw Error(ErrorCode::kInvalidVertex, "cut vertex out of range");
      VertexSet side;
      if (side_opt->count()) {
        side = VertexSet(parse_ids(cut_side));
      } else {
        auto parts = components_without(g, cut_u, cut_v);
        if (parts.size() < 2)
          throw Error(ErrorCode::kNotASeparator, "removing the pair leaves a connected graph");
        side = parts.front();
      }
      ChiFOptions o;
      o.budget = budget;
      o.with_dual = false;
      auto r = cut2_upper_bound(g, cut_u, cut_v, side, o);
      ordered_json j;
      j["u"] = cut_u;
      j["v"] = cut_v;
      j["edge"] = g.adjacent(cut_u, cut_v);
      j["side1"] = to_json(side);
      j["bound"] = r.value.str();
      j["exact"] = r.exact;
      j["chi_f_side1"] = r.side1.str();
      j["chi_f_side2"] = r.side2.str();
      j["chi_f_side2_plus"] = optional_str(r.side2_plus);
      j["chi_f_side2_merged"] = optional_str(r.side2_merged);
      print(j);
      return 0;
    }

    if (hit->parsed()) {
      Graph g = hit_in.load(seed);
      HittingOptions ho{hit_maximal, budget};
      ordered_json j;
      VertexSet set;
      if (hit_max_cliques) {
        set = stable_set_meeting_max_cliques(g, ho);
        j["target"] = "maximum-cliques";
      } else {
        std::optional<HittingFamily> family;
        if (!hit_lemma.empty()) {
          LemmaId lemma = lemma_from_string(hit_lemma);
          auto rep = check_lemma_hypotheses(g, lemma);
          j["lemma"] = {{"name", hit_lemma},     {"connected", rep.connected},
                        {"delta", rep.delta},    {"omega", rep.omega},
                        {"delta_ok", rep.delta_ok}, {"omega_ok", rep.omega_ok},
                        {"excluded_graph", rep.excluded_graph}, {"all_pass", rep.all_pass}};
          family = lemma_family(lemma);
        } else {
          if (hit_family.empty())
            throw Error(ErrorCode::kInvalidArgument, "give --family, --lemma or --max-cliques");
          std::vector<FamilyMember> m;
          auto mode = hit_mode == "subgraph" ? CopyMode::kSubgraph : CopyMode::kInduced;
          for (const auto& spec : hit_family)
            m.push_back({spec, cli::parse_graph_spec(spec, seed), mode});
          family.emplace(std::move(m));
        }
        auto names = ordered_json::array();
        for (const auto& m : family->members()) names.push_back(m.name);
        j["target"] = "family";
        j["family"] = names;
        set = hitting_independent_set(g, *family, ho);
      }
      j["set"] = to_json(set);
      print(j);
      return 0;
    }

    if (d4->parsed()) {
      Graph g = d4_in.load(seed);
      PipelineOptions po;
      po.mode = d4_mode == "conservative" ? NeighborhoodMode::kConservative
                                          : NeighborhoodMode::kPattern;
      po.retry_conservative = !d4_no_retry;
      po.allow_unvalidated = !d4_strict_sel;
      po.budget = budget;
      auto result = run_pipeline(g, po);
      auto report = report_to_json(result.report, d4_timings);
      if (!d4_cert.empty()) write_file(d4_cert, fold_to_json(g, result.coloring).dump(2) + "\n");
      if (!d4_report.empty()) write_file(d4_report, report.dump(2) + "\n");
      print(report);
      return 0;
    }

    if (sweep->parsed()) {
      SweepOptions so;
      so.k = sweep_k;
      so.threads = sweep_threads;
      so.lp.budget = budget;
      if (!sweep_checkpoint.empty()) so.checkpoint = sweep_checkpoint;
      std::ofstream records;
      if (!sweep_records.empty()) {
        records.open(sweep_records);
        if (!records) throw Error(ErrorCode::kInvalidArgument, "cannot write " + sweep_records);
      }
      auto on_record = [&](const GapRecord& r) {
        if (records.is_open()) records << r.graph6 << '\t' << r.chi_f << '\t' << r.gap << '\n';
      };
      SweepSummary s;
      if (sweep_input == "-") {
        s = gap_sweep(std::cin, so, on_record);
      } else {
        std::ifstream in(sweep_input);
        if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + sweep_input);
        s = gap_sweep(in, so, on_record);
      }
      print(summary_to_json(s));
      return s.violations.empty() ? 0 : 1;
    }

    if (cat->parsed()) {
      if (cat_list || cat_name.empty()) {
        for (const auto& n : catalog_names()) std::cout << n << '\n';
        return 0;
      }
      const auto& e = catalog_entry(cat_name);
      if (cat_format == "g6") {
        std::cout << to_graph6(e.graph) << '\n';
        return 0;
      }
      std::string labels;
      for (const auto& l : e.labels) labels += (labels.empty() ? "" : " ") + l;
      std::cout << to_edge_list(e.graph, e.name + ": " + e.note + "\nlabels: " + labels);
      return 0;
    }
  } catch (const Error& e) {
    print(cli::error_json(e));
    return cli::exit_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    print({{"error", "parse-error"}, {"message", e.what()}});
    return 2;
  } catch (const std::exception& e) {
    print({{"error", "internal"}, {"message", e.what()}});
    return 1;
  }
  return 0;
}
