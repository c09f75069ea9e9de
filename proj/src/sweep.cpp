#include "fbrooks/sweep.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "fbrooks/bounds.hpp"
#include "fbrooks/io.hpp"
#include "fbrooks/structure.hpp"

namespace fbrooks {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex m;
  auto worker = [&] {
    for (std::size_t i; !stop && (i = next++) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(m);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

struct Item {
  std::string text;
  std::size_t line = 0;
  Graph graph;
  std::optional<GapRecord> record;
  std::optional<std::string> issue;
  bool resumed = false;
};

void evaluate(Item& it, const SweepOptions& options) {
  if (it.resumed) return;
  if (!is_connected(it.graph)) {
    it.issue = "graph is not connected";
    return;
  }
  if (max_degree(it.graph) != options.k) return;
  auto verdict = classify(it.graph, {false, options.lp.budget});
  if (verdict.category != Category::kBelowDelta) return;
  ChiFOptions lp = options.lp;
  lp.with_dual = false;
  GapRecord r;
  r.graph6 = it.text;
  r.delta = verdict.delta;
  r.omega = verdict.omega;
  r.chi_f = chi_f(it.graph, lp);
  r.gap = Rational(options.k) - r.chi_f;
  it.record = std::move(r);
}

std::unordered_map<std::string, GapRecord> load_checkpoint(const std::string& path, int k) {
  std::unordered_map<std::string, GapRecord> out;
  std::ifstream in(path);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string g6, chi, gap;
    if (!std::getline(fields, g6, '\t') || !std::getline(fields, chi, '\t') ||
        !std::getline(fields, gap))
      throw ParseError("checkpoint line needs three tab-separated fields", number, 0);
    Graph g = from_graph6(g6, number);
    GapRecord r;
    r.graph6 = g6;
    r.delta = max_degree(g);
    r.omega = clique_number(g);
    r.chi_f = Rational::parse(chi);
    r.gap = Rational::parse(gap);
    if (r.delta != k || r.gap != Rational(k) - r.chi_f)
      throw ParseError("checkpoint record does not match k = " + std::to_string(k), number, 0);
    out.emplace(g6, std::move(r));
  }
  return out;
}

}  // namespace

SweepSummary gap_sweep(std::istream& in, const SweepOptions& options,
                       const std::function<void(const GapRecord&)>& on_record) {
  SweepSummary s;
  s.k = options.k;
  std::unordered_map<std::string, GapRecord> done;
  std::ofstream checkpoint;
  if (options.checkpoint) {
    done = load_checkpoint(*options.checkpoint, options.k);
    checkpoint.open(*options.checkpoint, std::ios::app);
    if (!checkpoint)
      throw Error(ErrorCode::kInvalidArgument, "cannot write checkpoint " + *options.checkpoint);
  }

  auto accept = [&](const GapRecord& r) {
    ++s.count;
    if (!s.min_gap || r.gap < *s.min_gap) {
      s.min_gap = r.gap;
      s.argmin_graph6 = r.graph6;
    }
    if (r.gap <= Rational(0)) s.violations.push_back(r.graph6);
    if (on_record) on_record(r);
  };

  std::vector<Item> batch;
  auto flush = [&] {
    parallel_for(batch.size(), options.threads, [&](std::size_t i) { evaluate(batch[i], options); });
    for (auto& it : batch) {
      if (it.issue) s.issues.push_back({it.line, *it.issue});
      if (!it.record) continue;
      if (checkpoint.is_open() && !it.resumed)
        checkpoint << it.record->graph6 << '\t' << it.record->chi_f << '\t' << it.record->gap
                   << '\n';
      accept(*it.record);
    }
    if (checkpoint.is_open()) checkpoint.flush();
    batch.clear();
  };

  read_graph6_stream(
      in,
      [&](const Graph& g, const std::string& text, std::size_t line) {
        ++s.lines;
        s.max_order = std::max(s.max_order, g.order());
        Item it{text, line, g, std::nullopt, std::nullopt};
        if (auto hit = done.find(text); hit != done.end()) {
          ++s.resumed;
          it.record = hit->second;
          it.resumed = true;
        }
        batch.push_back(std::move(it));
        if (batch.size() >= options.batch) flush();
      },
      [&](const ParseError& e, const std::string&) {
        ++s.lines;
        s.issues.push_back({e.line(), e.what()});
      });
  flush();
  return s;
}

nlohmann::ordered_json summary_to_json(const SweepSummary& s) {
  nlohmann::ordered_json j;
  j["k"] = s.k;
  j["count"] = s.count;
  j["min_gap"] = s.min_gap ? nlohmann::ordered_json(s.min_gap->str()) : nullptr;
  j["argmin_graph6"] = s.argmin_graph6 ? nlohmann::ordered_json(*s.argmin_graph6) : nullptr;
  j["scope"] = {{"lines", s.lines}, {"max_order", s.max_order}, {"resumed", s.resumed}};
  auto issues = nlohmann::ordered_json::array();
  for (const auto& i : s.issues) issues.push_back({{"line", i.line}, {"message", i.message}});
  j["issues"] = issues;
  j["violations"] = s.violations;
  return j;
}

}  // namespace fbrooks
