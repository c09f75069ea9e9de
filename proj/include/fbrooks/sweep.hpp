#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbrooks/fractional.hpp"
#include "fbrooks/rational.hpp"

namespace fbrooks {

struct GapRecord {
  std::string graph6;
  int delta = 0;
  int omega = 0;
  Rational chi_f;
  Rational gap;  // delta - chi_f
};

struct SweepIssue {
  std::size_t line = 0;
  std::string message;
};

struct SweepOptions {
  int k = 4;
  int threads = 0;  // 0: hardware concurrency
  // "graph6 TAB chi_f TAB gap" per record; existing records are reused and
  // new ones appended
  std::optional<std::string> checkpoint;
  ChiFOptions lp = {};
  std::size_t batch = 2048;
};

struct SweepSummary {
  int k = 0;
  long long count = 0;  // records (Delta = k, below-Delta category)
  std::optional<Rational> min_gap;
  std::optional<std::string> argmin_graph6;
  long long lines = 0;
  long long resumed = 0;
  int max_order = 0;
  std::vector<SweepIssue> issues;      // parse errors, disconnected input
  std::vector<std::string> violations;  // records with gap <= 0
};

// Filters the graph6 stream to maximum degree k and the below-Delta category,
// solves each LP exactly and tracks the smallest gap. Results reach
// `on_record` and the checkpoint in input order.
SweepSummary gap_sweep(std::istream& in, const SweepOptions& options,
                       const std::function<void(const GapRecord&)>& on_record = {});

nlohmann::ordered_json summary_to_json(const SweepSummary& s);

// Runs body(0..count-1) on a pool of threads (0: hardware concurrency).
// The first exception thrown by a body is rethrown after all threads stop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace fbrooks
