#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fbrooks {

enum class ErrorCode {
  kInvalidArgument,
  kSizeOutOfRange,
  kInvalidVertex,
  kParse,
  kResourceLimit,
  kNotFound,
  kNotConnected,
  kNotVertexTransitive,
  kHypothesisViolation,
  kNotASeparator,
  kSelectionsMissing,
  kNoValidSelection,
  kClassInvalid,
  kNotFourColorable,
  kAssemblyConflict,
  kInputViolation,
  kInvariantViolation,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when a search exhausts its node budget. Integer searches fill in
// whatever bounds they had established; rational bounds live in LpLimitError.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, std::uint64_t nodes,
                     std::optional<long long> lower = std::nullopt,
                     std::optional<long long> upper = std::nullopt)
      : Error(ErrorCode::kResourceLimit, what),
        nodes_(nodes),
        lower_(lower),
        upper_(upper) {}

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::optional<long long> lower() const noexcept { return lower_; }
  std::optional<long long> upper() const noexcept { return upper_; }

 private:
  std::uint64_t nodes_;
  std::optional<long long> lower_, upper_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset)
      : Error(ErrorCode::kParse, what + " (line " + std::to_string(line) +
                                     ", byte " + std::to_string(offset) + ")"),
        line_(line),
        offset_(offset) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_, offset_;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SearchBudget {
  std::uint64_t max_nodes = kDefaultNodeBudget;
};

// Counts search nodes against a budget.
class NodeCounter {
 public:
  explicit NodeCounter(SearchBudget budget) : limit_(budget.max_nodes) {}
  // false once the budget is used up
  bool tick() noexcept { return ++count_ <= limit_; }
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
};

}  // namespace fbrooks
