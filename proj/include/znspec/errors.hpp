#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace znspec {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidBudget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed a configured budget. Sweep drivers
// catch this and record a structured skip instead of aborting.
struct BudgetExceeded : std::runtime_error {
  std::string kind;  // "elements" or "members"
  std::int64_t limit;
  BudgetExceeded(std::string k, std::int64_t lim, const std::string& msg)
      : std::runtime_error(msg), kind(std::move(k)), limit(lim) {}
};

struct NotProper : std::logic_error {
  using std::logic_error::logic_error;
};

// Carries the least pair of lattice member ids whose variety union is not a
// variety; the pair can be re-checked by the caller.
struct NotATopology : std::runtime_error {
  std::uint32_t lhs, rhs;
  NotATopology(std::uint32_t a, std::uint32_t b, const std::string& msg)
      : std::runtime_error(msg), lhs(a), rhs(b) {}
};

}  // namespace znspec
