#pragma once

#include <stdexcept>
#include <string>

namespace glc {

// Precondition and parse failures use std::invalid_argument / std::out_of_range.
// The two types below mark outcomes that are not caller mistakes.

/// A search hit its configured node or assignment cap before reaching a verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A guarantee of the algorithm failed at runtime; `stage()` names where.
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(std::string stage, const std::string& what)
      : std::logic_error(stage + ": " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace glc
