#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skn {

/// Invalid parameters or a violated operation precondition.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input to a graph constructor (bad endpoint, self-loop, ...).
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search or enumeration ran past its configured resource limit.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_(nodes) {}

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// Chromatic search ran out of budget; carries the best known interval.
class ChromaticBudgetExceeded : public BudgetExceeded {
 public:
  ChromaticBudgetExceeded(const std::string& what, std::uint64_t nodes,
                          std::uint32_t lower, std::uint32_t upper)
      : BudgetExceeded(what, nodes), lower_(lower), upper_(upper) {}

  std::uint32_t lower() const { return lower_; }
  std::uint32_t upper() const { return upper_; }

 private:
  std::uint32_t lower_;
  std::uint32_t upper_;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A computed object contradicts a structural claim that should hold for
/// the given parameters. The message carries the witness.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Unparseable graph or report input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skn
