#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fic {

// A class that fails the self-duality test or has no (n, k) decomposition.
struct NotAnInstantonCharacter : std::domain_error {
  using std::domain_error::domain_error;
};

// Linear solve with leftover degrees of freedom; lists the free unknowns.
struct UnderdeterminedSystem : std::runtime_error {
  std::vector<std::string> free_unknowns;
  UnderdeterminedSystem(const std::string& message,
                        std::vector<std::string> unknowns)
      : std::runtime_error(message), free_unknowns(std::move(unknowns)) {}
};

// Linear solve with contradictory rows; lists the labels of the
// constraints whose combination produced the contradiction.
struct InconsistentSystem : std::runtime_error {
  std::vector<std::string> constraints;
  InconsistentSystem(const std::string& message,
                     std::vector<std::string> offending)
      : std::runtime_error(message), constraints(std::move(offending)) {}
};

// Monad sampling retries exhausted; signals a degenerate regime.
struct SamplingExhausted : std::runtime_error {
  int attempts = 0;
  SamplingExhausted(const std::string& message, int tried)
      : std::runtime_error(message), attempts(tried) {}
};

// Correspondence pushforward requested before the self-intersection
// sign of the curve-side divisor class was calibrated.
struct UncalibratedSign : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace fic
