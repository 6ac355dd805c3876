#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "vcsp/core.hpp"

namespace vcsp::classify {

/// A gadget over the pinned closure whose expressed binary table has
/// argmin exactly {(a,b),(b,a)}.
struct XorWitness {
  Gadget gadget;
  Label a = 0;
  Label b = 1;
  CostFunction expressed;
};

struct SearchBounds {
  std::size_t max_vars = 2;
  std::size_t max_cons = 1;
  /// Upper bound on the number of candidate gadgets examined.
  std::uint64_t budget = 2'000'000;
};

/// If argmin of a binary table is exactly {(a,b),(b,a)} with a < b, returns (a, b).
std::optional<std::pair<Label, Label>> xor_labels(const CostFunction& binary);

/// Bounded search over gadgets with 2..max_vars variables and up to max_cons
/// unit-weight constraints over gamma_c(language), projecting onto variables
/// (0, 1). Constraint multisets are enumerated in canonical order. An empty
/// result means the bound was exhausted, not that no witness exists.
/// Throws SizeLimitError when the candidate count exceeds the budget.
std::optional<XorWitness> xor_witness_search(const Language& language, const SearchBounds& bounds,
                                             const BruteLimits& limits = {});

/// Number of gadgets xor_witness_search would examine at these bounds.
std::uint64_t xor_search_size(const Language& language, const SearchBounds& bounds);

struct GapWitness {
  Instance instance;
  Rational blp_value;
  Rational brute_value;
  std::size_t trial = 0;
};

struct BlpTightUpToBound {};

struct DichotomyReport {
  std::variant<BlpTightUpToBound, XorWitness, GapWitness> verdict;
  SearchBounds bounds;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t trials_run = 0;
  /// False when the witness search was skipped because it exceeded its budget.
  bool xor_search_completed = true;
};

/// Seeded random instance used by the empirical comparison: 1..max_vars
/// variables, 0..max_cons constraints, functions and scope entries uniform,
/// weights uniform from {1, 1/2, 2, 3}.
Instance random_instance(const LanguagePtr& language, std::size_t max_vars, std::size_t max_cons,
                         std::uint64_t& state);

/// Compares blp_optimum against brute_optimum on `trials` seeded instances;
/// the first mismatch is a GapWitness. Otherwise runs the XOR search and
/// reports BlpTightUpToBound if it finds nothing.
DichotomyReport empirical_dichotomy(const LanguagePtr& language, std::size_t trials, const SearchBounds& bounds,
                                    std::uint64_t seed, const BruteLimits& limits = {});

/// Deterministic multi-line rendering.
std::string render(const DichotomyReport& report);

}  // namespace vcsp::classify
