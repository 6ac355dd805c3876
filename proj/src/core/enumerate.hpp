#pragma once

// Exhaustive assignment enumeration shared by the brute-force operations.
// When every weighted table entry fits a common denominator with int64
// headroom, costs are evaluated as scaled integers; otherwise as Rationals.

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "vcsp/core.hpp"

namespace vcsp::detail {

struct CompiledConstraint {
  std::vector<VarId> scope;
  const CostFunction* function = nullptr;
  std::vector<std::int64_t> scaled;  // weight * value * scale, integral path only
  std::vector<Rational> weighted;    // weight * value, rational path only
};

class CompiledInstance {
 public:
  explicit CompiledInstance(const Instance& instance);

  bool integral() const { return integral_; }
  std::size_t variable_count() const { return variable_count_; }
  std::uint32_t domain_size() const { return domain_size_; }

  /// Number of assignments, or throws SizeLimitError above the budget.
  std::uint64_t assignment_count(const BruteLimits& limits) const;

  std::int64_t scaled_cost(std::span<const Label> h) const {
    std::int64_t total = 0;
    for (const auto& c : constraints_) total += c.scaled[index(c, h)];
    return total;
  }
  Rational rational_cost(std::span<const Label> h) const {
    Rational total;
    for (const auto& c : constraints_) total += c.weighted[index(c, h)];
    return total;
  }

  /// Converts an accumulated cost (either path) to the instance's true cost.
  Rational to_value(std::int64_t scaled) const;
  Rational to_value(const Rational& weighted) const { return weighted + offset_; }

  /// Calls visit(h, cost) for every assignment in lexicographic order, with
  /// cost either std::int64_t or Rational.
  template <class Visit>
  void enumerate(const BruteLimits& limits, Visit&& visit) const {
    const std::uint64_t total = assignment_count(limits);
    std::vector<Label> h(variable_count_, 0);
    for (std::uint64_t k = 0; k < total; ++k) {
      if (integral_) {
        visit(std::span<const Label>(h), scaled_cost(h));
      } else {
        visit(std::span<const Label>(h), rational_cost(h));
      }
      for (std::size_t i = variable_count_; i-- > 0;) {
        if (++h[i] < domain_size_) break;
        h[i] = 0;
      }
    }
  }

 private:
  std::size_t index(const CompiledConstraint& c, std::span<const Label> h) const {
    std::size_t idx = 0;
    for (VarId v : c.scope) idx = idx * domain_size_ + h[v];
    return idx;
  }

  std::size_t variable_count_;
  std::uint32_t domain_size_;
  std::vector<CompiledConstraint> constraints_;
  bool integral_ = true;
  Rational scale_{1};
  Rational offset_;
};

}  // namespace vcsp::detail
