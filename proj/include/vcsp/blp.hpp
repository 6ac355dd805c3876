#pragma once

#include <cstddef>
#include <vector>

#include "vcsp/core.hpp"
#include "vcsp/exactlp.hpp"

namespace vcsp::blp {

/// Which LP column and row belongs to which piece of the relaxation.
struct BlpIndex {
  struct Lambda {
    std::size_t constraint;
    std::vector<Label> tuple;
  };
  struct Mu {
    VarId variable;
    Label label;
  };
  struct RowTag {
    enum class Kind { marginal, normalisation } kind;
    std::size_t constraint = 0;  // marginal rows
    std::size_t position = 0;    // marginal rows
    Label label = 0;             // marginal rows
    VarId variable = 0;          // normalisation rows
  };

  std::vector<Lambda> lambda;  // column lambda_start + k
  std::vector<Mu> mu;          // column mu_start + k
  std::size_t lambda_start = 0;
  std::size_t mu_start = 0;
  std::vector<std::size_t> constraint_offset;  // first lambda index per constraint
  std::vector<RowTag> rows;
  std::uint32_t domain_size = 0;

  std::size_t mu_column(VarId x, Label a) const { return mu_start + x * domain_size + a; }
  std::size_t lambda_column(std::size_t constraint, std::size_t tuple_index) const {
    return lambda_start + constraint_offset[constraint] + tuple_index;
  }
};

struct BlpOptions {
  /// Constraints of larger arity are rejected: lambda columns grow as d^arity.
  std::size_t max_arity = 4;
};

struct Relaxation {
  lp::LinearProgram program;
  BlpIndex index;
};

/// Basic LP relaxation: minimise sum lambda * weight * f(tuple), with
/// marginal rows tying each constraint's lambda to the mu of its scope,
/// one normalisation row per variable, and all columns in [0, 1].
Relaxation build_blp(const Instance& instance, const BlpOptions& options = {});

/// value_offset plus the exact optimum of the relaxation.
Rational blp_optimum(const Instance& instance, const BlpOptions& options = {});

/// The 0/1 point of the relaxation induced by an assignment.
std::vector<Rational> integral_point(const Relaxation& relaxation, const Instance& instance,
                                     std::span<const Label> h);

struct Rounded {
  Rational value;
  Assignment assignment;
};

/// Pins variables in id order to the smallest label that keeps the
/// relaxation's optimum unchanged (falling back to the label with the least
/// increase), then reports the true cost of the resulting assignment.
Rounded round_by_self_reduction(const Instance& instance, const BlpOptions& options = {});

struct GapReport {
  Rational blp_value;
  Rational brute_value;
  bool tight = false;
};

GapReport gap_report(const Instance& instance, const BruteLimits& limits = {}, const BlpOptions& options = {});

}  // namespace vcsp::blp
