#include "vcsp/exactlp.hpp"

namespace vcsp::lp {

namespace {

// Sign condition on a row multiplier for the maximisation dual.
bool multiplier_sign_ok(Relation relation, const Rational& y) {
  switch (relation) {
    case Relation::less_equal: return y.sign() >= 0;
    case Relation::greater_equal: return y.sign() <= 0;
    case Relation::equal: return true;
  }
  return false;
}

// Given residual r_j = (w_j - v_j) that bound multipliers must absorb, return
// u^T w - l^T v with the cheapest split, or nullopt when a needed bound is absent.
std::optional<Rational> bound_term(const LinearProgram& lp, std::span<const Rational> residual) {
  Rational total;
  for (std::size_t j = 0; j < lp.columns().size(); ++j) {
    const Column& col = lp.columns()[j];
    const int s = residual[j].sign();
    if (s > 0) {
      if (!col.upper) return std::nullopt;
      total += *col.upper * residual[j];
    } else if (s < 0) {
      if (!col.lower) return std::nullopt;
      total += *col.lower * residual[j];
    }
  }
  return total;
}

// A^T y as a dense column vector.
std::vector<Rational> transpose_times(const LinearProgram& lp, std::span<const Rational> y) {
  std::vector<Rational> out(lp.columns().size());
  for (std::size_t i = 0; i < lp.rows().size(); ++i) {
    if (y[i].is_zero()) continue;
    for (const auto& [col, coef] : lp.rows()[i].terms) out[col] += coef * y[i];
  }
  return out;
}

Rational rhs_dot(const LinearProgram& lp, std::span<const Rational> y) {
  Rational total;
  for (std::size_t i = 0; i < lp.rows().size(); ++i) total += lp.rows()[i].rhs * y[i];
  return total;
}

bool ray_ok(const LinearProgram& lp, std::span<const Rational> ray, int sense) {
  for (std::size_t j = 0; j < lp.columns().size(); ++j) {
    if (lp.columns()[j].lower && ray[j].sign() < 0) return false;
    if (lp.columns()[j].upper && ray[j].sign() > 0) return false;
  }
  for (const Row& row : lp.rows()) {
    const Rational a = lp.activity(row, ray);
    if (row.relation == Relation::less_equal && a.sign() > 0) return false;
    if (row.relation == Relation::greater_equal && a.sign() < 0) return false;
    if (row.relation == Relation::equal && !a.is_zero()) return false;
  }
  return (lp.objective_value(ray) * Rational(sense)).sign() > 0;
}

}  // namespace

bool check_certificate(const LinearProgram& lp, const Outcome& outcome) {
  const std::size_t n = lp.columns().size();
  const std::size_t m = lp.rows().size();
  const int sense = lp.sense() == Sense::maximize ? 1 : -1;

  switch (outcome.status) {
    case Status::optimal: {
      if (outcome.point.size() != n || outcome.duals.size() != m) {
        throw ValidationError("optimal certificate has the wrong dimensions");
      }
      if (!lp.is_feasible(outcome.point)) return false;
      if (lp.objective_value(outcome.point) != outcome.value) return false;
      for (std::size_t i = 0; i < m; ++i) {
        if (!multiplier_sign_ok(lp.rows()[i].relation, outcome.duals[i])) return false;
      }
      const auto aty = transpose_times(lp, outcome.duals);
      std::vector<Rational> residual(n);
      for (std::size_t j = 0; j < n; ++j) residual[j] = lp.columns()[j].objective * Rational(sense) - aty[j];
      const auto bounds = bound_term(lp, residual);
      if (!bounds) return false;
      const Rational dual_value = rhs_dot(lp, outcome.duals) + *bounds;
      return dual_value == outcome.value * Rational(sense);
    }
    case Status::unbounded: {
      if (outcome.point.size() != n || outcome.ray.size() != n) {
        throw ValidationError("unbounded certificate has the wrong dimensions");
      }
      return lp.is_feasible(outcome.point) && ray_ok(lp, outcome.ray, sense);
    }
    case Status::infeasible: {
      if (outcome.duals.size() != m) throw ValidationError("Farkas certificate has the wrong dimensions");
      for (std::size_t i = 0; i < m; ++i) {
        if (!multiplier_sign_ok(lp.rows()[i].relation, outcome.duals[i])) return false;
      }
      auto residual = transpose_times(lp, outcome.duals);
      for (auto& r : residual) r = -r;
      const auto bounds = bound_term(lp, residual);
      if (!bounds) return false;
      return (rhs_dot(lp, outcome.duals) + *bounds).sign() < 0;
    }
  }
  return false;
}

}  // namespace vcsp::lp
