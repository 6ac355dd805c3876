#include "vcsp/exactlp.hpp"

namespace vcsp::lp {

StandardForm to_standard_form(const LinearProgram& lp) {
  StandardForm sf;
  sf.objective_sign = lp.sense() == Sense::maximize ? 1 : -1;
  sf.original_rows = lp.rows().size();
  LinearProgram& out = sf.program;

  // Substitute x = offset + x+ - x-, with x+, x- >= 0.
  for (const Column& col : lp.columns()) {
    const Rational c = col.objective * Rational(sf.objective_sign);
    StandardForm::ColumnMap map;
    if (col.lower) {
      map.offset = *col.lower;
      map.plus = out.add_column(col.id, Rational(0), std::nullopt, c);
    } else if (col.upper) {
      map.offset = *col.upper;
      map.minus = out.add_column(col.id, Rational(0), std::nullopt, -c);
    } else {
      map.plus = out.add_column(col.id, Rational(0), std::nullopt, c);
      map.minus = out.add_column(col.id + "~neg", Rational(0), std::nullopt, -c);
    }
    sf.objective_constant += c * map.offset;
    sf.column_map.push_back(std::move(map));
  }

  auto substitute = [&](const Row& row, int sign) {
    std::vector<Term> terms;
    Rational rhs = row.rhs;
    for (const auto& [col, coef] : row.terms) {
      const auto& map = sf.column_map[col];
      rhs -= coef * map.offset;
      if (map.plus) terms.emplace_back(*map.plus, coef * Rational(sign));
      if (map.minus) terms.emplace_back(*map.minus, -coef * Rational(sign));
    }
    return std::make_pair(std::move(terms), rhs * Rational(sign));
  };

  for (std::size_t r = 0; r < lp.rows().size(); ++r) {
    const Row& row = lp.rows()[r];
    if (row.relation != Relation::greater_equal) {
      auto [terms, rhs] = substitute(row, 1);
      out.add_row(Relation::less_equal, rhs, std::move(terms));
      sf.row_origin.push_back({StandardForm::RowOrigin::Kind::row, r, 1});
    }
    if (row.relation != Relation::less_equal) {
      auto [terms, rhs] = substitute(row, -1);
      out.add_row(Relation::less_equal, rhs, std::move(terms));
      sf.row_origin.push_back({StandardForm::RowOrigin::Kind::row, r, -1});
    }
  }
  for (std::size_t j = 0; j < lp.columns().size(); ++j) {
    const Column& col = lp.columns()[j];
    if (col.lower && col.upper) {
      out.add_row(Relation::less_equal, *col.upper - *col.lower, {{*sf.column_map[j].plus, Rational(1)}});
      sf.row_origin.push_back({StandardForm::RowOrigin::Kind::upper_bound, j, 1});
    }
  }
  return sf;
}

Rational StandardForm::value(const Rational& standard_value) const {
  return (standard_value + objective_constant) * Rational(objective_sign);
}

std::vector<Rational> StandardForm::point(std::span<const Rational> standard_point) const {
  std::vector<Rational> x;
  x.reserve(column_map.size());
  for (const auto& map : column_map) {
    Rational v = map.offset;
    if (map.plus) v += standard_point[*map.plus];
    if (map.minus) v -= standard_point[*map.minus];
    x.push_back(std::move(v));
  }
  return x;
}

std::vector<Rational> StandardForm::ray(std::span<const Rational> standard_ray) const {
  std::vector<Rational> r;
  r.reserve(column_map.size());
  for (const auto& map : column_map) {
    Rational v;
    if (map.plus) v += standard_ray[*map.plus];
    if (map.minus) v -= standard_ray[*map.minus];
    r.push_back(std::move(v));
  }
  return r;
}

std::vector<Rational> StandardForm::duals(std::span<const Rational> standard_duals) const {
  std::vector<Rational> y(original_rows);
  for (std::size_t k = 0; k < row_origin.size(); ++k) {
    const RowOrigin& o = row_origin[k];
    if (o.kind != RowOrigin::Kind::row) continue;
    if (o.sign > 0) {
      y[o.index] += standard_duals[k];
    } else {
      y[o.index] -= standard_duals[k];
    }
  }
  return y;
}

Outcome StandardForm::back_translate(const Outcome& standard) const {
  Outcome out;
  out.status = standard.status;
  if (standard.status != Status::infeasible) out.point = point(standard.point);
  if (standard.status == Status::optimal) out.value = value(standard.value);
  if (standard.status == Status::unbounded) out.ray = ray(standard.ray);
  if (standard.status != Status::unbounded) out.duals = duals(standard.duals);
  return out;
}

}  // namespace vcsp::lp
