#include <algorithm>
#include <map>

#include "vcsp/exactlp.hpp"

namespace vcsp::lp {

const char* to_string(Status status) {
  switch (status) {
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::optimal: return "optimal";
  }
  return "?";
}

std::size_t LinearProgram::add_column(std::string id, std::optional<Rational> lower,
                                      std::optional<Rational> upper, Rational objective) {
  if (id.empty()) throw ValidationError("empty column id");
  if (index_.count(id) != 0) throw ValidationError("duplicate column id " + id);
  if (lower && upper && *upper < *lower) throw ValidationError("column " + id + " has upper < lower");
  const std::size_t idx = columns_.size();
  index_.emplace(id, idx);
  columns_.push_back(Column{std::move(id), std::move(lower), std::move(upper), std::move(objective)});
  return idx;
}

std::size_t LinearProgram::add_row(Relation relation, Rational rhs, std::vector<Term> terms) {
  std::map<std::size_t, Rational> merged;
  for (auto& [col, coef] : terms) {
    if (col >= columns_.size()) throw ValidationError("row references undeclared column " + std::to_string(col));
    merged[col] += coef;
  }
  Row row{relation, std::move(rhs), {}};
  for (auto& [col, coef] : merged) {
    if (!coef.is_zero()) row.terms.emplace_back(col, std::move(coef));
  }
  rows_.push_back(std::move(row));
  return rows_.size() - 1;
}

void LinearProgram::set_objective(std::size_t column, Rational coefficient) {
  columns_.at(column).objective = std::move(coefficient);
}

void LinearProgram::set_bounds(std::size_t column, std::optional<Rational> lower, std::optional<Rational> upper) {
  Column& c = columns_.at(column);
  if (lower && upper && *upper < *lower) throw ValidationError("column " + c.id + " has upper < lower");
  c.lower = std::move(lower);
  c.upper = std::move(upper);
}

std::optional<std::size_t> LinearProgram::column_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational LinearProgram::objective_value(std::span<const Rational> x) const {
  Rational v;
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (!columns_[j].objective.is_zero()) v += columns_[j].objective * x[j];
  }
  return v;
}

Rational LinearProgram::activity(const Row& row, std::span<const Rational> x) const {
  Rational v;
  for (const auto& [col, coef] : row.terms) v += coef * x[col];
  return v;
}

bool LinearProgram::is_feasible(std::span<const Rational> x) const {
  if (x.size() != columns_.size()) return false;
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j].lower && x[j] < *columns_[j].lower) return false;
    if (columns_[j].upper && x[j] > *columns_[j].upper) return false;
  }
  for (const auto& row : rows_) {
    const Rational a = activity(row, x);
    switch (row.relation) {
      case Relation::less_equal:
        if (a > row.rhs) return false;
        break;
      case Relation::greater_equal:
        if (a < row.rhs) return false;
        break;
      case Relation::equal:
        if (a != row.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace vcsp::lp
