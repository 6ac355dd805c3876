#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vcsp/errors.hpp"
#include "vcsp/rational.hpp"

namespace vcsp::lp {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, equal, greater_equal };

struct Column {
  std::string id;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  Rational objective;

  friend bool operator==(const Column&, const Column&) = default;
};

using Term = std::pair<std::size_t, Rational>;

struct Row {
  Relation relation = Relation::less_equal;
  Rational rhs;
  /// Sorted by column index, no zero coefficients, no repeated columns.
  std::vector<Term> terms;

  friend bool operator==(const Row&, const Row&) = default;
};

/// A linear program over named columns. Rows are identified by position.
/// Columns without a lower (upper) bound are unbounded below (above).
class LinearProgram {
 public:
  explicit LinearProgram(Sense sense = Sense::maximize) : sense_(sense) {}

  Sense sense() const { return sense_; }
  void set_sense(Sense sense) { sense_ = sense; }

  std::size_t add_column(std::string id, std::optional<Rational> lower = std::nullopt,
                         std::optional<Rational> upper = std::nullopt, Rational objective = 0);
  /// Duplicate column entries are summed; zero coefficients dropped.
  std::size_t add_row(Relation relation, Rational rhs, std::vector<Term> terms);

  void set_objective(std::size_t column, Rational coefficient);
  void set_bounds(std::size_t column, std::optional<Rational> lower, std::optional<Rational> upper);

  const std::vector<Column>& columns() const { return columns_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::optional<std::size_t> column_index(const std::string& id) const;

  Rational objective_value(std::span<const Rational> x) const;
  Rational activity(const Row& row, std::span<const Rational> x) const;
  /// Every row relation and bound holds exactly.
  bool is_feasible(std::span<const Rational> x) const;

  friend bool operator==(const LinearProgram& a, const LinearProgram& b) {
    return a.sense_ == b.sense_ && a.columns_ == b.columns_ && a.rows_ == b.rows_;
  }

 private:
  Sense sense_;
  std::vector<Column> columns_;
  std::vector<Row> rows_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class Status { infeasible, unbounded, optimal };

const char* to_string(Status status);

/// Result of a solve together with its certificate:
///  - optimal: `point` is optimal, `duals` holds one multiplier per row;
///  - unbounded: `point` is feasible and `ray` improves the objective;
///  - infeasible: `duals` holds Farkas multipliers per row.
/// Multipliers are for the maximisation of the sense-adjusted objective; bound
/// multipliers are implied by them and are not stored.
struct Outcome {
  Status status = Status::infeasible;
  Rational value;
  std::vector<Rational> point;
  std::vector<Rational> ray;
  std::vector<Rational> duals;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Maximisation program with only `<=` rows and nonnegative, upper-unbounded
/// columns, plus the maps that carry its solutions back to the original.
struct StandardForm {
  struct ColumnMap {
    Rational offset;
    std::optional<std::size_t> plus;
    std::optional<std::size_t> minus;
  };
  struct RowOrigin {
    enum class Kind { row, upper_bound } kind = Kind::row;
    std::size_t index = 0;  // original row, or original column for upper_bound
    int sign = 1;           // standard row = sign * original row
  };

  LinearProgram program{Sense::maximize};
  std::vector<ColumnMap> column_map;
  std::vector<RowOrigin> row_origin;
  /// +1 when the original maximises, -1 when it minimises.
  int objective_sign = 1;
  Rational objective_constant;
  std::size_t original_rows = 0;

  Rational value(const Rational& standard_value) const;
  std::vector<Rational> point(std::span<const Rational> standard_point) const;
  std::vector<Rational> ray(std::span<const Rational> standard_ray) const;
  std::vector<Rational> duals(std::span<const Rational> standard_duals) const;
  Outcome back_translate(const Outcome& standard) const;
};

StandardForm to_standard_form(const LinearProgram& lp);

/// Two-phase primal simplex with Bland's rule, exact throughout.
Outcome simplex_solve(const LinearProgram& lp);

/// Independent check of an outcome against the program. Throws
/// ValidationError when the certificate has the wrong shape.
bool check_certificate(const LinearProgram& lp, const Outcome& outcome);

}  // namespace vcsp::lp
