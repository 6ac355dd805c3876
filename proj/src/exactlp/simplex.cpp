#include <vector>

#include "vcsp/exactlp.hpp"

namespace vcsp::lp {

namespace {

// Dense tableau for: maximise c^T x subject to A x <= b, x >= 0.
// Column layout: n structural columns, one slack per row, then one
// artificial per row whose right-hand side is negative. Row i reads
// sign_i * (a_i x + s_i) + art_i = |b_i|.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& program)
      : rows_(program.rows().size()), structural_(program.columns().size()) {
    std::vector<std::size_t> needs_artificial;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (program.rows()[i].rhs.sign() < 0) needs_artificial.push_back(i);
    }
    width_ = structural_ + rows_ + needs_artificial.size();
    t_.assign(rows_, std::vector<Rational>(width_));
    rhs_.resize(rows_);
    basis_.resize(rows_);
    d_.assign(width_, Rational());
    for (std::size_t i = 0; i < rows_; ++i) {
      const Row& row = program.rows()[i];
      const bool flip = row.rhs.sign() < 0;
      for (const auto& [col, coef] : row.terms) t_[i][col] = flip ? -coef : coef;
      t_[i][structural_ + i] = Rational(flip ? -1 : 1);
      rhs_[i] = flip ? -row.rhs : row.rhs;
      basis_[i] = structural_ + i;
    }
    for (std::size_t k = 0; k < needs_artificial.size(); ++k) {
      const std::size_t i = needs_artificial[k];
      t_[i][first_artificial() + k] = Rational(1);
      basis_[i] = first_artificial() + k;
    }
    for (std::size_t j = 0; j < structural_; ++j) objective_.push_back(program.columns()[j].objective);
  }

  Outcome solve() {
    Outcome out;
    if (first_artificial() < width_) {
      // Phase 1: minimise the sum of artificials.
      std::vector<Rational> cost(width_);
      for (std::size_t j = first_artificial(); j < width_; ++j) cost[j] = Rational(1);
      price(cost);
      run(width_);
      if (d_rhs_.sign() != 0) {
        out.status = Status::infeasible;
        out.duals = slack_prices();
        return out;
      }
      drive_out_artificials();
    }

    // Phase 2: minimise -c^T x; artificials may no longer enter.
    std::vector<Rational> cost(width_);
    for (std::size_t j = 0; j < structural_; ++j) cost[j] = -objective_[j];
    price(cost);
    const auto blocked = run(first_artificial());
    out.point = primal();
    if (blocked) {
      out.status = Status::unbounded;
      out.ray.assign(structural_, Rational());
      if (*blocked < structural_) out.ray[*blocked] = Rational(1);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (basis_[i] < structural_) out.ray[basis_[i]] = -t_[i][*blocked];
      }
      return out;
    }
    out.status = Status::optimal;
    out.value = d_rhs_;
    out.duals = slack_prices();
    return out;
  }

 private:
  std::size_t first_artificial() const { return structural_ + rows_; }

  // Reduced costs d = cost - c_B B^{-1} A for the current basis.
  void price(const std::vector<Rational>& cost) {
    d_ = cost;
    d_rhs_ = Rational();
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!t_[i][j].is_zero()) d_[j] -= cb * t_[i][j];
      }
      d_rhs_ -= cb * rhs_[i];
    }
  }

  // Bland's rule iterations over columns < allowed. Returns the entering
  // column when the objective is unbounded along it.
  std::optional<std::size_t> run(std::size_t allowed) {
    while (true) {
      std::size_t entering = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (d_[j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering == allowed) return std::nullopt;

      std::optional<std::size_t> leaving;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][entering].sign() <= 0) continue;
        if (!leaving) {
          leaving = i;
          continue;
        }
        const std::size_t r = *leaving;
        // rhs_i / t_i,e  vs  rhs_r / t_r,e, both denominators positive.
        const Rational lhs = rhs_[i] * t_[r][entering];
        const Rational rhs = rhs_[r] * t_[i][entering];
        if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[r])) leaving = i;
      }
      if (!leaving) return entering;
      pivot(*leaving, entering);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    const Rational inv = Rational(1) / t_[r][e];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < width_; ++j) {
      if (!t_[r][j].is_zero()) {
        t_[r][j] *= inv;
        nz.push_back(j);
      }
    }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_[i][e].is_zero()) continue;
      const Rational f = t_[i][e];
      for (std::size_t j : nz) t_[i][j] -= f * t_[r][j];
      if (!rhs_[r].is_zero()) rhs_[i] -= f * rhs_[r];
    }
    if (!d_[e].is_zero()) {
      const Rational f = d_[e];
      for (std::size_t j : nz) d_[j] -= f * t_[r][j];
      d_rhs_ -= f * rhs_[r];
    }
    basis_[r] = e;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < first_artificial()) continue;
      for (std::size_t j = 0; j < first_artificial(); ++j) {
        if (!t_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
      }
      // A row with no structural or slack entry left is redundant; its
      // artificial stays basic at zero and never blocks a ratio test.
    }
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(structural_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

  // Row multipliers read off the slack columns' reduced costs.
  std::vector<Rational> slack_prices() const {
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y[i] = d_[structural_ + i];
    return y;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::size_t width_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> objective_;
  std::vector<Rational> d_;
  Rational d_rhs_;
};

}  // namespace

Outcome simplex_solve(const LinearProgram& lp) {
  const StandardForm sf = to_standard_form(lp);
  Tableau tableau(sf.program);
  return sf.back_translate(tableau.solve());
}

}  // namespace vcsp::lp
