#include "vcsp/blp.hpp"

#include <string>

namespace vcsp::blp {

namespace {

std::string lambda_id(std::size_t c, std::span<const Label> tuple) {
  std::string id = "lam_c" + std::to_string(c);
  for (Label a : tuple) id += "_" + std::to_string(a);
  return id;
}

std::string mu_id(VarId x, Label a) { return "mu_x" + std::to_string(x) + "_" + std::to_string(a); }

Rational solve_value(const lp::LinearProgram& program) {
  const lp::Outcome outcome = lp::simplex_solve(program);
  if (outcome.status != lp::Status::optimal) {
    throw InternalError(std::string("relaxation solve returned ") + lp::to_string(outcome.status));
  }
  return outcome.value;
}

}  // namespace

Relaxation build_blp(const Instance& instance, const BlpOptions& options) {
  instance.validate();
  const Language& language = instance.lang();
  const std::uint32_t d = language.domain().size;

  Relaxation out;
  lp::LinearProgram& program = out.program;
  BlpIndex& index = out.index;
  program.set_sense(lp::Sense::minimize);
  index.domain_size = d;

  const Rational zero(0);
  const Rational one(1);

  index.lambda_start = 0;
  for (std::size_t c = 0; c < instance.constraints.size(); ++c) {
    const Constraint& con = instance.constraints[c];
    const CostFunction& f = language.at(con.function);
    if (f.arity() > options.max_arity) {
      throw ValidationError("constraint " + std::to_string(c) + " has arity " + std::to_string(f.arity()) +
                            ", above the relaxation cap of " + std::to_string(options.max_arity));
    }
    index.constraint_offset.push_back(index.lambda.size());
    for (std::size_t t = 0; t < f.table().size(); ++t) {
      auto tuple = f.tuple_of(t);
      program.add_column(lambda_id(c, tuple), zero, one, con.weight * f.at(t));
      index.lambda.push_back({c, std::move(tuple)});
    }
  }
  index.mu_start = program.columns().size();
  for (VarId x = 0; x < instance.variable_count; ++x) {
    for (Label a = 0; a < d; ++a) {
      program.add_column(mu_id(x, a), zero, one, zero);
      index.mu.push_back({x, a});
    }
  }

  for (std::size_t c = 0; c < instance.constraints.size(); ++c) {
    const Constraint& con = instance.constraints[c];
    const CostFunction& f = language.at(con.function);
    for (std::size_t i = 0; i < f.arity(); ++i) {
      for (Label a = 0; a < d; ++a) {
        std::vector<lp::Term> terms;
        for (std::size_t t = 0; t < f.table().size(); ++t) {
          if (index.lambda[index.constraint_offset[c] + t].tuple[i] == a) {
            terms.emplace_back(index.lambda_column(c, t), one);
          }
        }
        terms.emplace_back(index.mu_column(con.scope[i], a), -one);
        program.add_row(lp::Relation::equal, zero, std::move(terms));
        index.rows.push_back({BlpIndex::RowTag::Kind::marginal, c, i, a, 0});
      }
    }
  }
  for (VarId x = 0; x < instance.variable_count; ++x) {
    std::vector<lp::Term> terms;
    for (Label a = 0; a < d; ++a) terms.emplace_back(index.mu_column(x, a), one);
    program.add_row(lp::Relation::equal, one, std::move(terms));
    index.rows.push_back({BlpIndex::RowTag::Kind::normalisation, 0, 0, 0, x});
  }
  return out;
}

Rational blp_optimum(const Instance& instance, const BlpOptions& options) {
  const Relaxation relaxation = build_blp(instance, options);
  return solve_value(relaxation.program) + instance.value_offset;
}

std::vector<Rational> integral_point(const Relaxation& relaxation, const Instance& instance,
                                     std::span<const Label> h) {
  const BlpIndex& index = relaxation.index;
  std::vector<Rational> x(relaxation.program.columns().size());
  const Language& language = instance.lang();
  std::vector<Label> args;
  for (std::size_t c = 0; c < instance.constraints.size(); ++c) {
    const Constraint& con = instance.constraints[c];
    args.clear();
    for (VarId v : con.scope) args.push_back(h[v]);
    x[index.lambda_column(c, language.at(con.function).index_of(args))] = Rational(1);
  }
  for (VarId v = 0; v < instance.variable_count; ++v) x[index.mu_column(v, h[v])] = Rational(1);
  return x;
}

Rounded round_by_self_reduction(const Instance& instance, const BlpOptions& options) {
  Relaxation relaxation = build_blp(instance, options);
  lp::LinearProgram& program = relaxation.program;
  const BlpIndex& index = relaxation.index;
  const std::uint32_t d = index.domain_size;

  auto pin = [&](VarId x, Label chosen) {
    for (Label a = 0; a < d; ++a) {
      const Rational v(a == chosen ? 1 : 0);
      program.set_bounds(index.mu_column(x, a), v, v);
    }
  };

  Rational target = solve_value(program);
  Assignment h(instance.variable_count, 0);
  for (VarId x = 0; x < instance.variable_count; ++x) {
    std::optional<Label> best;
    Rational best_value;
    for (Label a = 0; a < d; ++a) {
      pin(x, a);
      const Rational v = solve_value(program);
      if (v == target) {
        best = a;
        best_value = v;
        break;
      }
      if (!best || v < best_value) {
        best = a;
        best_value = v;
      }
    }
    h[x] = *best;
    pin(x, *best);
    target = best_value;
  }
  return Rounded{cost(instance, h), std::move(h)};
}

GapReport gap_report(const Instance& instance, const BruteLimits& limits, const BlpOptions& options) {
  GapReport report;
  report.brute_value = brute_optimum(instance, limits).value;
  report.blp_value = blp_optimum(instance, options);
  report.tight = report.blp_value == report.brute_value;
  return report;
}

}  // namespace vcsp::blp
