#include <doctest.h>

#include "support.hpp"
#include "vcsp/blp.hpp"
#include "vcsp/formats.hpp"

using namespace vcsp;
using testing::fn;
using testing::language;

TEST_SUITE("blp") {

TEST_CASE("shape of the relaxation") {
  const auto one = testing::instance(testing::cut_language(), 2, {{{0, 1}, "cut"}});
  const auto r = blp::build_blp(one);
  CHECK(r.index.lambda.size() == 4);
  CHECK(r.index.mu.size() == 4);
  std::size_t marginal = 0, normalisation = 0;
  for (const auto& tag : r.index.rows) {
    (tag.kind == blp::BlpIndex::RowTag::Kind::marginal ? marginal : normalisation)++;
  }
  CHECK(marginal == 4);
  CHECK(normalisation == 2);
  CHECK(r.program.sense() == lp::Sense::minimize);
  for (const auto& c : r.program.columns()) {
    CHECK(c.lower == Rational(0));
    CHECK(c.upper == Rational(1));
  }
  for (const auto& row : r.program.rows()) CHECK(row.relation == lp::Relation::equal);
}

TEST_CASE("empty instance") {
  const auto empty = testing::instance(testing::cut_language(), 1, {});
  const auto r = blp::build_blp(empty);
  CHECK(r.program.columns().size() == 2);
  REQUIRE(r.program.rows().size() == 1);
  CHECK(r.program.rows()[0].rhs == 1);
  CHECK(r.program.rows()[0].terms.size() == 2);
  CHECK(blp::blp_optimum(empty) == 0);
  const auto g = blp::gap_report(empty);
  CHECK(g.blp_value == 0);
  CHECK(g.brute_value == 0);
  CHECK(g.tight);
}

TEST_CASE("neq triangle gap") {
  const auto triangle = testing::neq_triangle();
  CHECK(blp::blp_optimum(triangle) == 0);
  const auto g = blp::gap_report(triangle);
  CHECK(g.blp_value == 0);
  CHECK(g.brute_value == 1);
  CHECK_FALSE(g.tight);
  const auto rounded = blp::round_by_self_reduction(triangle);
  CHECK(rounded.value == 1);
  CHECK(cost(triangle, rounded.assignment) == 1);
}

TEST_CASE("the half point is feasible for the triangle") {
  const auto triangle = testing::neq_triangle();
  const auto r = blp::build_blp(triangle);
  std::vector<Rational> x(r.program.columns().size());
  for (std::size_t k = 0; k < r.index.mu.size(); ++k) x[r.index.mu_start + k] = Rational(1, 2);
  for (std::size_t c = 0; c < 3; ++c) {
    x[r.index.lambda_column(c, 1)] = Rational(1, 2);
    x[r.index.lambda_column(c, 2)] = Rational(1, 2);
  }
  CHECK(r.program.is_feasible(x));
  CHECK(r.program.objective_value(x) == 0);
}

TEST_CASE("cut path is tight and rounds exactly") {
  const auto path = testing::instance(testing::cut_language(), 3, {{{0, 1}, "cut"}, {{1, 2}, "cut"}});
  const auto g = blp::gap_report(path);
  CHECK(g.tight);
  CHECK(g.blp_value == 0);
  CHECK(blp::round_by_self_reduction(path).value == 0);
}

TEST_CASE("single unary rounding") {
  const auto inst = testing::instance(language(2, {fn("u", 1, 2, {1, 0})}), 1, {{{0}, "u"}});
  const auto r = blp::round_by_self_reduction(inst);
  CHECK(r.assignment == Assignment{1});
  CHECK(r.value == 0);
}

TEST_CASE("arity cap") {
  const auto lang = language(2, {fn("big", 5, 2, std::initializer_list<std::int64_t>{
                                                    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
                                                    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1})});
  const auto inst = testing::instance(lang, 5, {{{0, 1, 2, 3, 4}, "big"}});
  CHECK_THROWS_AS(blp::build_blp(inst), ValidationError);
  CHECK(blp::blp_optimum(inst, blp::BlpOptions{5}) == 0);
}

TEST_CASE("integral embedding and lower bound on random instances") {
  testing::Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const auto lang = testing::random_language(rng, static_cast<std::uint32_t>(rng.uniform(1, 3)), 2);
    auto inst = testing::random_instance(rng, lang, 3, 4);
    inst.value_offset = rng.small_rational(-1, 1, 2);
    const auto r = blp::build_blp(inst);
    Assignment h(inst.variable_count);
    for (auto& v : h) v = static_cast<Label>(rng.uniform(0, lang->domain().size - 1));
    const auto point = blp::integral_point(r, inst, h);
    CHECK(r.program.is_feasible(point));
    CHECK(r.program.objective_value(point) == cost(inst, h) - inst.value_offset);

    const Rational relaxed = blp::blp_optimum(inst);
    CHECK(relaxed <= testing::naive_optimum(inst));
    const auto rounded = blp::round_by_self_reduction(inst);
    CHECK(rounded.value == cost(inst, rounded.assignment));
    CHECK(rounded.value >= relaxed);
  }
}

TEST_CASE("marginals sum to one on solved points") {
  testing::Rng rng(32);
  for (int i = 0; i < 30; ++i) {
    const auto lang = testing::random_language(rng, static_cast<std::uint32_t>(rng.uniform(2, 3)), 2);
    const auto inst = testing::random_instance(rng, lang, 3, 4);
    const auto r = blp::build_blp(inst);
    const auto out = lp::simplex_solve(r.program);
    REQUIRE(out.status == lp::Status::optimal);
    for (std::size_t c = 0; c < inst.constraints.size(); ++c) {
      Rational sum;
      for (std::size_t k = 0; k < r.index.lambda.size(); ++k) {
        if (r.index.lambda[k].constraint == c) sum += out.point[r.index.lambda_start + k];
      }
      CHECK(sum == 1);
    }
  }
}

TEST_CASE("cut-cost rounding matches the exact optimum") {
  testing::Rng rng(33);
  const auto lang = testing::cut_language();
  for (int i = 0; i < 40; ++i) {
    const auto inst = testing::random_instance(rng, lang, 4, 5);
    const auto exact = testing::naive_optimum(inst);
    CHECK(blp::blp_optimum(inst) == exact);
    CHECK(blp::round_by_self_reduction(inst).value == exact);
  }
}

TEST_CASE("emitted program is deterministic") {
  const auto a = io::serialize_lp(blp::build_blp(testing::neq_triangle()).program);
  const auto b = io::serialize_lp(blp::build_blp(testing::neq_triangle()).program);
  CHECK(a == b);
  CHECK(a.find("var lam_c0_0_1 lb 0 ub 1") != std::string::npos);
  CHECK(a.find("var mu_x2_1 lb 0 ub 1") != std::string::npos);
}

}
