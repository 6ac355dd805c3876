#pragma once

// Helpers shared by the unit tests and the acceptance binary. Nothing here
// calls into the library's solvers: oracles are written from scratch.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vcsp/core.hpp"
#include "vcsp/exactlp.hpp"
#include "vcsp/formats.hpp"
#include "vcsp/reductions.hpp"

namespace testing {

using vcsp::Rational;

inline std::vector<Rational> ints(std::initializer_list<std::int64_t> values) {
  return {values.begin(), values.end()};
}

inline vcsp::CostFunction fn(const std::string& name, std::size_t arity, std::uint32_t d,
                             std::initializer_list<std::int64_t> values) {
  return vcsp::CostFunction(name, arity, vcsp::DomainSpec{d}, ints(values));
}

inline vcsp::LanguagePtr language(std::uint32_t d, std::vector<vcsp::CostFunction> fns) {
  return std::make_shared<const vcsp::Language>(vcsp::DomainSpec{d}, std::move(fns));
}

/// neq(a,b) = 1 iff a = b: minimised exactly on the two unequal pairs.
inline vcsp::LanguagePtr neq_language() { return language(2, {fn("neq", 2, 2, {1, 0, 0, 1})}); }

/// cut(a,b) = 1 iff a != b: submodular on {0,1}.
inline vcsp::LanguagePtr cut_language() { return language(2, {fn("cut", 2, 2, {0, 1, 1, 0})}); }

struct Con {
  std::vector<vcsp::VarId> scope;
  std::string function;
  Rational weight{1};
};

inline vcsp::Instance instance(vcsp::LanguagePtr lang, std::size_t n, std::vector<Con> cons,
                               std::optional<Rational> threshold = std::nullopt, Rational offset = 0) {
  vcsp::Instance inst;
  inst.language = std::move(lang);
  inst.variable_count = n;
  for (auto& c : cons) inst.constraints.push_back({c.scope, c.function, c.weight});
  inst.threshold = threshold;
  inst.value_offset = offset;
  inst.validate();
  return inst;
}

inline vcsp::Instance neq_triangle() {
  return instance(neq_language(), 3, {{{0, 1}, "neq"}, {{1, 2}, "neq"}, {{0, 2}, "neq"}});
}

/// Naive optimum: plain nested enumeration with direct table lookup.
inline Rational naive_optimum(const vcsp::Instance& inst) {
  const std::uint32_t d = inst.lang().domain().size;
  std::vector<vcsp::Label> h(inst.variable_count, 0);
  std::optional<Rational> best;
  while (true) {
    Rational total = inst.value_offset;
    for (const auto& c : inst.constraints) {
      const auto& f = inst.lang().at(c.function);
      std::size_t index = 0;
      for (auto v : c.scope) index = index * d + h[v];
      total += c.weight * f.at(index);
    }
    if (!best || total < *best) best = total;
    std::size_t i = h.size();
    while (i > 0 && h[i - 1] + 1 == d) h[--i] = 0;
    if (i == 0) break;
    ++h[i - 1];
  }
  return *best;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  Rational small_rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    return Rational(uniform(lo, hi), uniform(1, max_den));
  }

 private:
  std::mt19937_64 engine_;
};

/// Random language over d labels with 1..3 functions of arity 1..max_arity and
/// values p/q with p in 0..4, q in 1..2.
inline vcsp::LanguagePtr random_language(Rng& rng, std::uint32_t d, std::size_t max_arity) {
  std::vector<vcsp::CostFunction> fns;
  const auto count = rng.uniform(1, 3);
  for (std::int64_t k = 0; k < count; ++k) {
    const auto arity = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_arity)));
    std::size_t size = 1;
    for (std::size_t i = 0; i < arity; ++i) size *= d;
    std::vector<Rational> table;
    for (std::size_t i = 0; i < size; ++i) table.push_back(rng.small_rational(0, 4, 2));
    fns.emplace_back("f" + std::to_string(k), arity, vcsp::DomainSpec{d}, std::move(table));
  }
  return std::make_shared<const vcsp::Language>(vcsp::DomainSpec{d}, std::move(fns));
}

inline vcsp::Instance random_instance(Rng& rng, vcsp::LanguagePtr lang, std::size_t max_vars, std::size_t max_cons) {
  vcsp::Instance inst;
  inst.language = lang;
  inst.variable_count = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_vars)));
  const auto m = rng.uniform(0, static_cast<std::int64_t>(max_cons));
  const auto& fns = lang->functions();
  for (std::int64_t k = 0; k < m; ++k) {
    const auto& f = fns[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(fns.size()) - 1))];
    vcsp::Constraint c;
    c.function = f.name();
    for (std::size_t i = 0; i < f.arity(); ++i) {
      c.scope.push_back(static_cast<vcsp::VarId>(rng.uniform(0, static_cast<std::int64_t>(inst.variable_count) - 1)));
    }
    c.weight = rng.small_rational(1, 3, 2);
    inst.constraints.push_back(std::move(c));
  }
  return inst;
}

// ---------------------------------------------------------------------------
// LP oracle by vertex enumeration. Handles programs whose columns all have a
// finite lower bound, so the feasible region (if nonempty) has a vertex.

struct OracleResult {
  vcsp::lp::Status status;
  Rational value;
};

namespace detail {

using Matrix = std::vector<std::vector<Rational>>;

/// Solves the square system A x = b by Gauss-Jordan; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(Matrix a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= factor * a[col][k];
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

struct Halfspace {
  std::vector<Rational> a;
  Rational b;
  bool equality = false;  // a.x = b, otherwise a.x <= b
};

/// Calls visit(x) for every vertex of {x : constraints}; stops when visit returns false.
template <class Visit>
void for_each_vertex(const std::vector<Halfspace>& hs, std::size_t n, Visit visit) {
  std::vector<std::size_t> pick(n);
  if (n == 0) {
    const bool ok = std::all_of(hs.begin(), hs.end(), [](const Halfspace& h) {
      return h.equality ? h.b.is_zero() : h.b.sign() >= 0;
    });
    if (ok) visit(std::vector<Rational>{});
    return;
  }
  if (hs.size() < n) return;
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    Matrix a;
    std::vector<Rational> b;
    for (auto i : pick) {
      a.push_back(hs[i].a);
      b.push_back(hs[i].b);
    }
    if (auto x = solve_square(a, b)) {
      bool ok = true;
      for (const auto& h : hs) {
        Rational lhs;
        for (std::size_t j = 0; j < n; ++j) lhs += h.a[j] * (*x)[j];
        if (h.equality ? lhs != h.b : lhs > h.b) {
          ok = false;
          break;
        }
      }
      if (ok && !visit(*x)) return;
    }
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == hs.size() - n + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t k = i; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }
}

}  // namespace detail

inline OracleResult lp_oracle(const vcsp::lp::LinearProgram& lp) {
  using vcsp::lp::Relation;
  const std::size_t n = lp.columns().size();
  const int sense = lp.sense() == vcsp::lp::Sense::maximize ? 1 : -1;
  std::vector<Rational> c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = lp.columns()[j].objective * sense;

  std::vector<detail::Halfspace> region, cone;
  auto add = [&](std::vector<Rational> a, Rational b, bool eq) {
    cone.push_back({a, 0, eq});
    region.push_back({std::move(a), std::move(b), eq});
  };
  for (const auto& row : lp.rows()) {
    std::vector<Rational> a(n);
    for (const auto& [j, v] : row.terms) a[j] = v;
    if (row.relation == Relation::greater_equal) {
      for (auto& v : a) v = -v;
      add(a, -row.rhs, false);
    } else {
      add(a, row.rhs, row.relation == Relation::equal);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& col = lp.columns()[j];
    if (!col.lower) throw std::logic_error("oracle needs finite lower bounds");
    std::vector<Rational> a(n);
    a[j] = -1;
    add(a, -*col.lower, false);
    if (col.upper) {
      a[j] = 1;
      add(a, *col.upper, false);
    }
  }

  std::optional<Rational> best;
  detail::for_each_vertex(region, n, [&](const std::vector<Rational>& x) {
    Rational v;
    for (std::size_t j = 0; j < n; ++j) v += c[j] * x[j];
    if (!best || v > *best) best = v;
    return true;
  });
  if (!best) return {vcsp::lp::Status::infeasible, 0};

  cone.push_back({c, 1, true});
  bool ray = false;
  detail::for_each_vertex(cone, n, [&](const std::vector<Rational>&) {
    ray = true;
    return false;
  });
  if (ray) return {vcsp::lp::Status::unbounded, 0};
  return {vcsp::lp::Status::optimal, *best * sense};
}

/// Random program: up to 4 columns with lower bound in {0,-1,-2} and optional
/// upper bound, up to 6 rows, coefficients in {-3..3}/{1,2}.
inline vcsp::lp::LinearProgram random_lp(Rng& rng) {
  using namespace vcsp::lp;
  LinearProgram lp(rng.coin() ? Sense::maximize : Sense::minimize);
  const auto n = rng.uniform(1, 4);
  for (std::int64_t j = 0; j < n; ++j) {
    const Rational lower = rng.uniform(0, 2) == 0 ? Rational(-rng.uniform(1, 2)) : Rational(0);
    std::optional<Rational> upper;
    if (rng.uniform(0, 3) == 0) upper = Rational(rng.uniform(0, 3));
    const Rational objective = rng.small_rational(-3, 3, 2);
    lp.add_column("x" + std::to_string(j), lower, upper, objective);
  }
  const auto m = rng.uniform(0, 6);
  for (std::int64_t i = 0; i < m; ++i) {
    std::vector<Term> terms;
    for (std::int64_t j = 0; j < n; ++j) {
      if (rng.uniform(0, 3) != 0) terms.emplace_back(static_cast<std::size_t>(j), rng.small_rational(-3, 3, 2));
    }
    const auto r = rng.uniform(0, 5);
    const Relation rel = r < 3 ? Relation::less_equal : (r < 5 ? Relation::greater_equal : Relation::equal);
    lp.add_row(rel, rng.small_rational(-3, 3, 2), std::move(terms));
  }
  return lp;
}

// ---------------------------------------------------------------------------
// Artifact generators for the round-trip properties.

inline vcsp::reduce::Formula random_formula(Rng& rng, std::uint32_t width) {
  vcsp::reduce::Formula f;
  f.width = width;
  f.variable_count = static_cast<std::uint32_t>(rng.uniform(0, 6));
  if (f.variable_count == 0) return f;
  const auto m = rng.uniform(0, 5);
  for (std::int64_t c = 0; c < m; ++c) {
    vcsp::reduce::Clause clause;
    for (std::uint32_t i = 0; i < width; ++i) {
      clause.push_back({static_cast<std::uint32_t>(rng.uniform(0, f.variable_count - 1)), rng.coin()});
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

inline vcsp::reduce::MaxCutInstance random_cut(Rng& rng) {
  vcsp::reduce::MaxCutInstance cut(static_cast<std::uint32_t>(rng.uniform(0, 7)));
  if (cut.vertex_count() >= 2) {
    const auto m = rng.uniform(0, 8);
    for (std::int64_t e = 0; e < m; ++e) {
      const auto u = static_cast<std::uint32_t>(rng.uniform(0, cut.vertex_count() - 1));
      auto v = static_cast<std::uint32_t>(rng.uniform(0, cut.vertex_count() - 2));
      if (v >= u) ++v;
      cut.add_edge(u, v, rng.small_rational(0, 5, 3));
    }
  }
  if (rng.coin()) cut.threshold = rng.small_rational(-2, 9, 4);
  return cut;
}

inline vcsp::Instance random_full_instance(Rng& rng) {
  auto lang = random_language(rng, static_cast<std::uint32_t>(rng.uniform(1, 3)), 3);
  auto inst = random_instance(rng, lang, 4, 5);
  if (rng.coin()) inst.threshold = rng.small_rational(-5, 9, 7);
  if (rng.coin()) inst.value_offset = rng.small_rational(-5, 5, 3);
  return inst;
}

inline vcsp::io::GadgetSet random_gadgets(Rng& rng) {
  vcsp::io::GadgetSet set;
  set.language = random_language(rng, static_cast<std::uint32_t>(rng.uniform(1, 3)), 2);
  const auto count = rng.uniform(0, 3);
  for (std::int64_t g = 0; g < count; ++g) {
    vcsp::Gadget gadget;
    gadget.instance = random_instance(rng, set.language, 4, 3);
    if (rng.coin()) gadget.instance.value_offset = rng.small_rational(0, 3, 2);
    const auto n = static_cast<std::int64_t>(gadget.instance.variable_count);
    std::vector<vcsp::VarId> vars;
    for (std::int64_t v = 0; v < n; ++v) vars.push_back(static_cast<vcsp::VarId>(v));
    const auto m = rng.uniform(1, n);
    for (std::int64_t i = 0; i < m; ++i) {
      std::swap(vars[static_cast<std::size_t>(i)], vars[static_cast<std::size_t>(rng.uniform(i, n - 1))]);
      gadget.projection.push_back(vars[static_cast<std::size_t>(i)]);
    }
    set.gadgets.emplace("g" + std::to_string(g), std::move(gadget));
  }
  return set;
}

inline std::map<std::string, vcsp::reduce::ScaleEntry> random_scale_entries(Rng& rng) {
  std::map<std::string, vcsp::reduce::ScaleEntry> entries;
  const auto count = rng.uniform(0, 4);
  for (std::int64_t k = 0; k < count; ++k) {
    entries["s" + std::to_string(k)] = {"t" + std::to_string(rng.uniform(0, 3)), rng.small_rational(1, 9, 4),
                                        rng.small_rational(-4, 4, 3)};
  }
  return entries;
}

inline vcsp::lp::LinearProgram random_lp_with_free_columns(Rng& rng) {
  using namespace vcsp::lp;
  LinearProgram lp(rng.coin() ? Sense::maximize : Sense::minimize);
  const auto n = rng.uniform(0, 5);
  for (std::int64_t j = 0; j < n; ++j) {
    std::optional<Rational> lower, upper;
    if (rng.coin()) lower = rng.small_rational(-3, 0, 2);
    if (rng.coin()) upper = rng.small_rational(1, 4, 2);
    lp.add_column("c" + std::to_string(j), lower, upper, rng.small_rational(-3, 3, 2));
  }
  const auto m = n == 0 ? 0 : rng.uniform(0, 4);
  for (std::int64_t i = 0; i < m; ++i) {
    std::vector<Term> terms;
    for (std::int64_t j = 0; j < n; ++j) {
      if (rng.coin()) terms.emplace_back(static_cast<std::size_t>(j), rng.small_rational(-3, 3, 2));
    }
    lp.add_row(static_cast<Relation>(rng.uniform(0, 2)), rng.small_rational(-3, 3, 2), std::move(terms));
  }
  return lp;
}

}  // namespace testing
