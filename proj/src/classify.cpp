#include "vcsp/classify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "vcsp/blp.hpp"

namespace vcsp::classify {

namespace {

struct Atom {
  const CostFunction* function;
  std::vector<VarId> scope;
};

std::vector<Atom> atoms_for(const Language& closure, std::size_t vars) {
  std::vector<Atom> atoms;
  for (const auto& f : closure.functions()) {
    std::vector<VarId> scope(f.arity(), 0);
    while (true) {
      atoms.push_back({&f, scope});
      std::size_t i = scope.size();
      bool exhausted = true;
      while (i-- > 0) {
        if (++scope[i] < vars) {
          exhausted = false;
          break;
        }
        scope[i] = 0;
      }
      if (exhausted) break;
    }
  }
  return atoms;
}

// C(n + k - 1, k), saturating.
std::uint64_t multisets(std::uint64_t n, std::uint64_t k) {
  if (k == 0) return 1;
  if (n == 0) return 0;
  long double r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n + k - i) / static_cast<long double>(i);
  if (r > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2)) {
    return std::numeric_limits<std::uint64_t>::max() / 2;
  }
  return static_cast<std::uint64_t>(r + 0.5L);
}

// splitmix64: fixed, portable stream for reproducible reports.
std::uint64_t next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t uniform(std::uint64_t& state, std::uint64_t n) { return next(state) % n; }

}  // namespace

std::optional<std::pair<Label, Label>> xor_labels(const CostFunction& binary) {
  if (binary.arity() != 2) return std::nullopt;
  const std::uint32_t d = binary.domain().size;
  const Rational& lowest = *std::min_element(binary.table().begin(), binary.table().end());
  std::vector<std::pair<Label, Label>> argmin;
  for (std::size_t i = 0; i < binary.table().size(); ++i) {
    if (binary.at(i) == lowest) argmin.emplace_back(static_cast<Label>(i / d), static_cast<Label>(i % d));
    if (argmin.size() > 2) return std::nullopt;
  }
  if (argmin.size() != 2) return std::nullopt;
  const auto [a, b] = argmin[0];
  if (a == b || argmin[1] != std::make_pair(b, a)) return std::nullopt;
  return std::make_pair(a, b);
}

std::uint64_t xor_search_size(const Language& language, const SearchBounds& bounds) {
  const PinnedClosure closure = gamma_c(language);
  std::uint64_t total = 0;
  for (std::size_t vars = 2; vars <= bounds.max_vars; ++vars) {
    const std::uint64_t atoms = atoms_for(*closure.language, vars).size();
    for (std::size_t cons = 0; cons <= bounds.max_cons; ++cons) {
      total += multisets(atoms, cons);
      if (total > std::numeric_limits<std::uint64_t>::max() / 4) return total;
    }
  }
  return total;
}

std::optional<XorWitness> xor_witness_search(const Language& language, const SearchBounds& bounds,
                                             const BruteLimits& limits) {
  const std::uint64_t size = xor_search_size(language, bounds);
  if (size > bounds.budget) {
    throw SizeLimitError("xor witness search over " + std::to_string(size) + " gadgets exceeds the budget of " +
                         std::to_string(bounds.budget));
  }
  const PinnedClosure closure = gamma_c(language);
  for (std::size_t vars = 2; vars <= bounds.max_vars; ++vars) {
    const std::vector<Atom> atoms = atoms_for(*closure.language, vars);
    for (std::size_t cons = 0; cons <= bounds.max_cons; ++cons) {
      if (cons > 0 && atoms.empty()) break;
      // Non-decreasing index sequences enumerate multisets of atoms.
      std::vector<std::size_t> pick(cons, 0);
      while (true) {
        Gadget gadget;
        gadget.instance.language = closure.language;
        gadget.instance.variable_count = vars;
        gadget.projection = {0, 1};
        for (std::size_t k : pick) {
          gadget.instance.constraints.push_back(Constraint{atoms[k].scope, atoms[k].function->name(), Rational(1)});
        }
        CostFunction table = expressed_function(gadget, "xor", limits);
        if (auto labels = xor_labels(table)) {
          return XorWitness{std::move(gadget), labels->first, labels->second, std::move(table)};
        }
        std::size_t i = cons;
        while (i > 0 && pick[i - 1] + 1 == atoms.size()) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < cons; ++j) pick[j] = pick[i - 1];
      }
    }
  }
  return std::nullopt;
}

Instance random_instance(const LanguagePtr& language, std::size_t max_vars, std::size_t max_cons,
                         std::uint64_t& state) {
  static const Rational weights[] = {Rational(1), Rational(1, 2), Rational(2), Rational(3)};
  Instance instance;
  instance.language = language;
  instance.variable_count = 1 + uniform(state, std::max<std::size_t>(max_vars, 1));
  const std::size_t count = uniform(state, max_cons + 1);
  const auto& functions = language->functions();
  if (functions.empty()) return instance;
  for (std::size_t c = 0; c < count; ++c) {
    const CostFunction& f = functions[uniform(state, functions.size())];
    Constraint con{{}, f.name(), Rational(1)};
    for (std::size_t i = 0; i < f.arity(); ++i) {
      con.scope.push_back(static_cast<VarId>(uniform(state, instance.variable_count)));
    }
    con.weight = weights[uniform(state, 4)];
    instance.constraints.push_back(std::move(con));
  }
  return instance;
}

DichotomyReport empirical_dichotomy(const LanguagePtr& language, std::size_t trials, const SearchBounds& bounds,
                                    std::uint64_t seed, const BruteLimits& limits) {
  DichotomyReport report;
  report.bounds = bounds;
  report.trials = trials;
  report.seed = seed;
  std::uint64_t state = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    Instance instance = random_instance(language, bounds.max_vars, bounds.max_cons, state);
    ++report.trials_run;
    const blp::GapReport gap = blp::gap_report(instance, limits);
    if (!gap.tight) {
      report.verdict = GapWitness{std::move(instance), gap.blp_value, gap.brute_value, t};
      return report;
    }
  }
  try {
    if (auto witness = xor_witness_search(*language, bounds, limits)) {
      report.verdict = std::move(*witness);
      return report;
    }
  } catch (const SizeLimitError&) {
    report.xor_search_completed = false;
  }
  report.verdict = BlpTightUpToBound{};
  return report;
}

std::string render(const DichotomyReport& report) {
  std::ostringstream out;
  out << "bounds max-vars " << report.bounds.max_vars << " max-cons " << report.bounds.max_cons << " trials "
      << report.trials << " seed " << report.seed << "\n";
  out << "trials-run " << report.trials_run << "\n";
  out << "xor-search " << (report.xor_search_completed ? "completed" : "skipped-over-budget") << "\n";
  if (const auto* w = std::get_if<XorWitness>(&report.verdict)) {
    out << "verdict xor-witness\n";
    out << "labels " << w->a << " " << w->b << "\n";
    out << "gadget vars " << w->gadget.instance.variable_count << " projection 0 1\n";
    for (const auto& c : w->gadget.instance.constraints) {
      out << "gadget-con " << c.function << " " << c.weight;
      for (VarId v : c.scope) out << " " << v;
      out << "\n";
    }
    for (std::size_t i = 0; i < w->expressed.table().size(); ++i) {
      const auto t = w->expressed.tuple_of(i);
      out << "expressed " << t[0] << " " << t[1] << " " << w->expressed.at(i) << "\n";
    }
  } else if (const auto* g = std::get_if<GapWitness>(&report.verdict)) {
    out << "verdict gap-witness\n";
    out << "trial " << g->trial << "\n";
    out << "blp " << g->blp_value << "\n";
    out << "brute " << g->brute_value << "\n";
    out << "instance vars " << g->instance.variable_count << "\n";
    for (const auto& c : g->instance.constraints) {
      out << "instance-con " << c.function << " " << c.weight;
      for (VarId v : c.scope) out << " " << v;
      out << "\n";
    }
  } else {
    out << "verdict blp-tight-up-to-bound\n";
  }
  return out.str();
}

}  // namespace vcsp::classify
