#include <algorithm>
#include <limits>

#include "enumerate.hpp"

namespace vcsp {

namespace detail {

CompiledInstance::CompiledInstance(const Instance& instance)
    : variable_count_(instance.variable_count),
      domain_size_(instance.lang().domain().size),
      offset_(instance.value_offset) {
  instance.validate();
  const Language& language = instance.lang();
  constraints_.reserve(instance.constraints.size());
  mpz_class scale = 1;
  for (const auto& con : instance.constraints) {
    CompiledConstraint cc;
    cc.scope = con.scope;
    cc.function = &language.at(con.function);
    cc.weighted.reserve(cc.function->table().size());
    for (const auto& v : cc.function->table()) {
      cc.weighted.push_back(con.weight * v);
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), cc.weighted.back().gmp().get_den_mpz_t());
    }
    constraints_.push_back(std::move(cc));
  }
  scale_ = Rational(mpq_class(scale));

  // Integral path needs the sum of per-constraint maxima of |scaled| to fit.
  const mpz_class limit = mpz_class(std::numeric_limits<std::int64_t>::max() / 2);
  mpz_class bound = 0;
  for (auto& cc : constraints_) {
    mpz_class worst = 0;
    std::vector<std::int64_t> scaled;
    scaled.reserve(cc.weighted.size());
    for (const auto& w : cc.weighted) {
      mpz_class s = w.gmp().get_num() * (scale / w.gmp().get_den());
      if (abs(s) > worst) worst = abs(s);
      if (abs(s) > limit) {
        integral_ = false;
        break;
      }
      scaled.push_back(static_cast<std::int64_t>(s.get_si()));
    }
    if (!integral_) break;
    bound += worst;
    if (bound > limit) {
      integral_ = false;
      break;
    }
    cc.scaled = std::move(scaled);
  }
  if (!integral_) {
    for (auto& cc : constraints_) cc.scaled.clear();
  } else {
    for (auto& cc : constraints_) cc.weighted.clear();
  }
}

std::uint64_t CompiledInstance::assignment_count(const BruteLimits& limits) const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < variable_count_; ++i) {
    if (total > limits.max_assignments / domain_size_) {
      throw SizeLimitError("brute force over " + std::to_string(domain_size_) + "^" +
                           std::to_string(variable_count_) + " assignments exceeds the limit of " +
                           std::to_string(limits.max_assignments));
    }
    total *= domain_size_;
  }
  if (total > limits.max_assignments) {
    throw SizeLimitError("brute force exceeds the limit of " + std::to_string(limits.max_assignments));
  }
  return total;
}

Rational CompiledInstance::to_value(std::int64_t scaled) const {
  return Rational(scaled) / scale_ + offset_;
}

}  // namespace detail

namespace {

// Exact minimum in the compiled instance's native cost representation.
struct MinTracker {
  bool seen = false;
  std::int64_t best_int = 0;
  Rational best_rat;
  Assignment argmin;

  void offer(std::span<const Label> h, std::int64_t c) {
    if (!seen || c < best_int) {
      seen = true;
      best_int = c;
      argmin.assign(h.begin(), h.end());
    }
  }
  void offer(std::span<const Label> h, const Rational& c) {
    if (!seen || c < best_rat) {
      seen = true;
      best_rat = c;
      argmin.assign(h.begin(), h.end());
    }
  }
};

}  // namespace

Rational cost(const Instance& instance, std::span<const Label> h) {
  const Language& language = instance.lang();
  if (h.size() != instance.variable_count) {
    throw ValidationError("assignment has " + std::to_string(h.size()) + " values for " +
                          std::to_string(instance.variable_count) + " variables");
  }
  for (Label a : h) {
    if (a >= language.domain().size) throw ValidationError("assignment label out of range");
  }
  Rational total = instance.value_offset;
  std::vector<Label> args;
  for (const auto& con : instance.constraints) {
    const CostFunction& f = language.at(con.function);
    args.clear();
    for (VarId v : con.scope) args.push_back(h[v]);
    total += con.weight * f(args);
  }
  return total;
}

BruteResult brute_optimum(const Instance& instance, const BruteLimits& limits) {
  detail::CompiledInstance compiled(instance);
  MinTracker tracker;
  compiled.enumerate(limits, [&](std::span<const Label> h, const auto& c) { tracker.offer(h, c); });
  BruteResult result;
  result.value = compiled.integral() ? compiled.to_value(tracker.best_int) : compiled.to_value(tracker.best_rat);
  result.assignment = std::move(tracker.argmin);
  return result;
}

bool decide(const Instance& instance, const BruteLimits& limits) {
  if (!instance.threshold) throw ValidationError("decision requires a threshold");
  return brute_optimum(instance, limits).value <= *instance.threshold;
}

std::vector<Assignment> all_optima(const Instance& instance, const BruteLimits& limits) {
  detail::CompiledInstance compiled(instance);
  MinTracker tracker;
  compiled.enumerate(limits, [&](std::span<const Label> h, const auto& c) { tracker.offer(h, c); });
  std::vector<Assignment> optima;
  compiled.enumerate(limits, [&](std::span<const Label> h, const auto& c) {
    bool hit = false;
    if constexpr (std::is_same_v<std::decay_t<decltype(c)>, std::int64_t>) {
      hit = c == tracker.best_int;
    } else {
      hit = c == tracker.best_rat;
    }
    if (hit) optima.emplace_back(h.begin(), h.end());
  });
  return optima;
}

CostFunction expressed_function(const Gadget& gadget, std::string name, const BruteLimits& limits) {
  gadget.validate();
  detail::CompiledInstance compiled(gadget.instance);
  const DomainSpec domain = gadget.instance.lang().domain();
  const std::size_t size = table_size(domain, gadget.projection.size());
  std::vector<bool> seen(size, false);
  std::vector<std::int64_t> best_int(size, 0);
  std::vector<Rational> best_rat(compiled.integral() ? 0 : size);

  compiled.enumerate(limits, [&](std::span<const Label> h, const auto& c) {
    std::size_t idx = 0;
    for (VarId v : gadget.projection) idx = idx * domain.size + h[v];
    if constexpr (std::is_same_v<std::decay_t<decltype(c)>, std::int64_t>) {
      if (!seen[idx] || c < best_int[idx]) best_int[idx] = c;
    } else {
      if (!seen[idx] || c < best_rat[idx]) best_rat[idx] = c;
    }
    seen[idx] = true;
  });

  std::vector<Rational> table;
  table.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    table.push_back(compiled.integral() ? compiled.to_value(best_int[i]) : compiled.to_value(best_rat[i]));
  }
  return CostFunction(std::move(name), gadget.projection.size(), domain, std::move(table));
}

bool verify_core_witnesses(const Language& language, const std::map<Label, Instance>& witnesses,
                           const BruteLimits& limits) {
  for (Label a = 0; a < language.domain().size; ++a) {
    auto it = witnesses.find(a);
    if (it == witnesses.end()) return false;
    const Instance& witness = it->second;
    if (witness.variable_count == 0) return false;
    if (!(witness.lang().domain() == language.domain())) {
      throw ValidationError("core witness for label " + std::to_string(a) + " is over another domain");
    }
    for (const auto& h : all_optima(witness, limits)) {
      if (std::find(h.begin(), h.end(), a) == h.end()) return false;
    }
  }
  return true;
}

}  // namespace vcsp
