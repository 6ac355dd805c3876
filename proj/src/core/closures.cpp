#include <algorithm>
#include <numeric>
#include <set>

#include "vcsp/core.hpp"

namespace vcsp {

namespace {

std::string pinned_name(const CostFunction& base, const PinningSpec& pin) {
  std::vector<std::string> slots(base.arity());
  for (const auto& [pos, label] : pin.pinned_values) slots[pos] = std::to_string(label);
  for (std::size_t j = 0; j < pin.kept_positions.size(); ++j) {
    slots[pin.kept_positions[j]] = "x" + std::to_string(j + 1);
  }
  std::string name = base.name() + "[";
  for (std::size_t p = 0; p < slots.size(); ++p) {
    if (p > 0) name += ",";
    name += slots[p];
  }
  return name + "]";
}

bool is_identity(const PinningSpec& pin) {
  if (!pin.pinned_values.empty()) return false;
  for (std::size_t j = 0; j < pin.kept_positions.size(); ++j) {
    if (pin.kept_positions[j] != j) return false;
  }
  return true;
}

// Calls emit(pin) for every pinning of an n-ary function with at least one
// kept position, in a fixed order: fewer pins first, then pinned position
// sets lexicographically, then labels, then argument orders.
template <class Emit>
void for_each_pinning(const CostFunction& base, Emit&& emit) {
  const std::size_t n = base.arity();
  const std::uint32_t d = base.domain().size;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<bool> select(n, false);
    std::fill(select.begin(), select.begin() + static_cast<std::ptrdiff_t>(k), true);
    // prev_permutation over a true-first mask walks k-subsets in lexicographic order.
    do {
      std::vector<std::size_t> pinned;
      std::vector<std::size_t> free;
      for (std::size_t p = 0; p < n; ++p) (select[p] ? pinned : free).push_back(p);
      std::vector<Label> labels(k, 0);
      while (true) {
        std::vector<std::size_t> order = free;
        do {
          PinningSpec pin;
          pin.base_function = base.name();
          pin.kept_positions = order;
          for (std::size_t i = 0; i < k; ++i) pin.pinned_values[pinned[i]] = labels[i];
          emit(pin);
        } while (std::next_permutation(order.begin(), order.end()));
        bool exhausted = true;
        for (std::size_t i = k; i-- > 0;) {
          if (++labels[i] < d) {
            exhausted = false;
            break;
          }
          labels[i] = 0;
        }
        if (exhausted) break;
      }
    } while (std::prev_permutation(select.begin(), select.end()));
  }
}

}  // namespace

CostFunction apply_pinning(const CostFunction& base, const PinningSpec& pin, std::string name) {
  const std::size_t n = base.arity();
  const std::size_t m = pin.kept_positions.size();
  if (m == 0 || m + pin.pinned_values.size() != n) {
    throw ValidationError("pinning of " + base.name() + " does not partition its positions");
  }
  std::vector<bool> used(n, false);
  for (std::size_t p : pin.kept_positions) {
    if (p >= n || used[p]) throw ValidationError("pinning of " + base.name() + " reuses a position");
    used[p] = true;
  }
  for (const auto& [p, a] : pin.pinned_values) {
    if (p >= n || used[p]) throw ValidationError("pinning of " + base.name() + " reuses a position");
    if (a >= base.domain().size) throw ValidationError("pinning label out of range");
    used[p] = true;
  }

  const std::size_t size = table_size(base.domain(), m);
  std::vector<Rational> table;
  table.reserve(size);
  std::vector<Label> args(n, 0);
  for (const auto& [p, a] : pin.pinned_values) args[p] = a;
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t rest = idx;
    for (std::size_t j = m; j-- > 0;) {
      args[pin.kept_positions[j]] = static_cast<Label>(rest % base.domain().size);
      rest /= base.domain().size;
    }
    table.push_back(base(args));
  }
  return CostFunction(std::move(name), m, base.domain(), std::move(table));
}

PinnedClosure gamma_c(const Language& language) {
  auto out = std::make_shared<Language>(language.domain());
  PinnedClosure closure;

  std::set<std::pair<std::size_t, std::vector<Rational>>, std::less<>> tables;
  auto key = [](const CostFunction& f) {
    return std::make_pair(f.arity(), std::vector<Rational>(f.table().begin(), f.table().end()));
  };

  for (const auto& g : language.functions()) {
    PinningSpec identity;
    identity.base_function = g.name();
    identity.kept_positions.resize(g.arity());
    std::iota(identity.kept_positions.begin(), identity.kept_positions.end(), std::size_t{0});
    out->add(g);
    closure.pinnings[g.name()] = identity;
    tables.insert(key(g));
  }
  for (const auto& g : language.functions()) {
    for_each_pinning(g, [&](const PinningSpec& pin) {
      if (is_identity(pin)) return;
      CostFunction f = apply_pinning(g, pin, pinned_name(g, pin));
      if (!tables.insert(key(f)).second) return;
      closure.pinnings[f.name()] = pin;
      out->add(std::move(f));
    });
  }
  closure.language = std::move(out);
  return closure;
}

SubLanguage restrict_to_subdomain(const Language& language, std::span<const Label> subdomain) {
  std::vector<Label> labels(subdomain.begin(), subdomain.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty()) throw ValidationError("empty subdomain");
  if (labels.back() >= language.domain().size) {
    throw ValidationError("subdomain label " + std::to_string(labels.back()) + " out of range");
  }

  const DomainSpec sub{static_cast<std::uint32_t>(labels.size())};
  auto out = std::make_shared<Language>(sub);
  for (const auto& f : language.functions()) {
    const std::size_t size = table_size(sub, f.arity());
    std::vector<Rational> table;
    table.reserve(size);
    std::vector<Label> args(f.arity());
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::size_t rest = idx;
      for (std::size_t i = f.arity(); i-- > 0;) {
        args[i] = labels[rest % sub.size];
        rest /= sub.size;
      }
      table.push_back(f(args));
    }
    out->add(CostFunction(f.name(), f.arity(), sub, std::move(table)));
  }
  return SubLanguage{std::move(out), std::move(labels)};
}

}  // namespace vcsp
