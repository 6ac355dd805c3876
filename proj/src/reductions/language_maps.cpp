#include <algorithm>

#include "vcsp/reductions.hpp"

namespace vcsp::reduce {

ScaleMap::ScaleMap(LanguagePtr source, LanguagePtr target, std::map<std::string, ScaleEntry> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (!source_ || !target_) throw ValidationError("scale map needs both languages");
  if (!(source_->domain() == target_->domain())) throw ValidationError("scale map between different domains");
  for (const auto& f : source_->functions()) {
    if (entries_.count(f.name()) == 0) throw ValidationError("scale map has no entry for " + f.name());
  }
  for (const auto& [name, entry] : entries_) {
    const CostFunction& f = source_->at(name);
    const CostFunction& g = target_->at(entry.target);
    if (entry.scale.sign() <= 0) throw ValidationError("scale map entry " + name + " has non-positive scale");
    if (f.arity() != g.arity()) throw ValidationError("scale map entry " + name + " changes arity");
    for (std::size_t i = 0; i < f.table().size(); ++i) {
      if (f.at(i) != entry.scale * g.at(i) + entry.shift) {
        throw ValidationError("scale map entry " + name + " = " + entry.scale.to_string() + "*" + entry.target +
                              " + " + entry.shift.to_string() + " fails at tuple index " + std::to_string(i));
      }
    }
  }
}

Instance apply_scale_map(const Instance& instance, const ScaleMap& map) {
  instance.validate();
  if (!(instance.lang() == map.source())) throw ValidationError("instance is not over the scale map's source language");
  Instance out;
  out.language = map.target();
  out.variable_count = instance.variable_count;
  out.threshold = instance.threshold;
  out.value_offset = instance.value_offset;
  for (const auto& con : instance.constraints) {
    auto it = map.entries().find(con.function);
    if (it == map.entries().end()) throw ValidationError("scale map has no entry for " + con.function);
    const ScaleEntry& e = it->second;
    out.constraints.push_back(Constraint{con.scope, e.target, con.weight * e.scale});
    out.value_offset += con.weight * e.shift;
  }
  return out;
}

Instance expand_expressible(const Instance& instance, const std::map<std::string, Gadget>& gadgets,
                            const BruteLimits& limits) {
  instance.validate();
  const Language& source = instance.lang();

  LanguagePtr target = instance.language;
  if (!gadgets.empty()) target = gadgets.begin()->second.instance.language;
  for (const auto& [name, gadget] : gadgets) {
    if (!(gadget.instance.lang() == *target)) throw ValidationError("gadgets are over different languages");
    const CostFunction* f = source.find(name);
    if (f == nullptr) throw ValidationError("gadget for unknown function " + name);
    const CostFunction expressed = expressed_function(gadget, name, limits);
    if (!expressed.same_table(*f)) throw ValidationError("gadget for " + name + " does not express its table");
  }

  Instance out;
  out.language = target;
  out.threshold = instance.threshold;
  out.value_offset = instance.value_offset;
  std::size_t next = instance.variable_count;
  for (const auto& con : instance.constraints) {
    auto it = gadgets.find(con.function);
    if (it == gadgets.end()) throw ValidationError("no gadget for function " + con.function);
    const Gadget& gadget = it->second;
    std::vector<VarId> rename(gadget.instance.variable_count);
    std::vector<bool> projected(gadget.instance.variable_count, false);
    for (std::size_t j = 0; j < gadget.projection.size(); ++j) {
      rename[gadget.projection[j]] = con.scope[j];
      projected[gadget.projection[j]] = true;
    }
    for (VarId v = 0; v < gadget.instance.variable_count; ++v) {
      if (!projected[v]) rename[v] = static_cast<VarId>(next++);
    }
    for (const auto& inner : gadget.instance.constraints) {
      Constraint c{{}, inner.function, con.weight * inner.weight};
      for (VarId v : inner.scope) c.scope.push_back(rename[v]);
      out.constraints.push_back(std::move(c));
    }
    out.value_offset += con.weight * gadget.instance.value_offset;
  }
  out.variable_count = next;
  return out;
}

Instance restrict_to_core_instance(const Instance& instance, const SubLanguage& core) {
  instance.validate();
  const SubLanguage expected = restrict_to_subdomain(instance.lang(), core.labels);
  if (!core.language || !(*expected.language == *core.language)) {
    throw ValidationError("core language is not the restriction of the instance's language");
  }
  return with_language(instance, core.language);
}

bool verify_perm_instance(const Instance& perm, const Language& language, const BruteLimits& limits) {
  const std::uint32_t d = language.domain().size;
  if (perm.variable_count != d) {
    throw ValidationError("permutation instance must have exactly one variable per label (" + std::to_string(d) + ")");
  }
  if (!(perm.lang().domain() == language.domain())) throw ValidationError("permutation instance over another domain");
  Assignment identity(d);
  for (Label a = 0; a < d; ++a) identity[a] = a;
  bool identity_optimal = false;
  for (const auto& h : all_optima(perm, limits)) {
    if (h == identity) identity_optimal = true;
    Assignment sorted = h;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  }
  return identity_optimal;
}

Lifted lift_gammac(const Instance& instance, const Instance& perm, const std::map<std::string, PinningSpec>& pinnings,
                   const BruteLimits& limits) {
  instance.validate();
  perm.validate();
  const Language& closure = instance.lang();
  const Language& base = perm.lang();
  if (!(closure.domain() == base.domain())) throw ValidationError("closure and base language domains differ");
  if (!verify_perm_instance(perm, base, limits)) throw ValidationError("invalid permutation instance");
  const std::size_t n = instance.variable_count;

  Rational max_value;
  for (const auto& f : closure.functions()) max_value = max(max_value, f.max_value());
  Rational big_m;
  for (const auto& con : instance.constraints) {
    if (con.weight.sign() < 0) throw ValidationError("lifting requires nonnegative weights");
    big_m += con.weight * max_value;
  }
  if (big_m.is_zero()) big_m = Rational(1);

  Lifted out;
  Instance& lifted = out.instance;
  lifted.language = perm.language;
  lifted.variable_count = n + base.domain().size;
  lifted.value_offset = instance.value_offset + big_m * perm.value_offset;
  for (const auto& con : instance.constraints) {
    auto it = pinnings.find(con.function);
    if (it == pinnings.end()) throw ValidationError("no pinning for function " + con.function);
    const PinningSpec& pin = it->second;
    const CostFunction& g = base.at(pin.base_function);
    if (!apply_pinning(g, pin, con.function).same_table(closure.at(con.function))) {
      throw ValidationError("pinning for " + con.function + " does not reproduce its table");
    }
    Constraint c{std::vector<VarId>(g.arity()), g.name(), con.weight};
    for (const auto& [pos, label] : pin.pinned_values) c.scope[pos] = static_cast<VarId>(n + label);
    for (std::size_t j = 0; j < pin.kept_positions.size(); ++j) c.scope[pin.kept_positions[j]] = con.scope[j];
    lifted.constraints.push_back(std::move(c));
  }
  for (const auto& con : perm.constraints) {
    Constraint c{{}, con.function, con.weight * big_m};
    for (VarId v : con.scope) c.scope.push_back(static_cast<VarId>(n + v));
    lifted.constraints.push_back(std::move(c));
  }
  if (instance.threshold) {
    lifted.threshold = *instance.threshold + big_m * brute_optimum(perm, limits).value;
  }
  out.big_m = big_m;
  return out;
}

}  // namespace vcsp::reduce
