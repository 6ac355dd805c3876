#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcsp/errors.hpp"
#include "vcsp/rational.hpp"

namespace vcsp {

using Label = std::uint32_t;
using VarId = std::uint32_t;
using Assignment = std::vector<Label>;

/// Finite domain {0, ..., size-1}.
struct DomainSpec {
  std::uint32_t size = 1;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// A finite-valued cost function given by its full table. Entries are stored
/// in lexicographic tuple order, first argument most significant.
class CostFunction {
 public:
  CostFunction(std::string name, std::size_t arity, DomainSpec domain, std::vector<Rational> table);

  const std::string& name() const { return name_; }
  std::size_t arity() const { return arity_; }
  DomainSpec domain() const { return domain_; }
  std::span<const Rational> table() const { return table_; }

  const Rational& operator()(std::span<const Label> args) const { return table_[index_of(args)]; }
  const Rational& at(std::size_t index) const { return table_[index]; }

  std::size_t index_of(std::span<const Label> args) const;
  std::vector<Label> tuple_of(std::size_t index) const;

  /// Largest table entry (tables are never empty).
  const Rational& max_value() const;

  bool same_table(const CostFunction& other) const;
  CostFunction renamed(std::string name) const;

  friend bool operator==(const CostFunction&, const CostFunction&) = default;

 private:
  std::string name_;
  std::size_t arity_;
  DomainSpec domain_;
  std::vector<Rational> table_;
};

/// d^arity, throwing SizeLimitError when it does not fit a size_t.
std::size_t table_size(DomainSpec domain, std::size_t arity);

/// A valued constraint language: uniquely named cost functions over one domain.
class Language {
 public:
  Language() = default;
  explicit Language(DomainSpec domain) : domain_(domain) {}
  Language(DomainSpec domain, std::vector<CostFunction> functions);

  DomainSpec domain() const { return domain_; }
  /// Functions sorted by name.
  const std::vector<CostFunction>& functions() const { return functions_; }
  const CostFunction* find(const std::string& name) const;
  const CostFunction& at(const std::string& name) const;

  void add(CostFunction f);

  friend bool operator==(const Language&, const Language&) = default;

 private:
  DomainSpec domain_;
  std::vector<CostFunction> functions_;
};

using LanguagePtr = std::shared_ptr<const Language>;

struct Constraint {
  std::vector<VarId> scope;
  std::string function;
  Rational weight{1};

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// A VCSP instance over a language. Variables are 0..variable_count-1.
/// Cost of an assignment is value_offset plus the weighted constraint costs.
struct Instance {
  LanguagePtr language;
  std::size_t variable_count = 0;
  std::vector<Constraint> constraints;
  std::optional<Rational> threshold;
  Rational value_offset;

  /// Throws ValidationError on unknown functions, arity mismatches or
  /// out-of-range variables. Returns non-fatal warnings (negative weights).
  std::vector<std::string> validate() const;

  const Language& lang() const;

  friend bool operator==(const Instance& a, const Instance& b);
};

/// m distinct projection variables over an instance; expresses an m-ary function.
struct Gadget {
  Instance instance;
  std::vector<VarId> projection;

  void validate() const;
};

/// How a member of the pinned closure arises from a base function g of arity n:
/// argument j of the new function sits at position kept_positions[j] of g, and
/// each position p in pinned_values is fixed to that label. Positions are 0-based.
struct PinningSpec {
  std::string base_function;
  std::vector<std::size_t> kept_positions;
  std::map<std::size_t, Label> pinned_values;

  friend bool operator==(const PinningSpec&, const PinningSpec&) = default;
};

/// Enumeration budget for exhaustive search.
struct BruteLimits {
  std::uint64_t max_assignments = std::uint64_t{1} << 24;
};

struct BruteResult {
  Rational value;
  Assignment assignment;
};

Rational cost(const Instance& instance, std::span<const Label> h);

/// Exact minimum over all d^n assignments; ties go to the lexicographically
/// smallest assignment.
BruteResult brute_optimum(const Instance& instance, const BruteLimits& limits = {});

/// Decision version: some assignment with cost <= threshold exists.
bool decide(const Instance& instance, const BruteLimits& limits = {});

/// Every assignment attaining the exact optimum, in lexicographic order.
std::vector<Assignment> all_optima(const Instance& instance, const BruteLimits& limits = {});

/// The function f(x) = min { cost(h) : h(projection) = x }.
CostFunction expressed_function(const Gadget& gadget, std::string name = "expressed",
                                const BruteLimits& limits = {});

struct PinnedClosure {
  LanguagePtr language;
  std::map<std::string, PinningSpec> pinnings;
};

/// Closure of a language under pinning argument positions to labels and
/// reordering the remaining ones. Members of the input keep their names;
/// new tables are named `g[x1,0,x2]` style and deduplicated by table.
PinnedClosure gamma_c(const Language& language);

/// Apply a pinning to its base function.
CostFunction apply_pinning(const CostFunction& base, const PinningSpec& pin, std::string name);

struct SubLanguage {
  LanguagePtr language;
  /// labels[i] is the original label of new label i.
  std::vector<Label> labels;
};

/// Restrict every table to tuples over `subdomain`, relabelled to 0..k-1 in
/// ascending order of the original labels.
SubLanguage restrict_to_subdomain(const Language& language, std::span<const Label> subdomain);

/// True iff for every label a, every optimum of witnesses[a] assigns a to some
/// variable. Labels without a witness make the check fail.
bool verify_core_witnesses(const Language& language, const std::map<Label, Instance>& witnesses,
                           const BruteLimits& limits = {});

/// Instance with identical structure but reinterpreted over another language.
Instance with_language(const Instance& instance, LanguagePtr language);

}  // namespace vcsp
