#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vcsp/core.hpp"

namespace vcsp::reduce {

// ---------------------------------------------------------------------------
// Optimum-preserving transformations between valued languages.

/// f' = scale * g + shift, entrywise. The map is checked on construction.
struct ScaleEntry {
  std::string target;
  Rational scale{1};
  Rational shift;

  friend bool operator==(const ScaleEntry&, const ScaleEntry&) = default;
};

class ScaleMap {
 public:
  /// Throws ValidationError unless every source function has an entry that
  /// holds exactly with scale > 0.
  ScaleMap(LanguagePtr source, LanguagePtr target, std::map<std::string, ScaleEntry> entries);

  const Language& source() const { return *source_; }
  const LanguagePtr& target() const { return target_; }
  const std::map<std::string, ScaleEntry>& entries() const { return entries_; }

 private:
  LanguagePtr source_;
  LanguagePtr target_;
  std::map<std::string, ScaleEntry> entries_;
};

/// Each constraint (scope, f', q) becomes (scope, g, q*a) and the value
/// offset grows by q*b, so every assignment keeps its cost.
Instance apply_scale_map(const Instance& instance, const ScaleMap& map);

/// Replace each constraint by a fresh copy of the gadget expressing its
/// function. Gadget-internal variables get new ids above variable_count, in
/// constraint order then gadget variable order. Gadgets are checked against
/// the instance's language by exhaustion.
Instance expand_expressible(const Instance& instance, const std::map<std::string, Gadget>& gadgets,
                            const BruteLimits& limits = {});

/// Reinterpret an instance over a sub-language (same names, restricted tables).
/// Checks that `core` really is the restriction of the instance's language.
Instance restrict_to_core_instance(const Instance& instance, const SubLanguage& core);

/// True iff h(x_a) = a is optimal for `perm` and every optimum is injective.
/// Variable a of `perm` plays x_a.
bool verify_perm_instance(const Instance& perm, const Language& language, const BruteLimits& limits = {});

struct Lifted {
  Instance instance;
  /// Weight factor applied to the permutation instance's constraints.
  Rational big_m;
};

/// Rewrite an instance over the pinned closure as one over the base language:
/// pinned positions read the new variables x_a = n + a, and the permutation
/// instance is appended on x_0..x_{d-1} with weights multiplied by
/// M = sum(q) * max table value (M = 1 when that is 0).
/// Output optimum = input optimum + M * optimum(perm).
Lifted lift_gammac(const Instance& instance, const Instance& perm, const std::map<std::string, PinningSpec>& pinnings,
                   const BruteLimits& limits = {});

// ---------------------------------------------------------------------------
// The 3-SAT -> 4-NAESAT -> 3-NAESAT -> MAXCUT -> VCSP chain.

struct Literal {
  std::uint32_t variable = 0;
  bool negated = false;  // literal value = assignment[variable] XOR negated

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// Fixed-width clause list; used both for CNF (3-SAT) and NAE formulas.
struct Formula {
  std::uint32_t variable_count = 0;
  std::uint32_t width = 3;
  std::vector<Clause> clauses;

  void validate() const;
  friend bool operator==(const Formula&, const Formula&) = default;
};

bool satisfies_cnf(const Formula& cnf, std::span<const std::uint8_t> values);
bool satisfies_nae(const Formula& nae, std::span<const std::uint8_t> values);
/// Exhaustive satisfiability; throws SizeLimitError above 2^limit_bits assignments.
bool cnf_satisfiable(const Formula& cnf, unsigned limit_bits = 24);
bool nae_satisfiable(const Formula& nae, unsigned limit_bits = 24);

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  Rational weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted undirected graph; edges kept with u < v, one per pair, sorted.
class MaxCutInstance {
 public:
  explicit MaxCutInstance(std::uint32_t vertex_count = 0) : vertex_count_(vertex_count) {}

  /// Parallel edges accumulate. Self-loops and negative weights are rejected.
  void add_edge(std::uint32_t u, std::uint32_t v, const Rational& weight);

  std::uint32_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Rational total_weight() const;

  std::optional<Rational> threshold;

  Rational cut_value(std::span<const std::uint8_t> side) const;
  /// Exhaustive maximum cut; throws SizeLimitError above 2^limit_bits partitions.
  Rational max_cut(unsigned limit_bits = 24) const;

  friend bool operator==(const MaxCutInstance&, const MaxCutInstance&) = default;

 private:
  std::uint32_t vertex_count_;
  std::vector<Edge> edges_;
};

/// (l1 v l2 v l3) -> NAE(l1, l2, l3, z) with one shared fresh z = variable_count.
Formula sat3_to_nae4(const Formula& cnf);

/// NAE(a,b,c,d) -> NAE(a,b,z_j), NAE(!z_j,c,d), z_j = variable_count + j.
Formula nae4_to_nae3(const Formula& nae4);

/// Vertex 2v+b is literal "v XOR b"; edge (2v, 2v+1) has weight M = 10m and
/// each clause adds a unit triangle on its literal vertices. Threshold
/// |V|*M + 2m. Clauses whose literal vertices are not distinct are rewritten:
/// NAE(l,l,k) becomes a weight-2 edge l-k, NAE(l,l,l) contributes nothing,
/// which leaves the threshold unreachable.
MaxCutInstance nae3_to_maxcut(const Formula& nae3);

struct XorSpec {
  std::string function;
  Label a = 0;
  Label b = 1;
};

/// One variable per vertex, constraint ((u,v), f, w) per edge, threshold M - t
/// with M the total edge weight. The named function must satisfy
/// f(a,b) = f(b,a) = 0, f(a,a) = f(b,b) = 1 and be >= 1 on every pair that
/// involves a label outside {a, b}.
Instance maxcut_to_vcsp(const MaxCutInstance& cut, LanguagePtr language, const XorSpec& xor_spec);

/// sat3_to_nae4, nae4_to_nae3, nae3_to_maxcut, maxcut_to_vcsp in sequence.
Instance chain_3sat_to_vcsp(const Formula& cnf, LanguagePtr language, const XorSpec& xor_spec);

}  // namespace vcsp::reduce
