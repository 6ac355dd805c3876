#include <algorithm>

#include "vcsp/reductions.hpp"

namespace vcsp::reduce {

namespace {

bool literal_value(const Literal& l, std::span<const std::uint8_t> values) {
  return (values[l.variable] != 0) != l.negated;
}

template <class Pred>
bool exists_assignment(std::uint32_t variable_count, unsigned limit_bits, Pred&& pred) {
  if (variable_count > limit_bits) {
    throw SizeLimitError("exhaustive search over 2^" + std::to_string(variable_count) + " assignments refused");
  }
  std::vector<std::uint8_t> values(variable_count, 0);
  const std::uint64_t total = std::uint64_t{1} << variable_count;
  for (std::uint64_t k = 0; k < total; ++k) {
    for (std::uint32_t i = 0; i < variable_count; ++i) values[i] = static_cast<std::uint8_t>((k >> i) & 1U);
    if (pred(std::span<const std::uint8_t>(values))) return true;
  }
  return false;
}

std::uint32_t literal_vertex(const Literal& l) { return 2 * l.variable + (l.negated ? 1 : 0); }

}  // namespace

void Formula::validate() const {
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    if (clauses[c].size() != width) {
      throw ValidationError("clause " + std::to_string(c) + " has " + std::to_string(clauses[c].size()) +
                            " literals, formula width is " + std::to_string(width));
    }
    for (const Literal& l : clauses[c]) {
      if (l.variable >= variable_count) {
        throw ValidationError("clause " + std::to_string(c) + " uses variable " + std::to_string(l.variable) +
                              " out of range");
      }
    }
  }
}

bool satisfies_cnf(const Formula& cnf, std::span<const std::uint8_t> values) {
  return std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const Clause& clause) {
    return std::any_of(clause.begin(), clause.end(), [&](const Literal& l) { return literal_value(l, values); });
  });
}

bool satisfies_nae(const Formula& nae, std::span<const std::uint8_t> values) {
  return std::all_of(nae.clauses.begin(), nae.clauses.end(), [&](const Clause& clause) {
    bool any_true = false;
    bool any_false = false;
    for (const Literal& l : clause) (literal_value(l, values) ? any_true : any_false) = true;
    return any_true && any_false;
  });
}

bool cnf_satisfiable(const Formula& cnf, unsigned limit_bits) {
  cnf.validate();
  return exists_assignment(cnf.variable_count, limit_bits, [&](auto v) { return satisfies_cnf(cnf, v); });
}

bool nae_satisfiable(const Formula& nae, unsigned limit_bits) {
  nae.validate();
  return exists_assignment(nae.variable_count, limit_bits, [&](auto v) { return satisfies_nae(nae, v); });
}

void MaxCutInstance::add_edge(std::uint32_t u, std::uint32_t v, const Rational& weight) {
  if (u == v) throw ValidationError("self-loop on vertex " + std::to_string(u));
  if (u >= vertex_count_ || v >= vertex_count_) throw ValidationError("edge endpoint out of range");
  if (weight.sign() < 0) throw ValidationError("negative edge weight " + weight.to_string());
  if (v < u) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v),
                             [](const Edge& e, const std::pair<std::uint32_t, std::uint32_t>& k) {
                               return std::make_pair(e.u, e.v) < k;
                             });
  if (it != edges_.end() && it->u == u && it->v == v) {
    it->weight += weight;
  } else {
    edges_.insert(it, Edge{u, v, weight});
  }
}

Rational MaxCutInstance::total_weight() const {
  Rational total;
  for (const auto& e : edges_) total += e.weight;
  return total;
}

Rational MaxCutInstance::cut_value(std::span<const std::uint8_t> side) const {
  Rational total;
  for (const auto& e : edges_) {
    if (side[e.u] != side[e.v]) total += e.weight;
  }
  return total;
}

Rational MaxCutInstance::max_cut(unsigned limit_bits) const {
  if (vertex_count_ > limit_bits) {
    throw SizeLimitError("exhaustive max-cut over 2^" + std::to_string(vertex_count_) + " partitions refused");
  }
  Rational best;
  std::vector<std::uint8_t> side(vertex_count_, 0);
  const std::uint64_t total = std::uint64_t{1} << vertex_count_;
  for (std::uint64_t k = 0; k < total; ++k) {
    for (std::uint32_t i = 0; i < vertex_count_; ++i) side[i] = static_cast<std::uint8_t>((k >> i) & 1U);
    best = max(best, cut_value(side));
  }
  return best;
}

Formula sat3_to_nae4(const Formula& cnf) {
  cnf.validate();
  if (cnf.width != 3) throw ValidationError("expected a width-3 CNF");
  Formula out{cnf.variable_count + 1, 4, {}};
  const Literal z{cnf.variable_count, false};
  for (const auto& clause : cnf.clauses) {
    Clause c = clause;
    c.push_back(z);
    out.clauses.push_back(std::move(c));
  }
  return out;
}

Formula nae4_to_nae3(const Formula& nae4) {
  nae4.validate();
  if (nae4.width != 4) throw ValidationError("expected a width-4 NAE formula");
  const auto m = static_cast<std::uint32_t>(nae4.clauses.size());
  Formula out{nae4.variable_count + m, 3, {}};
  for (std::uint32_t j = 0; j < m; ++j) {
    const Clause& c = nae4.clauses[j];
    const std::uint32_t z = nae4.variable_count + j;
    out.clauses.push_back({c[0], c[1], Literal{z, false}});
    out.clauses.push_back({Literal{z, true}, c[2], c[3]});
  }
  return out;
}

MaxCutInstance nae3_to_maxcut(const Formula& nae3) {
  nae3.validate();
  if (nae3.width != 3) throw ValidationError("expected a width-3 NAE formula");
  const auto m = static_cast<std::int64_t>(nae3.clauses.size());
  const Rational big_m(10 * m);
  MaxCutInstance cut(2 * nae3.variable_count);
  for (std::uint32_t v = 0; v < nae3.variable_count; ++v) cut.add_edge(2 * v, 2 * v + 1, big_m);
  for (const auto& clause : nae3.clauses) {
    std::vector<std::uint32_t> vertices;
    for (const Literal& l : clause) vertices.push_back(literal_vertex(l));
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.size() == 3) {
      cut.add_edge(vertices[0], vertices[1], Rational(1));
      cut.add_edge(vertices[0], vertices[2], Rational(1));
      cut.add_edge(vertices[1], vertices[2], Rational(1));
    } else if (vertices.size() == 2) {
      cut.add_edge(vertices[0], vertices[1], Rational(2));
    }
  }
  cut.threshold = Rational(static_cast<std::int64_t>(nae3.variable_count)) * big_m + Rational(2 * m);
  return cut;
}

Instance maxcut_to_vcsp(const MaxCutInstance& cut, LanguagePtr language, const XorSpec& xor_spec) {
  if (!language) throw ValidationError("maxcut_to_vcsp needs a target language");
  const CostFunction& f = language->at(xor_spec.function);
  const std::uint32_t d = language->domain().size;
  const Label a = xor_spec.a;
  const Label b = xor_spec.b;
  if (f.arity() != 2) throw ValidationError("xor function " + f.name() + " is not binary");
  if (a == b || a >= d || b >= d) throw ValidationError("xor labels must be two distinct domain labels");
  auto value = [&](Label x, Label y) -> const Rational& { return f.at(static_cast<std::size_t>(x) * d + y); };
  const Rational one(1);
  if (!value(a, b).is_zero() || !value(b, a).is_zero() || value(a, a) != one || value(b, b) != one) {
    throw ValidationError("xor function " + f.name() + " must be 0 on (a,b),(b,a) and 1 on (a,a),(b,b)");
  }
  for (Label x = 0; x < d; ++x) {
    for (Label y = 0; y < d; ++y) {
      const bool inside = (x == a || x == b) && (y == a || y == b);
      if (!inside && value(x, y) < one) {
        throw ValidationError("xor function " + f.name() + " is below 1 on a pair outside {a,b}");
      }
    }
  }

  Instance out;
  out.language = std::move(language);
  out.variable_count = cut.vertex_count();
  for (const auto& e : cut.edges()) out.constraints.push_back(Constraint{{e.u, e.v}, f.name(), e.weight});
  if (cut.threshold) out.threshold = cut.total_weight() - *cut.threshold;
  return out;
}

Instance chain_3sat_to_vcsp(const Formula& cnf, LanguagePtr language, const XorSpec& xor_spec) {
  return maxcut_to_vcsp(nae3_to_maxcut(nae4_to_nae3(sat3_to_nae4(cnf))), std::move(language), xor_spec);
}

}  // namespace vcsp::reduce
