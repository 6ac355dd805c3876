#include <algorithm>
#include <limits>

#include "vcsp/core.hpp"

namespace vcsp {

std::size_t table_size(DomainSpec domain, std::size_t arity) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (size > std::numeric_limits<std::size_t>::max() / domain.size) {
      throw SizeLimitError("table of arity " + std::to_string(arity) + " over domain " +
                           std::to_string(domain.size) + " is too large");
    }
    size *= domain.size;
  }
  return size;
}

CostFunction::CostFunction(std::string name, std::size_t arity, DomainSpec domain,
                           std::vector<Rational> table)
    : name_(std::move(name)), arity_(arity), domain_(domain), table_(std::move(table)) {
  if (name_.empty()) throw ValidationError("cost function without a name");
  if (domain_.size == 0) throw ValidationError("empty domain");
  if (arity_ == 0) throw ValidationError("function " + name_ + " has arity 0");
  if (table_.size() != table_size(domain_, arity_)) {
    throw ValidationError("function " + name_ + ": table has " + std::to_string(table_.size()) +
                          " entries, expected " + std::to_string(table_size(domain_, arity_)));
  }
  for (const auto& v : table_) {
    if (v.sign() < 0) throw ValidationError("function " + name_ + ": negative value " + v.to_string());
  }
}

std::size_t CostFunction::index_of(std::span<const Label> args) const {
  std::size_t index = 0;
  for (Label a : args) index = index * domain_.size + a;
  return index;
}

std::vector<Label> CostFunction::tuple_of(std::size_t index) const {
  std::vector<Label> t(arity_);
  for (std::size_t i = arity_; i-- > 0;) {
    t[i] = static_cast<Label>(index % domain_.size);
    index /= domain_.size;
  }
  return t;
}

const Rational& CostFunction::max_value() const { return *std::max_element(table_.begin(), table_.end()); }

bool CostFunction::same_table(const CostFunction& other) const {
  return arity_ == other.arity_ && domain_ == other.domain_ && table_ == other.table_;
}

CostFunction CostFunction::renamed(std::string name) const {
  CostFunction f = *this;
  f.name_ = std::move(name);
  return f;
}

Language::Language(DomainSpec domain, std::vector<CostFunction> functions) : domain_(domain) {
  if (domain_.size == 0) throw ValidationError("empty domain");
  for (auto& f : functions) add(std::move(f));
}

const CostFunction* Language::find(const std::string& name) const {
  auto it = std::lower_bound(functions_.begin(), functions_.end(), name,
                             [](const CostFunction& f, const std::string& n) { return f.name() < n; });
  if (it == functions_.end() || it->name() != name) return nullptr;
  return &*it;
}

const CostFunction& Language::at(const std::string& name) const {
  const CostFunction* f = find(name);
  if (f == nullptr) throw ValidationError("unknown function " + name);
  return *f;
}

void Language::add(CostFunction f) {
  if (!(f.domain() == domain_)) {
    throw ValidationError("function " + f.name() + " is over domain " + std::to_string(f.domain().size) +
                          ", language domain is " + std::to_string(domain_.size));
  }
  auto it = std::lower_bound(functions_.begin(), functions_.end(), f.name(),
                             [](const CostFunction& g, const std::string& n) { return g.name() < n; });
  if (it != functions_.end() && it->name() == f.name()) {
    throw ValidationError("duplicate function name " + f.name());
  }
  functions_.insert(it, std::move(f));
}

const Language& Instance::lang() const {
  if (!language) throw ValidationError("instance has no language");
  return *language;
}

std::vector<std::string> Instance::validate() const {
  const Language& l = lang();
  std::vector<std::string> warnings;
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const Constraint& con = constraints[c];
    const CostFunction* f = l.find(con.function);
    if (f == nullptr) {
      throw ValidationError("constraint " + std::to_string(c) + ": unknown function " + con.function);
    }
    if (con.scope.size() != f->arity()) {
      throw ValidationError("constraint " + std::to_string(c) + ": scope of length " +
                            std::to_string(con.scope.size()) + " for " + con.function + " of arity " +
                            std::to_string(f->arity()));
    }
    for (VarId v : con.scope) {
      if (v >= variable_count) {
        throw ValidationError("constraint " + std::to_string(c) + ": variable " + std::to_string(v) +
                              " out of range (" + std::to_string(variable_count) + " variables)");
      }
    }
    if (con.weight.sign() < 0) {
      warnings.push_back("constraint " + std::to_string(c) + " has negative weight " + con.weight.to_string());
    }
  }
  return warnings;
}

bool operator==(const Instance& a, const Instance& b) {
  const bool same_language =
      a.language == b.language || (a.language && b.language && *a.language == *b.language);
  return same_language && a.variable_count == b.variable_count && a.constraints == b.constraints &&
         a.threshold == b.threshold && a.value_offset == b.value_offset;
}

void Gadget::validate() const {
  instance.validate();
  for (std::size_t i = 0; i < projection.size(); ++i) {
    if (projection[i] >= instance.variable_count) {
      throw ValidationError("gadget projection variable " + std::to_string(projection[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (projection[i] == projection[j]) {
        throw ValidationError("gadget projection repeats variable " + std::to_string(projection[i]));
      }
    }
  }
  if (projection.empty()) throw ValidationError("gadget with empty projection");
}

Instance with_language(const Instance& instance, LanguagePtr language) {
  Instance out = instance;
  out.language = std::move(language);
  return out;
}

}  // namespace vcsp
