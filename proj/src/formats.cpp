#include "vcsp/formats.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace vcsp::io {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

class Parser {
 public:
  Parser(std::string_view text, std::string file) : file_(std::move(file)), lines_(tokenize(text)) {}

  [[noreturn]] void fail(std::size_t line, const std::string& message) const { throw FormatError(file_, line, message); }

  // Consumes the `<kind> 1` header and returns the remaining lines.
  std::span<const Line> body(std::string_view kind) const {
    if (lines_.empty()) fail(1, std::string("empty file, expected header '") + std::string(kind) + " 1'");
    const Line& h = lines_.front();
    if (h.tokens.size() != 2 || h.tokens[0] != kind || h.tokens[1] != "1") {
      fail(h.number, std::string("expected header '") + std::string(kind) + " 1'");
    }
    return std::span<const Line>(lines_).subspan(1);
  }

  void arity(const Line& line, std::size_t min, std::size_t max) const {
    if (line.tokens.size() < min || line.tokens.size() > max) {
      fail(line.number, "wrong number of fields for '" + std::string(line.tokens[0]) + "'");
    }
  }

  std::uint64_t uint(const Line& line, std::string_view token) const {
    std::uint64_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) fail(line.number, "expected a nonnegative integer, got '" + std::string(token) + "'");
    return value;
  }

  std::uint32_t uint32(const Line& line, std::string_view token) const {
    const std::uint64_t v = uint(line, token);
    if (v > std::numeric_limits<std::uint32_t>::max()) fail(line.number, "integer out of range: " + std::string(token));
    return static_cast<std::uint32_t>(v);
  }

  Rational rational(const Line& line, std::string_view token) const {
    auto r = Rational::parse(token);
    if (!r) fail(line.number, "expected a rational p/q, got '" + std::string(token) + "'");
    return *r;
  }

  const std::string& file() const { return file_; }

 private:
  std::string file_;
  std::vector<Line> lines_;
};

// Collects `domain`, `fn`, `val` lines into a Language.
class LanguageBuilder {
 public:
  explicit LanguageBuilder(const Parser& parser) : parser_(parser) {}

  // Returns false when the line is not a language line.
  bool accept(const Line& line) {
    const std::string_view key = line.tokens[0];
    if (key == "domain") {
      parser_.arity(line, 2, 2);
      if (domain_) parser_.fail(line.number, "duplicate domain line");
      domain_ = parser_.uint32(line, line.tokens[1]);
      if (*domain_ == 0) parser_.fail(line.number, "domain size must be positive");
      return true;
    }
    if (key == "fn") {
      parser_.arity(line, 3, 3);
      if (!domain_) parser_.fail(line.number, "fn before domain");
      Pending p;
      p.line = line.number;
      p.name = std::string(line.tokens[1]);
      p.arity = parser_.uint(line, line.tokens[2]);
      if (p.arity == 0) parser_.fail(line.number, "function " + p.name + " has arity 0");
      try {
        p.values.resize(table_size(DomainSpec{*domain_}, p.arity));
      } catch (const SizeLimitError& e) {
        parser_.fail(line.number, e.what());
      }
      p.seen.assign(p.values.size(), false);
      for (const auto& q : pending_) {
        if (q.name == p.name) parser_.fail(line.number, "duplicate function name " + p.name);
      }
      pending_.push_back(std::move(p));
      return true;
    }
    if (key == "val") {
      if (pending_.empty()) parser_.fail(line.number, "val before any fn");
      Pending& p = pending_.back();
      if (line.tokens.size() != p.arity + 2) {
        parser_.fail(line.number, "val for " + p.name + " needs " + std::to_string(p.arity) + " labels and a value");
      }
      std::size_t index = 0;
      for (std::size_t i = 0; i < p.arity; ++i) {
        const std::uint32_t a = parser_.uint32(line, line.tokens[1 + i]);
        if (a >= *domain_) parser_.fail(line.number, "label " + std::to_string(a) + " outside the domain");
        index = index * *domain_ + a;
      }
      if (p.seen[index]) parser_.fail(line.number, "duplicate table row for " + p.name);
      const Rational v = parser_.rational(line, line.tokens.back());
      if (v.sign() < 0) parser_.fail(line.number, "negative value in " + p.name);
      p.values[index] = v;
      p.seen[index] = true;
      return true;
    }
    return false;
  }

  bool empty() const { return !domain_ && pending_.empty(); }

  Language finish(std::size_t line_for_missing_domain) const {
    if (!domain_) parser_.fail(line_for_missing_domain, "missing domain line");
    Language language(DomainSpec{*domain_});
    for (const auto& p : pending_) {
      for (std::size_t i = 0; i < p.seen.size(); ++i) {
        if (!p.seen[i]) {
          std::string tuple;
          std::size_t rest = i;
          std::vector<std::size_t> labels(p.arity);
          for (std::size_t k = p.arity; k-- > 0;) {
            labels[k] = rest % *domain_;
            rest /= *domain_;
          }
          for (std::size_t k = 0; k < p.arity; ++k) tuple += (k ? " " : "") + std::to_string(labels[k]);
          parser_.fail(p.line, "function " + p.name + " has no row for tuple (" + tuple + ")");
        }
      }
      language.add(CostFunction(p.name, p.arity, DomainSpec{*domain_}, p.values));
    }
    return language;
  }

 private:
  struct Pending {
    std::size_t line = 0;
    std::string name;
    std::size_t arity = 0;
    std::vector<Rational> values;
    std::vector<bool> seen;
  };
  const Parser& parser_;
  std::optional<std::uint32_t> domain_;
  std::vector<Pending> pending_;
};

void write_language_body(std::ostream& out, const Language& language) {
  out << "domain " << language.domain().size << "\n";
  for (const auto& f : language.functions()) {
    out << "fn " << f.name() << " " << f.arity() << "\n";
    for (std::size_t i = 0; i < f.table().size(); ++i) {
      out << "val";
      for (Label a : f.tuple_of(i)) out << " " << a;
      out << " " << f.at(i) << "\n";
    }
  }
}

void write_constraint(std::ostream& out, const Constraint& c) {
  out << "con " << c.function << " " << c.weight;
  for (VarId v : c.scope) out << " " << v;
  out << "\n";
}

// Shared handling of the `language inline|PATH` directive.
struct LanguageSource {
  bool seen = false;
  bool inline_body = false;
  std::size_t line = 0;
  LanguagePtr loaded;

  bool accept(const Parser& parser, const Line& line_in, const LanguageLoader& loader) {
    if (line_in.tokens[0] != "language") return false;
    parser.arity(line_in, 2, 2);
    if (seen) parser.fail(line_in.number, "duplicate language line");
    seen = true;
    line = line_in.number;
    if (line_in.tokens[1] == "inline") {
      inline_body = true;
    } else {
      if (!loader) parser.fail(line_in.number, "language file references are not available here");
      try {
        loaded = loader(std::string(line_in.tokens[1]));
      } catch (const FormatError&) {
        throw;
      } catch (const std::exception& e) {
        parser.fail(line_in.number, std::string("cannot load language: ") + e.what());
      }
      if (!loaded) parser.fail(line_in.number, "cannot load language " + std::string(line_in.tokens[1]));
    }
    return true;
  }

  LanguagePtr finish(const Parser& parser, const LanguageBuilder& builder) const {
    if (!seen) parser.fail(1, "missing language line");
    if (inline_body) return std::make_shared<Language>(builder.finish(line));
    if (!builder.empty()) parser.fail(line, "language body given for a referenced language");
    return loaded;
  }
};

struct PendingConstraint {
  std::size_t line;
  Constraint constraint;
};

Constraint read_constraint(const Parser& parser, const Line& line) {
  if (line.tokens.size() < 3) parser.fail(line.number, "con needs a function, a weight and a scope");
  Constraint c{{}, std::string(line.tokens[1]), parser.rational(line, line.tokens[2])};
  for (std::size_t i = 3; i < line.tokens.size(); ++i) c.scope.push_back(parser.uint32(line, line.tokens[i]));
  return c;
}

void check_instance(const Parser& parser, const Instance& instance, const std::vector<PendingConstraint>& cons,
                    std::size_t fallback_line) {
  for (const auto& p : cons) {
    const CostFunction* f = instance.lang().find(p.constraint.function);
    if (f == nullptr) parser.fail(p.line, "unknown function " + p.constraint.function);
    if (f->arity() != p.constraint.scope.size()) {
      parser.fail(p.line, "scope length " + std::to_string(p.constraint.scope.size()) + " does not match arity " +
                              std::to_string(f->arity()) + " of " + f->name());
    }
    for (VarId v : p.constraint.scope) {
      if (v >= instance.variable_count) parser.fail(p.line, "variable " + std::to_string(v) + " out of range");
    }
  }
  try {
    instance.validate();
  } catch (const ValidationError& e) {
    parser.fail(fallback_line, e.what());
  }
}

reduce::Literal read_literal(const Parser& parser, const Line& line, std::string_view token) {
  const bool negated = !token.empty() && token[0] == '!';
  if (negated) token.remove_prefix(1);
  return reduce::Literal{parser.uint32(line, token), negated};
}

void write_literal(std::ostream& out, const reduce::Literal& l) {
  out << (l.negated ? "!" : "") << l.variable;
}

const char* relation_token(lp::Relation r) {
  switch (r) {
    case lp::Relation::less_equal: return "<=";
    case lp::Relation::equal: return "=";
    case lp::Relation::greater_equal: return ">=";
  }
  return "?";
}

}  // namespace

Language parse_language(std::string_view text, const std::string& file) {
  Parser parser(text, file);
  LanguageBuilder builder(parser);
  for (const Line& line : parser.body("vcl")) {
    if (!builder.accept(line)) parser.fail(line.number, "unknown keyword '" + std::string(line.tokens[0]) + "'");
  }
  return builder.finish(1);
}

std::string serialize_language(const Language& language) {
  std::ostringstream out;
  out << "vcl 1\n";
  write_language_body(out, language);
  return out.str();
}

Instance parse_instance(std::string_view text, const std::string& file, const LanguageLoader& loader) {
  Parser parser(text, file);
  LanguageBuilder builder(parser);
  LanguageSource source;
  Instance instance;
  std::optional<std::size_t> vars;
  std::vector<PendingConstraint> cons;
  std::size_t last_line = 1;
  for (const Line& line : parser.body("vci")) {
    last_line = line.number;
    const std::string_view key = line.tokens[0];
    if (source.accept(parser, line, loader)) continue;
    if (key == "domain" || key == "fn" || key == "val") {
      if (!source.inline_body) parser.fail(line.number, "language lines require 'language inline' first");
      builder.accept(line);
    } else if (key == "vars") {
      parser.arity(line, 2, 2);
      if (vars) parser.fail(line.number, "duplicate vars line");
      vars = parser.uint(line, line.tokens[1]);
    } else if (key == "offset") {
      parser.arity(line, 2, 2);
      instance.value_offset = parser.rational(line, line.tokens[1]);
    } else if (key == "threshold") {
      parser.arity(line, 2, 2);
      if (instance.threshold) parser.fail(line.number, "duplicate threshold line");
      instance.threshold = parser.rational(line, line.tokens[1]);
    } else if (key == "con") {
      cons.push_back({line.number, read_constraint(parser, line)});
    } else {
      parser.fail(line.number, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!vars) parser.fail(last_line, "missing vars line");
  instance.language = source.finish(parser, builder);
  instance.variable_count = *vars;
  for (auto& p : cons) instance.constraints.push_back(p.constraint);
  check_instance(parser, instance, cons, last_line);
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "vci 1\nlanguage inline\n";
  write_language_body(out, instance.lang());
  out << "vars " << instance.variable_count << "\n";
  if (!instance.value_offset.is_zero()) out << "offset " << instance.value_offset << "\n";
  if (instance.threshold) out << "threshold " << *instance.threshold << "\n";
  for (const auto& c : instance.constraints) write_constraint(out, c);
  return out.str();
}

GadgetSet parse_gadgets(std::string_view text, const std::string& file, const LanguageLoader& loader) {
  Parser parser(text, file);
  LanguageBuilder builder(parser);
  LanguageSource source;
  struct Pending {
    std::size_t line;
    std::string name;
    std::size_t vars;
    std::vector<VarId> projection;
    Rational offset;
    std::vector<PendingConstraint> cons;
  };
  std::vector<Pending> pending;
  for (const Line& line : parser.body("vcg")) {
    const std::string_view key = line.tokens[0];
    if (source.accept(parser, line, loader)) continue;
    if (key == "domain" || key == "fn" || key == "val") {
      if (!source.inline_body) parser.fail(line.number, "language lines require 'language inline' first");
      if (!pending.empty()) parser.fail(line.number, "language lines must precede the gadgets");
      builder.accept(line);
    } else if (key == "gadget") {
      // gadget NAME vars N proj v1 .. vm
      if (line.tokens.size() < 6 || line.tokens[2] != "vars" || line.tokens[4] != "proj") {
        parser.fail(line.number, "expected 'gadget NAME vars N proj v1 .. vm'");
      }
      Pending g{line.number, std::string(line.tokens[1]), parser.uint(line, line.tokens[3]), {}, Rational(), {}};
      for (std::size_t i = 5; i < line.tokens.size(); ++i) g.projection.push_back(parser.uint32(line, line.tokens[i]));
      for (const auto& q : pending) {
        if (q.name == g.name) parser.fail(line.number, "duplicate gadget for " + g.name);
      }
      pending.push_back(std::move(g));
    } else if (key == "offset") {
      parser.arity(line, 2, 2);
      if (pending.empty()) parser.fail(line.number, "offset outside a gadget");
      pending.back().offset = parser.rational(line, line.tokens[1]);
    } else if (key == "con") {
      if (pending.empty()) parser.fail(line.number, "con outside a gadget");
      pending.back().cons.push_back({line.number, read_constraint(parser, line)});
    } else {
      parser.fail(line.number, "unknown keyword '" + std::string(key) + "'");
    }
  }
  GadgetSet set;
  set.language = source.finish(parser, builder);
  for (auto& p : pending) {
    Gadget g;
    g.instance.language = set.language;
    g.instance.variable_count = p.vars;
    g.instance.value_offset = p.offset;
    for (auto& c : p.cons) g.instance.constraints.push_back(c.constraint);
    g.projection = p.projection;
    check_instance(parser, g.instance, p.cons, p.line);
    try {
      g.validate();
    } catch (const ValidationError& e) {
      parser.fail(p.line, e.what());
    }
    set.gadgets.emplace(p.name, std::move(g));
  }
  return set;
}

std::string serialize_gadgets(const GadgetSet& set) {
  std::ostringstream out;
  out << "vcg 1\nlanguage inline\n";
  write_language_body(out, *set.language);
  for (const auto& [name, g] : set.gadgets) {
    out << "gadget " << name << " vars " << g.instance.variable_count << " proj";
    for (VarId v : g.projection) out << " " << v;
    out << "\n";
    if (!g.instance.value_offset.is_zero()) out << "offset " << g.instance.value_offset << "\n";
    for (const auto& c : g.instance.constraints) write_constraint(out, c);
  }
  return out.str();
}

std::map<std::string, reduce::ScaleEntry> parse_scale_map(std::string_view text, const std::string& file) {
  Parser parser(text, file);
  std::map<std::string, reduce::ScaleEntry> entries;
  for (const Line& line : parser.body("vcs")) {
    if (line.tokens[0] != "map") parser.fail(line.number, "unknown keyword '" + std::string(line.tokens[0]) + "'");
    parser.arity(line, 5, 5);
    reduce::ScaleEntry e{std::string(line.tokens[2]), parser.rational(line, line.tokens[3]),
                         parser.rational(line, line.tokens[4])};
    if (e.scale.sign() <= 0) parser.fail(line.number, "scale must be positive");
    if (!entries.emplace(std::string(line.tokens[1]), std::move(e)).second) {
      parser.fail(line.number, "duplicate map entry for " + std::string(line.tokens[1]));
    }
  }
  return entries;
}

std::string serialize_scale_map(const std::map<std::string, reduce::ScaleEntry>& entries) {
  std::ostringstream out;
  out << "vcs 1\n";
  for (const auto& [name, e] : entries) out << "map " << name << " " << e.target << " " << e.scale << " " << e.shift << "\n";
  return out.str();
}

reduce::MaxCutInstance parse_maxcut(std::string_view text, const std::string& file) {
  Parser parser(text, file);
  std::optional<std::uint32_t> vertices;
  std::optional<Rational> threshold;
  std::vector<std::pair<std::size_t, reduce::Edge>> edges;
  std::size_t last_line = 1;
  for (const Line& line : parser.body("cut")) {
    last_line = line.number;
    const std::string_view key = line.tokens[0];
    if (key == "vertices") {
      parser.arity(line, 2, 2);
      if (vertices) parser.fail(line.number, "duplicate vertices line");
      vertices = parser.uint32(line, line.tokens[1]);
    } else if (key == "threshold") {
      parser.arity(line, 2, 2);
      if (threshold) parser.fail(line.number, "duplicate threshold line");
      threshold = parser.rational(line, line.tokens[1]);
    } else if (key == "edge") {
      parser.arity(line, 4, 4);
      edges.push_back({line.number, reduce::Edge{parser.uint32(line, line.tokens[1]), parser.uint32(line, line.tokens[2]),
                                                 parser.rational(line, line.tokens[3])}});
    } else {
      parser.fail(line.number, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!vertices) parser.fail(last_line, "missing vertices line");
  reduce::MaxCutInstance cut(*vertices);
  cut.threshold = threshold;
  for (const auto& [number, e] : edges) {
    try {
      cut.add_edge(e.u, e.v, e.weight);
    } catch (const ValidationError& err) {
      parser.fail(number, err.what());
    }
  }
  return cut;
}

std::string serialize_maxcut(const reduce::MaxCutInstance& cut) {
  std::ostringstream out;
  out << "cut 1\nvertices " << cut.vertex_count() << "\n";
  if (cut.threshold) out << "threshold " << *cut.threshold << "\n";
  for (const auto& e : cut.edges()) out << "edge " << e.u << " " << e.v << " " << e.weight << "\n";
  return out.str();
}

reduce::Formula parse_nae(std::string_view text, const std::string& file) {
  Parser parser(text, file);
  std::optional<std::uint32_t> vars;
  std::optional<std::uint32_t> width;
  std::vector<std::pair<std::size_t, reduce::Clause>> clauses;
  std::size_t last_line = 1;
  for (const Line& line : parser.body("nae")) {
    last_line = line.number;
    const std::string_view key = line.tokens[0];
    if (key == "vars") {
      parser.arity(line, 2, 2);
      if (vars) parser.fail(line.number, "duplicate vars line");
      vars = parser.uint32(line, line.tokens[1]);
    } else if (key == "width") {
      parser.arity(line, 2, 2);
      if (width) parser.fail(line.number, "duplicate width line");
      width = parser.uint32(line, line.tokens[1]);
      if (*width != 3 && *width != 4) parser.fail(line.number, "width must be 3 or 4");
    } else if (key == "clause") {
      reduce::Clause c;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) c.push_back(read_literal(parser, line, line.tokens[i]));
      clauses.emplace_back(line.number, std::move(c));
    } else {
      parser.fail(line.number, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!vars) parser.fail(last_line, "missing vars line");
  if (!width) parser.fail(last_line, "missing width line");
  reduce::Formula f{*vars, *width, {}};
  for (auto& [number, c] : clauses) {
    if (c.size() != *width) parser.fail(number, "clause has " + std::to_string(c.size()) + " literals, width is " + std::to_string(*width));
    for (const auto& l : c) {
      if (l.variable >= *vars) parser.fail(number, "variable " + std::to_string(l.variable) + " out of range");
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

std::string serialize_nae(const reduce::Formula& formula) {
  std::ostringstream out;
  out << "nae 1\nvars " << formula.variable_count << "\nwidth " << formula.width << "\n";
  for (const auto& c : formula.clauses) {
    out << "clause";
    for (const auto& l : c) {
      out << " ";
      write_literal(out, l);
    }
    out << "\n";
  }
  return out.str();
}

reduce::Formula parse_dimacs_cnf(std::string_view text, bool pad, const std::string& file) {
  Parser parser(text, file);  // only for error reporting helpers
  // DIMACS has no `# ` comments but `c` lines; re-tokenise without the '#' rule.
  std::optional<std::uint32_t> vars;
  std::uint64_t declared = 0;
  reduce::Formula f{0, 3, {}};
  reduce::Clause current;
  std::size_t clause_line = 0;
  std::size_t number = 0;
  std::size_t start = 0;
  bool done = false;
  while (!done && start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    ++number;
    std::istringstream in{std::string(raw)};
    std::string token;
    std::vector<std::string> tokens;
    while (in >> token) tokens.push_back(token);
    if (!tokens.empty() && tokens[0] != "c") {
      if (tokens[0] == "%") {
        done = true;
      } else if (tokens[0] == "p") {
        if (vars) parser.fail(number, "duplicate problem line");
        if (tokens.size() != 4 || tokens[1] != "cnf") parser.fail(number, "expected 'p cnf VARS CLAUSES'");
        Line l{number, {}};
        vars = parser.uint32(l, tokens[2]);
        declared = parser.uint(l, tokens[3]);
        f.variable_count = *vars;
      } else {
        if (!vars) parser.fail(number, "clause before the problem line");
        for (const auto& t : tokens) {
          long long lit = 0;
          auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), lit);
          if (ec != std::errc() || ptr != t.data() + t.size()) parser.fail(number, "bad literal '" + t + "'");
          if (current.empty()) clause_line = number;
          if (lit == 0) {
            if (current.empty()) parser.fail(number, "empty clause cannot be written with three literals");
            if (current.size() > 3) parser.fail(clause_line, "clause with more than 3 literals");
            if (current.size() < 3) {
              if (!pad) parser.fail(clause_line, "clause with fewer than 3 literals (padding disabled)");
              while (current.size() < 3) current.push_back(current.back());
            }
            f.clauses.push_back(std::move(current));
            current.clear();
            continue;
          }
          const unsigned long long v = static_cast<unsigned long long>(lit < 0 ? -lit : lit);
          if (v > *vars) parser.fail(number, "literal " + t + " exceeds the declared variable count");
          current.push_back(reduce::Literal{static_cast<std::uint32_t>(v - 1), lit < 0});
        }
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!vars) parser.fail(number, "missing problem line");
  if (!current.empty()) parser.fail(clause_line, "unterminated clause");
  if (f.clauses.size() != declared) {
    parser.fail(number, "problem line declares " + std::to_string(declared) + " clauses, found " +
                            std::to_string(f.clauses.size()));
  }
  return f;
}

lp::LinearProgram parse_lp(std::string_view text, const std::string& file) {
  Parser parser(text, file);
  lp::LinearProgram program;
  bool sense_seen = false;
  for (const Line& line : parser.body("lp")) {
    const std::string_view key = line.tokens[0];
    if (key == "maximize" || key == "minimize") {
      parser.arity(line, 1, 1);
      if (sense_seen) parser.fail(line.number, "duplicate sense line");
      sense_seen = true;
      program.set_sense(key == "maximize" ? lp::Sense::maximize : lp::Sense::minimize);
    } else if (key == "var") {
      if (line.tokens.size() != 2 && line.tokens.size() != 4 && line.tokens.size() != 6) {
        parser.fail(line.number, "expected 'var ID [lb q] [ub q]'");
      }
      std::optional<Rational> lb;
      std::optional<Rational> ub;
      for (std::size_t i = 2; i + 1 < line.tokens.size(); i += 2) {
        if (line.tokens[i] == "lb" && !lb && !ub) {
          lb = parser.rational(line, line.tokens[i + 1]);
        } else if (line.tokens[i] == "ub" && !ub) {
          ub = parser.rational(line, line.tokens[i + 1]);
        } else {
          parser.fail(line.number, "expected 'var ID [lb q] [ub q]'");
        }
      }
      const std::string id(line.tokens[1]);
      if (program.column_index(id)) parser.fail(line.number, "duplicate var " + id);
      if (lb && ub && *ub < *lb) parser.fail(line.number, "var " + id + " has ub < lb");
      program.add_column(id, lb, ub);
    } else if (key == "obj") {
      parser.arity(line, 3, 3);
      auto col = program.column_index(std::string(line.tokens[1]));
      if (!col) parser.fail(line.number, "obj for undeclared var " + std::string(line.tokens[1]));
      program.set_objective(*col, program.columns()[*col].objective + parser.rational(line, line.tokens[2]));
    } else if (key == "row") {
      if (line.tokens.size() < 3 || line.tokens.size() % 2 == 0) {
        parser.fail(line.number, "expected 'row <=|=|>= RHS (ID q)*'");
      }
      lp::Relation rel;
      if (line.tokens[1] == "<=") {
        rel = lp::Relation::less_equal;
      } else if (line.tokens[1] == "=") {
        rel = lp::Relation::equal;
      } else if (line.tokens[1] == ">=") {
        rel = lp::Relation::greater_equal;
      } else {
        parser.fail(line.number, "unknown relation '" + std::string(line.tokens[1]) + "'");
      }
      std::vector<lp::Term> terms;
      for (std::size_t i = 3; i + 1 < line.tokens.size(); i += 2) {
        auto col = program.column_index(std::string(line.tokens[i]));
        if (!col) parser.fail(line.number, "row uses undeclared var " + std::string(line.tokens[i]));
        terms.emplace_back(*col, parser.rational(line, line.tokens[i + 1]));
      }
      program.add_row(rel, parser.rational(line, line.tokens[2]), std::move(terms));
    } else {
      parser.fail(line.number, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!sense_seen) parser.fail(1, "missing maximize/minimize line");
  return program;
}

std::string serialize_lp(const lp::LinearProgram& program) {
  std::ostringstream out;
  out << "lp 1\n" << (program.sense() == lp::Sense::maximize ? "maximize" : "minimize") << "\n";
  for (const auto& c : program.columns()) {
    out << "var " << c.id;
    if (c.lower) out << " lb " << *c.lower;
    if (c.upper) out << " ub " << *c.upper;
    out << "\n";
  }
  for (const auto& c : program.columns()) {
    if (!c.objective.is_zero()) out << "obj " << c.id << " " << c.objective << "\n";
  }
  for (const auto& r : program.rows()) {
    out << "row " << relation_token(r.relation) << " " << r.rhs;
    for (const auto& [col, coef] : r.terms) out << " " << program.columns()[col].id << " " << coef;
    out << "\n";
  }
  return out.str();
}

}  // namespace vcsp::io
