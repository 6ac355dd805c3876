#include "vcsp/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vcsp/blp.hpp"
#include "vcsp/classify.hpp"
#include "vcsp/formats.hpp"
#include "vcsp/reductions.hpp"

namespace vcsp::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw FormatError(path, 0, "cannot write file");
  file << text;
}

io::LanguageLoader loader_relative_to(const std::string& path) {
  const fs::path base = fs::path(path).parent_path();
  return [base](const std::string& ref) {
    const fs::path p = fs::path(ref).is_absolute() ? fs::path(ref) : base / ref;
    return std::make_shared<const Language>(io::parse_language(read_file(p.string()), p.string()));
  };
}

Instance load_instance(const std::string& path, std::ostream& err) {
  Instance instance = io::parse_instance(read_file(path), path, loader_relative_to(path));
  for (const auto& warning : instance.validate()) err << "warning: " << path << ": " << warning << "\n";
  return instance;
}

LanguagePtr load_language(const std::string& path) {
  return std::make_shared<const Language>(io::parse_language(read_file(path), path));
}

std::vector<Label> parse_labels(const std::string& text) {
  std::vector<Label> labels;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      labels.push_back(static_cast<Label>(v));
    } catch (const std::exception&) {
      throw UsageError("bad label list '" + text + "'");
    }
  }
  return labels;
}

std::string join(std::span<const Label> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
  return s;
}

struct SolveOptions {
  std::string method = "both";
  bool decide = false;
  std::string input;
};

int do_solve(const SolveOptions& opt, const BruteLimits& limits, std::ostream& out, std::ostream& err) {
  const Instance instance = load_instance(opt.input, err);
  std::optional<Rational> blp_value;
  std::optional<BruteResult> brute;
  if (opt.method == "blp" || opt.method == "both") {
    blp_value = blp::blp_optimum(instance);
    out << "optimum/blp " << *blp_value << "\n";
  }
  if (opt.method == "brute" || opt.method == "both" || opt.decide) {
    brute = brute_optimum(instance, limits);
  }
  if (brute && opt.method != "blp") {
    out << "optimum/brute " << brute->value << "\n";
    out << "assignment/brute " << join(brute->assignment) << "\n";
  }
  if (blp_value && brute && *blp_value > brute->value) {
    throw InternalError("relaxation value exceeds the exact optimum");
  }
  if (opt.decide) {
    if (!instance.threshold) throw ValidationError("--decide needs an instance with a threshold");
    out << "decision " << (brute->value <= *instance.threshold ? "yes" : "no") << "\n";
  }
  return kOk;
}

struct ReduceOptions {
  std::string step;
  std::string input;
  std::string output;
  std::string language;
  std::string gadgets;
  std::string xor_fn;
  std::string xor_labels;
  std::string perm_instance;
  std::string scale_map;
  std::string subdomain;
  bool pad = false;
};

void require(const std::string& value, const char* flag, const std::string& step) {
  if (value.empty()) throw UsageError(std::string("step ") + step + " needs " + flag);
}

reduce::XorSpec xor_spec_from(const ReduceOptions& opt) {
  require(opt.xor_fn, "--xor-fn", opt.step);
  reduce::XorSpec spec{opt.xor_fn, 0, 1};
  if (!opt.xor_labels.empty()) {
    const auto labels = parse_labels(opt.xor_labels);
    if (labels.size() != 2) throw UsageError("--xor-labels needs exactly two labels");
    spec.a = labels[0];
    spec.b = labels[1];
  }
  return spec;
}

int do_reduce(const ReduceOptions& opt, const BruteLimits& limits, std::ostream& out, std::ostream& err) {
  const std::string& s = opt.step;
  std::string result;
  if (s == "3sat-4nae") {
    result = io::serialize_nae(reduce::sat3_to_nae4(io::parse_dimacs_cnf(read_file(opt.input), opt.pad, opt.input)));
  } else if (s == "4nae-3nae") {
    result = io::serialize_nae(reduce::nae4_to_nae3(io::parse_nae(read_file(opt.input), opt.input)));
  } else if (s == "3nae-maxcut") {
    result = io::serialize_maxcut(reduce::nae3_to_maxcut(io::parse_nae(read_file(opt.input), opt.input)));
  } else if (s == "maxcut-vcsp") {
    require(opt.language, "--language", s);
    const auto cut = io::parse_maxcut(read_file(opt.input), opt.input);
    result = io::serialize_instance(reduce::maxcut_to_vcsp(cut, load_language(opt.language), xor_spec_from(opt)));
  } else if (s == "3sat-vcsp") {
    require(opt.language, "--language", s);
    const auto cnf = io::parse_dimacs_cnf(read_file(opt.input), opt.pad, opt.input);
    result = io::serialize_instance(reduce::chain_3sat_to_vcsp(cnf, load_language(opt.language), xor_spec_from(opt)));
  } else if (s == "express") {
    require(opt.gadgets, "--gadgets", s);
    const auto set = io::parse_gadgets(read_file(opt.gadgets), opt.gadgets, loader_relative_to(opt.gadgets));
    result = io::serialize_instance(reduce::expand_expressible(load_instance(opt.input, err), set.gadgets, limits));
  } else if (s == "scale") {
    require(opt.language, "--language", s);
    require(opt.scale_map, "--scale-map", s);
    const Instance instance = load_instance(opt.input, err);
    const reduce::ScaleMap map(instance.language, load_language(opt.language),
                               io::parse_scale_map(read_file(opt.scale_map), opt.scale_map));
    result = io::serialize_instance(reduce::apply_scale_map(instance, map));
  } else if (s == "core") {
    require(opt.subdomain, "--subdomain", s);
    const Instance instance = load_instance(opt.input, err);
    const SubLanguage core = restrict_to_subdomain(instance.lang(), parse_labels(opt.subdomain));
    result = io::serialize_instance(reduce::restrict_to_core_instance(instance, core));
  } else if (s == "gammac") {
    require(opt.perm_instance, "--perm-instance", s);
    const Instance perm = load_instance(opt.perm_instance, err);
    const PinnedClosure closure = gamma_c(perm.lang());
    result = io::serialize_instance(reduce::lift_gammac(load_instance(opt.input, err), perm, closure.pinnings, limits).instance);
  } else {
    throw UsageError("unknown step " + s);
  }
  write_output(opt.output, result, out);
  return kOk;
}

struct ClassifyOptions {
  std::string language;
  std::size_t max_vars = 3;
  std::size_t max_cons = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t budget = classify::SearchBounds{}.budget;
};

int do_classify(const ClassifyOptions& opt, const BruteLimits& limits, std::ostream& out) {
  const LanguagePtr language = load_language(opt.language);
  const classify::SearchBounds bounds{opt.max_vars, opt.max_cons, opt.budget};
  out << classify::render(classify::empirical_dichotomy(language, opt.trials, bounds, opt.seed, limits));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact valued constraint satisfaction: brute force, basic LP relaxation, reductions", "vcsp"};
  app.require_subcommand(1);
  BruteLimits limits;
  app.add_option("--max-assignments", limits.max_assignments, "Brute-force enumeration budget");

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "Solve an instance exactly and/or via its relaxation");
  solve->add_option("--method", solve_opt.method)->check(CLI::IsMember({"brute", "blp", "both"}));
  solve->add_flag("--decide", solve_opt.decide, "Answer the threshold question by exhaustion");
  solve->add_option("instance", solve_opt.input)->required();

  auto* blp_cmd = app.add_subcommand("blp", "Basic LP relaxation tools");
  blp_cmd->require_subcommand(1);
  std::string blp_input;
  auto* emit = blp_cmd->add_subcommand("emit", "Print the relaxation in lp text format");
  emit->add_option("instance", blp_input)->required();
  auto* round = blp_cmd->add_subcommand("round", "Round the relaxation by self-reduction");
  round->add_option("instance", blp_input)->required();
  auto* gap = blp_cmd->add_subcommand("gap", "Compare the relaxation with the exact optimum");
  gap->add_option("instance", blp_input)->required();

  std::string lp_input;
  auto* lp_cmd = app.add_subcommand("lp", "Solve an lp text file exactly");
  lp_cmd->add_option("program", lp_input)->required();

  ReduceOptions reduce_opt;
  auto* reduce_cmd = app.add_subcommand("reduce", "Apply one reduction step");
  reduce_cmd->add_option("--step", reduce_opt.step)
      ->required()
      ->check(CLI::IsMember({"3sat-4nae", "4nae-3nae", "3nae-maxcut", "maxcut-vcsp", "3sat-vcsp", "express", "scale",
                             "core", "gammac"}));
  reduce_cmd->add_option("--in", reduce_opt.input)->required();
  reduce_cmd->add_option("--out", reduce_opt.output, "Output path (stdout when omitted)");
  reduce_cmd->add_option("--language", reduce_opt.language);
  reduce_cmd->add_option("--gadgets", reduce_opt.gadgets);
  reduce_cmd->add_option("--xor-fn", reduce_opt.xor_fn);
  reduce_cmd->add_option("--xor-labels", reduce_opt.xor_labels);
  reduce_cmd->add_option("--perm-instance", reduce_opt.perm_instance);
  reduce_cmd->add_option("--scale-map", reduce_opt.scale_map);
  reduce_cmd->add_option("--subdomain", reduce_opt.subdomain);
  reduce_cmd->add_flag("--pad", reduce_opt.pad, "Pad short DIMACS clauses by repeating their last literal");

  ClassifyOptions classify_opt;
  auto* classify_cmd = app.add_subcommand("classify", "Probe BLP tightness and search for XOR witnesses");
  classify_cmd->add_option("--language", classify_opt.language)->required();
  classify_cmd->add_option("--max-vars", classify_opt.max_vars);
  classify_cmd->add_option("--max-cons", classify_opt.max_cons);
  classify_cmd->add_option("--trials", classify_opt.trials);
  classify_cmd->add_option("--seed", classify_opt.seed);
  classify_cmd->add_option("--budget", classify_opt.budget, "Maximum number of gadgets examined");

  std::string closure_language;
  auto* closure_cmd = app.add_subcommand("gammac", "Print the pinned closure of a language");
  closure_cmd->add_option("--language", closure_language)->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*solve) return do_solve(solve_opt, limits, out, err);
    if (*emit) {
      out << io::serialize_lp(blp::build_blp(load_instance(blp_input, err)).program);
      return kOk;
    }
    if (*round) {
      const auto r = blp::round_by_self_reduction(load_instance(blp_input, err));
      out << "rounded " << r.value << "\nassignment/rounded " << join(r.assignment) << "\n";
      return kOk;
    }
    if (*gap) {
      const auto g = blp::gap_report(load_instance(blp_input, err), limits);
      out << "optimum/blp " << g.blp_value << "\noptimum/brute " << g.brute_value << "\ntight "
          << (g.tight ? "yes" : "no") << "\n";
      return kOk;
    }
    if (*lp_cmd) {
      const auto program = io::parse_lp(read_file(lp_input), lp_input);
      const auto outcome = lp::simplex_solve(program);
      out << "status " << lp::to_string(outcome.status) << "\n";
      if (outcome.status == lp::Status::optimal) {
        out << "value " << outcome.value << "\n";
        for (std::size_t j = 0; j < outcome.point.size(); ++j) {
          out << "x " << program.columns()[j].id << " " << outcome.point[j] << "\n";
        }
      }
      out << "certificate " << (lp::check_certificate(program, outcome) ? "verified" : "FAILED") << "\n";
      return kOk;
    }
    if (*reduce_cmd) return do_reduce(reduce_opt, limits, out, err);
    if (*classify_cmd) return do_classify(classify_opt, limits, out);
    if (*closure_cmd) {
      out << io::serialize_language(*gamma_c(*load_language(closure_language)).language);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return kFormatError;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kFormatError;
  } catch (const SizeLimitError& e) {
    err << "refused: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace vcsp::cli
