#include <doctest.h>

#include "support.hpp"
#include "vcsp/formats.hpp"

using namespace vcsp;
using namespace vcsp::io;

namespace {

std::size_t error_line(const std::function<void()>& parse) {
  try {
    parse();
  } catch (const FormatError& e) {
    return e.line();
  }
  return 0;
}

std::string error_message(const std::function<void()>& parse) {
  try {
    parse();
  } catch (const FormatError& e) {
    return e.message();
  }
  return "";
}

const char* kTriangle =
    "vci 1\n"
    "language inline\n"
    "domain 2\n"
    "fn neq 2\n"
    "val 0 0 1\n"
    "val 0 1 0\n"
    "val 1 0 0\n"
    "val 1 1 1\n"
    "vars 3\n"
    "con neq 1 0 1\n"
    "con neq 1 1 2\n"
    "con neq 1 0 2\n";

}  // namespace

TEST_SUITE("formats") {

TEST_CASE("minimal language") {
  const auto l = parse_language("vcl 1\ndomain 2\nfn eq 2\nval 0 0 1\nval 0 1 0\nval 1 0 0\nval 1 1 1\n");
  CHECK(l.domain().size == 2);
  CHECK(l.at("eq").same_table(testing::neq_language()->at("neq")));
}

TEST_CASE("canonical language output sorts rows and functions") {
  const std::string messy =
      "vcl 1  # header\n"
      "domain 2\n"
      "fn z 1\n"
      "val 1 4/2\n"
      "val 0 0\n"
      "\n"
      "fn a 1\n"
      "val 1 1/3\n"
      "val 0 -0\n";
  const auto text = serialize_language(parse_language(messy));
  CHECK(text == "vcl 1\ndomain 2\nfn a 1\nval 0 0\nval 1 1/3\nfn z 1\nval 0 0\nval 1 2\n");
}

TEST_CASE("language errors carry locations") {
  const std::string missing = "vcl 1\ndomain 2\nfn eq 2\nval 0 0 1\nval 0 1 0\nval 1 1 1\n";
  CHECK(error_line([&] { parse_language(missing, "lang.vcl"); }) == 3);
  CHECK(error_message([&] { parse_language(missing); }).find("(1 0)") != std::string::npos);
  CHECK(error_line([&] { parse_language("vcl 2\n"); }) == 1);
  CHECK(error_line([&] { parse_language("vcl 1\ndomain 2\nfn f 1\nval 0 1\nval 2 1\n"); }) == 5);
  CHECK(error_line([&] { parse_language("vcl 1\ndomain 2\nfn f 1\nval 0 -1\nval 1 1\n"); }) == 4);
  CHECK(error_line([&] { parse_language("vcl 1\ndomain 2\nfn f 1\nval 0 x\nval 1 1\n"); }) == 4);
  CHECK(error_line([&] { parse_language("vcl 1\ndomain 2\nfn f 1\nval 0 1\nval 0 1\n"); }) == 5);
  CHECK(error_line([&] { parse_language("vcl 1\nfn f 1\n"); }) == 2);
  CHECK(error_line([&] { parse_language(""); }) == 1);
  try {
    parse_language("vcl 1\nbogus\n", "x.vcl");
  } catch (const FormatError& e) {
    CHECK(e.file() == "x.vcl");
    CHECK(std::string(e.what()).find("x.vcl:2") != std::string::npos);
  }
}

TEST_CASE("instance parsing") {
  const auto inst = parse_instance(kTriangle);
  CHECK(inst.variable_count == 3);
  CHECK(inst.constraints.size() == 3);
  CHECK(inst == testing::neq_triangle());
  CHECK(serialize_instance(inst) == kTriangle);

  const auto two = parse_instance(
      "vci 1\nlanguage inline\ndomain 2\nfn eq 2\nval 0 0 1\nval 0 1 0\nval 1 0 0\nval 1 1 1\nvars 2\ncon eq 2 0 1\n");
  CHECK(two.constraints[0].scope == std::vector<VarId>{0, 1});
  CHECK(two.constraints[0].weight == 2);
  CHECK(two.constraints[0].function == "eq");

  const auto referenced = parse_instance("vci 1\nlanguage neq.vcl\nvars 1\nthreshold 1/2\noffset 3\n", "i.vci",
                                         [](const std::string& path) {
                                           CHECK(path == "neq.vcl");
                                           return testing::neq_language();
                                         });
  CHECK(referenced.threshold == Rational(1, 2));
  CHECK(referenced.value_offset == 3);
  CHECK(serialize_instance(referenced).find("offset 3\nthreshold 1/2\n") != std::string::npos);

  CHECK(error_line([] { parse_instance("vci 1\nlanguage x.vcl\nvars 1\n"); }) == 2);
  const std::string base = "vci 1\nlanguage inline\ndomain 2\nfn f 1\nval 0 0\nval 1 1\nvars 2\n";
  CHECK(error_line([&] { parse_instance(base + "con g 1 0\n"); }) == 8);
  CHECK(error_line([&] { parse_instance(base + "con f 1 0 1\n"); }) == 8);
  CHECK(error_line([&] { parse_instance(base + "con f 1 2\n"); }) == 8);
  CHECK(error_line([&] { parse_instance(base + "con f 1/0 1\n"); }) == 8);
  CHECK(error_line([&] { parse_instance(base + "vars 3\n"); }) == 8);
}

TEST_CASE("gadget and scale map files") {
  const std::string gadgets =
      "vcg 1\nlanguage inline\ndomain 2\nfn cut 2\nval 0 0 0\nval 0 1 1\nval 1 0 1\nval 1 1 0\n"
      "gadget path2 vars 3 proj 0 2\noffset 1/2\ncon cut 1 0 1\ncon cut 1 1 2\n";
  const auto set = parse_gadgets(gadgets);
  REQUIRE(set.gadgets.count("path2") == 1);
  const auto& g = set.gadgets.at("path2");
  CHECK(g.projection == std::vector<VarId>{0, 2});
  CHECK(g.instance.value_offset == Rational(1, 2));
  CHECK(g.instance.constraints.size() == 2);
  CHECK(serialize_gadgets(set) == gadgets);
  CHECK(error_line([&] { parse_gadgets(gadgets + "gadget path2 vars 2 proj 0 1\n"); }) == 13);
  CHECK(error_line([&] { parse_gadgets(gadgets + "gadget q vars 2 proj 0 5\n"); }) == 13);

  const auto entries = parse_scale_map("vcs 1\nmap big cut 3 1/2\n");
  CHECK(entries.at("big").target == "cut");
  CHECK(entries.at("big").scale == 3);
  CHECK(entries.at("big").shift == Rational(1, 2));
  CHECK(error_line([] { parse_scale_map("vcs 1\nmap big cut 0 1\n"); }) == 2);
}

TEST_CASE("max-cut and nae files") {
  const auto cut = parse_maxcut("cut 1\nvertices 3\nthreshold 2\nedge 1 0 1\nedge 0 1 1/2\nedge 1 2 0\n");
  REQUIRE(cut.edges().size() == 2);
  CHECK(cut.edges()[0].weight == Rational(3, 2));
  CHECK(serialize_maxcut(cut) == "cut 1\nvertices 3\nthreshold 2\nedge 0 1 3/2\nedge 1 2 0\n");
  CHECK(error_line([] { parse_maxcut("cut 1\nvertices 2\nedge 1 1 1\n"); }) == 3);
  CHECK(error_line([] { parse_maxcut("cut 1\nvertices 2\nedge 0 1 -1\n"); }) == 3);

  const auto nae = parse_nae("nae 1\nvars 3\nwidth 3\nclause 0 !1 2\n");
  REQUIRE(nae.clauses.size() == 1);
  CHECK(nae.clauses[0][1] == reduce::Literal{1, true});
  CHECK(error_line([] { parse_nae("nae 1\nvars 3\nwidth 3\nclause 0 1\n"); }) == 4);
  CHECK(error_line([] { parse_nae("nae 1\nvars 1\nwidth 3\nclause 0 0 3\n"); }) == 4);
  CHECK(error_line([] { parse_nae("nae 1\nvars 1\nwidth 3\nclause 0 0 !x\n"); }) == 4);
}

TEST_CASE("DIMACS") {
  const std::string text = "c example\np cnf 2 1\n1 -2 0\n";
  const auto padded = parse_dimacs_cnf(text, true);
  CHECK(padded.variable_count == 2);
  REQUIRE(padded.clauses.size() == 1);
  CHECK(padded.clauses[0] == reduce::Clause{{0, false}, {1, true}, {1, true}});
  CHECK(error_line([&] { parse_dimacs_cnf(text, false); }) == 3);

  const auto split = parse_dimacs_cnf("p cnf 3 2\n1 2\n3 0 -1 -2 -3\n0\n%\n0\n");
  CHECK(split.clauses.size() == 2);
  CHECK(split.clauses[1] == reduce::Clause{{0, true}, {1, true}, {2, true}});
  CHECK(error_line([] { parse_dimacs_cnf("p cnf 3 1\n1 2 3 -1 0\n"); }) == 2);
  CHECK(error_line([] { parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n"); }) != 0);
  CHECK(error_line([] { parse_dimacs_cnf("p cnf 2 1\n1 2 3 0\n"); }) == 2);
  CHECK(error_line([] { parse_dimacs_cnf("p cnf 3 1\n1 2 3\n"); }) != 0);
  CHECK(error_line([] { parse_dimacs_cnf("1 2 3 0\n"); }) == 1);
}

TEST_CASE("lp text") {
  const std::string text =
      "lp 1\nmaximize\nvar x lb 0\nvar y ub 3/2\nvar z\nobj x 1\nobj y -1/2\nrow <= 3/2 x 1 y 1\nrow = 0\nrow >= -1 z 2\n";
  const auto lp = parse_lp(text);
  CHECK(lp.columns().size() == 3);
  CHECK(lp.rows().size() == 3);
  CHECK(lp.columns()[1].upper == Rational(3, 2));
  CHECK_FALSE(lp.columns()[2].lower);
  CHECK(serialize_lp(lp) == text);
  CHECK(error_line([] { parse_lp("lp 1\nmaximize\nvar x\nrow <= 1 y 1\n"); }) == 4);
  CHECK(error_line([] { parse_lp("lp 1\nmaximize\nvar x lb 2 ub 1\n"); }) == 3);
  CHECK(error_line([] { parse_lp("lp 1\nmaximize\nvar x\nrow < 1 x 1\n"); }) == 4);
}

TEST_CASE("round trips on generated artifacts") {
  testing::Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    const auto inst = testing::random_full_instance(rng);
    const auto text = serialize_instance(inst);
    CHECK(parse_instance(text) == inst);
    CHECK(serialize_instance(parse_instance(text)) == text);

    const auto lang = *testing::random_language(rng, 3, 3);
    CHECK(parse_language(serialize_language(lang)) == lang);

    const auto cut = testing::random_cut(rng);
    CHECK(parse_maxcut(serialize_maxcut(cut)) == cut);

    const auto nae = testing::random_formula(rng, 4);
    CHECK(parse_nae(serialize_nae(nae)) == nae);

    const auto lp = testing::random_lp_with_free_columns(rng);
    CHECK(parse_lp(serialize_lp(lp)) == lp);

    const auto entries = testing::random_scale_entries(rng);
    CHECK(parse_scale_map(serialize_scale_map(entries)) == entries);

    const auto set = testing::random_gadgets(rng);
    const auto gtext = serialize_gadgets(set);
    CHECK(serialize_gadgets(parse_gadgets(gtext)) == gtext);
  }
}

}
