#pragma once

// Text formats. Every format is line oriented: a `<kind> 1` header, then
// whitespace-separated tokens, `#` to end of line is a comment. Rationals are
// written `p/q` or `p`. Serialisers emit the canonical form, which the
// parsers read back to an equal value.
//
//   vcl 1      language:  domain d / fn NAME ARITY / val x1 .. xm VALUE
//   vci 1      instance:  language inline|PATH, [language body], vars n,
//                         [offset q], [threshold t], con NAME WEIGHT v1 .. vm
//   vcg 1      gadgets:   language inline|PATH, [language body], then per gadget
//                         gadget NAME vars n proj v1 .. vm, [offset q], con lines
//   vcs 1      scale map: map SOURCE_FN TARGET_FN SCALE SHIFT
//   cut 1      max-cut:   vertices n, [threshold t], edge u v w
//   nae 1      formula:   vars n, width k, clause l1 .. lk  (literal `v` or `!v`)
//   lp 1       program:   maximize|minimize, var ID [lb q] [ub q], obj ID q,
//                         row <=|=|>= RHS (ID q)*
//   DIMACS CNF is read (not written) for 3-SAT input.

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "vcsp/core.hpp"
#include "vcsp/exactlp.hpp"
#include "vcsp/reductions.hpp"

namespace vcsp::io {

/// Resolves `language PATH` references; receives the path as written.
using LanguageLoader = std::function<LanguagePtr(const std::string& path)>;

Language parse_language(std::string_view text, const std::string& file = "<input>");
std::string serialize_language(const Language& language);

Instance parse_instance(std::string_view text, const std::string& file = "<input>",
                        const LanguageLoader& loader = {});
std::string serialize_instance(const Instance& instance);

struct GadgetSet {
  LanguagePtr language;
  std::map<std::string, Gadget> gadgets;
};
GadgetSet parse_gadgets(std::string_view text, const std::string& file = "<input>", const LanguageLoader& loader = {});
std::string serialize_gadgets(const GadgetSet& set);

std::map<std::string, reduce::ScaleEntry> parse_scale_map(std::string_view text, const std::string& file = "<input>");
std::string serialize_scale_map(const std::map<std::string, reduce::ScaleEntry>& entries);

reduce::MaxCutInstance parse_maxcut(std::string_view text, const std::string& file = "<input>");
std::string serialize_maxcut(const reduce::MaxCutInstance& cut);

reduce::Formula parse_nae(std::string_view text, const std::string& file = "<input>");
std::string serialize_nae(const reduce::Formula& formula);

/// DIMACS `p cnf` input as a width-3 formula. With `pad`, clauses of one or
/// two literals are padded by repeating their last literal.
reduce::Formula parse_dimacs_cnf(std::string_view text, bool pad = false, const std::string& file = "<input>");

lp::LinearProgram parse_lp(std::string_view text, const std::string& file = "<input>");
std::string serialize_lp(const lp::LinearProgram& program);

}  // namespace vcsp::io
