#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "etm/engine.hpp"
#include "etm/logic.hpp"

namespace etm {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class InputFormat : std::uint8_t { Dimacs, TptpCnf };

// Variable i becomes the 0-ary predicate "x<i>".
ClauseSet parse_dimacs(std::string_view text);
// The cnf(...) fragment of TPTP. Names starting with an upper-case letter
// or '_' are variables. include directives are rejected.
ClauseSet parse_tptp_cnf(std::string_view text);
ClauseSet parse_problem(std::string_view text, InputFormat fmt);

// Extension first (.cnf/.dimacs vs .p/.tptp/.ax), then content.
InputFormat detect_format(std::string_view text, std::string_view filename = {});

std::string write_dimacs(const ClauseSet& s);
std::string write_tptp_cnf(const ClauseSet& s);

// Literal syntax shared with the trace records: "~p(f(X),a)". Variable
// names may carry '#'.
Literal parse_literal(std::string_view text);
// Literals separated by '|'; "⊥" or "$false" is the empty list.
std::vector<Literal> parse_literal_list(std::string_view text);

struct RenderOptions {
  std::string problem_name = "problem";
  std::string config_summary;
  bool include_tables = true;
};

// One grid per round: header row of clause labels, a substitution row in
// first-order mode, the d_plus band, then boundary rows from x_{k-1} down
// to x_1. The first cell of every row is a row label.
std::vector<std::vector<std::string>> round_grid(const RoundRecord& r, bool show_sigma);

// Human-readable tables as '%' comment lines followed by tab-separated
// ROUND/COL/BOUND/CSC/VERDICT/MODEL records.
std::string render_trace(const ProofTrace& t, const ClauseSet& s, const RenderOptions& opt = {});

// Rebuilds a trace from the records of a rendered document. Table lines
// are ignored. Throws ParseError on malformed records.
ProofTrace parse_trace(std::string_view text);

}  // namespace etm
