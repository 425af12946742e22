#include <algorithm>
#include <map>
#include <sstream>

#include "etm/frontend.hpp"
#include "etm/unification.hpp"

namespace etm {

namespace {

constexpr const char* kRecordsMarker = "% records";

std::string sigma_record(const Substitution& s) {
  if (s.empty()) return "-";
  std::string out;
  for (const auto& [v, t] : s.bindings()) {
    if (!out.empty()) out += "; ";
    out += v + "->" + to_string(t);
  }
  return out;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t p = line.find(sep, start);
    if (p == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      return out;
    }
    out.emplace_back(line.substr(start, p - start));
    start = p + 1;
  }
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  return s.substr(i);
}

std::string pad(const std::string& s, std::size_t w) {
  // Width counts code points so that "⊥" and "σ" line up.
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return s + std::string(w > n ? w - n : 0, ' ');
}

std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace

std::vector<std::vector<std::string>> round_grid(const RoundRecord& r, bool show_sigma) {
  const auto& cols = r.etc.columns;
  const std::size_t n = cols.size();
  std::vector<std::vector<std::string>> grid;

  auto row = [&](std::string label) {
    std::vector<std::string> v(n + 1);
    v[0] = std::move(label);
    return v;
  };
  // Display position of column p: latest selected leftmost.
  auto at = [&](std::size_t p) { return n - p; };

  auto header = row("");
  for (std::size_t p = 0; p < n; ++p) header[at(p)] = "C" + std::to_string(cols[p].clause_id);
  grid.push_back(std::move(header));

  if (show_sigma) {
    auto sig = row("σ");
    for (std::size_t p = 0; p < n; ++p) sig[at(p)] = cols[p].sigma.empty() ? "" : to_string(cols[p].sigma);
    grid.push_back(std::move(sig));
  }

  std::size_t band = 0;
  for (const auto& c : cols) band = std::max(band, c.d_plus.size());
  for (std::size_t j = 0; j < band; ++j) {
    auto b = row("+");
    for (std::size_t p = 0; p < n; ++p)
      if (j < cols[p].d_plus.size()) b[at(p)] = to_string(cols[p].d_plus[j]);
    grid.push_back(std::move(b));
  }

  std::vector<std::size_t> owner;  // column position of each boundary row
  std::vector<Literal> xs;
  for (std::size_t p = 0; p < n; ++p)
    if (cols[p].role == ColumnRole::Boundary && cols[p].boundary_literal) {
      owner.push_back(p);
      xs.push_back(*cols[p].boundary_literal);
    }
  std::vector<std::vector<std::string>> rows(xs.size());
  for (std::size_t t = 0; t < xs.size(); ++t) rows[t] = row("x" + std::to_string(t + 1));
  for (std::size_t p = 0; p < n; ++p) {
    const auto& c = cols[p];
    for (const auto& l : c.d_minus) {
      if (c.boundary_literal && l == *c.boundary_literal) {
        for (std::size_t t = 0; t < xs.size(); ++t)
          if (owner[t] == p) rows[t][at(p)] = to_string(l);
        continue;
      }
      // Align with the latest earlier occurrence of the partner literal.
      for (std::size_t t = xs.size(); t-- > 0;) {
        if (owner[t] < p && are_complementary(xs[t], l)) {
          auto& cell = rows[t][at(p)];
          cell += cell.empty() ? to_string(l) : ", " + to_string(l);
          break;
        }
      }
    }
  }
  for (std::size_t t = xs.size(); t-- > 0;) grid.push_back(std::move(rows[t]));
  return grid;
}

std::string render_trace(const ProofTrace& t, const ClauseSet& s, const RenderOptions& opt) {
  std::ostringstream os;
  const bool fol = !s.propositional();
  os << "% proof trace for " << opt.problem_name << '\n';
  os << "% verdict: " << to_string(t.verdict) << '\n';
  if (!opt.config_summary.empty()) os << "% config: " << opt.config_summary << '\n';
  os << "% input clauses (" << (fol ? "first-order" : "propositional") << "):\n";
  for (const auto& c : s) os << "%   C" << c.id << ": " << to_string(c) << '\n';
  if (opt.include_tables) {
    for (const auto& r : t.rounds) {
      os << "%\n% round " << r.round_index << ": csc C" << r.csc.id << " = " << to_string(r.csc.literals) << '\n';
      auto grid = round_grid(r, fol);
      std::vector<std::size_t> w(grid.empty() ? 0 : grid[0].size(), 0);
      for (const auto& row : grid)
        for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], width(row[i]));
      for (const auto& row : grid) {
        std::string line = "%   ";
        for (std::size_t i = 0; i < row.size(); ++i) line += pad(row[i], w[i]) + (i == 0 ? " | " : "  ");
        os << trimmed(line) << '\n';
      }
    }
  }
  if (t.model) {
    os << "%\n% model:\n";
    for (const auto& [v, val] : *t.model) os << "%   " << v << " = " << (val ? "true" : "false") << '\n';
  }
  os << kRecordsMarker << '\n';
  for (const auto& r : t.rounds) {
    os << "ROUND\t" << r.round_index << '\t' << r.csc.id << '\t' << r.etc.columns.size() << '\n';
    for (std::size_t p = 0; p < r.etc.columns.size(); ++p) {
      const auto& c = r.etc.columns[p];
      os << "COL\t" << r.round_index << '\t' << p + 1 << '\t' << c.clause_id << '\t' << to_string(c.role) << '\t'
         << (c.boundary_literal ? to_string(*c.boundary_literal) : "-") << '\t' << to_string(c.d_minus) << '\t'
         << to_string(c.d_plus) << '\t' << sigma_record(c.sigma) << '\n';
    }
    for (std::size_t i = 0; i < r.etc.boundary.size(); ++i)
      os << "BOUND\t" << r.round_index << '\t' << i + 1 << '\t' << to_string(r.etc.boundary[i]) << '\n';
    os << "CSC\t" << r.round_index << '\t' << r.csc.id << '\t' << to_string(r.csc.literals) << '\n';
  }
  os << "VERDICT\t" << to_string(t.verdict) << '\n';
  if (t.model)
    for (const auto& [v, val] : *t.model) os << "MODEL\t" << v << '\t' << (val ? 1 : 0) << '\n';
  return os.str();
}

namespace {

std::size_t to_index(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, 1, "expected a number, got '" + s + "'");
  }
}

Substitution parse_sigma(const std::string& s, std::size_t line) {
  Substitution out;
  if (s == "-" || s.empty()) return out;
  for (auto part : split(s, ';')) {
    part = trimmed(part);
    auto arrow = part.find("->");
    if (arrow == std::string::npos) throw ParseError(line, 1, "malformed binding '" + part + "'");
    std::string v = trimmed(part.substr(0, arrow));
    Literal holder = parse_literal("p(" + part.substr(arrow + 2) + ")");
    out.set(v, holder.args.at(0));
  }
  return out;
}

ColumnRole parse_role(const std::string& s, std::size_t line) {
  if (s == "boundary") return ColumnRole::Boundary;
  if (s == "stair") return ColumnRole::Stair;
  if (s == "closing") return ColumnRole::Closing;
  throw ParseError(line, 1, "unknown column role '" + s + "'");
}

Verdict parse_verdict(const std::string& s, std::size_t line) {
  if (s == "unsatisfiable") return Verdict::Unsatisfiable;
  if (s == "satisfiable") return Verdict::Satisfiable;
  if (s == "unknown") return Verdict::Unknown;
  throw ParseError(line, 1, "unknown verdict '" + s + "'");
}

}  // namespace

ProofTrace parse_trace(std::string_view text) {
  ProofTrace t;
  std::map<std::size_t, std::size_t> by_index;  // round number -> position
  auto round_at = [&](std::size_t r, std::size_t line) -> RoundRecord& {
    auto it = by_index.find(r);
    if (it == by_index.end()) throw ParseError(line, 1, "record for undeclared round " + std::to_string(r));
    return t.rounds[it->second];
  };
  bool verdict_seen = false;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '%') continue;
    auto f = split(line, '\t');
    const std::string& tag = f[0];
    auto need = [&](std::size_t n) {
      if (f.size() != n)
        throw ParseError(line_no, 1, tag + " record needs " + std::to_string(n) + " fields, has " +
                                         std::to_string(f.size()));
    };
    try {
      if (tag == "ROUND") {
        need(4);
        RoundRecord r;
        r.round_index = to_index(f[1], line_no);
        r.csc.id = static_cast<ClauseId>(to_index(f[2], line_no));
        r.etc.columns.reserve(to_index(f[3], line_no));
        if (!by_index.emplace(r.round_index, t.rounds.size()).second)
          throw ParseError(line_no, 1, "round " + f[1] + " declared twice");
        t.rounds.push_back(std::move(r));
      } else if (tag == "COL") {
        need(9);
        auto& r = round_at(to_index(f[1], line_no), line_no);
        if (to_index(f[2], line_no) != r.etc.columns.size() + 1)
          throw ParseError(line_no, 1, "columns out of order");
        EtcColumn c;
        c.clause_id = static_cast<ClauseId>(to_index(f[3], line_no));
        c.role = parse_role(f[4], line_no);
        if (f[5] != "-") c.boundary_literal = parse_literal(f[5]);
        c.d_minus = parse_literal_list(f[6]);
        c.d_plus = parse_literal_list(f[7]);
        c.sigma = parse_sigma(f[8], line_no);
        r.etc.columns.push_back(std::move(c));
      } else if (tag == "BOUND") {
        need(4);
        auto& r = round_at(to_index(f[1], line_no), line_no);
        r.etc.boundary.push_back(parse_literal(f[3]));
      } else if (tag == "CSC") {
        need(4);
        auto& r = round_at(to_index(f[1], line_no), line_no);
        if (static_cast<ClauseId>(to_index(f[2], line_no)) != r.csc.id)
          throw ParseError(line_no, 1, "csc id differs from the ROUND record");
        r.csc = Clause(r.csc.id, parse_literal_list(f[3]), Origin::derived(r.round_index));
        r.etc.csc = r.csc.literals;
        r.etc.closed = true;
      } else if (tag == "VERDICT") {
        need(2);
        t.verdict = parse_verdict(f[1], line_no);
        verdict_seen = true;
      } else if (tag == "MODEL") {
        need(3);
        if (f[2] != "0" && f[2] != "1") throw ParseError(line_no, 1, "model value must be 0 or 1");
        if (!t.model) t.model.emplace();
        (*t.model)[f[1]] = f[2] == "1";
      } else {
        throw ParseError(line_no, 1, "unknown record '" + tag + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() == line_no) throw;
      throw ParseError(line_no, e.column(), e.what());
    }
  }
  if (!verdict_seen) throw ParseError(line_no, 1, "missing VERDICT record");
  for (auto& r : t.rounds) {
    r.clause_ids_used = r.etc.clause_ids();
    std::vector<Literal> derived;
    for (const auto& c : r.etc.columns)
      if (c.role == ColumnRole::Boundary && c.boundary_literal) derived.push_back(*c.boundary_literal);
    if (!r.etc.boundary.empty() && !(derived == r.etc.boundary))
      throw ParseError(1, 1, "round " + std::to_string(r.round_index) + ": BOUND records disagree with columns");
    r.etc.boundary = std::move(derived);
  }
  return t;
}

}  // namespace etm
