#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "etm/frontend.hpp"

namespace etm {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_int(std::string_view w) {
  long long v = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc{} || p != w.data() + w.size()) return std::nullopt;
  return v;
}

}  // namespace

ClauseSet parse_dimacs(std::string_view text) {
  ClauseSet cs(Mode::Propositional);
  bool header = false;
  long long vars = 0;
  std::vector<Literal> current;
  bool open = false;
  std::size_t line_no = 0;
  std::size_t last_line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0][0] == 'c') continue;
    if (words[0] == "%") break;
    const std::size_t col = static_cast<std::size_t>(words[0].data() - line.data()) + 1;
    if (words[0] == "p") {
      if (header) throw ParseError(line_no, col, "duplicate problem line");
      if (words.size() != 4 || words[1] != "cnf")
        throw ParseError(line_no, col, "malformed problem line; expected 'p cnf <vars> <clauses>'");
      auto v = to_int(words[2]);
      auto c = to_int(words[3]);
      if (!v || !c || *v < 0 || *c < 0) throw ParseError(line_no, col, "malformed problem line counts");
      vars = *v;
      header = true;
      continue;
    }
    if (!header) throw ParseError(line_no, col, "clause before the 'p cnf' problem line");
    for (auto w : words) {
      const std::size_t wcol = static_cast<std::size_t>(w.data() - line.data()) + 1;
      auto n = to_int(w);
      if (!n) throw ParseError(line_no, wcol, "expected an integer literal, got '" + std::string(w) + "'");
      last_line = line_no;
      if (*n == 0) {
        cs.add(std::move(current));
        current.clear();
        open = false;
        continue;
      }
      const long long idx = *n < 0 ? -*n : *n;
      if (idx > vars)
        throw ParseError(line_no, wcol, "literal " + std::string(w) + " exceeds declared variable count " +
                                            std::to_string(vars));
      current.push_back(Literal{*n > 0, "x" + std::to_string(idx), {}});
      open = true;
    }
  }
  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'p cnf' problem line");
  if (open) throw ParseError(last_line, 1, "last clause is not terminated by 0");
  return cs;
}

std::string write_dimacs(const ClauseSet& s) {
  if (!s.propositional()) throw std::invalid_argument("DIMACS output needs a propositional clause set");
  std::map<std::string, long long> index;
  long long next = 1;
  // Keep "x<i>" names at their own index; number anything else after them.
  for (const auto& c : s)
    for (const auto& l : c.literals) {
      const auto& p = l.predicate;
      if (p.size() > 1 && p[0] == 'x') {
        if (auto n = to_int(std::string_view(p).substr(1)); n && *n > 0) {
          index[p] = *n;
          next = std::max(next, *n + 1);
        }
      }
    }
  for (const auto& c : s)
    for (const auto& l : c.literals)
      if (!index.count(l.predicate)) index[l.predicate] = next++;
  std::ostringstream os;
  os << "p cnf " << (next - 1) << ' ' << s.size() << '\n';
  for (const auto& c : s) {
    for (const auto& l : c.literals) os << (l.positive ? "" : "-") << index.at(l.predicate) << ' ';
    os << "0\n";
  }
  return os.str();
}

InputFormat detect_format(std::string_view text, std::string_view filename) {
  auto ends_with = [&](std::string_view suf) {
    return filename.size() >= suf.size() && filename.substr(filename.size() - suf.size()) == suf;
  };
  if (ends_with(".cnf") || ends_with(".dimacs")) return InputFormat::Dimacs;
  if (ends_with(".p") || ends_with(".tptp") || ends_with(".ax")) return InputFormat::TptpCnf;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto words = split_words(text.substr(start, end - start));
    start = end + 1;
    if (words.empty()) continue;
    if (words[0] == "c" || words[0] == "p") return InputFormat::Dimacs;
    if (words[0][0] == '%') continue;
    return InputFormat::TptpCnf;
  }
  return InputFormat::TptpCnf;
}

ClauseSet parse_problem(std::string_view text, InputFormat fmt) {
  return fmt == InputFormat::Dimacs ? parse_dimacs(text) : parse_tptp_cnf(text);
}

}  // namespace etm
