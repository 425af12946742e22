#include <cctype>
#include <map>
#include <optional>

#include "etm/frontend.hpp"

namespace etm {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  enum class Kind : std::uint8_t { Word, Var, Dollar, Quoted, Number, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : s_(text) {}

  Token next() {
    skip_blank();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= s_.size()) return t;
    const char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_') ? Token::Kind::Var : Token::Kind::Word;
      while (pos_ < s_.size() && ident_char(s_[pos_])) t.text += take();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Number;
      while (pos_ < s_.size() && ident_char(s_[pos_])) t.text += take();
    } else if (c == '$') {
      t.kind = Token::Kind::Dollar;
      t.text += take();
      while (pos_ < s_.size() && ident_char(s_[pos_])) t.text += take();
    } else if (c == '\'') {
      t.kind = Token::Kind::Quoted;
      take();
      while (pos_ < s_.size() && s_[pos_] != '\'') {
        if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) take();
        t.text += take();
      }
      if (pos_ >= s_.size()) throw ParseError(t.line, t.col, "unterminated quoted name");
      take();
    } else {
      t.kind = Token::Kind::Punct;
      t.text += take();
      if (t.text == "!" && pos_ < s_.size() && s_[pos_] == '=') t.text += take();
    }
    return t;
  }

 private:
  char take() {
    char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else if (c == '%') {
        while (pos_ < s_.size() && s_[pos_] != '\n') take();
      } else if (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '*') {
        const std::size_t l = line_, k = col_;
        take();
        take();
        while (pos_ + 1 < s_.size() && !(s_[pos_] == '*' && s_[pos_ + 1] == '/')) take();
        if (pos_ + 1 >= s_.size()) throw ParseError(l, k, "unterminated comment");
        take();
        take();
      } else {
        return;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { advance(); }

  ClauseSet file() {
    ClauseSet cs(Mode::FirstOrder);
    while (tok_.kind != Token::Kind::End) {
      if (tok_.kind != Token::Kind::Word) fail("expected cnf(...) or include(...)");
      if (tok_.text == "include") fail("include directives are not supported");
      if (tok_.text != "cnf") fail("unsupported formula kind '" + tok_.text + "'; only cnf is accepted");
      advance();
      expect("(");
      name();
      expect(",");
      name();
      expect(",");
      bool trivially_true = false;
      auto lits = formula(trivially_true);
      if (punct(",")) {
        advance();
        skip_balanced();
      }
      expect(")");
      expect(".");
      if (!trivially_true) cs.add(std::move(lits));
    }
    cs.infer_mode();
    return cs;
  }

  std::vector<Literal> literal_list() {
    bool trivially_true = false;
    auto lits = disjunction(trivially_true);
    if (tok_.kind != Token::Kind::End) fail("unexpected '" + tok_.text + "'");
    return lits;
  }

  Literal single_literal() {
    bool trivially_true = false;
    auto lit = literal(trivially_true);
    if (!lit || tok_.kind != Token::Kind::End) fail("expected a single literal");
    return *lit;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(tok_.line, tok_.col, msg); }

  void advance() { tok_ = lex_.next(); }
  bool punct(const char* p) const { return tok_.kind == Token::Kind::Punct && tok_.text == p; }

  void expect(const char* p) {
    if (!punct(p)) fail(std::string("expected '") + p + "'" + (tok_.kind == Token::Kind::End ? " before end of input" : ""));
    advance();
  }

  void name() {
    if (tok_.kind == Token::Kind::Word || tok_.kind == Token::Kind::Quoted || tok_.kind == Token::Kind::Number ||
        tok_.kind == Token::Kind::Var) {
      advance();
      return;
    }
    fail("expected a name");
  }

  void skip_balanced() {
    int depth = 0;
    while (tok_.kind != Token::Kind::End) {
      if (punct("(") || punct("[")) ++depth;
      if (punct(")") || punct("]")) {
        if (depth == 0) return;
        --depth;
      }
      advance();
    }
    fail("unterminated annotation");
  }

  std::vector<Literal> formula(bool& trivially_true) {
    if (punct("(")) {
      advance();
      auto lits = disjunction(trivially_true);
      expect(")");
      return lits;
    }
    return disjunction(trivially_true);
  }

  std::vector<Literal> disjunction(bool& trivially_true) {
    std::vector<Literal> lits;
    for (;;) {
      if (auto l = literal(trivially_true)) lits.push_back(std::move(*l));
      if (!punct("|")) break;
      advance();
    }
    return lits;
  }

  // Nothing for $false; sets the flag for $true.
  std::optional<Literal> literal(bool& trivially_true) {
    bool negative = false;
    while (punct("~")) {
      negative = !negative;
      advance();
    }
    if (tok_.kind == Token::Kind::Dollar && (tok_.text == "$false" || tok_.text == "$true")) {
      const bool value = (tok_.text == "$true") != negative;
      advance();
      if (value) trivially_true = true;
      return std::nullopt;
    }
    if (tok_.kind == Token::Kind::Var) fail("variable '" + tok_.text + "' used as a predicate");
    const Token head = tok_;
    std::string pred = symbol();
    std::vector<Term> args = arguments();
    if (punct("=") || punct("!=")) fail("equality literals are not supported");
    note_arity(pred_arity_, pred, args.size(), head, "predicate");
    return Literal{!negative, std::move(pred), std::move(args)};
  }

  std::string symbol() {
    if (tok_.kind == Token::Kind::Word || tok_.kind == Token::Kind::Quoted || tok_.kind == Token::Kind::Number ||
        tok_.kind == Token::Kind::Dollar) {
      std::string s = tok_.text;
      advance();
      return s;
    }
    fail(tok_.kind == Token::Kind::End ? "unexpected end of input" : "unexpected '" + tok_.text + "'");
  }

  std::vector<Term> arguments() {
    std::vector<Term> args;
    if (!punct("(")) return args;
    advance();
    for (;;) {
      args.push_back(term());
      if (punct(",")) {
        advance();
        continue;
      }
      expect(")");
      break;
    }
    return args;
  }

  Term term() {
    if (tok_.kind == Token::Kind::Var) {
      std::string v = tok_.text;
      advance();
      return Term::var(std::move(v));
    }
    const Token head = tok_;
    std::string f = symbol();
    auto args = arguments();
    note_arity(fn_arity_, f, args.size(), head, "function");
    return Term::fn(std::move(f), std::move(args));
  }

  void note_arity(std::map<std::string, std::size_t>& table, const std::string& sym, std::size_t n,
                  const Token& at, const char* what) {
    auto [it, fresh] = table.emplace(sym, n);
    if (!fresh && it->second != n)
      throw ParseError(at.line, at.col,
                       std::string(what) + " '" + sym + "' used with arity " + std::to_string(n) +
                           " after arity " + std::to_string(it->second));
  }

  Lexer lex_;
  Token tok_;
  std::map<std::string, std::size_t> pred_arity_;
  std::map<std::string, std::size_t> fn_arity_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ClauseSet parse_tptp_cnf(std::string_view text) { return Parser(text).file(); }

Literal parse_literal(std::string_view text) { return Parser(text).single_literal(); }

std::vector<Literal> parse_literal_list(std::string_view text) {
  auto t = trim(text);
  if (t == kEmptyClauseSymbol || t.empty()) return {};
  return merge_duplicate_literals(Parser(t).literal_list());
}

std::string write_tptp_cnf(const ClauseSet& s) {
  std::string out;
  for (const auto& c : s) {
    out += "cnf(c" + std::to_string(c.id) + ", axiom, (";
    out += c.empty() ? "$false" : to_string(c.literals);
    out += ")).\n";
  }
  return out;
}

}  // namespace etm
