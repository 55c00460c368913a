#include "tdqe/parser.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "tdqe/error.hpp"

namespace tdqe {

namespace {

enum class Tok { Ident, Number, Op, Rel, Sep, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
  Rat number;
  Relation rel = Relation::LE;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '\n' || c == ';') {
        out.push_back(make(Tok::Sep, std::string(1, c)));
        advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        Token t = make(Tok::Ident, "");
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          t.text += text_[pos_];
          advance();
        }
        out.push_back(std::move(t));
      } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && pos_ + 1 < text_.size() &&
                                                                  std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        out.push_back(number());
      } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
        out.push_back(make(Tok::Op, std::string(1, c)));
        advance();
      } else if (c == '<' || c == '>' || c == '=') {
        out.push_back(relation());
      } else if (text_.substr(pos_, 3) == "≤" || text_.substr(pos_, 3) == "≥") {
        Token t = make(Tok::Rel, std::string(text_.substr(pos_, 3)));
        t.rel = text_.substr(pos_, 3) == "≤" ? Relation::LE : Relation::GE;
        pos_ += 3;
        ++column_;
        out.push_back(std::move(t));
      } else {
        throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back(make(Tok::End, ""));
    return out;
  }

 private:
  Token make(Tok kind, std::string text) const { return Token{kind, std::move(text), line_, column_, Rat(0), Relation::LE}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  Token number() {
    Token t = make(Tok::Number, "");
    std::string digits;
    std::string frac;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      advance();
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      advance();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        frac += text_[pos_];
        advance();
      }
    }
    t.text = frac.empty() ? digits : digits + "." + frac;
    Int whole(digits.empty() ? "0" : digits);
    if (frac.empty()) {
      t.number = Rat(whole);
    } else {
      Int scale(1);
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      t.number = Rat(whole * scale + Int(frac), scale);
      t.number.canonicalize();
    }
    return t;
  }

  Token relation() {
    Token t = make(Tok::Rel, "");
    char c = text_[pos_];
    advance();
    bool eq_next = pos_ < text_.size() && text_[pos_] == '=';
    if (eq_next) advance();
    if (c == '<') t.rel = eq_next ? Relation::LE : Relation::LT;
    if (c == '>') t.rel = eq_next ? Relation::GE : Relation::GT;
    if (c == '=') t.rel = Relation::EQ;
    t.text = std::string(1, c) + (eq_next ? "=" : "");
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  QuantFormula run() {
    skip_seps();
    if (!is_ident("exists")) fail(peek(), "expected 'exists' header");
    next();
    std::vector<Var> quantified;
    std::set<Var> seen;
    for (Var v : name_list()) {
      if (!seen.insert(v).second) fail(toks_[pos_ - 1], "variable quantified twice");
      quantified.push_back(v);
    }
    skip_seps();
    if (is_ident("free")) {
      next();
      for (Var v : name_list()) {
        if (seen.count(v)) fail(toks_[pos_ - 1], "variable " + vars_.name(v) + " is both quantified and free");
      }
      skip_seps();
    }
    std::vector<PolyAtom> atoms;
    while (peek().kind != Tok::End) {
      atoms.push_back(atom());
      if (peek().kind != Tok::Sep && peek().kind != Tok::End) fail(peek(), "expected end of atom");
      skip_seps();
    }
    bool linear = std::all_of(atoms.begin(), atoms.end(), [](const PolyAtom& a) { return a.poly.total_degree() <= 1; });
    if (linear) {
      std::vector<LinearAtom> lin;
      for (const auto& a : atoms) lin.push_back(to_linear(a));
      return QuantFormula(std::move(vars_), std::move(quantified), std::move(lin));
    }
    return QuantFormula(std::move(vars_), std::move(quantified), std::move(atoms));
  }

 private:
  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool is_ident(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }
  bool is_op(char c) const { return peek().kind == Tok::Op && peek().text[0] == c; }

  void skip_seps() {
    while (peek().kind == Tok::Sep) next();
  }

  // Names up to the next separator.
  std::vector<Var> name_list() {
    std::vector<Var> out;
    while (peek().kind == Tok::Ident) {
      const Token& t = next();
      if (t.text == "exists" || t.text == "free") fail(t, "keyword used as a variable name");
      out.push_back(vars_.intern(t.text));
    }
    if (peek().kind != Tok::Sep && peek().kind != Tok::End) fail(peek(), "expected a variable name or ';'");
    return out;
  }

  PolyAtom atom() {
    Poly lhs = expr();
    if (peek().kind != Tok::Rel) fail(peek(), "expected a relation");
    Relation rel = next().rel;
    Poly rhs = expr();
    return PolyAtom{lhs - rhs, rel};
  }

  Poly expr() {
    Poly acc = term();
    while (is_op('+') || is_op('-')) {
      bool minus = next().text[0] == '-';
      Poly t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  bool starts_factor() const {
    const Token& t = peek();
    return t.kind == Tok::Number || (t.kind == Tok::Ident && t.text != "exists" && t.text != "free") ||
           (t.kind == Tok::Op && t.text[0] == '(');
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (is_op('*')) {
        next();
        acc *= unary();
      } else if (is_op('/')) {
        const Token& slash = next();
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail(slash, "can only divide by a nonzero number");
        acc *= Rat(1 / d.constant_value());
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (is_op('-')) {
      next();
      return -unary();
    }
    if (is_op('+')) {
      next();
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (is_op('^')) {
      next();
      const Token& t = peek();
      if (t.kind != Tok::Number || !is_integer(t.number) || t.number < 0 || t.number > 1000) {
        fail(t, "exponent must be a small non-negative integer");
      }
      next();
      return pow(base, static_cast<std::uint32_t>(t.number.get_num().get_ui()));
    }
    return base;
  }

  Poly primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      return Poly(t.number);
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "exists" || t.text == "free") fail(t, "keyword used as a variable name");
      next();
      return Poly::variable(vars_.intern(t.text));
    }
    if (is_op('(')) {
      next();
      Poly inner = expr();
      if (!is_op(')')) fail(peek(), "expected ')'");
      next();
      return inner;
    }
    fail(t, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  VarTable vars_;
};

std::string format_coeff_term(const Rat& c, const std::string& mono, bool first) {
  std::string out;
  Rat mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mono.empty()) return out + to_string(mag);
  if (mag != 1) out += to_string(mag) + "*";
  return out + mono;
}

std::string format_monomial(const Monomial& m, const VarTable& vars) {
  std::string out;
  for (const auto& [v, e] : m.powers()) {
    if (!out.empty()) out += "*";
    out += vars.name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

QuantFormula parse_formula(std::string_view text) { return Parser(Lexer(text).run()).run(); }

std::string format_poly(const Poly& p, const VarTable& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    out += format_coeff_term(c, format_monomial(m, vars), first);
    first = false;
  }
  return out;
}

std::string format_atom(const LinearAtom& a, const VarTable& vars) {
  std::string lhs;
  bool first = true;
  for (const auto& [v, c] : a.coeffs()) {
    lhs += format_coeff_term(c, vars.name(v), first);
    first = false;
  }
  if (lhs.empty()) lhs = "0";
  return lhs + " " + std::string(symbol(a.rel())) + " " + to_string(a.rhs());
}

std::string format_atom(const PolyAtom& a, const VarTable& vars) {
  return format_poly(a.poly, vars) + " " + std::string(symbol(a.rel)) + " 0";
}

std::string format_formula(const QuantFormula& f) {
  std::ostringstream out;
  out << "exists";
  for (Var v : f.quantified()) out << ' ' << f.vars().name(v);
  out << ";\n";
  auto free = f.free();
  if (!free.empty()) {
    out << "free";
    for (Var v : free) out << ' ' << f.vars().name(v);
    out << ";\n";
  }
  if (f.mode() == FormulaMode::Linear) {
    for (const auto& a : f.linear_atoms()) out << format_atom(a, f.vars()) << '\n';
  } else {
    for (const auto& a : f.poly_atoms()) out << format_atom(a, f.vars()) << '\n';
  }
  return out.str();
}

std::string format_atoms(const std::vector<LinearAtom>& atoms, const VarTable& vars, bool is_false) {
  if (is_false) return "false\n";
  if (atoms.empty()) return "true\n";
  std::string out;
  for (const auto& a : atoms) out += format_atom(a, vars) + "\n";
  return out;
}

std::string format_polys(const std::vector<Poly>& polys, const VarTable& vars) {
  std::string out;
  for (const auto& p : polys) out += format_poly(p, vars) + "\n";
  return out;
}

}  // namespace tdqe
