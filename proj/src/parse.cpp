#include "singlab/parse.hpp"

#include <cctype>
#include <sstream>

#include "singlab/error.hpp"

namespace singlab {

namespace {

bool q_negative(const Coeff& c) {
  return !c.field().is_prime_field() && c.rational() < 0;
}

// |c| as text, with "1" kept for constants and dropped before variables.
void append_term(std::ostringstream& os, const Term& t, const Ring& ring, bool magnitude_only) {
  Coeff c = t.c;
  if (magnitude_only && q_negative(c)) c = -c;
  bool coeff_is_one = c.is_one();
  bool has_vars = !t.m.is_one();
  if (!coeff_is_one || !has_vars) {
    os << c.str();
    if (has_vars) os << "*";
  }
  bool first = true;
  for (std::size_t i = 0; i < t.m.nvars(); ++i) {
    if (t.m.e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << ring.vars[i];
    if (t.m.e[i] > 1) os << "^" << t.m.e[i];
  }
}

}  // namespace

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Ring& ring = *f.ring();
  std::ostringstream os;
  const auto& terms = f.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      // a leading negative prints its signed coefficient in full so the
      // result stays inside the grammar ("-1*x", "-1/2*y^3")
      if (q_negative(terms[i].c)) {
        os << terms[i].c.rational().get_str();
        if (!terms[i].m.is_one()) {
          os << "*";
          std::ostringstream rest;
          append_term(rest, Term{terms[i].m, Coeff::one(ring.field)}, ring, false);
          std::string s = rest.str();
          // drop the "1*" the helper would produce for coefficient one
          os << (s.rfind("1*", 0) == 0 ? s.substr(2) : s);
        }
      } else {
        append_term(os, terms[i], ring, false);
      }
    } else {
      os << (q_negative(terms[i].c) ? " - " : " + ");
      append_term(os, terms[i], ring, true);
    }
  }
  return os.str();
}

namespace {

struct Token {
  enum class Kind { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };
  Kind kind;
  std::string text;
  std::size_t col;  // 1-based
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::size_t col = pos_ + 1;
    if (pos_ >= s_.size()) {
      tok_ = Token{Token::Kind::end, "", col};
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_ = Token{Token::Kind::number, s_.substr(start, pos_ - start), col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      tok_ = Token{Token::Kind::ident, s_.substr(start, pos_ - start), col};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = Token{Token::Kind::plus, "+", col}; return;
      case '-': tok_ = Token{Token::Kind::minus, "-", col}; return;
      case '*': tok_ = Token{Token::Kind::star, "*", col}; return;
      case '^': tok_ = Token{Token::Kind::caret, "^", col}; return;
      case '/': tok_ = Token{Token::Kind::slash, "/", col}; return;
      case '(': tok_ = Token{Token::Kind::lparen, "(", col}; return;
      case ')': tok_ = Token{Token::Kind::rparen, ")", col}; return;
      default:
        fail(Errc::syntax_error,
             "unexpected character '" + std::string(1, c) + "' at column " + std::to_string(col));
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  Token tok_{Token::Kind::end, "", 1};
};

class Parser {
 public:
  Parser(const std::string& text, RingPtr ring) : lex_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (lex_.peek().kind != Token::Kind::end)
      fail(Errc::syntax_error, "trailing input at column " + std::to_string(lex_.peek().col));
    return p;
  }

 private:
  [[noreturn]] void err(const std::string& what, std::size_t col) {
    fail(Errc::syntax_error, what + " at column " + std::to_string(col));
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (lex_.peek().kind == Token::Kind::plus || lex_.peek().kind == Token::Kind::minus) {
      bool minus = lex_.take().kind == Token::Kind::minus;
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.peek().kind == Token::Kind::star) {
      lex_.take();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (lex_.peek().kind == Token::Kind::caret) {
      lex_.take();
      if (lex_.peek().kind != Token::Kind::number) err("syntax error: exponent expected", lex_.peek().col);
      unsigned long e = std::stoul(lex_.take().text);
      b = b.pow(e);
    }
    return b;
  }

  Polynomial base() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Token::Kind::minus:
      case Token::Kind::number:
        return rational();
      case Token::Kind::ident: {
        Token v = lex_.take();
        auto idx = ring_->var_index(v.text);
        if (!idx)
          fail(Errc::unknown_variable,
               "unknown variable '" + v.text + "' at column " + std::to_string(v.col));
        return Polynomial::variable(ring_, *idx);
      }
      case Token::Kind::lparen: {
        lex_.take();
        Polynomial p = expr();
        if (lex_.peek().kind != Token::Kind::rparen) err("syntax error: ')' expected", lex_.peek().col);
        lex_.take();
        return p;
      }
      default:
        err("syntax error", t.col);
    }
  }

  Polynomial rational() {
    bool neg = false;
    if (lex_.peek().kind == Token::Kind::minus) {
      Token m = lex_.take();
      if (lex_.peek().kind != Token::Kind::number) err("syntax error: number expected", lex_.peek().col);
      neg = true;
      (void)m;
    }
    Token n = lex_.take();
    mpz_class num(n.text);
    if (neg) num = -num;
    mpz_class den = 1;
    if (lex_.peek().kind == Token::Kind::slash) {
      lex_.take();
      if (lex_.peek().kind != Token::Kind::number) err("syntax error: denominator expected", lex_.peek().col);
      Token d = lex_.take();
      den = mpz_class(d.text);
      if (den == 0) err("zero denominator", d.col);
      if (ring_->field.is_prime_field() && den % mpz_class(ring_->field.p) == 0)
        fail(Errc::bad_denominator, "denominator divisible by " + std::to_string(ring_->field.p) +
                                        " at column " + std::to_string(d.col));
    }
    return Polynomial::constant(ring_, Coeff::from_fraction(num, den, ring_->field));
  }

  Lexer lex_;
  RingPtr ring_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace singlab
