// Copyright 2026 The berkram Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "berkram/parse.hpp"

#include <cctype>

#include "berkram/errors.hpp"

namespace berkram {

namespace {

enum class Tok { kNum, kIdent, kSym, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }
  bool accept(const std::string& sym) {
    if (cur_.kind != Tok::kEnd && cur_.text == sym) {
      advance();
      return true;
    }
    return false;
  }
  Token expect(const std::string& sym) {
    if (cur_.text != sym || cur_.kind == Tok::kEnd) error("expected '" + sym + "'");
    return next();
  }
  [[noreturn]] void error(const std::string& what) const {
    std::string found = cur_.kind == Tok::kEnd ? "end of input" : "'" + cur_.text + "'";
    throw SyntaxError(what + " at line " + std::to_string(cur_.line) + ", column " +
                          std::to_string(cur_.col) + " (found " + found + ")",
                      cur_.line, cur_.col);
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      if (s_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++i_;
    }
    cur_ = Token();
    cur_.line = line_;
    cur_.col = col_;
    if (i_ >= s_.size()) return;
    size_t start = i_;
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      cur_.kind = Tok::kNum;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      cur_.kind = Tok::kIdent;
    } else if (std::string("+-*/^();=,").find(c) != std::string::npos) {
      ++i_;
      cur_.kind = Tok::kSym;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "' at line " +
                            std::to_string(line_) + ", column " + std::to_string(col_),
                        line_, col_);
    }
    cur_.text = s_.substr(start, i_ - start);
    col_ += static_cast<int>(i_ - start);
  }

  const std::string& s_;
  size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token cur_;
};

// A rational function in z, num/den, while parsing.
struct Val {
  Poly num, den;
  bool uniformizer = false;  // the bare atom t or p
  bool den_one = true;
};

class Parser {
 public:
  Parser(const FieldPtr& F, const std::string& text, bool allow_z)
      : F_(F), lex_(text), allow_z_(allow_z) {}

  Lexer& lex() { return lex_; }

  Val expr() {
    Val v;
    bool neg = false;
    if (lex_.accept("-")) {
      neg = true;
    } else {
      lex_.accept("+");
    }
    v = term();
    if (neg) v = negate(v);
    for (;;) {
      if (lex_.accept("+")) {
        v = add(v, term());
      } else if (lex_.accept("-")) {
        v = add(v, negate(term()));
      } else {
        break;
      }
    }
    return v;
  }

  Rat rational() {
    bool neg = lex_.accept("-");
    if (!neg) lex_.accept("+");
    Token a = lex_.peek();
    if (a.kind != Tok::kNum) lex_.error("expected an integer");
    lex_.next();
    Rat r(Int(a.text));
    if (lex_.accept("/")) {
      bool neg2 = lex_.accept("-");
      Token b = lex_.peek();
      if (b.kind != Tok::kNum) lex_.error("expected a denominator");
      lex_.next();
      Int den(b.text);
      if (den == 0) lex_.error("zero denominator");
      r /= Rat(den);
      if (neg2) r = -r;
    }
    r.canonicalize();
    return neg ? Rat(-r) : r;
  }

  FieldElement to_element(const Val& v) {
    if (v.num.deg() > 0 || v.den.deg() > 0) {
      throw Error(ErrorKind::kSemanticError, "element literal depends on z");
    }
    FieldElement n = v.num.coeff(0);
    if (v.den_one) return n;
    return n / v.den.coeff(0);
  }

 private:
  Val from_element(const FieldElement& e) {
    Val v;
    v.num = Poly::constant(e);
    v.den = Poly::constant(FieldElement::one(F_));
    return v;
  }

  Val negate(Val v) {
    v.num = -v.num;
    v.uniformizer = false;
    return v;
  }

  Val add(const Val& a, const Val& b) {
    Val r;
    if (a.den_one && b.den_one) {
      r.num = a.num + b.num;
      r.den = a.den;
    } else {
      r.num = a.num * b.den + b.num * a.den;
      r.den = a.den * b.den;
      r.den_one = false;
    }
    return r;
  }

  Val mul(const Val& a, const Val& b) {
    Val r;
    r.num = a.num * b.num;
    r.den = a.den_one ? b.den : (b.den_one ? a.den : a.den * b.den);
    r.den_one = a.den_one && b.den_one;
    return r;
  }

  Val divide(const Val& a, const Val& b) {
    if (b.num.is_zero()) lex_.error("division by zero");
    Val inv;
    inv.num = b.den;
    inv.den = b.num;
    inv.den_one = false;
    // Dividing by a single exact term keeps everything polynomial.
    if (b.num.deg() == 0 && b.num.coeff(0).is_exact() && b.num.coeff(0).terms().size() == 1) {
      inv.num = b.den.scale(b.num.coeff(0).inv());
      inv.den = Poly::constant(FieldElement::one(F_));
      inv.den_one = b.den_one;
    }
    return mul(a, inv);
  }

  Val term() {
    Val v = power();
    for (;;) {
      if (lex_.accept("*")) {
        v = mul(v, power());
      } else if (lex_.accept("/")) {
        v = divide(v, power());
      } else {
        break;
      }
    }
    return v;
  }

  Rat exponent() {
    if (lex_.accept("(")) {
      Rat r = rational();
      lex_.expect(")");
      return r;
    }
    return rational();
  }

  Val power() {
    if (lex_.accept("-")) return negate(power());
    Val b = primary();
    if (!lex_.accept("^")) return b;
    Token at = lex_.peek();
    Rat e = exponent();
    if (b.uniformizer) {
      return from_element(FieldElement::uniformizer_pow(F_, e));
    }
    if (e.get_den() != 1) {
      throw SyntaxError("rational exponent on a non-uniformizer at line " +
                            std::to_string(at.line) + ", column " + std::to_string(at.col),
                        at.line, at.col);
    }
    long k = e.get_num().get_si();
    if (k < 0) {
      Val one = from_element(FieldElement::one(F_));
      b = divide(one, b);
      k = -k;
    }
    Val r = from_element(FieldElement::one(F_));
    for (long i = 0; i < k; ++i) r = mul(r, b);
    return r;
  }

  FieldElement uniformizer_atom(const Token& t) {
    bool mixed = F_->mode() == FieldMode::kMixed;
    if (t.text == "p" && !mixed) {
      throw Error(ErrorKind::kSemanticError,
                  "'p' is not an element in " + std::string(field_mode_name(F_->mode())) +
                      " mode (line " + std::to_string(t.line) + ", column " +
                      std::to_string(t.col) + ")");
    }
    if (t.text == "t" && mixed) {
      throw Error(ErrorKind::kSemanticError,
                  "'t' is not an element in mixed mode; use p (line " + std::to_string(t.line) +
                      ", column " + std::to_string(t.col) + ")");
    }
    return FieldElement::uniformizer_pow(F_, 1);
  }

  Val primary() {
    Token t = lex_.peek();
    if (t.kind == Tok::kNum) {
      lex_.next();
      return from_element(FieldElement::from_rat(F_, Rat(Int(t.text))));
    }
    if (t.kind == Tok::kIdent) {
      if (t.text == "t" || t.text == "p") {
        lex_.next();
        Val v = from_element(uniformizer_atom(t));
        v.uniformizer = true;
        return v;
      }
      if (t.text == "g") {
        lex_.next();
        const auto& K = F_->coeff_field();
        if (K->is_rational() || K->degree() == 1) {
          throw Error(ErrorKind::kSemanticError, "no tower generator in " + K->describe());
        }
        return from_element(FieldElement::monomial(F_, K->gen(), 0));
      }
      if (t.text == "z") {
        if (!allow_z_) {
          throw Error(ErrorKind::kSemanticError, "z is not allowed in an element literal");
        }
        lex_.next();
        Val v;
        v.num = Poly::z(F_);
        v.den = Poly::constant(FieldElement::one(F_));
        return v;
      }
      if (t.text == "O") {
        lex_.next();
        lex_.expect("(");
        Token u = lex_.peek();
        if (u.kind != Tok::kIdent || (u.text != "t" && u.text != "p")) lex_.error("expected t or p");
        lex_.next();
        uniformizer_atom(u);
        Rat e = 1;
        if (lex_.accept("^")) e = exponent();
        lex_.expect(")");
        return from_element(FieldElement::big_oh(F_, e));
      }
      lex_.error("unknown identifier");
    }
    if (lex_.accept("(")) {
      Val v = expr();
      lex_.expect(")");
      return v;
    }
    lex_.error("expected an expression");
  }

  FieldPtr F_;
  Lexer lex_;
  bool allow_z_;
};

}  // namespace

FieldElement parse_element(const FieldPtr& F, const std::string& text) {
  Parser ps(F, text, false);
  Val v = ps.expr();
  if (ps.lex().peek().kind != Tok::kEnd) ps.lex().error("trailing input");
  return ps.to_element(v);
}

RationalMap parse_map(const FieldPtr& F, const std::string& text) {
  Parser ps(F, text, true);
  Val v = ps.expr();
  if (ps.lex().peek().kind != Tok::kEnd) ps.lex().error("trailing input");
  Poly num = v.num, den = v.den;
  if (den.deg() >= 1 && num.is_exact() && den.is_exact() && !num.is_zero()) {
    Poly g = exact::gcd(num, den);
    if (g.deg() >= 1) {
      num = exact::div(num, g);
      den = exact::div(den, g);
    }
  }
  return RationalMap(num, den, false);
}

BerkPoint parse_point(const FieldPtr& F, const std::string& text) {
  Parser ps(F, text, false);
  Lexer& lx = ps.lex();
  Token t = lx.peek();
  if (t.kind != Tok::kIdent) lx.error("expected zeta(...), pt(...) or inf");
  lx.next();
  BerkPoint out;
  if (t.text == "inf") {
    out = BerkPoint::infinity();
  } else if (t.text == "pt") {
    lx.expect("(");
    FieldElement a = ps.to_element(ps.expr());
    lx.expect(")");
    out = BerkPoint::classical(a);
  } else if (t.text == "zeta") {
    lx.expect("(");
    FieldElement a = ps.to_element(ps.expr());
    if (!lx.accept(";")) lx.expect(",");
    Token k = lx.peek();
    if (k.kind != Tok::kIdent || k.text != "ord") lx.error("expected 'ord='");
    lx.next();
    lx.expect("=");
    Rat s = ps.rational();
    lx.expect(")");
    out = BerkPoint::ball(a, s);
  } else {
    lx.error("expected zeta(...), pt(...) or inf");
  }
  if (lx.peek().kind != Tok::kEnd) lx.error("trailing input");
  return out;
}

Rat parse_rational(const std::string& text) {
  Parser ps(GroundField::equichar_zero(), text, false);
  Rat r = ps.rational();
  if (ps.lex().peek().kind != Tok::kEnd) ps.lex().error("trailing input");
  return r;
}

}  // namespace berkram
