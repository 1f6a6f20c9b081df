#include "chowkit/poly_text.hpp"

#include <cctype>
#include <sstream>

#include "chowkit/errors.hpp"

namespace ck {

std::string to_string(const MPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const std::size_t n = f.nvars();
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    mpz_class c = f.coeff(t);
    if (t == 0) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool any = false;
    std::ostringstream mono;
    for (std::size_t k = 0; k < n; ++k) {
      Exp e = f.exps(t)[k];
      if (e == 0) continue;
      if (any) mono << '*';
      mono << f.vars()->name(k);
      if (e > 1) mono << '^' << e;
      any = true;
    }
    if (!any)
      os << c.get_str();
    else if (c == 1)
      os << mono.str();
    else
      os << c.get_str() << '*' << mono.str();
  }
  return os.str();
}

namespace {

class ExprParser {
public:
  ExprParser(const std::string& s, const Vars& vars, int line, int col0)
      : s_(s), vars_(vars), line_(line), col0_(col0) {}

  MPoly run() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    MPoly r = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col0_ + static_cast<int>(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (eat('+'))
        acc = add(acc, term());
      else if (eat('-'))
        acc = sub(acc, term());
      else
        return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      skip();
      if (eat('*'))
        acc = mul(acc, unary());
      else
        return acc;
    }
  }

  MPoly unary() {
    if (eat('-')) return neg(unary());
    if (eat('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent after '^'");
      if (pos_ - start > 9) fail("exponent too large");
      unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
      return pow(base, e);
    }
    return base;
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MPoly::constant(vars_, mpz_class(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto idx = vars_->index(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return MPoly::variable(vars_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  const Vars& vars_;
  int line_, col0_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(const std::string& text, const Vars& vars, int line, int col0) {
  return ExprParser(text, vars, line, col0).run();
}

}  // namespace ck
