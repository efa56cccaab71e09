#include "polyfib/expression.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "polyfib/bernoulli.hpp"
#include "polyfib/errors.hpp"
#include "polyfib/polylog.hpp"
#include "polyfib/seqcore.hpp"

namespace polyfib {
namespace {

class Parser {
 public:
  Parser(std::string_view text, Bits prec) : text_(text), prec_(prec), wp_(prec + kGuardBits) {}

  Complex parse() {
    Complex value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value.rounded(prec_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("expression '" + std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Complex expr() {
    Complex value = term();
    for (;;) {
      if (accept('+')) value += term();
      else if (accept('-')) value -= term();
      else return value;
    }
  }

  Complex term() {
    Complex value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        Complex d = unary();
        if (d.is_zero()) fail("division by zero");
        value /= d;
      } else {
        return value;
      }
    }
  }

  Complex unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Complex power() {
    Complex base = primary();
    if (!accept('^')) return base;
    return pow(base, integer_of(unary(), "exponent"));
  }

  long integer_of(const Complex& v, const char* what) const {
    if (!v.is_real() || !v.re().is_integer()) fail(std::string(what) + " must be an integer");
    return v.re().to_long();
  }

  Real real_of(const Complex& v, const char* what) const {
    if (!v.is_real()) fail(std::string(what) + " needs a real argument");
    return v.re();
  }

  Complex number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        pos_ = look;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    return Complex(Real::from_string(text_.substr(start, pos_ - start), wp_));
  }

  std::string name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::vector<Complex> arguments() {
    std::vector<Complex> args;
    if (accept(')')) return args;
    do {
      args.push_back(expr());
    } while (accept(','));
    expect(')');
    return args;
  }

  Complex primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Complex value = expr();
      expect(')');
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");
    const std::string id = name();
    if (accept('(')) return call(id, arguments());
    return constant(id);
  }

  Complex constant(const std::string& id) const {
    if (id == "pi") return Complex(pi(wp_));
    if (id == "i") return Complex::i(wp_);
    if (id == "alpha" || id == "beta" || id == "sqrt5") {
      const GoldenConstants g = golden_constants(wp_);
      return Complex(id == "alpha" ? g.alpha : id == "beta" ? g.beta : g.sqrt5);
    }
    fail("unknown name '" + id + "'");
  }

  Complex call(const std::string& id, const std::vector<Complex>& args) const {
    auto arity = [&](std::size_t n) {
      if (args.size() != n) fail(id + " takes " + std::to_string(n) + " argument(s)");
    };
    if (id == "log") {
      arity(1);
      if (args[0].is_zero()) fail("log of zero");
      return log(args[0]);
    }
    if (id == "exp") {
      arity(1);
      return exp(args[0]);
    }
    if (id == "sqrt") {
      arity(1);
      if (args[0].is_real() && args[0].re().sign() >= 0) return Complex(sqrt(args[0].re()));
      if (args[0].is_zero()) return args[0];
      return exp(log(args[0]) / 2L);
    }
    if (id == "atan" || id == "cos" || id == "sin") {
      arity(1);
      const Real x = real_of(args[0], id.c_str());
      return Complex(id == "atan" ? atan(x) : id == "cos" ? cos(x) : sin(x));
    }
    if (id == "zeta") {
      arity(1);
      return Complex(zeta_int(integer_of(args[0], "zeta order"), wp_));
    }
    if (id == "F" || id == "L") {
      arity(1);
      const long n = integer_of(args[0], "index");
      return Complex(Real(id == "F" ? fib(n) : lucas(n), wp_));
    }
    if (id == "Li" || id == "LiLower" || id == "LiExp") {
      arity(2);
      const long k = integer_of(args[0], "polylog order");
      if (id == "LiExp") return li_log_expansion(k, args[1], wp_).value;
      return li(k, args[1], wp_, id == "LiLower" ? Side::Lower : Side::Upper).value;
    }
    fail("unknown function '" + id + "'");
  }

  std::string_view text_;
  Bits prec_;
  Bits wp_;
  std::size_t pos_ = 0;
};

bool calls(std::string_view text, std::string_view fn) {
  for (std::size_t at = text.find(fn); at != std::string_view::npos; at = text.find(fn, at + 1)) {
    const bool left_ok = at == 0 || !(std::isalnum(static_cast<unsigned char>(text[at - 1])) || text[at - 1] == '_');
    std::size_t after = at + fn.size();
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
    if (left_ok && after < text.size() && text[after] == '(') return true;
  }
  return false;
}

}  // namespace

Complex evaluate_expression(std::string_view text, Bits prec) { return Parser(text, prec).parse(); }

Real evaluate_real_expression(std::string_view text, Bits prec) {
  Complex v = evaluate_expression(text, prec);
  if (!v.is_real()) {
    const Real scale = max(abs(v.re()), Real(1L, prec));
    if (abs(v.im()) > scale * Real::exp2i(16 - prec, 64)) {
      throw DomainError("expression '" + std::string(text) + "' is not real");
    }
  }
  return v.re();
}

bool expression_uses_polylog(std::string_view text) {
  return calls(text, "Li") || calls(text, "LiLower") || calls(text, "LiExp");
}

bool expression_uses_log_expansion(std::string_view text) { return calls(text, "LiExp"); }

}  // namespace polyfib
