#include "holokrein/expr.hpp"

#include <algorithm>
#include <cctype>

namespace holokrein {

Expr Expr::rational(Rational v) {
  Expr e;
  e.kind = ExprKind::Rational;
  e.value = std::move(v);
  return e;
}

Expr Expr::imag_unit() {
  Expr e;
  e.kind = ExprKind::ImagUnit;
  return e;
}

Expr Expr::sqrt2() {
  Expr e;
  e.kind = ExprKind::Sqrt2;
  return e;
}

Expr Expr::sym(SymbolKind s, int mode) {
  Expr e;
  e.kind = ExprKind::Symbol;
  e.symbol = s;
  e.mode = (s == SymbolKind::AMode || s == SymbolKind::AModeStar) ? mode : 0;
  return e;
}

Expr Expr::sum(std::vector<Expr> terms, std::vector<bool> negated) {
  Expr e;
  e.kind = ExprKind::Sum;
  e.children = std::move(terms);
  e.negated = std::move(negated);
  return e;
}

Expr Expr::product(std::vector<Expr> factors) {
  Expr e;
  e.kind = ExprKind::Product;
  e.children = std::move(factors);
  return e;
}

Expr Expr::power(Expr base, unsigned exponent) {
  Expr e;
  e.kind = ExprKind::Power;
  e.exponent = exponent;
  e.children.push_back(std::move(base));
  return e;
}

bool operator==(const Expr& l, const Expr& r) {
  if (l.kind != r.kind) return false;
  switch (l.kind) {
    case ExprKind::Rational: return l.value == r.value;
    case ExprKind::ImagUnit:
    case ExprKind::Sqrt2: return true;
    case ExprKind::Symbol: return l.symbol == r.symbol && l.mode == r.mode;
    case ExprKind::Sum: return l.children == r.children && l.negated == r.negated;
    case ExprKind::Product: return l.children == r.children;
    case ExprKind::Power: return l.exponent == r.exponent && l.children == r.children;
  }
  return false;
}

ExprParseError::ExprParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
    : Error(ErrorCode::ParseError, message), offset_(offset), expected_(std::move(expected)) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail({"'+'", "'-'", "factor", "end of input"});
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "unexpected ";
    msg += pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : std::string("end of input");
    msg += " at offset " + std::to_string(pos_) + "; expected one of:";
    for (const auto& e : expected) msg += " " + e;
    throw ExprParseError(pos_, std::move(expected), msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') return true;
    return c == 'z' || c == 'd' || c == 'a' || c == 'i' || s_.substr(pos_, 5) == "sqrt2";
  }

  Expr expr() {
    std::vector<Expr> terms;
    std::vector<bool> neg;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    terms.push_back(term());
    neg.push_back(negative);
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      terms.push_back(term());
      neg.push_back(c == '-');
    }
    if (terms.size() == 1 && !neg.front()) return std::move(terms.front());
    return Expr::sum(std::move(terms), std::move(neg));
  }

  Expr term() {
    std::vector<Expr> factors;
    factors.push_back(factor());
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        factors.push_back(factor());
      } else if (starts_factor()) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    if (factors.size() == 1) return std::move(factors.front());
    return Expr::product(std::move(factors));
  }

  Expr factor() {
    Expr base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_ || pos_ - start > 9) {
        pos_ = start;
        fail({"exponent (unsigned integer)"});
      }
      return Expr::power(std::move(base), static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  std::size_t digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return pos_ - start;
  }

  Expr atom() {
    const char c = peek();
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits();
      Rational num(std::string(s_.substr(start, pos_ - start)));
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::size_t dstart = pos_;
        if (digits() == 0) fail({"denominator digits"});
        Rational den(std::string(s_.substr(dstart, pos_ - dstart)));
        if (den == 0) {
          pos_ = dstart;
          fail({"nonzero denominator"});
        }
        num /= den;
      }
      return Expr::rational(num);
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (peek() != ')') fail({"')'", "'+'", "'-'", "factor"});
      ++pos_;
      return inner;
    }
    if (s_.substr(pos_, 5) == "sqrt2") {
      pos_ += 5;
      return Expr::sqrt2();
    }
    if (c == 'i') {
      ++pos_;
      return Expr::imag_unit();
    }
    if (c == 'z') {
      ++pos_;
      return Expr::sym(SymbolKind::Z);
    }
    if (c == 'd') {
      ++pos_;
      return Expr::sym(SymbolKind::D);
    }
    if (c == 'a') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '_') {
        ++pos_;
        const std::size_t mstart = pos_;
        const std::size_t n = digits();
        if (n == 0 || n > 6) {
          pos_ = mstart;
          fail({"mode index"});
        }
        const int mode = std::stoi(std::string(s_.substr(mstart, n)));
        if (mode < 1) {
          pos_ = mstart;
          fail({"mode index >= 1"});
        }
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          return Expr::sym(SymbolKind::AModeStar, mode);
        }
        return Expr::sym(SymbolKind::AMode, mode);
      }
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        return Expr::sym(SymbolKind::AStar);
      }
      return Expr::sym(SymbolKind::A);
    }
    fail({"number", "'i'", "'sqrt2'", "'z'", "'d'", "'a'", "'a*'", "'a_<n>'", "'('"});
  }
};

std::string print_atom_rational(const Rational& v) {
  const auto num = boost::multiprecision::numerator(v);
  const auto den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return "(" + num.str() + "/" + den.str() + ")";
}

void print_into(const Expr& e, std::string& out);

void print_child(const Expr& child, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print_into(child, out);
  if (wrap) out += ')';
}

void print_into(const Expr& e, std::string& out) {
  switch (e.kind) {
    case ExprKind::Rational: out += print_atom_rational(e.value); return;
    case ExprKind::ImagUnit: out += 'i'; return;
    case ExprKind::Sqrt2: out += "sqrt2"; return;
    case ExprKind::Symbol:
      switch (e.symbol) {
        case SymbolKind::Z: out += 'z'; return;
        case SymbolKind::D: out += 'd'; return;
        case SymbolKind::A: out += 'a'; return;
        case SymbolKind::AStar: out += "a*"; return;
        case SymbolKind::AMode: out += "a_" + std::to_string(e.mode); return;
        case SymbolKind::AModeStar: out += "a_" + std::to_string(e.mode) + "*"; return;
      }
      return;
    case ExprKind::Sum:
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (k == 0) {
          if (e.negated[k]) out += '-';
        } else {
          out += e.negated[k] ? " - " : " + ";
        }
        print_child(e.children[k], e.children[k].kind == ExprKind::Sum, out);
      }
      return;
    case ExprKind::Product:
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (k > 0) out += ' ';
        const auto kind = e.children[k].kind;
        print_child(e.children[k], kind == ExprKind::Sum || kind == ExprKind::Product, out);
      }
      return;
    case ExprKind::Power: {
      const auto kind = e.children.front().kind;
      print_child(e.children.front(), kind == ExprKind::Sum || kind == ExprKind::Product || kind == ExprKind::Power,
                  out);
      out += '^' + std::to_string(e.exponent);
      return;
    }
  }
}

void collect_symbols(const Expr& e, bool& holo, bool& heis, int& modes) {
  if (e.kind == ExprKind::Symbol) {
    switch (e.symbol) {
      case SymbolKind::Z:
      case SymbolKind::D: holo = true; break;
      case SymbolKind::A:
      case SymbolKind::AStar: heis = true; break;
      default: modes = std::max(modes, e.mode);
    }
  }
  for (const auto& c : e.children) collect_symbols(c, holo, heis, modes);
}

AlgebraElement evaluate(const Expr& e, const GeneratorSet& alg) {
  switch (e.kind) {
    case ExprKind::Rational: return AlgebraElement::scalar(alg, ExactComplex(e.value));
    case ExprKind::ImagUnit: return AlgebraElement::scalar(alg, ExactComplex::i());
    case ExprKind::Sqrt2: return AlgebraElement::scalar(alg, ExactComplex::sqrt2());
    case ExprKind::Symbol: {
      const bool holo_sym = e.symbol == SymbolKind::Z || e.symbol == SymbolKind::D;
      const bool heis_sym = e.symbol == SymbolKind::A || e.symbol == SymbolKind::AStar;
      const bool fits = (alg.kind() == AlgebraKind::Holomorphic && holo_sym) ||
                        (alg.kind() == AlgebraKind::Heisenberg && heis_sym) ||
                        (alg.kind() == AlgebraKind::MultiMode && !holo_sym && !heis_sym);
      if (!fits) throw Error(ErrorCode::UnknownGenerator, "symbol does not belong to the target algebra");
      const bool creator =
          e.symbol == SymbolKind::Z || e.symbol == SymbolKind::AStar || e.symbol == SymbolKind::AModeStar;
      return AlgebraElement::generator(alg, Generator{creator, e.mode});
    }
    case ExprKind::Sum: {
      AlgebraElement out(alg);
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        const AlgebraElement t = evaluate(e.children[k], alg);
        if (e.negated[k]) {
          out -= t;
        } else {
          out += t;
        }
      }
      return out;
    }
    case ExprKind::Product: {
      AlgebraElement out = AlgebraElement::scalar(alg, ExactComplex(1));
      for (const auto& c : e.children) out = out * evaluate(c, alg);
      return out;
    }
    case ExprKind::Power: return power(evaluate(e.children.front(), alg), e.exponent);
  }
  return AlgebraElement(alg);
}

}  // namespace

Expr parse_expr(std::string_view text) {
  if (text.size() > kMaxExprBytes) {
    throw ExprParseError(kMaxExprBytes, {"input of at most 65536 bytes"}, "expression exceeds 64 KiB");
  }
  return Parser(text).parse();
}

std::string print_expr(const Expr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

AlgebraElement to_element(const Expr& e, std::optional<GeneratorSet> algebra) {
  if (!algebra) {
    bool holo = false, heis = false;
    int modes = 0;
    collect_symbols(e, holo, heis, modes);
    if (int(holo) + int(heis) + int(modes > 0) > 1) {
      throw Error(ErrorCode::IncompatibleAlgebras, "expression mixes generators of different algebras");
    }
    if (heis) {
      algebra = GeneratorSet::heisenberg();
    } else if (modes > 0) {
      algebra = GeneratorSet::multimode(std::vector<int>(static_cast<std::size_t>(modes), 1));
    } else {
      algebra = GeneratorSet::holomorphic();
    }
  }
  return evaluate(e, *algebra);
}

AlgebraElement parse_element(std::string_view text, std::optional<GeneratorSet> algebra) {
  return to_element(parse_expr(text), std::move(algebra));
}

}  // namespace holokrein
