#include "polycenter/dsl.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "polycenter/corpus.hpp"

namespace polycenter::dsl {

bool operator==(const Expr& a, const Expr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node());
        if constexpr (std::is_same_v<T, Expr::Number>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Expr::Distance>) {
          return x.i == y.i && x.j == y.j;
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
        } else if constexpr (std::is_same_v<T, Expr::Pow>) {
          return x.exponent == y.exponent && *x.base == *y.base;
        } else {
          return *x.operand == *y.operand;
        }
      },
      a.node());
}

namespace {

ExprPtr make(Expr::Node node) { return std::make_shared<const Expr>(std::move(node)); }

class Parser {
 public:
  Parser(std::string_view src, std::size_t n) : src_(src), n_(n) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Expr::Binary{'+', lhs, term()});
      } else if (accept('-')) {
        lhs = make(Expr::Binary{'-', lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = make(Expr::Binary{'*', lhs, factor()});
      } else if (accept('/')) {
        lhs = make(Expr::Binary{'/', lhs, factor()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '-') {
      ++pos_;
      return make(Expr::Negate{factor()});
    }
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string_view word = src_.substr(start, pos_ - start);
      if (word == "d") {
        expect('(');
        const std::size_t at_i = (skip_ws(), pos_);
        const int i = integer();
        expect(',');
        const std::size_t at_j = (skip_ws(), pos_);
        const int j = integer();
        expect(')');
        check_index(i, at_i);
        check_index(j, at_j);
        return make(Expr::Distance{i, j});
      }
      if (word == "sqrt") {
        expect('(');
        ExprPtr e = expr();
        expect(')');
        return make(Expr::Sqrt{e});
      }
      if (word == "pow") {
        expect('(');
        ExprPtr e = expr();
        expect(',');
        const int k = integer();
        expect(')');
        return make(Expr::Pow{e, k});
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(word) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    const auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        digits();
      } else {
        pos_ = save;
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    if (text == ".") {
      pos_ = start;
      fail("malformed number");
    }
    return make(Expr::Number{std::strtod(text.c_str(), nullptr)});
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
    const std::size_t first_digit = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == first_digit || pos_ - first_digit > 9) {
      pos_ = start;
      fail("expected an integer");
    }
    return std::atoi(std::string(src_.substr(start, pos_ - start)).c_str());
  }

  void check_index(int i, std::size_t at) const {
    if (i < 1 || static_cast<std::size_t>(i) > n_) {
      throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " at position " +
                                                  std::to_string(at) + " is outside [1, " +
                                                  std::to_string(n_) + "]");
    }
  }

  std::string_view src_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

struct Value {
  double value;
  double magnitude;  // same expression with every term taken in absolute value
};

Value eval(const Expr& e, const DistanceMatrix& m) {
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Expr::Number>) {
          return {x.value, std::abs(x.value)};
        } else if constexpr (std::is_same_v<T, Expr::Distance>) {
          const std::size_t i = static_cast<std::size_t>(x.i - 1);
          const std::size_t j = static_cast<std::size_t>(x.j - 1);
          if (i >= m.size() || j >= m.size()) {
            throw Error(ErrorKind::IndexOutOfRange, "distance index outside the matrix");
          }
          return {m(i, j), m(i, j)};
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          const Value v = eval(*x.operand, m);
          return {-v.value, v.magnitude};
        } else if constexpr (std::is_same_v<T, Expr::Sqrt>) {
          const Value v = eval(*x.operand, m);
          if (v.value >= 0.0) return {std::sqrt(v.value), std::sqrt(v.magnitude)};
          if (v.value >= -tolerance_factor() * v.magnitude) return {0.0, std::sqrt(v.magnitude)};
          throw Error(ErrorKind::NegativeSqrt, "square root of a negative value");
        } else if constexpr (std::is_same_v<T, Expr::Pow>) {
          const Value v = eval(*x.base, m);
          if (x.exponent < 0 && std::abs(v.value) <= tolerance_factor() * v.magnitude) {
            throw Error(ErrorKind::DivisionByZero, "negative power of zero");
          }
          return {std::pow(v.value, x.exponent), std::pow(v.magnitude, x.exponent)};
        } else {
          const Value a = eval(*x.lhs, m);
          const Value b = eval(*x.rhs, m);
          switch (x.op) {
            case '+':
              return {a.value + b.value, a.magnitude + b.magnitude};
            case '-':
              return {a.value - b.value, a.magnitude + b.magnitude};
            case '*':
              return {a.value * b.value, a.magnitude * b.magnitude};
            default:
              if (std::abs(b.value) <= tolerance_factor() * b.magnitude) {
                throw Error(ErrorKind::DivisionByZero, "division by zero");
              }
              return {a.value / b.value, a.magnitude / std::abs(b.value)};
          }
        }
      },
      e.node());
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ExprPtr parse(std::string_view source, std::size_t n) { return Parser(source, n).parse(); }

std::string print(const Expr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Expr::Number>) {
          return format_number(x.value);
        } else if constexpr (std::is_same_v<T, Expr::Distance>) {
          return "d(" + std::to_string(x.i) + "," + std::to_string(x.j) + ")";
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          return "-(" + print(*x.operand) + ")";
        } else if constexpr (std::is_same_v<T, Expr::Sqrt>) {
          return "sqrt(" + print(*x.operand) + ")";
        } else if constexpr (std::is_same_v<T, Expr::Pow>) {
          return "pow(" + print(*x.base) + "," + std::to_string(x.exponent) + ")";
        } else {
          return "(" + print(*x.lhs) + " " + x.op + " " + print(*x.rhs) + ")";
        }
      },
      e.node());
}

double evaluate(const Expr& e, const DistanceMatrix& m) { return eval(e, m).value; }

ExprPtr permute_indices(const ExprPtr& e, std::span<const std::size_t> perm) {
  return std::visit(
      [&](const auto& x) -> ExprPtr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Expr::Number>) {
          return e;
        } else if constexpr (std::is_same_v<T, Expr::Distance>) {
          const auto i = static_cast<std::size_t>(x.i - 1), j = static_cast<std::size_t>(x.j - 1);
          if (i >= perm.size() || j >= perm.size()) {
            throw Error(ErrorKind::IndexOutOfRange, "permutation is shorter than the indices");
          }
          return make(Expr::Distance{static_cast<int>(perm[i]) + 1, static_cast<int>(perm[j]) + 1});
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          return make(Expr::Binary{x.op, permute_indices(x.lhs, perm), permute_indices(x.rhs, perm)});
        } else if constexpr (std::is_same_v<T, Expr::Pow>) {
          return make(Expr::Pow{permute_indices(x.base, perm), x.exponent});
        } else {
          return make(T{permute_indices(x.operand, perm)});
        }
      },
      e->node());
}

SymmetryViolation::SymmetryViolation(Polygon witness, double lhs, double rhs)
    : Error(ErrorKind::SymmetryViolation,
            "g(d) = " + format_number(lhs) + " but g(sigma d) = " + format_number(rhs)),
      witness_(std::move(witness)),
      lhs_(lhs),
      rhs_(rhs) {}

DslCenterFunction compile(const ExprPtr& e, std::size_t n, CenterFunction::Domain domain,
                          std::string name) {
  DslCenterFunction out;
  out.n = n;
  out.expr = e;
  CenterFunction::Domain full_domain = [n, domain](const Polygon& p) {
    return p.size() == n && classify(p).flatness != Flatness::AllCoincident && (!domain || domain(p));
  };
  out.function = CenterFunction{std::move(name),
                                [e](const DistanceMatrix& m) { return evaluate(*e, m); },
                                std::nullopt, full_domain};

  std::vector<Polygon> samples;
  for (Polygon& p : corpus::verification_corpus(n)) {
    if (full_domain(p)) samples.push_back(std::move(p));
  }

  const auto sigma = DihedralElement::sigma(n).permutation();
  for (const Polygon& p : samples) {
    const DistanceMatrix d = distance_matrix(p);
    const double a = evaluate(*e, d);
    const double b = evaluate(*e, d.permuted(sigma));
    if (!values_close(a, b)) throw SymmetryViolation(p, a, b);
  }
  out.verified_symmetry = true;

  // Degree from samples where g is not dominated by cancellation.
  std::vector<Polygon> degree_samples;
  for (const Polygon& p : samples) {
    if (classify(p).flatness != Flatness::NonFlat) continue;
    const Value v = eval(*e, distance_matrix(p));
    if (std::abs(v.value) > 1e-6 * v.magnitude) degree_samples.push_back(p);
  }
  if (degree_samples.empty()) {
    throw Error(ErrorKind::ZeroValue, "expression vanishes on every corpus polygon");
  }
  try {
    out.estimated_degree = verify_homogeneity(out.function, degree_samples);
  } catch (const Error& err) {
    throw Error(ErrorKind::DegreeInconsistent, err.what());
  }
  out.function.degree = out.estimated_degree;
  return out;
}

}  // namespace polycenter::dsl
