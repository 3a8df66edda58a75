#include "hinfcalc/funcspec.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>

#include <Eigen/Eigenvalues>

namespace hinfcalc::funcspec {

namespace {

using Kind = AstNode::Kind;

NodePtr make_node(Kind kind, Complex value, NodePtr lhs, NodePtr rhs, std::size_t offset) {
  auto node = std::make_shared<AstNode>();
  node->kind = kind;
  node->value = value;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  node->offset = offset;
  return node;
}

NodePtr constant(Complex c, std::size_t offset = 0) {
  return make_node(Kind::kConstant, c, nullptr, nullptr, offset);
}

// ----------------------------------------------------------------------
// Parser
// ----------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr run() {
    NodePtr root = parse_expr();
    skip_spaces();
    if (pos_ != text_.size()) {
      throw SyntaxError("unexpected trailing input", pos_);
    }
    return root;
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eof() {
    skip_spaces();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_spaces();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) {
      throw SyntaxError(std::string("expected '") + c + "' " + what, pos_);
    }
  }

  bool starts_number() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  // Unsigned real literal via strtod; 'i' suffix makes it imaginary.
  Complex parse_number_atom() {
    skip_spaces();
    const std::size_t start = pos_;
    const char* begin = text_.data() + pos_;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) {
      throw SyntaxError("expected a number", start);
    }
    pos_ += static_cast<std::size_t>(end - begin);
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return Complex(0.0, value);
    }
    return Complex(value, 0.0);
  }

  // Signed complex literal for argument positions: a, a+bi, a-bi, bi.
  Complex parse_complex_literal() {
    skip_spaces();
    const std::size_t start = pos_;
    double sign = 1.0;
    if (consume('-')) {
      sign = -1.0;
    } else {
      consume('+');
    }
    Complex first = parse_number_atom();
    first *= sign;
    if (first.real() != 0.0 || first.imag() == 0.0) {
      // Saw a real part; an immediately following signed imaginary part
      // belongs to the same literal.
      skip_spaces();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        const std::size_t mark = pos_;
        const double s2 = text_[pos_] == '-' ? -1.0 : 1.0;
        ++pos_;
        if (starts_number()) {
          Complex second = parse_number_atom();
          if (second.real() != 0.0) {
            throw SyntaxError("expected imaginary part after sign in complex literal", mark);
          }
          return first + s2 * second;
        }
        pos_ = mark;
      }
    }
    return first;
  }

  bool consume_keyword(std::string_view word) {
    skip_spaces();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      const std::size_t at = pos_;
      if (consume('+')) {
        lhs = make_node(Kind::kAdd, {}, std::move(lhs), parse_term(), at);
      } else if (consume('-')) {
        lhs = make_node(Kind::kSub, {}, std::move(lhs), parse_term(), at);
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      const std::size_t at = pos_;
      if (consume('*')) {
        lhs = make_node(Kind::kMul, {}, std::move(lhs), parse_factor(), at);
      } else if (consume('/')) {
        lhs = make_node(Kind::kDiv, {}, std::move(lhs), parse_factor(), at);
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_factor() {
    skip_spaces();
    const std::size_t at = pos_;
    if (consume('(')) {
      NodePtr inner = parse_expr();
      expect(')', "to close group");
      return inner;
    }
    if (consume_keyword("exp")) {
      expect('(', "after exp");
      Complex coeff = parse_complex_literal();
      expect('*', "between exp coefficient and s");
      if (!consume('s')) {
        throw SyntaxError("expected 's' in exp(c*s)", pos_);
      }
      expect(')', "to close exp");
      return make_node(Kind::kExpScale, coeff, nullptr, nullptr, at);
    }
    if (consume_keyword("blaschke")) {
      expect('(', "after blaschke");
      Complex a = parse_complex_literal();
      if (consume(',')) {
        Complex im = parse_complex_literal();
        if (im.imag() != 0.0) {
          throw SyntaxError("second blaschke argument must be real", pos_);
        }
        a = Complex(a.real(), im.real());
      }
      expect(')', "to close blaschke");
      return make_node(Kind::kBlaschke, a, nullptr, nullptr, at);
    }
    if (peek() == 's') {
      ++pos_;
      return make_node(Kind::kVariable, {}, nullptr, nullptr, at);
    }
    if (starts_number()) {
      return constant(parse_number_atom(), at);
    }
    throw SyntaxError("expected number, 's', '(', 'exp' or 'blaschke'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ----------------------------------------------------------------------
// Evaluation
// ----------------------------------------------------------------------

NodePtr derivative(const NodePtr& node);

Complex eval_node(const NodePtr& node, Complex s);

// One l'Hopital step for 0/0 at s; anything else nearby is a genuine pole.
Complex eval_division(const NodePtr& node, Complex s) {
  const Complex num = eval_node(node->lhs, s);
  const Complex den = eval_node(node->rhs, s);
  if (std::abs(den) > 1e-9) {
    return num / den;
  }
  const Complex den_slope = eval_node(derivative(node->rhs), s);
  if (std::abs(den) > 1e-12 * (1.0 + std::abs(den_slope))) {
    return num / den;
  }
  if (std::abs(num) <= 1e-9 * (1.0 + std::abs(eval_node(derivative(node->lhs), s)))) {
    if (std::abs(den_slope) < 1e-300) {
      throw EvaluationError("higher-order singularity at s near pole");
    }
    return eval_node(derivative(node->lhs), s) / den_slope;
  }
  throw EvaluationError("evaluation point within ~1e-12 of a pole");
}

Complex eval_node(const NodePtr& node, Complex s) {
  switch (node->kind) {
    case Kind::kConstant:
      return node->value;
    case Kind::kVariable:
      return s;
    case Kind::kAdd:
      return eval_node(node->lhs, s) + eval_node(node->rhs, s);
    case Kind::kSub:
      return eval_node(node->lhs, s) - eval_node(node->rhs, s);
    case Kind::kMul:
      return eval_node(node->lhs, s) * eval_node(node->rhs, s);
    case Kind::kDiv:
      return eval_division(node, s);
    case Kind::kExpScale:
      return std::exp(node->value * s);
    case Kind::kBlaschke:
      return (s - node->value) / (s + std::conj(node->value));
  }
  throw Error("corrupt AST node");
}

NodePtr variable() { return make_node(Kind::kVariable, {}, nullptr, nullptr, 0); }

NodePtr derivative(const NodePtr& node) {
  switch (node->kind) {
    case Kind::kConstant:
      return constant(0.0);
    case Kind::kVariable:
      return constant(1.0);
    case Kind::kAdd:
    case Kind::kSub:
      return make_node(node->kind, {}, derivative(node->lhs), derivative(node->rhs), 0);
    case Kind::kMul:
      return make_node(Kind::kAdd, {},
                       make_node(Kind::kMul, {}, derivative(node->lhs), node->rhs, 0),
                       make_node(Kind::kMul, {}, node->lhs, derivative(node->rhs), 0), 0);
    case Kind::kDiv: {
      NodePtr num = make_node(Kind::kSub, {},
                              make_node(Kind::kMul, {}, derivative(node->lhs), node->rhs, 0),
                              make_node(Kind::kMul, {}, node->lhs, derivative(node->rhs), 0), 0);
      NodePtr den2 = make_node(Kind::kMul, {}, node->rhs, node->rhs, 0);
      return make_node(Kind::kDiv, {}, std::move(num), std::move(den2), 0);
    }
    case Kind::kExpScale:
      return make_node(Kind::kMul, {}, constant(node->value),
                       make_node(Kind::kExpScale, node->value, nullptr, nullptr, 0), 0);
    case Kind::kBlaschke: {
      // d/ds (s-a)/(s+conj a) = (a + conj a) / (s + conj a)^2
      NodePtr shift = make_node(Kind::kAdd, {}, variable(), constant(std::conj(node->value)), 0);
      NodePtr den2 = make_node(Kind::kMul, {}, shift, shift, 0);
      return make_node(Kind::kDiv, {}, constant(2.0 * node->value.real()), std::move(den2), 0);
    }
  }
  throw Error("corrupt AST node");
}

// ----------------------------------------------------------------------
// Certification
// ----------------------------------------------------------------------

// Polynomial coefficients (low to high) of subtrees built from constants,
// s, +, -, *; empty optional for anything else.
bool as_polynomial(const NodePtr& node, std::vector<Complex>& out) {
  switch (node->kind) {
    case Kind::kConstant:
      out = {node->value};
      return true;
    case Kind::kVariable:
      out = {Complex(0.0), Complex(1.0)};
      return true;
    case Kind::kAdd:
    case Kind::kSub: {
      std::vector<Complex> lhs, rhs;
      if (!as_polynomial(node->lhs, lhs) || !as_polynomial(node->rhs, rhs)) return false;
      if (rhs.size() > lhs.size()) lhs.resize(rhs.size(), 0.0);
      const double sign = node->kind == Kind::kAdd ? 1.0 : -1.0;
      for (std::size_t i = 0; i < rhs.size(); ++i) lhs[i] += sign * rhs[i];
      out = std::move(lhs);
      return true;
    }
    case Kind::kMul: {
      std::vector<Complex> lhs, rhs;
      if (!as_polynomial(node->lhs, lhs) || !as_polynomial(node->rhs, rhs)) return false;
      if (lhs.size() + rhs.size() > 66) return false;  // degree cap
      std::vector<Complex> prod(lhs.size() + rhs.size() - 1, 0.0);
      for (std::size_t i = 0; i < lhs.size(); ++i)
        for (std::size_t j = 0; j < rhs.size(); ++j) prod[i + j] += lhs[i] * rhs[j];
      out = std::move(prod);
      return true;
    }
    default:
      return false;
  }
}

std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs) {
  double scale = 0.0;
  for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-14 * scale) coeffs.pop_back();
  if (coeffs.size() <= 1) return {};
  const std::size_t deg = coeffs.size() - 1;
  Matrix companion = Matrix::Zero(deg, deg);
  for (std::size_t i = 0; i + 1 < deg; ++i) companion(i + 1, i) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::ComplexEigenSolver<Matrix> solver(companion, false);
  std::vector<Complex> roots(deg);
  for (std::size_t i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()(i);
  return roots;
}

std::string print_node(const NodePtr& node);

void certify_node(const NodePtr& node, CertificationReport& report) {
  if (!node) return;
  switch (node->kind) {
    case Kind::kExpScale:
      if (node->value.imag() != 0.0 || node->value.real() < 0.0) {
        if (report.violation.empty()) {
          report.violation =
              "exponential coefficient must be real and >= 0 in " + print_node(node);
        }
      }
      break;
    case Kind::kBlaschke:
      if (!(node->value.real() < -kPoleMargin)) {
        if (report.violation.empty()) {
          report.violation =
              "Blaschke parameter must satisfy Re a < -" + std::to_string(kPoleMargin) +
              " in " + print_node(node);
        }
      }
      break;
    case Kind::kDiv: {
      std::vector<Complex> den;
      if (!as_polynomial(node->rhs, den)) {
        if (report.violation.empty()) {
          report.violation = "denominator is not a polynomial in s: " + print_node(node->rhs);
        }
        break;
      }
      double scale = 0.0;
      for (const Complex& c : den) scale = std::max(scale, std::abs(c));
      if (scale == 0.0) {
        if (report.violation.empty()) {
          report.violation = "division by the zero function: " + print_node(node);
        }
        break;
      }
      for (const Complex& root : polynomial_roots(den)) {
        PoleInfo info{root, false, print_node(node->rhs)};
        if (root.real() <= kPoleMargin) {
          // Left half-plane (or boundary) zero: only acceptable when the
          // numerator vanishes there too.
          Complex num_at_root;
          bool evaluable = true;
          try {
            num_at_root = eval_node(node->lhs, root);
          } catch (const EvaluationError&) {
            evaluable = false;
          }
          const double num_scale = [&] {
            try {
              return 1.0 + std::abs(eval_node(node->lhs, root + Complex(1.0, 0.0)));
            } catch (const EvaluationError&) {
              return 1.0;
            }
          }();
          if (evaluable && std::abs(num_at_root) <= 1e-9 * num_scale) {
            info.removable = true;
          } else if (report.violation.empty()) {
            char buffer[128];
            std::snprintf(buffer, sizeof(buffer), "pole at s = %.6g%+.6gi in ", root.real(),
                          root.imag());
            report.violation = std::string(buffer) + print_node(node);
          }
        }
        report.poles.push_back(std::move(info));
      }
      break;
    }
    default:
      break;
  }
  certify_node(node->lhs, report);
  certify_node(node->rhs, report);
}

// ----------------------------------------------------------------------
// Printing
// ----------------------------------------------------------------------

std::string format_double(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

std::string format_complex_literal(Complex c) {
  if (c.imag() == 0.0) return format_double(c.real());
  if (c.real() == 0.0) return format_double(c.imag()) + "i";
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer), "%.17g%+.17gi", c.real(), c.imag());
  return buffer;
}

std::string print_node(const NodePtr& node) {
  switch (node->kind) {
    case Kind::kConstant: {
      const Complex c = node->value;
      if (c.imag() == 0.0 && c.real() >= 0.0) return format_double(c.real());
      if (c.real() == 0.0 && c.imag() > 0.0) return format_double(c.imag()) + "i";
      // Not representable as an unsigned literal; normalize through a
      // subtraction so the printed form stays inside the grammar.
      if (c.imag() == 0.0) return "(0-" + format_double(-c.real()) + ")";
      if (c.real() == 0.0) return "(0-" + format_double(-c.imag()) + "i)";
      return "(" + format_complex_literal(c) + ")";
    }
    case Kind::kVariable:
      return "s";
    case Kind::kAdd:
      return "(" + print_node(node->lhs) + "+" + print_node(node->rhs) + ")";
    case Kind::kSub:
      return "(" + print_node(node->lhs) + "-" + print_node(node->rhs) + ")";
    case Kind::kMul:
      return "(" + print_node(node->lhs) + "*" + print_node(node->rhs) + ")";
    case Kind::kDiv:
      return "(" + print_node(node->lhs) + "/" + print_node(node->rhs) + ")";
    case Kind::kExpScale:
      return "exp(" + format_double(node->value.real()) + "*s)";
    case Kind::kBlaschke:
      return "blaschke(" + format_complex_literal(node->value) + ")";
  }
  throw Error("corrupt AST node");
}

bool nodes_equal(const NodePtr& a, const NodePtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  if (a->value != b->value) return false;
  return nodes_equal(a->lhs, b->lhs) && nodes_equal(a->rhs, b->rhs);
}

}  // namespace

FuncExpr parse_unchecked(std::string_view text) {
  Parser parser(text);
  return FuncExpr(parser.run(), std::string(text));
}

FuncExpr parse(std::string_view text) {
  FuncExpr expr = parse_unchecked(text);
  CertificationReport report = certify_hinf(expr);
  if (!report.passed) {
    throw CertificationError(report.violation);
  }
  return expr;
}

CertificationReport certify_hinf(const FuncExpr& g) {
  CertificationReport report;
  certify_node(g.ast(), report);
  report.passed = report.violation.empty();
  return report;
}

Complex evaluate(const FuncExpr& g, Complex s) { return eval_node(g.ast(), s); }

SupNormEstimate sup_norm(const FuncExpr& g, const FreqGridSpec& grid) {
  if (!(grid.omega_min > 0.0) || !(grid.omega_max > grid.omega_min) || grid.points_per_side < 2) {
    throw InvalidInputError("sup_norm: bad frequency grid spec");
  }
  SupNormEstimate estimate;
  estimate.value = std::abs(evaluate(g, Complex(0.0, 0.0)));
  estimate.grid_points = 1;
  const double log_min = std::log(grid.omega_min);
  const double log_max = std::log(grid.omega_max);
  for (int i = 0; i < grid.points_per_side; ++i) {
    const double omega = std::exp(
        log_min + (log_max - log_min) * static_cast<double>(i) /
                      static_cast<double>(grid.points_per_side - 1));
    for (const double w : {omega, -omega}) {
      estimate.value = std::max(estimate.value, std::abs(evaluate(g, Complex(0.0, w))));
      ++estimate.grid_points;
    }
  }
  return estimate;
}

std::string to_string(const FuncExpr& g) { return print_node(g.ast()); }

bool structurally_equal(const FuncExpr& a, const FuncExpr& b) {
  return nodes_equal(a.ast(), b.ast());
}

FuncExpr product(const FuncExpr& f, const FuncExpr& g) {
  NodePtr node = make_node(Kind::kMul, {}, f.ast(), g.ast(), 0);
  std::string text = print_node(node);
  return FuncExpr(std::move(node), std::move(text));
}

FuncExpr blaschke_product(const std::vector<Complex>& params) {
  NodePtr node = constant(1.0);
  bool first = true;
  for (const Complex& a : params) {
    NodePtr factor = make_node(Kind::kBlaschke, a, nullptr, nullptr, 0);
    node = first ? std::move(factor) : make_node(Kind::kMul, {}, node, std::move(factor), 0);
    first = false;
  }
  std::string text = print_node(node);
  return FuncExpr(std::move(node), std::move(text));
}

}  // namespace hinfcalc::funcspec
