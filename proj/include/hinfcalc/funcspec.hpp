#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hinfcalc/errors.hpp"
#include "hinfcalc/types.hpp"

namespace hinfcalc::funcspec {

/// Margin keeping certified poles away from the imaginary axis, so that
/// boundary samples g(i*omega) stay finite.
constexpr double kPoleMargin = 1e-6;

struct AstNode;
using NodePtr = std::shared_ptr<const AstNode>;

struct AstNode {
  enum class Kind { kConstant, kVariable, kAdd, kSub, kMul, kDiv, kExpScale, kBlaschke };

  Kind kind;
  // kConstant: the value; kExpScale: the coefficient c in e^{c*s};
  // kBlaschke: the parameter a in (s - a)/(s + conj(a)).
  Complex value{};
  NodePtr lhs;
  NodePtr rhs;
  std::size_t offset = 0;  // byte offset in the source text
};

/// Immutable expression over the variable s: a closed-form candidate member
/// of the algebra of bounded analytic functions on the left half-plane.
class FuncExpr {
 public:
  FuncExpr(NodePtr ast, std::string source_text)
      : ast_(std::move(ast)), source_text_(std::move(source_text)) {}

  const NodePtr& ast() const { return ast_; }
  const std::string& source_text() const { return source_text_; }

 private:
  NodePtr ast_;
  std::string source_text_;
};

struct PoleInfo {
  Complex location;
  bool removable;      // numerator vanishes there
  std::string factor;  // source form of the denominator that produced it
};

struct CertificationReport {
  bool passed = false;
  std::vector<PoleInfo> poles;
  std::string violation;  // empty when passed
};

struct SupNormEstimate {
  double value = 0.0;
  long grid_points = 0;
  bool is_lower_bound = true;  // grid max never exceeds the true sup
};

struct FreqGridSpec {
  double omega_min = 1e-6;
  double omega_max = 1e6;
  int points_per_side = 4096;  // log-spaced, mirrored, plus omega = 0
};

/// Syntax-only parse. Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := number | 's' | '(' expr ')'
///           | 'exp' '(' number '*' 's' ')'
///           | 'blaschke' '(' number (',' number)? ')'
/// with complex numbers written as `a` or `a+bi`. Throws SyntaxError.
FuncExpr parse_unchecked(std::string_view text);

/// Parse and certify; throws SyntaxError or CertificationError.
FuncExpr parse(std::string_view text);

/// Lists every denominator zero with its location; passes iff all
/// non-removable poles satisfy Re > kPoleMargin, every exponential
/// coefficient is real and >= 0, and every Blaschke parameter satisfies
/// Re a < -kPoleMargin. Never throws on a violation; returns a failure
/// report naming the offending factor.
CertificationReport certify_hinf(const FuncExpr& g);

/// Exact AST recursion in complex arithmetic. Removable singularities are
/// evaluated by one l'Hopital step; a genuine pole within ~1e-12 raises
/// EvaluationError.
Complex evaluate(const FuncExpr& g, Complex s);

/// Grid maximum of |g(i*omega)|; a certified lower bound of the true sup.
SupNormEstimate sup_norm(const FuncExpr& g, const FreqGridSpec& grid = {});

/// Canonical fully-parenthesized source form; parse(to_string(g)) is
/// structurally identical to g for any expression built from parse,
/// product, or blaschke_product.
std::string to_string(const FuncExpr& g);

/// Structural AST equality (kinds and payload values).
bool structurally_equal(const FuncExpr& a, const FuncExpr& b);

/// AST-level product f*g.
FuncExpr product(const FuncExpr& f, const FuncExpr& g);

/// Finite Blaschke product from half-plane parameters (Re a < -margin);
/// the empty product is the constant 1.
FuncExpr blaschke_product(const std::vector<Complex>& params);

}  // namespace hinfcalc::funcspec
