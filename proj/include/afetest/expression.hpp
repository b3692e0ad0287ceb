#pragma once

#include <Eigen/Dense>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "afetest/errors.hpp"

namespace afetest {

// Transformations applicable to features. ExpClamped computes exp(min(5, v))
// so that evaluation stays finite on any input column.
enum class TransformOp { Sin, ExpClamped, SqrtAbs, Mul };

constexpr double kExpClamp = 5.0;

inline int arity(TransformOp op) { return op == TransformOp::Mul ? 2 : 1; }

inline const char* op_name(TransformOp op) {
  switch (op) {
    case TransformOp::Sin: return "sin";
    case TransformOp::ExpClamped: return "expc";
    case TransformOp::SqrtAbs: return "sqrtabs";
    case TransformOp::Mul: return "mul";
  }
  return "?";
}

inline TransformOp op_from_name(const std::string& name) {
  if (name == "sin") return TransformOp::Sin;
  if (name == "expc") return TransformOp::ExpClamped;
  if (name == "sqrtabs") return TransformOp::SqrtAbs;
  if (name == "mul") return TransformOp::Mul;
  throw std::invalid_argument("unknown transformation: " + name);
}

class FeatureExpression;
using ExprPtr = std::shared_ptr<const FeatureExpression>;

// Immutable expression tree over original columns. Identity of a generated
// feature is its canonical key: the serialized form `xI`, `sin(E)`, `expc(E)`,
// `sqrtabs(E)`, `mul(E,E)` with mul children ordered by key, so mul(a,b) and
// mul(b,a) share one key. Column references are 1-based in the text form.
class FeatureExpression {
 public:
  static ExprPtr column_ref(int column) {
    auto e = std::make_shared<FeatureExpression>();
    e->column_ = column;
    e->key_ = "x" + std::to_string(column + 1);
    return e;
  }

  static ExprPtr unary(TransformOp op, ExprPtr child) {
    auto e = std::make_shared<FeatureExpression>();
    e->op_ = op;
    e->left_ = std::move(child);
    e->key_ = std::string(op_name(op)) + "(" + e->left_->key() + ")";
    return e;
  }

  static ExprPtr mul(ExprPtr a, ExprPtr b) {
    if (b->key() < a->key()) std::swap(a, b);
    auto e = std::make_shared<FeatureExpression>();
    e->op_ = TransformOp::Mul;
    e->left_ = std::move(a);
    e->right_ = std::move(b);
    e->key_ = "mul(" + e->left_->key() + "," + e->right_->key() + ")";
    return e;
  }

  static ExprPtr apply(TransformOp op, ExprPtr a, ExprPtr b = nullptr) {
    if (arity(op) == 1) return unary(op, std::move(a));
    return mul(std::move(a), std::move(b));
  }

  bool is_column() const { return column_ >= 0; }
  int column() const { return column_; }
  TransformOp op() const { return op_; }
  const ExprPtr& left() const { return left_; }
  const ExprPtr& right() const { return right_; }
  const std::string& key() const { return key_; }

 private:
  int column_ = -1;
  TransformOp op_ = TransformOp::Sin;
  ExprPtr left_, right_;
  std::string key_;
};

inline const std::string& canonical_key(const FeatureExpression& expr) { return expr.key(); }
inline const std::string& canonical_key(const ExprPtr& expr) { return expr->key(); }

// Elementwise evaluation on the rows of X. Finite for any finite X: the exp
// argument is clamped at 5 and the square root is taken of |v|.
inline Eigen::VectorXd evaluate_expression(const FeatureExpression& expr,
                                           const Eigen::MatrixXd& X) {
  if (expr.is_column()) {
    if (expr.column() >= X.cols())
      throw IndexOutOfRange("expression references column " + std::to_string(expr.column() + 1) +
                            " of a " + std::to_string(X.cols()) + "-column matrix");
    return X.col(expr.column());
  }
  switch (expr.op()) {
    case TransformOp::Sin:
      return evaluate_expression(*expr.left(), X).array().sin();
    case TransformOp::ExpClamped:
      return evaluate_expression(*expr.left(), X).array().min(kExpClamp).exp();
    case TransformOp::SqrtAbs:
      return evaluate_expression(*expr.left(), X).array().abs().sqrt();
    case TransformOp::Mul:
      return evaluate_expression(*expr.left(), X).array() *
             evaluate_expression(*expr.right(), X).array();
  }
  throw std::logic_error("unreachable");
}

inline Eigen::VectorXd evaluate_expression(const ExprPtr& expr, const Eigen::MatrixXd& X) {
  return evaluate_expression(*expr, X);
}

inline std::vector<TransformOp> parse_op_list(const std::string& csv) {
  std::vector<TransformOp> ops;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) ops.push_back(op_from_name(tok));
  }
  if (ops.empty()) throw std::invalid_argument("empty transformation list");
  return ops;
}

}  // namespace afetest
