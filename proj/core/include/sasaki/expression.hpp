#pragma once

// Arithmetic expressions in the variables u and v: the carrier for
// user-supplied generating functions and curvature targets.  Grammar has the
// usual precedence (^ right-associative, binding above unary minus, then
// * /, then + -), parentheses, and the function set sqrt exp ln sin cos tan
// atan sinh cosh tanh atanh abs.  Evaluation produces jets; domain
// violations carry the source offset of the offending node.

#include <memory>
#include <string>
#include <string_view>

#include "sasaki/field.hpp"

namespace sasaki {

class FieldExpression {
public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  // Throws ParseError (with byte offset) on malformed input or unknown
  // identifiers.  Variable-free subexpressions are folded to constants when
  // they evaluate cleanly.
  static FieldExpression parse(std::string_view text);

  // Canonical form: minimal parentheses, shortest round-trip numbers.
  // parse(print(e)) reproduces e node-for-node.
  std::string print() const;

  Jet2d eval(double u, double v, int order) const;

  ScalarJetField field() const;

  bool operator==(const FieldExpression& other) const;

  const NodePtr& root() const { return root_; }

private:
  explicit FieldExpression(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

// Convenience wrapper returning the evaluable field directly.
ScalarJetField parse_field_expression(const std::string& text);

}  // namespace sasaki
