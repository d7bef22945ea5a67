#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace ld {

/// Immutable parsed scalar expression in the single variable `s`.
///
/// Grammar (whitespace ignored):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' unary)?
///     primary := number | 's' | 'pi' | func '(' expr ')' | '(' expr ')'
///     func    := sin | cos | tan | exp | log | sqrt | abs
///
/// `^` binds tighter than unary minus and is right-associative, so
/// `-2^2 == -4` and `2^3^2 == 512`. Copies share the same tree.
class Expression {
 public:
  struct Node;

  static Expression parse(std::string_view text);

  /// Throws DomainError when any intermediate value is non-finite.
  double operator()(double s) const;

  /// Fully parenthesized text that re-parses to an identical tree;
  /// literals are printed in shortest round-trip form.
  std::string to_string() const;

  /// True when the expression does not reference `s`.
  bool is_constant() const;

 private:
  explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  std::shared_ptr<const Node> root_;
};

Expression parse_expression(std::string_view text);
double eval_expression(const Expression& expr, double s);

}  // namespace ld
