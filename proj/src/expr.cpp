#include "liedarboux/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <system_error>
#include <variant>

#include "liedarboux/errors.hpp"

namespace ld {

namespace {

enum class Func { Sin, Cos, Tan, Exp, Log, Sqrt, Abs };

constexpr std::array<std::pair<std::string_view, Func>, 7> kFunctions{{
    {"sin", Func::Sin},
    {"cos", Func::Cos},
    {"tan", Func::Tan},
    {"exp", Func::Exp},
    {"log", Func::Log},
    {"sqrt", Func::Sqrt},
    {"abs", Func::Abs},
}};

std::string_view func_name(Func f) {
  for (const auto& [name, id] : kFunctions) {
    if (id == f) return name;
  }
  return "?";
}

std::string format_literal(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

}  // namespace

struct Expression::Node {
  struct Literal {
    double value;
  };
  struct Variable {};
  struct Pi {};
  struct Negate {
    std::shared_ptr<const Node> operand;
  };
  struct Binary {
    char op;
    std::shared_ptr<const Node> lhs, rhs;
  };
  struct Call {
    Func func;
    std::shared_ptr<const Node> arg;
  };

  std::variant<Literal, Variable, Pi, Negate, Binary, Call> data;

  std::string print() const {
    return std::visit(
        [](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Literal>) {
            return format_literal(n.value);
          } else if constexpr (std::is_same_v<T, Variable>) {
            return "s";
          } else if constexpr (std::is_same_v<T, Pi>) {
            return "pi";
          } else if constexpr (std::is_same_v<T, Negate>) {
            return "(-" + n.operand->print() + ")";
          } else if constexpr (std::is_same_v<T, Binary>) {
            return "(" + n.lhs->print() + " " + n.op + " " + n.rhs->print() + ")";
          } else {
            return std::string(func_name(n.func)) + "(" + n.arg->print() + ")";
          }
        },
        data);
  }

  bool uses_variable() const {
    return std::visit(
        [](const auto& n) -> bool {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Variable>) {
            return true;
          } else if constexpr (std::is_same_v<T, Negate>) {
            return n.operand->uses_variable();
          } else if constexpr (std::is_same_v<T, Binary>) {
            return n.lhs->uses_variable() || n.rhs->uses_variable();
          } else if constexpr (std::is_same_v<T, Call>) {
            return n.arg->uses_variable();
          } else {
            return false;
          }
        },
        data);
  }

  double eval(double s) const {
    const double v = std::visit(
        [this, s](const auto& n) -> double {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Literal>) {
            return n.value;
          } else if constexpr (std::is_same_v<T, Variable>) {
            return s;
          } else if constexpr (std::is_same_v<T, Pi>) {
            return std::numbers::pi;
          } else if constexpr (std::is_same_v<T, Negate>) {
            return -n.operand->eval(s);
          } else if constexpr (std::is_same_v<T, Binary>) {
            const double l = n.lhs->eval(s);
            const double r = n.rhs->eval(s);
            switch (n.op) {
              case '+': return l + r;
              case '-': return l - r;
              case '*': return l * r;
              case '/':
                if (r == 0.0) throw DomainError(print(), "division by zero");
                return l / r;
              default: return std::pow(l, r);
            }
          } else {
            const double x = n.arg->eval(s);
            switch (n.func) {
              case Func::Sin: return std::sin(x);
              case Func::Cos: return std::cos(x);
              case Func::Tan: return std::tan(x);
              case Func::Exp: return std::exp(x);
              case Func::Log:
                if (x <= 0.0) throw DomainError(print(), "log of non-positive value");
                return std::log(x);
              case Func::Sqrt:
                if (x < 0.0) throw DomainError(print(), "sqrt of negative value");
                return std::sqrt(x);
              case Func::Abs: return std::abs(x);
            }
            return x;
          }
        },
        data);
    if (!std::isfinite(v)) throw DomainError(print(), "non-finite value");
    return v;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

template <class T>
NodePtr make(T&& payload) {
  return std::make_shared<const Expression::Node>(Expression::Node{std::forward<T>(payload)});
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty expression");
    NodePtr root = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    }
    return root;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) {
        throw ParseError(pos_, std::string("expected '") + c + "' before end of input");
      }
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        const char op = text_[pos_++];
        lhs = make(Expression::Node::Binary{op, lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '/')) {
        const char op = text_[pos_++];
        lhs = make(Expression::Node::Binary{op, lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Expression::Node::Negate{unary()});
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Expression::Node::Binary{'^', base, unary()});
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    if (is_digit(c) || c == '.') return number();
    if (is_letter(c)) return identifier();
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (is_digit(text_[pos_]) || text_[pos_] == '.')) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && is_digit(text_[p])) {
        while (p < text_.size() && is_digit(text_[p])) ++p;
        pos_ = p;
      }
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw ParseError(start, "malformed number");
    if (pos_ < text_.size() && is_letter(text_[pos_])) {
      throw ParseError(pos_, "identifier directly after number");
    }
    return make(Expression::Node::Literal{value});
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_letter(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "s") return make(Expression::Node::Variable{});
    if (name == "pi") return make(Expression::Node::Pi{});
    for (const auto& [fname, id] : kFunctions) {
      if (fname == name) {
        expect('(');
        NodePtr arg = expr();
        expect(')');
        return make(Expression::Node::Call{id, arg});
      }
    }
    throw UnknownIdentifier(start, std::string(name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text) { return Expression(Parser(text).parse()); }

double Expression::operator()(double s) const { return root_->eval(s); }

std::string Expression::to_string() const { return root_->print(); }

bool Expression::is_constant() const { return !root_->uses_variable(); }

Expression parse_expression(std::string_view text) { return Expression::parse(text); }

double eval_expression(const Expression& expr, double s) { return expr(s); }

}  // namespace ld
