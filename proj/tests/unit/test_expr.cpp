#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "liedarboux/errors.hpp"
#include "liedarboux/expr.hpp"
#include "oracles.hpp"

using namespace ld;

TEST(Expression, EvaluatesLiteralsAndFunctions) {
  EXPECT_EQ(parse_expression("0.3 + 0.1*sin(s)")(0.0), 0.3);
  EXPECT_EQ(parse_expression("pi")(7.0), 3.141592653589793);
  EXPECT_EQ(parse_expression("s*s - 1")(2.0), 3.0);
  EXPECT_DOUBLE_EQ(parse_expression("sqrt(abs(-s)) + exp(0) + log(1) + cos(0) + tan(0)")(4.0), 4.0);
}

TEST(Expression, PowerIsRightAssociativeAndBindsTighterThanNegation) {
  EXPECT_EQ(parse_expression("2^3^2")(0.0), 512.0);
  EXPECT_EQ(parse_expression("-2^2")(0.0), -4.0);
  EXPECT_EQ(parse_expression("2^-1")(0.0), 0.5);
  EXPECT_EQ(parse_expression("(-2)^2")(0.0), 4.0);
}

TEST(Expression, StandardPrecedence) {
  EXPECT_EQ(parse_expression("1 + 2 * 3")(0.0), 7.0);
  EXPECT_EQ(parse_expression("8 / 2 / 2")(0.0), 2.0);
  EXPECT_EQ(parse_expression("8 - 2 - 2")(0.0), 4.0);
  EXPECT_EQ(parse_expression("-s * 2")(3.0), -6.0);
  EXPECT_EQ(parse_expression("  ( 1+2 ) *\t3 ")(0.0), 9.0);
  EXPECT_EQ(parse_expression("1.5e2 + .5 + 2E-1")(0.0), 150.7);
}

TEST(Expression, UnknownIdentifierNamesIt) {
  try {
    parse_expression("kappa + s");
    FAIL() << "expected UnknownIdentifier";
  } catch (const UnknownIdentifier& e) {
    EXPECT_EQ(e.name(), "kappa");
    EXPECT_EQ(e.offset(), 0u);
  }
  EXPECT_THROW(parse_expression("sinh(s)"), UnknownIdentifier);
  EXPECT_THROW(parse_expression("s_1"), ParseError);
}

TEST(Expression, SyntaxErrorsCarryOffsets) {
  try {
    parse_expression("1 + * 2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  try {
    parse_expression("(1 + 2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
  EXPECT_THROW(parse_expression(""), ParseError);
  EXPECT_THROW(parse_expression("   "), ParseError);
  EXPECT_THROW(parse_expression("2s"), ParseError);
  EXPECT_THROW(parse_expression("1 2"), ParseError);
  EXPECT_THROW(parse_expression("sin s"), ParseError);
  EXPECT_THROW(parse_expression("1..2"), ParseError);
}

TEST(Expression, DomainErrors) {
  EXPECT_THROW(parse_expression("1/s")(0.0), DomainError);
  EXPECT_THROW(parse_expression("log(s)")(0.0), DomainError);
  EXPECT_THROW(parse_expression("log(s)")(-1.0), DomainError);
  EXPECT_THROW(parse_expression("sqrt(s)")(-1.0), DomainError);
  EXPECT_THROW(parse_expression("(-s)^0.5")(2.0), DomainError);
  EXPECT_THROW(parse_expression("exp(s)")(1000.0), DomainError);
  try {
    parse_expression("1 + 1/(s - 2)")(2.0);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.node(), "(1 / (s - 2))");
  }
}

TEST(Expression, ConstantDetection) {
  EXPECT_TRUE(parse_expression("0.12 * pi").is_constant());
  EXPECT_FALSE(parse_expression("0.12 + 0*s").is_constant());
}

TEST(Expression, PrintedFormReparsesToSameTree) {
  const Expression e = parse_expression("-2^-s^2 + 3*sin(s)/4 - -s");
  const Expression back = parse_expression(e.to_string());
  EXPECT_EQ(back.to_string(), e.to_string());
  EXPECT_EQ(e(0.7), back(0.7));
}

namespace {

enum class Outcome { Value, Domain };

std::pair<Outcome, double> eval(const Expression& e, double s) {
  try {
    return {Outcome::Value, e(s)};
  } catch (const DomainError&) {
    return {Outcome::Domain, 0.0};
  }
}

}  // namespace

TEST(ExpressionProperty, RoundTripIsBitExactOverGeneratedGrammar) {
  std::mt19937_64 rng(20230506);
  std::uniform_real_distribution<double> sdist(-5.0, 5.0);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::string text = oracle::random_expression(rng, 5);
    const Expression first = parse_expression(text);
    const Expression second = parse_expression(first.to_string());
    for (int k = 0; k < 10; ++k) {
      const double s = sdist(rng);
      const auto a = eval(first, s);
      const auto b = eval(second, s);
      const bool same = a.first == b.first &&
                        (a.first == Outcome::Domain || std::bit_cast<std::uint64_t>(a.second) ==
                                                           std::bit_cast<std::uint64_t>(b.second));
      if (!same) {
        ++failures;
        ADD_FAILURE() << text << " at s=" << s;
      }
    }
  }
  EXPECT_EQ(failures, 0);
}

TEST(ExpressionProperty, MultiplicationBindsTighterThanAddition) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lit(-100.0, 100.0);
  for (int i = 0; i < 200; ++i) {
    char a[32], b[32], c[32];
    std::snprintf(a, sizeof a, "%.17g", std::abs(lit(rng)));
    std::snprintf(b, sizeof b, "%.17g", std::abs(lit(rng)));
    std::snprintf(c, sizeof c, "%.17g", std::abs(lit(rng)));
    const std::string flat = std::string(a) + "+" + b + "*" + c;
    const std::string grouped = std::string(a) + "+(" + b + "*" + c + ")";
    EXPECT_EQ(parse_expression(flat)(0.0), parse_expression(grouped)(0.0)) << flat;
  }
}
