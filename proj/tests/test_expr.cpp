#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "tricover/brill_noether.hpp"
#include "tricover/errors.hpp"
#include "tricover/expr.hpp"

using namespace tricover;

namespace {

ParseErrorKind kind_of(std::string_view text, long g, long d, std::size_t* position = nullptr) {
  try {
    parse(text, g, d);
  } catch (const ParseError& e) {
    if (position != nullptr) {
      *position = e.position();
    }
    return e.kind();
  }
  FAIL("expected a parse error for " << text);
  return ParseErrorKind::kSyntax;
}

CohomClass random_class(std::mt19937_64& rng, long g, long d) {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 12);
  std::uniform_int_distribution<long> count(0, 6);
  CohomClass c(g, d);
  const long n = count(rng);
  for (long i = 0; i < n; ++i) {
    const long b = static_cast<long>(rng() % static_cast<unsigned long>(std::min(g, d) + 1));
    const long a = static_cast<long>(rng() % static_cast<unsigned long>(d - b + 1));
    c.add_term({a, b}, Rat(BigInt(num(rng)), BigInt(den(rng))));
  }
  return c;
}

// Re-join the canonical text with extra blanks between all tokens.
std::string spread(const std::string& text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool word = std::isalnum(static_cast<unsigned char>(c));
    const bool next_word = i + 1 < text.size() && std::isalnum(static_cast<unsigned char>(text[i + 1]));
    out += c;
    if (!(word && next_word)) {
      out += "  ";
    }
  }
  return "\t" + out + " ";
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse("theta^2/2 - x*theta", 4, 3) == bn1_class(4, 3));
  CHECK(parse("x^3", 4, 3) == CohomClass::x_power(4, 3, 3));
  CHECK(parse("bn1(3)", 4, 3) == bn1_class(4, 3));
  CHECK(parse("bn1(3)*x", 4, 3) == bn1_class(4, 3) * CohomClass::x_power(4, 3, 1));
  CHECK(parse("2/4 * theta^2", 4, 3) == CohomClass::theta_power(4, 3, 2) * Rat(BigInt(1), BigInt(2)));
  CHECK(parse("(x + theta)^2", 4, 3) ==
        parse("x^2 + 2*x*theta + theta^2", 4, 3));
  CHECK(parse("x - -3", 4, 3) == CohomClass::x_power(4, 3, 1) + CohomClass::unit(4, 3) * Rat(3));
  CHECK(parse("1 - 2 - 3", 4, 3) == CohomClass::unit(4, 3) * Rat(-4));
  CHECK(parse("2*3^2", 4, 3) == CohomClass::unit(4, 3) * Rat(18));
  CHECK(parse("x^0", 4, 3) == CohomClass::unit(4, 3));
  CHECK(parse("x^4", 4, 3).is_zero());
}

TEST_CASE("truncation notes") {
  std::vector<std::string> notes;
  const CohomClass c = parse("x^4 + theta^5 + x", 4, 8, &notes);
  CHECK(c == CohomClass::x_power(4, 8, 1) + CohomClass::x_power(4, 8, 4));
  CHECK(notes.size() == 1);
  notes.clear();
  parse("x^2*x^2", 4, 3, &notes);
  CHECK_FALSE(notes.empty());
}

TEST_CASE("parse errors carry kind and position") {
  std::size_t pos = 0;
  CHECK(kind_of("1/0", 4, 3, &pos) == ParseErrorKind::kDivisionByZero);
  CHECK(pos == 3);
  CHECK(kind_of("x + ", 4, 3, &pos) == ParseErrorKind::kSyntax);
  CHECK(pos == 5);
  CHECK(kind_of("x + y", 4, 3, &pos) == ParseErrorKind::kSyntax);
  CHECK(pos == 5);
  CHECK(kind_of("-x", 4, 3, &pos) == ParseErrorKind::kSyntax);
  CHECK(pos == 2);
  CHECK(kind_of("(x", 4, 3, &pos) == ParseErrorKind::kSyntax);
  CHECK(pos == 3);
  CHECK(kind_of("x)", 4, 3, &pos) == ParseErrorKind::kSyntax);
  CHECK(pos == 2);
  CHECK(kind_of("x # 2", 4, 3, &pos) == ParseErrorKind::kSyntax);
  CHECK(pos == 3);
  CHECK(kind_of("x/theta", 4, 3, &pos) == ParseErrorKind::kSyntax);
  CHECK(pos == 3);
  CHECK(kind_of("bn1(2)", 4, 3, &pos) == ParseErrorKind::kBn1Mismatch);
  CHECK(pos == 1);
  CHECK(kind_of("x^theta", 4, 3, &pos) == ParseErrorKind::kBadExponent);
  CHECK(pos == 3);
  CHECK(kind_of("x^-1", 4, 3, &pos) == ParseErrorKind::kBadExponent);
  CHECK(pos == 3);
  CHECK(kind_of("", 4, 3, &pos) == ParseErrorKind::kSyntax);
  CHECK(pos == 1);
}

TEST_CASE("format examples") {
  CHECK(format(bn1_class(4, 3)) == "1/2*theta^2 - x*theta");
  CHECK(format(CohomClass(4, 3)) == "0");
  CHECK(format(CohomClass::x_power(4, 3, 3)) == "x^3");
  CHECK(format(CohomClass::unit(4, 3) * Rat(-7)) == "-7");
  CHECK(format(bn1_class(3, 3) * Rat(-1)) == "-1*theta + x");
  CHECK(format(CohomClass::monomial(5, 5, {2, 3}, Rat(BigInt(-3), BigInt(4)))) == "-3/4*x^2*theta^3");
}

TEST_CASE("round trip on random classes") {
  std::mt19937_64 rng(314159);
  for (int i = 0; i < 1000; ++i) {
    const long g = static_cast<long>(rng() % 9);
    const long d = static_cast<long>(rng() % 9);
    const CohomClass c = random_class(rng, g, d);
    const std::string text = format(c);
    const CohomClass back = parse(text, g, d);
    REQUIRE_MESSAGE(back == c, text);
    REQUIRE(format(back) == text);
    REQUIRE(parse(spread(text), g, d) == c);
  }
}

TEST_CASE("parse_expr is independent of the ambient") {
  const ClassExpr e = parse_expr("theta^2/2 - x*theta");
  CHECK(evaluate(e, 4, 3) == bn1_class(4, 3));
  CHECK(evaluate(e, 1, 3) == CohomClass::monomial(1, 3, {1, 1}, Rat(-1)));
  CHECK(e.root().kind == ExprNode::Kind::kSub);
}
