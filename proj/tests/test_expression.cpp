#include "doctest.h"

#include <cmath>

#include "bmrbwr/expression.hpp"

using namespace bmrbwr;

namespace {

double eval(const std::string& text, std::vector<double> x = {}) {
    return expression::parse(text, x.size()).evaluate(x);
}

}  // namespace

TEST_CASE("arithmetic follows the usual precedence and associativity") {
    CHECK(eval("1 + 2 * 3") == 7.0);
    CHECK(eval("(1 + 2) * 3") == 9.0);
    CHECK(eval("10 - 4 - 3") == 3.0);
    CHECK(eval("16 / 4 / 2") == 2.0);
}

TEST_CASE("power is right-associative and binds tighter than unary minus") {
    CHECK(eval("2 ^ 3 ^ 2") == 512.0);  // 2^(3^2)
    CHECK(eval("-2 ^ 2") == -4.0);      // -(2^2)
    CHECK(eval("(-2) ^ 2") == 4.0);
    CHECK(eval("2 ^ -1") == 0.5);
}

TEST_CASE("variables are one-based and dimension-checked") {
    CHECK(eval("x1 + 2 * x2", {3.0, 4.0}) == 11.0);
    CHECK(eval("x1 * x1", {-5.0}) == 25.0);
    CHECK_THROWS_AS(expression::parse("x3", 2), expression_error);
    CHECK_THROWS_AS(expression::parse("x0", 2), expression_error);

    expression two_vars = expression::parse("x1 + x2", 2);
    CHECK_THROWS_AS(two_vars.evaluate({1.0}), std::invalid_argument);
}

TEST_CASE("functions and constants evaluate through the standard library") {
    CHECK(eval("sin(0)") == 0.0);
    CHECK(eval("cos(0)") == 1.0);
    CHECK(eval("exp(1)") == doctest::Approx(std::exp(1.0)));
    CHECK(eval("log(e)") == doctest::Approx(1.0));
    CHECK(eval("log10(1000)") == doctest::Approx(3.0));
    CHECK(eval("sqrt(16)") == 4.0);
    CHECK(eval("abs(-3.5)") == 3.5);
    CHECK(eval("floor(2.7)") == 2.0);
    CHECK(eval("ceil(2.2)") == 3.0);
    CHECK(eval("cos(pi)") == doctest::Approx(-1.0));
    CHECK(eval("tanh(0)") == 0.0);
}

TEST_CASE("a realistic objective expression round-trips through text()") {
    const std::string text = "(x1 - 1)^2 + 100 * (x2 - x1^2)^2";
    expression parsed = expression::parse(text, 2);
    CHECK(parsed.text() == text);
    CHECK(parsed.variable_count() == 2);
    CHECK(parsed.evaluate({1.0, 1.0}) == 0.0);
    CHECK(parsed.evaluate({-1.0, 2.0}) == doctest::Approx(104.0));
}

TEST_CASE("malformed input reports a position-annotated parse error") {
    CHECK_THROWS_AS(expression::parse("1 +", 0), expression_error);
    CHECK_THROWS_AS(expression::parse("(1 + 2", 0), expression_error);
    CHECK_THROWS_AS(expression::parse("bogus(1)", 0), expression_error);
    CHECK_THROWS_AS(expression::parse("1 2", 0), expression_error);
    CHECK_THROWS_AS(expression::parse("", 0), expression_error);
    try {
        expression::parse("1 + @", 0);
        FAIL("expected an expression_error");
    } catch (const expression_error& error) {
        CHECK(std::string(error.what()).find("5") != std::string::npos);
    }
}
