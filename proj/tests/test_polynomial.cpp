#include <random>
#include <vector>

#include "catch_amalgamated.hpp"

#include "cdkit/polynomial.hpp"

using namespace cdkit;

namespace {

IntPolynomial random_polynomial(std::mt19937_64& rng, int max_degree = 8, int magnitude = 50)
{
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::uniform_int_distribution<int> coef(-magnitude, magnitude);
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : c) {
        x = coef(rng);
    }
    return IntPolynomial(std::move(c));
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 17);
    return Rational(num(rng), den(rng));
}

// Independent of Horner: sum of c_i * x^i with x^i built by repeated multiplication.
Rational naive_eval(const IntPolynomial& p, const Rational& x)
{
    Rational sum = 0;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        Rational power = 1;
        for (std::size_t k = 0; k < i; ++k) {
            power *= x;
        }
        sum += Rational(p.coefficients()[i]) * power;
    }
    return sum;
}

}  // namespace

TEST_CASE("zero polynomial has degree -1 and empty coefficients", "[polynomial]")
{
    IntPolynomial zero;
    CHECK(zero.degree() == -1);
    CHECK(zero.coefficients().empty());
    CHECK(IntPolynomial{0, 0, 0} == zero);
    CHECK(IntPolynomial{1, 2, 0}.degree() == 1);
}

TEST_CASE("add", "[polynomial]")
{
    CHECK(add(IntPolynomial{1, 2}, IntPolynomial{0, 0, 3}) == IntPolynomial{1, 2, 3});
    const IntPolynomial p{4, -1, 7};
    CHECK(add(p, IntPolynomial{}) == p);
    const auto sum = add(IntPolynomial{1, 1}, IntPolynomial{-1, -1});
    CHECK(sum.is_zero());
    CHECK(sum.coefficients().empty());
}

TEST_CASE("mul", "[polynomial]")
{
    CHECK(mul(IntPolynomial{1, 1}, IntPolynomial{1, 1}) == IntPolynomial{1, 2, 1});
    CHECK(mul(IntPolynomial{1, 1}, IntPolynomial{1, 8, 1}) == IntPolynomial{1, 9, 9, 1});
    CHECK(mul(IntPolynomial{3, 5}, IntPolynomial{}).is_zero());
}

TEST_CASE("derivative", "[polynomial]")
{
    CHECK(derivative(IntPolynomial{1, 12, 30, 20}) == IntPolynomial{12, 60, 60});
    CHECK(derivative(IntPolynomial{7}).is_zero());
    CHECK(derivative(IntPolynomial{0, 0, 1}) == IntPolynomial{0, 2});
}

TEST_CASE("eval_rational", "[polynomial]")
{
    CHECK(eval_rational(IntPolynomial{1, 12, 30, 20}, Rational(-1, 2)) == 0);
    CHECK(eval_rational(IntPolynomial{1, 3, 1}, Rational(-1)) == -1);
    CHECK(eval_rational(IntPolynomial{}, Rational(5, 3)) == 0);
    CHECK(eval_rational(IntPolynomial{1, 5, 5}, Rational(-1, 2)) == Rational(-1, 4));
}

TEST_CASE("divide_exact_by_one_plus_t", "[polynomial]")
{
    CHECK(divide_exact_by_one_plus_t(IntPolynomial{1, 9, 9, 1}) == IntPolynomial{1, 8, 1});
    CHECK(divide_exact_by_one_plus_t(IntPolynomial{1, 1}) == IntPolynomial{1});
    try {
        divide_exact_by_one_plus_t(IntPolynomial{1, 3, 1});
        FAIL("expected NotDivisible");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_divisible);
    }
    CHECK_THROWS_AS(divide_exact_by_one_plus_t(IntPolynomial{2}), Error);
}

TEST_CASE("is_palindromic", "[polynomial]")
{
    CHECK(is_palindromic(IntPolynomial{1, 9, 9, 1}, 3));
    CHECK(is_palindromic(IntPolynomial{1, 3, 1}, 2));
    CHECK_FALSE(is_palindromic(IntPolynomial{1, 2}, 2));
    CHECK_FALSE(is_palindromic(IntPolynomial{1, 0, 0, 1}, 2));
    // absent top coefficients read as zero
    CHECK_FALSE(is_palindromic(IntPolynomial{1}, 3));
}

TEST_CASE("gamma_expand", "[polynomial]")
{
    const auto ico = gamma_expand(IntPolynomial{1, 9, 9, 1}, 3);
    CHECK(ico.gammas == std::vector<Integer>{1, 6});
    CHECK(gamma_expand(IntPolynomial::one_plus_t_power(4), 4).gammas == std::vector<Integer>{1, 0, 0});
    CHECK(gamma_expand(IntPolynomial{1, 11, 11, 1}, 3).gammas == std::vector<Integer>{1, 8});
    try {
        gamma_expand(IntPolynomial{1, 2}, 2);
        FAIL("expected NotPalindromic");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_palindromic);
    }
}

TEST_CASE("rational formatting round-trips", "[polynomial]")
{
    CHECK(to_fraction_string(Rational(6)) == "6/1");
    CHECK(to_fraction_string(Rational(-1, 4)) == "-1/4");
    CHECK(to_display_string(Rational(6)) == "6");
    CHECK(parse_rational("-1/4") == Rational(-1, 4));
    CHECK(parse_rational("12") == 12);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x/2"), Error);
}

TEST_CASE("ring properties on random polynomials", "[polynomial][property]")
{
    std::mt19937_64 rng(20240501);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = random_polynomial(rng);
        const auto q = random_polynomial(rng);
        CHECK(mul(p, q) == mul(q, p));
        CHECK(derivative(mul(p, q)) == add(mul(derivative(p), q), mul(p, derivative(q))));
        const auto multiple = mul(IntPolynomial{1, 1}, p);
        CHECK(divide_exact_by_one_plus_t(multiple) == p);
        CHECK(mul(IntPolynomial{1, 1}, divide_exact_by_one_plus_t(multiple)) == multiple);
    }
}

TEST_CASE("gamma expansion reconstructs random palindromic polynomials", "[polynomial][property]")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-40, 40);
    std::uniform_int_distribution<std::size_t> degree(0, 9);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = degree(rng);
        std::vector<Integer> c(m + 1);
        for (std::size_t i = 0; i <= m / 2; ++i) {
            c[i] = c[m - i] = coef(rng);
        }
        const IntPolynomial p(c);
        REQUIRE(is_palindromic(p, m));
        const auto g = gamma_expand(p, m);
        CHECK(g.gammas.size() == m / 2 + 1);
        CHECK(g.reconstruct() == p);
        CHECK(g.gammas[0] == p.coeff(0));
    }
}

TEST_CASE("Horner agrees with naive power summation", "[polynomial][property]")
{
    std::mt19937_64 rng(1000);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto p = random_polynomial(rng, 10, 1000);
        const auto x = random_rational(rng);
        const auto value = eval_rational(p, x);
        REQUIRE(value == naive_eval(p, x));
        // stored in lowest terms with positive denominator
        CHECK(denominator(value) > 0);
        CHECK(gcd(numerator(value), denominator(value)) == 1);
    }
}
