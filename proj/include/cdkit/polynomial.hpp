/**
 * Dense univariate polynomials with arbitrary-precision integer
 * coefficients, exact evaluation at rational points, and the
 * gamma-expansion of palindromic polynomials.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "cdkit/error.hpp"

namespace cdkit {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Always "p/q", including integral values ("6/1"). Used by every machine format.
inline std::string to_fraction_string(const Rational& x)
{
    return numerator(x).str() + "/" + denominator(x).str();
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_display_string(const Rational& x)
{
    if (denominator(x) == 1) {
        return numerator(x).str();
    }
    return to_fraction_string(x);
}

/// Inverse of to_fraction_string; also accepts a bare integer.
inline Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) {
            throw Error(ErrorCode::parse_error, "zero denominator in '" + text + "'");
        }
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e) != nullptr) {
            throw;
        }
        throw Error(ErrorCode::parse_error, "not a rational: '" + text + "'");
    }
}

class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    IntPolynomial(std::initializer_list<long long> coeffs)
    {
        coeffs_.reserve(coeffs.size());
        for (long long c : coeffs) {
            coeffs_.emplace_back(c);
        }
        trim();
    }

    /// c * t^k
    static IntPolynomial monomial(Integer c, std::size_t k)
    {
        std::vector<Integer> coeffs(k + 1);
        coeffs[k] = std::move(c);
        return IntPolynomial(std::move(coeffs));
    }

    /// (1+t)^k
    static IntPolynomial one_plus_t_power(std::size_t k)
    {
        std::vector<Integer> coeffs(k + 1);
        coeffs[0] = 1;
        for (std::size_t j = 1; j <= k; ++j) {
            coeffs[j] = coeffs[j - 1] * (k - j + 1) / j;
        }
        return IntPolynomial(std::move(coeffs));
    }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    /// Coefficient of t^i; zero past the degree.
    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string to_string() const
    {
        if (coeffs_.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Integer& c = coeffs_[i];
            if (c == 0) {
                continue;
            }
            const bool negative = c < 0;
            const Integer magnitude = negative ? Integer(-c) : c;
            if (out.empty()) {
                out += negative ? "-" : "";
            } else {
                out += negative ? " - " : " + ";
            }
            if (magnitude != 1 || i == 0) {
                out += magnitude.str();
            }
            if (i >= 1) {
                out += "t";
            }
            if (i >= 2) {
                out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Integer> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

inline IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q)
{
    const auto& a = p.coefficients();
    const auto& b = q.coefficients();
    std::vector<Integer> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] += b[i];
    }
    return IntPolynomial(std::move(out));
}

inline IntPolynomial negate(const IntPolynomial& p)
{
    std::vector<Integer> out = p.coefficients();
    for (auto& c : out) {
        c = -c;
    }
    return IntPolynomial(std::move(out));
}

inline IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q)
{
    if (p.is_zero() || q.is_zero()) {
        return {};
    }
    const auto& a = p.coefficients();
    const auto& b = q.coefficients();
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return IntPolynomial(std::move(out));
}

inline IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) { return add(p, q); }
inline IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) { return add(p, negate(q)); }
inline IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) { return mul(p, q); }

inline IntPolynomial scale(const IntPolynomial& p, const Integer& c)
{
    std::vector<Integer> out = p.coefficients();
    for (auto& x : out) {
        x *= c;
    }
    return IntPolynomial(std::move(out));
}

inline IntPolynomial derivative(const IntPolynomial& p)
{
    const auto& a = p.coefficients();
    if (a.size() <= 1) {
        return {};
    }
    std::vector<Integer> out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) {
        out[i - 1] = a[i] * i;
    }
    return IntPolynomial(std::move(out));
}

/// Horner's rule over the rationals.
inline Rational eval_rational(const IntPolynomial& p, const Rational& x)
{
    Rational acc = 0;
    const auto& a = p.coefficients();
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc = acc * x + Rational(*it);
    }
    return acc;
}

/// Synthetic division by (1+t). Throws NotDivisible unless p(-1) = 0.
inline IntPolynomial divide_exact_by_one_plus_t(const IntPolynomial& p)
{
    if (p.is_zero()) {
        return {};
    }
    const auto& a = p.coefficients();
    const std::size_t n = a.size();
    std::vector<Integer> q(n - 1);
    Integer carry = 0;
    for (std::size_t i = n - 1; i >= 1; --i) {
        // a_i = q_{i-1} + q_i
        q[i - 1] = a[i] - carry;
        carry = q[i - 1];
    }
    if (a[0] != carry) {
        throw Error(ErrorCode::not_divisible,
                    "polynomial " + p.to_string() + " does not vanish at t = -1");
    }
    return IntPolynomial(std::move(q));
}

/// Coefficients of t^i and t^(m-i) agree for every 0 <= i <= m.
inline bool is_palindromic(const IntPolynomial& p, std::size_t m)
{
    if (p.degree() > static_cast<int>(m)) {
        return false;
    }
    for (std::size_t i = 0; i <= m / 2; ++i) {
        if (p.coeff(i) != p.coeff(m - i)) {
            return false;
        }
    }
    return true;
}

/// p = sum_i gammas[i] t^i (1+t)^(m-2i), i = 0..floor(m/2).
struct GammaVector {
    std::size_t m = 0;
    std::vector<Integer> gammas;

    const Integer& top() const { return gammas.back(); }

    IntPolynomial reconstruct() const
    {
        IntPolynomial sum;
        for (std::size_t i = 0; i < gammas.size(); ++i) {
            sum = sum + IntPolynomial::monomial(gammas[i], i) * IntPolynomial::one_plus_t_power(m - 2 * i);
        }
        return sum;
    }

    friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

/// Peels gamma_0, gamma_1, ... from the low-degree end.
inline GammaVector gamma_expand(const IntPolynomial& p, std::size_t m)
{
    if (!is_palindromic(p, m)) {
        throw Error(ErrorCode::not_palindromic,
                    p.to_string() + " is not palindromic with respect to degree " + std::to_string(m));
    }
    GammaVector out;
    out.m = m;
    IntPolynomial residue = p;
    for (std::size_t i = 0; i <= m / 2; ++i) {
        Integer g = residue.coeff(i);
        if (g != 0) {
            residue = residue - IntPolynomial::monomial(g, i) * IntPolynomial::one_plus_t_power(m - 2 * i);
        }
        out.gammas.push_back(std::move(g));
    }
    // Palindromic input always peels to zero.
    if (!residue.is_zero()) {
        throw Error(ErrorCode::not_palindromic, "gamma expansion left residue " + residue.to_string());
    }
    return out;
}

}  // namespace cdkit
