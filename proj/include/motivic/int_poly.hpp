#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace motivic {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Strict base-10 conversion: optional sign, then digits. Leading zeros are
/// accepted (cpp_int's own string constructor would read them as octal).
Int int_from_decimal(std::string_view text);

/// Polynomial in L with arbitrary-precision integer coefficients.
///
/// Coefficients are stored sparsely as degree -> coefficient. No stored
/// coefficient is zero; the zero polynomial is the empty map.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long long constant);
    explicit IntPoly(Int constant);

    static IntPoly monomial(Int coeff, long long degree);
    static IntPoly from_terms(const std::vector<std::pair<long long, Int>>& terms);
    /// L^n - 1.
    static IntPoly lpow_minus_one(long long n);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// Degree of the highest term; requires a nonzero polynomial.
    long long degree() const;
    /// Degree of the lowest term; requires a nonzero polynomial.
    long long low_degree() const;
    const Int& leading_coeff() const;
    const Int& trailing_coeff() const;
    Int coeff(long long degree) const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<long long, Int>& terms() const { return terms_; }

    /// gcd of all coefficients (non-negative); 0 for the zero polynomial.
    Int content() const;

    Int eval(const Int& x) const;
    Rational eval(const Rational& x) const;

    /// Multiply by L^k. k may be negative down to -low_degree().
    IntPoly shifted(long long k) const;
    /// L^degree * p(1/L), the coefficient-reversed polynomial.
    IntPoly reversed() const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const Int& c);
    IntPoly operator-() const;

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { a += b; return a; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { a -= b; return a; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Int& c) { a *= c; return a; }

    bool operator==(const IntPoly&) const = default;

    /// Exact division; nullopt when divisor does not divide *this exactly.
    std::optional<IntPoly> divided_by(const IntPoly& divisor) const;

    static IntPoly pow(const IntPoly& base, unsigned long long e);

private:
    std::map<long long, Int> terms_;

    void set(long long degree, Int c);
};

} // namespace motivic
