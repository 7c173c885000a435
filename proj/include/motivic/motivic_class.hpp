#pragma once

#include <optional>
#include <stdexcept>

#include "motivic/cyclotomic.hpp"
#include "motivic/int_poly.hpp"

namespace motivic {

/// Thrown by inv() when the argument is not invertible in the localized
/// ring: only +-L^e times a product of cyclotomic polynomials is a unit.
class NotAUnitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by eval_at() when the evaluation point annihilates an inverted
/// element (q = 0, or a zero of a denominator factor).
class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An element of R = Z[L] localized at L and at every L^n - 1, kept in the
/// unique canonical form
///
///     sign * L^lpow * num(L) / prod_d Phi_d(L)^{mult_d}
///
/// where num has nonzero constant term and positive leading coefficient,
/// and no Phi_d appearing in the denominator divides num. Two values are
/// equal in R iff all four fields coincide, so operator== decides ring
/// equality. Zero is sign +1, lpow 0, empty num, empty denominator.
///
/// Values are immutable after construction and safe to share across threads.
class MotivicClass {
public:
    MotivicClass() = default; // zero

    static MotivicClass zero() { return {}; }
    static MotivicClass one() { return from_int(1); }
    static MotivicClass lefschetz() { return lpower(1); }
    static MotivicClass from_int(Int n);
    static MotivicClass from_poly(IntPoly p);
    /// L^e for any integer e.
    static MotivicClass lpower(long long e);

    /// Bring an arbitrary quadruple to canonical form: extract the L-power
    /// from num into lpow, move the sign of the leading coefficient into
    /// sign, and cancel every cyclotomic factor shared between num and den.
    static MotivicClass normalized(int sign, long long lpow, IntPoly num, CyclotomicMultiset den);

    int sign() const { return sign_; }
    long long lpow() const { return lpow_; }
    const IntPoly& num() const { return num_; }
    const CyclotomicMultiset& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return sign_ == 1 && lpow_ == 0 && num_.is_one() && den_.empty(); }

    MotivicClass operator-() const;
    friend MotivicClass operator+(const MotivicClass& a, const MotivicClass& b);
    friend MotivicClass operator-(const MotivicClass& a, const MotivicClass& b);
    friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b);
    /// a / b = a * inv(b); throws NotAUnitError when b is not a unit.
    friend MotivicClass operator/(const MotivicClass& a, const MotivicClass& b);

    MotivicClass& operator+=(const MotivicClass& o) { return *this = *this + o; }
    MotivicClass& operator-=(const MotivicClass& o) { return *this = *this - o; }
    MotivicClass& operator*=(const MotivicClass& o) { return *this = *this * o; }

    /// Exact inverse. Defined precisely when num factors into cyclotomic
    /// polynomials with integer content 1; otherwise throws NotAUnitError.
    MotivicClass inv() const;

    /// Integer powers; negative exponents go through inv().
    MotivicClass pow(long long e) const;

    /// Degree in L of the underlying rational function:
    /// lpow + deg(num) - sum mult_d * phi(d). nullopt encodes -infinity
    /// (the zero class).
    std::optional<long long> degree() const;

    /// Exact value of the rational function at L = q. Throws PoleError when
    /// q = 0 (L is inverted in R) or q is a zero of a denominator factor.
    Rational eval_at(const Rational& q) const;

    bool operator==(const MotivicClass&) const = default;

private:
    int sign_ = 1;
    long long lpow_ = 0;
    IntPoly num_;
    CyclotomicMultiset den_;

    struct raw_tag {};
    MotivicClass(raw_tag, int sign, long long lpow, IntPoly num, CyclotomicMultiset den)
        : sign_(sign), lpow_(lpow), num_(std::move(num)), den_(std::move(den)) {}
};

} // namespace motivic
