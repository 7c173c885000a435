#include "motivic/motivic_class.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace motivic {

namespace {

// Divisibility pre-filters. Phi_1 and Phi_2 have the rational roots 1 and
// -1, so those two cases are exact; for d >= 3 we use the integer test at
// L = 2, which is necessary but not sufficient.
bool may_divide(const IntPoly& num, const Int& num_at_2, long long d) {
    if (d == 1) return num.eval(Int(1)) == 0;
    if (d == 2) return num.eval(Int(-1)) == 0;
    if (num_at_2 == 0) return true;
    return num_at_2 % cyclotomic_at_2(d) == 0;
}

} // namespace

MotivicClass MotivicClass::from_int(Int n) {
    return from_poly(IntPoly(std::move(n)));
}

MotivicClass MotivicClass::from_poly(IntPoly p) {
    return normalized(1, 0, std::move(p), {});
}

MotivicClass MotivicClass::lpower(long long e) {
    return MotivicClass(raw_tag{}, 1, e, IntPoly(1), {});
}

MotivicClass MotivicClass::normalized(int sign, long long lpow, IntPoly num, CyclotomicMultiset den) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("MotivicClass: sign must be +-1");
    if (num.is_zero()) return {};

    if (long long low = num.low_degree(); low != 0) {
        lpow += low;
        num = num.shifted(-low);
    }
    if (num.leading_coeff() < 0) {
        num = -num;
        sign = -sign;
    }

    if (!den.empty() && !num.is_one()) {
        Int num_at_2 = num.eval(Int(2));
        // Largest phi first, so the numerator degree shrinks fastest.
        std::vector<long long> ds;
        ds.reserve(den.entries().size());
        for (const auto& [d, k] : den.entries()) ds.push_back(d);
        std::sort(ds.begin(), ds.end(),
                  [](long long a, long long b) { return euler_phi(a) > euler_phi(b); });

        for (long long d : ds) {
            const long long phi = euler_phi(d);
            while (den.count(d) > 0) {
                if (num.is_one() || num.degree() < phi) break;
                if (!may_divide(num, num_at_2, d)) break;
                auto q = num.divided_by(cyclotomic(d));
                if (!q) break;
                num = std::move(*q);
                den.remove_one(d);
                if (num_at_2 != 0) num_at_2 /= cyclotomic_at_2(d);
            }
        }
    }

    return MotivicClass(raw_tag{}, sign, lpow, std::move(num), std::move(den));
}

MotivicClass MotivicClass::operator-() const {
    if (is_zero()) return {};
    return MotivicClass(raw_tag{}, -sign_, lpow_, num_, den_);
}

MotivicClass operator+(const MotivicClass& a, const MotivicClass& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;

    CyclotomicMultiset den = CyclotomicMultiset::lcm(a.den_, b.den_);
    const long long lpow = std::min(a.lpow_, b.lpow_);

    IntPoly na = a.num_ * CyclotomicMultiset::difference(den, a.den_).product_poly();
    na = na.shifted(a.lpow_ - lpow);
    if (a.sign_ < 0) na = -na;

    IntPoly nb = b.num_ * CyclotomicMultiset::difference(den, b.den_).product_poly();
    nb = nb.shifted(b.lpow_ - lpow);
    if (b.sign_ < 0) nb = -nb;

    return MotivicClass::normalized(1, lpow, na + nb, std::move(den));
}

MotivicClass operator-(const MotivicClass& a, const MotivicClass& b) {
    return a + (-b);
}

MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
    if (a.is_zero() || b.is_zero()) return {};
    CyclotomicMultiset den = a.den_;
    den *= b.den_;
    return MotivicClass::normalized(a.sign_ * b.sign_, a.lpow_ + b.lpow_, a.num_ * b.num_, std::move(den));
}

MotivicClass operator/(const MotivicClass& a, const MotivicClass& b) {
    return a * b.inv();
}

MotivicClass MotivicClass::inv() const {
    if (is_zero()) throw NotAUnitError("inv: zero is not a unit");
    if (!num_.is_one()) {
        if (num_.content() != 1)
            throw NotAUnitError("inv: numerator has integer content != 1");
        if (num_.leading_coeff() != 1)
            throw NotAUnitError("inv: numerator is not monic");
        // A product of cyclotomic polynomials is +-palindromic.
        IntPoly rev = num_.reversed();
        if (rev != num_ && rev != -num_)
            throw NotAUnitError("inv: numerator is not a product of cyclotomic polynomials");
    }

    // Factor num into cyclotomics by trial division. phi(d) >= sqrt(d/2)
    // caps the indices that can still divide the remaining polynomial.
    CyclotomicMultiset factors;
    IntPoly rem = num_;
    Int rem_at_2 = rem.eval(Int(2));
    for (long long d = 1; !rem.is_one(); ++d) {
        const long long deg = rem.degree();
        if (d > 2 * deg * deg + 1)
            throw NotAUnitError("inv: numerator has a non-cyclotomic factor");
        if (euler_phi(d) > deg) continue;
        while (!rem.is_one() && euler_phi(d) <= rem.degree() && may_divide(rem, rem_at_2, d)) {
            auto q = rem.divided_by(cyclotomic(d));
            if (!q) break;
            rem = std::move(*q);
            factors.add(d);
            rem_at_2 = rem_at_2 == 0 ? rem.eval(Int(2)) : rem_at_2 / cyclotomic_at_2(d);
        }
    }

    // den_ and factors are disjoint (num_ was reduced against den_), so the
    // swapped fraction is already canonical.
    return MotivicClass(raw_tag{}, sign_, -lpow_, den_.product_poly(), std::move(factors));
}

MotivicClass MotivicClass::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    MotivicClass result = one();
    MotivicClass base = *this;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k > 0) {
        if (k & 1ULL) result = result * base;
        k >>= 1ULL;
        if (k > 0) base = base * base;
    }
    return result;
}

std::optional<long long> MotivicClass::degree() const {
    if (is_zero()) return std::nullopt;
    return lpow_ + num_.degree() - den_.total_degree();
}

Rational MotivicClass::eval_at(const Rational& q) const {
    if (q == 0) throw PoleError("eval_at: L = 0 lies outside the localized ring");
    Rational v = num_.eval(q);
    if (lpow_ != 0) {
        Rational qp = 1;
        for (long long i = 0; i < std::abs(lpow_); ++i) qp *= q;
        if (lpow_ > 0)
            v *= qp;
        else
            v /= qp;
    }
    for (const auto& [d, k] : den_.entries()) {
        Rational f = cyclotomic(d).eval(q);
        if (f == 0) throw PoleError("eval_at: q is a root of a denominator factor");
        for (long long i = 0; i < k; ++i) v /= f;
    }
    if (sign_ < 0) v = -v;
    return v;
}

} // namespace motivic
