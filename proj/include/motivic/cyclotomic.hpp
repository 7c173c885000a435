#pragma once

#include <map>

#include "motivic/int_poly.hpp"

namespace motivic {

/// Euler's totient.
long long euler_phi(long long n);

/// The d-th cyclotomic polynomial Phi_d(L), monic of degree phi(d).
/// Computed by exact division of L^d - 1 by the Phi_d' for proper divisors
/// d' of d. Results are memoized; the cache is internally synchronized and
/// observationally pure.
const IntPoly& cyclotomic(long long d);

/// Phi_d(2), memoized. Used as a fast divisibility filter: if Phi_d divides
/// p in Z[L] then Phi_d(2) divides p(2) in Z.
const Int& cyclotomic_at_2(long long d);

/// Multiset of cyclotomic indices representing prod_d Phi_d(L)^{mult[d]}.
/// Every stored multiplicity is >= 1; the empty multiset is the unit 1.
class CyclotomicMultiset {
public:
    CyclotomicMultiset() = default;

    bool empty() const { return mult_.empty(); }
    long long count(long long d) const;
    const std::map<long long, long long>& entries() const { return mult_; }

    void add(long long d, long long k = 1);
    /// Remove one copy of Phi_d; requires count(d) >= 1.
    void remove_one(long long d);

    /// Append all factors of L^n - 1 = prod_{d | n} Phi_d.
    void add_lpow_minus_one(long long n);

    /// Multiset union by max multiplicity (the lcm of the two products).
    static CyclotomicMultiset lcm(const CyclotomicMultiset& a, const CyclotomicMultiset& b);
    /// Pointwise difference a - b; requires b <= a.
    static CyclotomicMultiset difference(const CyclotomicMultiset& a, const CyclotomicMultiset& b);

    /// Multiset sum (the product of the two represented polynomials).
    CyclotomicMultiset& operator*=(const CyclotomicMultiset& o);

    /// The represented product, expanded.
    IntPoly product_poly() const;
    /// Degree of the represented product: sum of mult[d] * phi(d).
    long long total_degree() const;

    bool operator==(const CyclotomicMultiset&) const = default;

private:
    std::map<long long, long long> mult_;
};

} // namespace motivic
