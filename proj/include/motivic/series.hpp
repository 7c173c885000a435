#pragma once

#include <optional>
#include <vector>

#include "motivic/motivic_class.hpp"

namespace motivic {

/// Truncated Laurent expansion at L = infinity: the image of a class in
/// the completed ring, exact down to the cutoff.
///
/// Represents sum_{order <= k <= leading_exp} coeffs[leading_exp - k] L^k.
/// The first coefficient is nonzero unless the value is zero to this order,
/// in which case coeffs is empty and leading_exp == order.
struct LaurentTail {
    long long leading_exp = 0;
    std::vector<Int> coeffs; // exponent leading_exp first, descending
    long long order = 0;

    bool is_zero() const { return coeffs.empty(); }
    Int coeff_at(long long exp) const;

    bool operator==(const LaurentTail&) const = default;
};

/// Expand a class in descending powers of L, exactly, truncating below
/// L^order. The expansion of a (Laurent) polynomial is exact; for genuine
/// fractions this is long division by the monic denominator.
LaurentTail expand(const MotivicClass& a, long long order);

/// Degree in L, the filtration-facing name for MotivicClass::degree():
/// a lies in the m-th filtration piece iff filtration_degree(a) <= -m.
/// nullopt encodes -infinity (the zero class, a member of every piece).
std::optional<long long> filtration_degree(const MotivicClass& a);

bool in_piece(const MotivicClass& a, long long m);

/// Compare images in the completed ring down to L^order.
bool tails_equal(const MotivicClass& a, const MotivicClass& b, long long order);

} // namespace motivic
