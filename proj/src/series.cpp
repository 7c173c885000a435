#include "motivic/series.hpp"

namespace motivic {

Int LaurentTail::coeff_at(long long exp) const {
    if (exp > leading_exp || exp < order) return 0;
    return coeffs[static_cast<std::size_t>(leading_exp - exp)];
}

LaurentTail expand(const MotivicClass& a, long long order) {
    LaurentTail tail;
    tail.order = order;
    tail.leading_exp = order;
    if (a.is_zero()) return tail;

    const IntPoly den = a.den().product_poly(); // monic
    const long long lead = a.lpow() + a.num().degree() - den.degree();
    if (lead < order) return tail;

    const std::size_t count = static_cast<std::size_t>(lead - order) + 1;

    // Power-series division in x = 1/L of the reversed numerator by the
    // reversed denominator; the reversed denominator has constant term 1.
    std::vector<Int> nrev(count), drev(count);
    for (const auto& [d, c] : a.num().terms()) {
        const long long j = a.num().degree() - d;
        if (j < static_cast<long long>(count)) nrev[static_cast<std::size_t>(j)] = c;
    }
    for (const auto& [d, c] : den.terms()) {
        const long long j = den.degree() - d;
        if (j < static_cast<long long>(count)) drev[static_cast<std::size_t>(j)] = c;
    }

    std::vector<Int> c(count);
    for (std::size_t k = 0; k < count; ++k) {
        Int v = nrev[k];
        for (std::size_t j = 1; j <= k; ++j) {
            if (drev[j] == 0) continue;
            v -= drev[j] * c[k - j];
        }
        c[k] = std::move(v);
    }
    if (a.sign() < 0)
        for (auto& v : c) v = -v;

    tail.leading_exp = lead;
    tail.coeffs = std::move(c);
    return tail;
}

std::optional<long long> filtration_degree(const MotivicClass& a) {
    return a.degree();
}

bool in_piece(const MotivicClass& a, long long m) {
    auto d = a.degree();
    return !d || *d <= -m;
}

bool tails_equal(const MotivicClass& a, const MotivicClass& b, long long order) {
    return expand(a, order) == expand(b, order);
}

} // namespace motivic
