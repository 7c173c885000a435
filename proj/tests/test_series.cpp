#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "motivic/group_classes.hpp"
#include "motivic/series.hpp"
#include "random_values.hpp"

using motivic::class_of;
using motivic::expand;
using motivic::filtration_degree;
using motivic::GroupSpec;
using motivic::in_piece;
using motivic::Int;
using motivic::IntPoly;
using motivic::LaurentTail;
using motivic::MotivicClass;
using motivic::tails_equal;

namespace {

const MotivicClass kL = MotivicClass::lefschetz();
const MotivicClass kOne = MotivicClass::one();

MotivicClass lpoly(std::vector<std::pair<long long, Int>> terms) {
    return MotivicClass::from_poly(IntPoly::from_terms(terms));
}

// Truncated product of two tails, exact down to L^order provided the
// inputs are exact far enough (order - other leading exponent).
LaurentTail tail_mul(const LaurentTail& a, const LaurentTail& b, long long order) {
    LaurentTail r;
    r.order = order;
    r.leading_exp = order;
    if (a.is_zero() || b.is_zero()) return r;
    const long long lead = a.leading_exp + b.leading_exp;
    if (lead < order) return r;
    std::vector<Int> coeffs(static_cast<std::size_t>(lead - order) + 1, Int(0));
    for (long long i = a.leading_exp; i >= a.order; --i)
        for (long long j = b.leading_exp; j >= b.order; --j) {
            const long long k = i + j;
            if (k < order || k > lead) continue;
            coeffs[static_cast<std::size_t>(lead - k)] += a.coeff_at(i) * b.coeff_at(j);
        }
    // strip a zero leading stretch
    std::size_t first = 0;
    while (first < coeffs.size() && coeffs[first] == 0) ++first;
    if (first == coeffs.size()) return r;
    r.leading_exp = lead - static_cast<long long>(first);
    r.coeffs.assign(coeffs.begin() + static_cast<long long>(first), coeffs.end());
    return r;
}

} // namespace

TEST_CASE("geometric series") {
    // (L-1)^-1 = L^-1 + L^-2 + L^-3 + L^-4 + ...
    LaurentTail t = expand(lpoly({{1, 1}, {0, -1}}).inv(), -4);
    CHECK(t.leading_exp == -1);
    CHECK(t.order == -4);
    CHECK(t.coeffs == std::vector<Int>{1, 1, 1, 1});
}

TEST_CASE("polynomials expand exactly") {
    LaurentTail t = expand(lpoly({{2, 1}, {0, -1}}), -2);
    CHECK(t.leading_exp == 2);
    CHECK(t.coeff_at(2) == 1);
    CHECK(t.coeff_at(1) == 0);
    CHECK(t.coeff_at(0) == -1);
    CHECK(t.coeff_at(-1) == 0);
    CHECK(t.coeff_at(-2) == 0);

    // Laurent polynomials too
    LaurentTail lt = expand(MotivicClass::lpower(-3) * lpoly({{1, 1}, {0, -1}}), -5);
    CHECK(lt.leading_exp == -2);
    CHECK(lt.coeff_at(-2) == 1);
    CHECK(lt.coeff_at(-3) == -1);
    CHECK(lt.coeff_at(-4) == 0);
}

TEST_CASE("expansion of {BSO_3}") {
    // 1 / (L^3 - L) = L^-3 + L^-5 + L^-7 + O(L^-9); checked by multiplying
    // the tail back by L^3 - L
    MotivicClass bso3 = class_of(GroupSpec::bso(3));
    LaurentTail t = expand(bso3, -7);
    CHECK(t.leading_exp == -3);
    CHECK(t.coeff_at(-3) == 1);
    CHECK(t.coeff_at(-4) == 0);
    CHECK(t.coeff_at(-5) == 1);
    CHECK(t.coeff_at(-6) == 0);
    CHECK(t.coeff_at(-7) == 1);

    LaurentTail so3 = expand(lpoly({{3, 1}, {1, -1}}), -7);
    LaurentTail product = tail_mul(t, so3, -4); // exact to L^-4
    CHECK(product == expand(kOne, -4));
}

TEST_CASE("zero and below-cutoff values") {
    LaurentTail z = expand(MotivicClass::zero(), -3);
    CHECK(z.is_zero());
    CHECK(z.order == -3);
    CHECK(z.coeff_at(-1) == 0);

    LaurentTail tiny = expand(MotivicClass::lpower(-10), -5);
    CHECK(tiny.is_zero());
}

TEST_CASE("negative and signed tails") {
    LaurentTail t = expand(-(kOne + kL), 0);
    CHECK(t.leading_exp == 1);
    CHECK(t.coeff_at(1) == -1);
    CHECK(t.coeff_at(0) == -1);
}

TEST_CASE("filtration degree") {
    CHECK(filtration_degree(class_of(GroupSpec::bso(4))) == -6);
    CHECK(filtration_degree(kOne) == 0);
    CHECK(!filtration_degree(MotivicClass::zero()).has_value());

    CHECK(in_piece(class_of(GroupSpec::bso(4)), 6));
    CHECK(in_piece(class_of(GroupSpec::bso(4)), 5));
    CHECK_FALSE(in_piece(class_of(GroupSpec::bso(4)), 7));
    for (long long m : {-3, 0, 5, 100}) CHECK(in_piece(MotivicClass::zero(), m));
}

TEST_CASE("tails_equal") {
    MotivicClass a = class_of(GroupSpec::so(5));
    CHECK(tails_equal(a, a, -10));
    CHECK(tails_equal(a, a, 0));

    MotivicClass geom = lpoly({{1, 1}, {0, -1}}).inv();
    CHECK(tails_equal(geom, MotivicClass::lpower(-1), -1));
    CHECK_FALSE(tails_equal(geom, MotivicClass::lpower(-1), -2));

    // {SO_5} against its product form, far past the interesting range
    MotivicClass product = MotivicClass::lpower(10);
    for (long long i = 1; i <= 2; ++i) product *= (kOne - MotivicClass::lpower(-2 * i));
    CHECK(tails_equal(class_of(GroupSpec::so(5)), product, -50));
}

TEST_CASE("expand is multiplicative up to truncation") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 200; ++i) {
        MotivicClass a = testgen::random_class(rng);
        MotivicClass b = testgen::random_class(rng);
        if (a.is_zero() || b.is_zero()) continue;
        const long long order = -12;
        const long long da = *a.degree();
        const long long db = *b.degree();
        LaurentTail product = tail_mul(expand(a, order - db), expand(b, order - da), order);
        CHECK(product == expand(a * b, order));
    }
}

TEST_CASE("expand of an inverse is the series inverse") {
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 100; ++i) {
        MotivicClass u = testgen::random_unit(rng);
        const long long order = -10;
        const long long du = *u.degree();
        LaurentTail product = tail_mul(expand(u, order - (-du)), expand(u.inv(), order - du), order);
        CHECK(product == expand(kOne, order));
    }
}

TEST_CASE("leading term of {BSO_n}") {
    for (long long n = 2; n <= 16; ++n) {
        const long long lead = -n * (n - 1) / 2;
        LaurentTail t = expand(class_of(GroupSpec::bso(n)), lead);
        CHECK(t.leading_exp == lead);
        CHECK(t.coeff_at(lead) == 1);
    }
}
