#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motivic/group_classes.hpp"

using motivic::class_of;
using motivic::GroupKind;
using motivic::GroupSpec;
using motivic::Int;
using motivic::IntPoly;
using motivic::MotivicClass;
using motivic::Rational;
using motivic::UnsupportedSpecError;

namespace {

const MotivicClass kL = MotivicClass::lefschetz();
const MotivicClass kOne = MotivicClass::one();

MotivicClass lpoly(std::vector<std::pair<long long, Int>> terms) {
    return MotivicClass::from_poly(IntPoly::from_terms(terms));
}

// (1 - L^-2i) as a class, for assembling the product forms independently.
MotivicClass one_minus_lpow(long long e) {
    return kOne - MotivicClass::lpower(e);
}

} // namespace

TEST_CASE("base conventions") {
    for (long long n : {0, 1}) {
        CHECK(class_of(GroupSpec::bo(n)) == kOne);
        CHECK(class_of(GroupSpec::bso(n)) == kOne);
        CHECK(class_of(GroupSpec::so(n)) == kOne);
    }
    CHECK(class_of(GroupSpec::gl(0)) == kOne);
    CHECK(class_of(GroupSpec::sl(0)) == kOne);
    CHECK(class_of(GroupSpec::sl(1)) == kOne);
    CHECK(class_of(GroupSpec::gm()) == lpoly({{1, 1}, {0, -1}}));
    CHECK(class_of(GroupSpec::ga()) == kL);
    CHECK(class_of(GroupSpec::bmu2()) == kOne);
    CHECK(class_of(GroupSpec::so(2)) == class_of(GroupSpec::gm()));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(class_of(GroupSpec::o(3)), UnsupportedSpecError);
    CHECK_THROWS_AS(class_of(GroupSpec::bo(-1)), std::invalid_argument);
    CHECK_THROWS_AS(class_of(GroupSpec::gl(-2)), std::invalid_argument);
}

TEST_CASE("named values") {
    // {BSO_2} = (L-1)^-1
    CHECK(class_of(GroupSpec::bso(2)) == class_of(GroupSpec::gm()).inv());

    // {BO_4} = ((L^2-1)(L^4-1))^-1 since -m^2 + 2m = 0 at m = 2
    MotivicClass bo4 = class_of(GroupSpec::bo(4));
    CHECK(bo4 == (lpoly({{2, 1}, {0, -1}}) * lpoly({{4, 1}, {0, -1}})).inv());
    CHECK(bo4.lpow() == 0);

    // {SO_3} = L^3 - L
    CHECK(class_of(GroupSpec::so(3)) == lpoly({{3, 1}, {1, -1}}));

    // {BSO_4} = L^-2 (L^2-1)^-2: cross-multiplying, BSO_4 * L^2 (L^2-1)^2 = 1
    MotivicClass bso4 = class_of(GroupSpec::bso(4));
    MotivicClass cross = bso4 * MotivicClass::lpower(2) * lpoly({{2, 1}, {0, -1}}).pow(2);
    CHECK(cross == kOne);
    CHECK(bso4.lpow() == -2);
    CHECK(bso4.num().is_one());

    // {BSO_3} = L^-1 (L^2-1)^-1
    CHECK(class_of(GroupSpec::bso(3)) == (kL * lpoly({{2, 1}, {0, -1}})).inv());

    // {GL_2} = (L^2-1)(L^2-L)
    CHECK(class_of(GroupSpec::gl(2))
          == lpoly({{2, 1}, {0, -1}}) * lpoly({{2, 1}, {1, -1}}));
}

TEST_CASE("closed forms match their product shapes") {
    // {SO_2m+1} = L^{2m^2+m} prod (1 - L^-2i), assembled term by term
    for (long long m = 1; m <= 8; ++m) {
        MotivicClass prod = MotivicClass::lpower(2 * m * m + m);
        for (long long i = 1; i <= m; ++i) prod *= one_minus_lpow(-2 * i);
        CHECK(class_of(GroupSpec::so(2 * m + 1)) == prod);
    }
    // {SO_2m} = L^{2m^2-m} (1 - L^-m) prod_{i<m} (1 - L^-2i)
    for (long long m = 1; m <= 8; ++m) {
        MotivicClass prod = MotivicClass::lpower(2 * m * m - m) * one_minus_lpow(-m);
        for (long long i = 1; i < m; ++i) prod *= one_minus_lpow(-2 * i);
        CHECK(class_of(GroupSpec::so(2 * m)) == prod);
    }
    // {BO_2m} = L^{-m^2+2m} prod (L^2i - 1)^-1 and the odd case with L^{-m^2}
    for (long long m = 1; m <= 8; ++m) {
        MotivicClass prod = kOne;
        for (long long i = 1; i <= m; ++i) prod *= lpoly({{2 * i, 1}, {0, -1}});
        CHECK(class_of(GroupSpec::bo(2 * m)) == MotivicClass::lpower(-m * m + 2 * m) * prod.inv());
        CHECK(class_of(GroupSpec::bo(2 * m + 1)) == MotivicClass::lpower(-m * m) * prod.inv());
    }
    // {GL_n} = prod_{i (L^n - L^i)
    for (long long n = 1; n <= 6; ++n) {
        MotivicClass prod = kOne;
        for (long long i = 0; i < n; ++i)
            prod *= (MotivicClass::lpower(n) - MotivicClass::lpower(i));
        CHECK(class_of(GroupSpec::gl(n)) == prod);
        CHECK(class_of(GroupSpec::sl(n)) * class_of(GroupSpec::gm()) == prod);
    }
}

TEST_CASE("inverse identity for BSO and SO") {
    for (long long n = 2; n <= 24; ++n)
        CHECK(class_of(GroupSpec::bso(n)) * class_of(GroupSpec::so(n)) == kOne);
}

TEST_CASE("special group identity for GL and SL") {
    for (long long n = 0; n <= 10; ++n) {
        CHECK(class_of(GroupSpec::bgl(n)) * class_of(GroupSpec::gl(n)) == kOne);
        CHECK(class_of(GroupSpec::bsl(n)) * class_of(GroupSpec::sl(n)) == kOne);
    }
}

TEST_CASE("parity relations") {
    for (long long n = 3; n <= 23; n += 2)
        CHECK(class_of(GroupSpec::bso(n)) == class_of(GroupSpec::bo(n)));
    for (long long m = 1; m <= 12; ++m) {
        MotivicClass factor = kOne + MotivicClass::lpower(-m);
        CHECK(class_of(GroupSpec::bso(2 * m)) == factor * class_of(GroupSpec::bo(2 * m)));
    }
}

TEST_CASE("dimension grading") {
    for (long long n = 0; n <= 32; ++n) {
        CHECK(class_of(GroupSpec::so(n)).degree() == n * (n - 1) / 2);
        CHECK(class_of(GroupSpec::bso(n)).degree() == -n * (n - 1) / 2);
        // dim O_n = dim SO_n, and 1 + L^-m has degree 0
        CHECK(class_of(GroupSpec::bo(n)).degree() == -n * (n - 1) / 2);
    }
    for (long long n = 0; n <= 8; ++n) CHECK(class_of(GroupSpec::gl(n)).degree() == n * n);
}

TEST_CASE("finite field point counts") {
    // |GL_n(F_q)| = prod_{i<n} (q^n - q^i), computed here directly over the
    // integers
    for (long long n = 1; n <= 6; ++n) {
        MotivicClass gl = class_of(GroupSpec::gl(n));
        for (int q = 2; q <= 5; ++q) {
            Int expected = 1;
            Int qn = boost::multiprecision::pow(Int(q), static_cast<unsigned>(n));
            Int qi = 1;
            for (long long i = 0; i < n; ++i) {
                expected *= qn - qi;
                qi *= q;
            }
            CHECK(gl.eval_at(q) == Rational(expected));
        }
    }
    // |SO_3(F_q)| = q^3 - q
    MotivicClass so3 = class_of(GroupSpec::so(3));
    for (int q = 2; q <= 5; ++q) CHECK(so3.eval_at(q) == Rational(q * q * q - q));
    CHECK(so3.eval_at(5) == 120);
}

TEST_CASE("structural operations") {
    CHECK(affine_bundle_class(kOne, 3) == MotivicClass::lpower(3));
    MotivicClass bso2 = class_of(GroupSpec::bso(2));
    CHECK(affine_bundle_class(bso2, 0) == bso2);
    CHECK(affine_bundle_class(bso2, 1) == kL * bso2);
    CHECK_THROWS_AS(affine_bundle_class(kOne, -1), std::invalid_argument);

    CHECK(semidirect_vector_class(kOne, 5) == MotivicClass::lpower(-5));
    CHECK(semidirect_vector_class(bso2, 0) == bso2);
    CHECK(semidirect_vector_class(bso2, 2) == MotivicClass::lpower(-2) * bso2);
    CHECK_THROWS_AS(semidirect_vector_class(kOne, -2), std::invalid_argument);

    CHECK(special_torsor_class(class_of(GroupSpec::gl(1)), kOne) == class_of(GroupSpec::gm()));
    // the universal torsor of Gm over BSO_2 = B Gm has total space a point
    CHECK(special_torsor_class(class_of(GroupSpec::gm()), bso2) == kOne);
    // {GL_2} * L evaluates at q = 2 to 6 * 2 = 12
    MotivicClass torsor = special_torsor_class(class_of(GroupSpec::gl(2)), kL);
    CHECK(torsor == kL * lpoly({{2, 1}, {0, -1}}) * lpoly({{2, 1}, {1, -1}}));
    CHECK(torsor.eval_at(2) == 12);

    // undoing the affine twist: semidirect(x, d) * L^d = x
    for (long long d : {0, 1, 2, 7}) {
        MotivicClass x = class_of(GroupSpec::bso(5));
        CHECK(semidirect_vector_class(x, d) * MotivicClass::lpower(d) == x);
        CHECK(semidirect_vector_class(affine_bundle_class(x, d), d) == x);
    }
}
