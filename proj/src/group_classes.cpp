#include "motivic/group_classes.hpp"

namespace motivic {

namespace {

MotivicClass bo_class(long long n) {
    if (n <= 1) return MotivicClass::one();
    const long long m = n / 2;
    CyclotomicMultiset den;
    for (long long i = 1; i <= m; ++i) den.add_lpow_minus_one(2 * i);
    const long long lpow = n % 2 == 0 ? -m * m + 2 * m : -m * m;
    return MotivicClass::normalized(1, lpow, IntPoly(1), std::move(den));
}

MotivicClass bso_class(long long n) {
    if (n <= 1) return MotivicClass::one();
    if (n % 2 == 1) return bo_class(n);
    const long long m = n / 2;
    return (MotivicClass::one() + MotivicClass::lpower(-m)) * bo_class(n);
}

MotivicClass so_class(long long n) {
    // Expanded from the product forms: the classes are Laurent polynomials,
    //   {SO_2m+1} = L^{m^2}   prod_{i=1..m}   (L^{2i}-1)
    //   {SO_2m}   = L^{m^2-m} (L^m-1) prod_{i=1..m-1} (L^{2i}-1).
    if (n <= 1) return MotivicClass::one();
    const long long m = n / 2;
    IntPoly num(1);
    long long lpow;
    if (n % 2 == 1) {
        for (long long i = 1; i <= m; ++i) num = num * IntPoly::lpow_minus_one(2 * i);
        lpow = m * m;
    } else {
        num = IntPoly::lpow_minus_one(m);
        for (long long i = 1; i <= m - 1; ++i) num = num * IntPoly::lpow_minus_one(2 * i);
        lpow = m * m - m;
    }
    return MotivicClass::normalized(1, lpow, std::move(num), {});
}

MotivicClass gl_class(long long n) {
    // prod_{i=0..n-1} (L^n - L^i) = L^{n(n-1)/2} prod_{j=1..n} (L^j - 1)
    IntPoly num(1);
    for (long long j = 1; j <= n; ++j) num = num * IntPoly::lpow_minus_one(j);
    return MotivicClass::normalized(1, n * (n - 1) / 2, std::move(num), {});
}

MotivicClass sl_class(long long n) {
    if (n == 0) return MotivicClass::one();
    return gl_class(n) / class_of(GroupSpec::gm());
}

} // namespace

std::optional<GroupKind> group_kind_from_name(std::string_view name) {
    if (name == "O") return GroupKind::O;
    if (name == "SO") return GroupKind::SO;
    if (name == "GL") return GroupKind::GL;
    if (name == "SL") return GroupKind::SL;
    if (name == "BO") return GroupKind::BO;
    if (name == "BSO") return GroupKind::BSO;
    if (name == "BGL") return GroupKind::BGL;
    if (name == "BSL") return GroupKind::BSL;
    if (name == "Gm") return GroupKind::Gm;
    if (name == "Ga") return GroupKind::Ga;
    if (name == "Bmu2") return GroupKind::BMu2;
    return std::nullopt;
}

std::string group_kind_name(GroupKind kind) {
    switch (kind) {
    case GroupKind::O: return "O";
    case GroupKind::SO: return "SO";
    case GroupKind::GL: return "GL";
    case GroupKind::SL: return "SL";
    case GroupKind::BO: return "BO";
    case GroupKind::BSO: return "BSO";
    case GroupKind::BGL: return "BGL";
    case GroupKind::BSL: return "BSL";
    case GroupKind::Gm: return "Gm";
    case GroupKind::Ga: return "Ga";
    case GroupKind::BMu2: return "Bmu2";
    }
    return "?";
}

bool group_kind_takes_parameter(GroupKind kind) {
    switch (kind) {
    case GroupKind::Gm:
    case GroupKind::Ga:
    case GroupKind::BMu2: return false;
    default: return true;
    }
}

MotivicClass class_of(const GroupSpec& spec) {
    if (group_kind_takes_parameter(spec.kind) && spec.n < 0)
        throw std::invalid_argument("class_of: n must be non-negative");
    switch (spec.kind) {
    case GroupKind::O:
        throw UnsupportedSpecError("class_of: no formula is provided for the group class {O_n}");
    case GroupKind::SO: return so_class(spec.n);
    case GroupKind::GL: return gl_class(spec.n);
    case GroupKind::SL: return sl_class(spec.n);
    case GroupKind::BO: return bo_class(spec.n);
    case GroupKind::BSO: return bso_class(spec.n);
    case GroupKind::BGL: return gl_class(spec.n).inv();
    case GroupKind::BSL: return sl_class(spec.n).inv();
    case GroupKind::Gm: return MotivicClass::from_poly(IntPoly::lpow_minus_one(1));
    case GroupKind::Ga: return MotivicClass::lefschetz();
    case GroupKind::BMu2: return MotivicClass::one();
    }
    throw std::logic_error("class_of: unknown group kind");
}

MotivicClass affine_bundle_class(const MotivicClass& base, long long d) {
    if (d < 0) throw std::invalid_argument("affine_bundle_class: d must be non-negative");
    return MotivicClass::lpower(d) * base;
}

MotivicClass semidirect_vector_class(const MotivicClass& base_bg, long long d) {
    if (d < 0) throw std::invalid_argument("semidirect_vector_class: d must be non-negative");
    return MotivicClass::lpower(-d) * base_bg;
}

MotivicClass special_torsor_class(const MotivicClass& group_class, const MotivicClass& base_class) {
    return group_class * base_class;
}

} // namespace motivic
