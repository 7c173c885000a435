#include "motivic/recursion.hpp"

#include <stdexcept>

namespace motivic {

namespace {

std::string subscript(const std::string& sym, long long n) {
    return "{" + sym + "_" + std::to_string(n) + "}";
}

// Values only, iteratively from the bases; used by the trace builders for
// the two predecessors.
std::vector<MotivicClass> bo_values(long long n) {
    std::vector<MotivicClass> bo;
    bo.reserve(static_cast<std::size_t>(n) + 1);
    for (long long k = 0; k <= n; ++k) {
        if (k <= 1) {
            bo.push_back(MotivicClass::one());
            continue;
        }
        MotivicClass v0 = (class_of(GroupSpec::gm()) * bo[k - 1]) + (MotivicClass::lpower(-k + 2) * bo[k - 2]);
        bo.push_back(MotivicClass::from_poly(IntPoly::lpow_minus_one(k)).inv() * v0);
    }
    return bo;
}

std::vector<MotivicClass> bso_values(long long n, const std::vector<MotivicClass>& bo) {
    std::vector<MotivicClass> bso;
    bso.reserve(static_cast<std::size_t>(n) + 1);
    for (long long k = 0; k <= n; ++k) {
        if (k <= 1) {
            bso.push_back(MotivicClass::one());
            continue;
        }
        if (k == 2) {
            bso.push_back(class_of(GroupSpec::gm()).inv());
            continue;
        }
        const MotivicClass& quadric = k % 2 == 1 ? bo[k - 1] : bso[k - 1];
        MotivicClass v0 = (class_of(GroupSpec::gm()) * quadric) + (MotivicClass::lpower(-k + 2) * bso[k - 2]);
        bso.push_back(MotivicClass::from_poly(IntPoly::lpow_minus_one(k)).inv() * v0);
    }
    return bso;
}

DerivationTrace base_trace(GroupKind group, long long n, MotivicClass value,
                           std::string formula, std::string anchor) {
    DerivationTrace t;
    t.group = group;
    t.n = n;
    t.final = value;
    t.steps.push_back({StepLabel::Result, std::move(formula), std::move(value), std::move(anchor)});
    return t;
}

// The shared stratification: V^0 = C u B, B double-covered by Gm x Q, and
// V a rank-n vector bundle over BG_n.
DerivationTrace stratum_trace(GroupKind group, long long n,
                              const MotivicClass& cone_base,   // {BG_{n-2}}
                              const MotivicClass& quadric_cls, // {[Q/(mu_2 x G_n)]}
                              const std::string& quadric_formula,
                              const std::string& quadric_anchor) {
    const std::string g = group_kind_name(group);
    const std::string gn = g + "_" + std::to_string(n);
    const std::string bg_n = subscript("B" + g, n);

    DerivationTrace t;
    t.group = group;
    t.n = n;

    MotivicClass cone = semidirect_vector_class(cone_base, n - 2);
    t.steps.push_back({StepLabel::CmodG,
                       "{[C/" + gn + "]} = L^" + std::to_string(-n + 2) + " * " + subscript("B" + g, n - 2),
                       cone,
                       "the stabilizer of an isotropic vector is G_{n-2} acting on W = <e1,e2>^perp "
                       "extended by translations of W, and {B(G x| V)} = L^{-dim V} {BG}"});

    t.steps.push_back({StepLabel::QmodMu2G, quadric_formula, quadric_cls, quadric_anchor});

    MotivicClass bulk = class_of(GroupSpec::gm()) * quadric_cls;
    t.steps.push_back({StepLabel::BmodG,
                       "{[B/" + gn + "]} = (L-1) * {[Q/(mu_2 x " + gn + ")]}",
                       bulk,
                       "Gm x Q double-covers B = {q != 0} with deck group mu_2, so "
                       "{[B/G_n]} = ({A^1} - 1) {[Q/(mu_2 x G_n)]}"});

    MotivicClass v0 = cone + bulk;
    t.steps.push_back({StepLabel::V0modG,
                       "{[V^0/" + gn + "]} = {[C/" + gn + "]} + {[B/" + gn + "]}",
                       v0,
                       "scissor relation for the decomposition of V^0 into the closed locus q = 0 "
                       "and its open complement"});

    MotivicClass result = MotivicClass::from_poly(IntPoly::lpow_minus_one(n)).inv() * v0;

    t.steps.push_back({StepLabel::VmodG,
                       "{[V/" + gn + "]} = L^" + std::to_string(n) + " * " + bg_n,
                       MotivicClass::lpower(n) * result,
                       "[V/G_n] -> BG_n is a vector bundle of rank n"});

    t.steps.push_back({StepLabel::Result,
                       bg_n + " = (L^" + std::to_string(n) + "-1)^-1 * {[V^0/" + gn + "]}",
                       result,
                       "solve L^n {BG_n} = {[V^0/G_n]} + {BG_n} for {BG_n}"});

    t.final = std::move(result);
    return t;
}

} // namespace

std::string step_label_name(StepLabel label) {
    switch (label) {
    case StepLabel::VmodG: return "VmodG";
    case StepLabel::V0modG: return "V0modG";
    case StepLabel::CmodG: return "CmodG";
    case StepLabel::QmodMu2G: return "QmodMu2G";
    case StepLabel::BmodG: return "BmodG";
    case StepLabel::Result: return "Result";
    }
    return "?";
}

const DerivationStep* DerivationTrace::find(StepLabel label) const {
    for (const auto& s : steps)
        if (s.label == label) return &s;
    return nullptr;
}

std::pair<MotivicClass, DerivationTrace> recurse_bo(long long n) {
    if (n < 0) throw std::invalid_argument("recurse_bo: n must be >= 0");
    if (n == 0)
        return {MotivicClass::one(),
                base_trace(GroupKind::O, 0, MotivicClass::one(), "{BO_0} = 1", "O_0 is the trivial group")};
    if (n == 1)
        return {MotivicClass::one(),
                base_trace(GroupKind::O, 1, MotivicClass::one(), "{BO_1} = 1",
                           "O_1 = mu_2 and {B mu_2} = 1")};

    std::vector<MotivicClass> bo = bo_values(n - 1);
    const std::string on = "O_" + std::to_string(n);
    DerivationTrace t = stratum_trace(
        GroupKind::O, n, bo[n - 2], bo[n - 1],
        "{[Q/(mu_2 x " + on + ")]} = {B(mu_2 x O_" + std::to_string(n - 1) + ")} = " + subscript("BO", n - 1),
        "O_n acts transitively on the quadric q = 1 with point stabilizer O_{n-1}; the mu_2 "
        "factor contributes {B mu_2} = 1");
    MotivicClass value = t.final;
    return {std::move(value), std::move(t)};
}

std::pair<MotivicClass, DerivationTrace> recurse_bso(long long n) {
    if (n < 1) throw std::invalid_argument("recurse_bso: n must be >= 1");
    if (n == 1)
        return {MotivicClass::one(),
                base_trace(GroupKind::SO, 1, MotivicClass::one(), "{BSO_1} = 1", "SO_1 is the trivial group")};
    if (n == 2) {
        DerivationTrace t = base_trace(GroupKind::SO, 2, class_of(GroupSpec::gm()).inv(),
                                       "{BSO_2} = (L-1)^-1",
                                       "SO_2 = Gm is special, so {B Gm} = {Gm}^{-1}; the "
                                       "stratification argument excludes this case");
        MotivicClass value = t.final;
        return {std::move(value), std::move(t)};
    }

    std::vector<MotivicClass> bo = bo_values(n - 1);
    std::vector<MotivicClass> bso = bso_values(n - 1, bo);
    const std::string son = "SO_" + std::to_string(n);

    MotivicClass quadric;
    std::string formula, anchor;
    if (n % 2 == 0) {
        quadric = bso[n - 1];
        formula = "{[Q/(mu_2 x " + son + ")]} = {B(mu_2 x SO_" + std::to_string(n - 1) + ")} = " +
                  subscript("BSO", n - 1);
        anchor = "for even n the stabilizer of a point of the quadric under mu_2 x SO_n is "
                 "mu_2 x SO_{n-1}";
    } else {
        quadric = bo[n - 1];
        formula = "{[Q/(mu_2 x " + son + ")]} = " + subscript("BO", n - 1);
        anchor = "for odd n the stabilizer of a point of the quadric under mu_2 x SO_n is the "
                 "graph {(det M, M)} = O_{n-1}";
    }

    DerivationTrace t = stratum_trace(GroupKind::SO, n, bso[n - 2], quadric, formula, anchor);
    MotivicClass value = t.final;
    return {std::move(value), std::move(t)};
}

bool validate_trace(const DerivationTrace& trace, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = "n=" + std::to_string(trace.n) + " (" + group_kind_name(trace.group) + "): " + msg;
        return false;
    };

    const DerivationStep* result = trace.find(StepLabel::Result);
    if (!result) return fail("missing Result step");
    if (!(result->value == trace.final)) return fail("final differs from the Result step");

    const DerivationStep* cone = trace.find(StepLabel::CmodG);
    if (!cone) return true; // base-case trace

    const DerivationStep* quadric = trace.find(StepLabel::QmodMu2G);
    const DerivationStep* bulk = trace.find(StepLabel::BmodG);
    const DerivationStep* v0 = trace.find(StepLabel::V0modG);
    const DerivationStep* v = trace.find(StepLabel::VmodG);
    if (!quadric || !bulk || !v0 || !v) return fail("incomplete stratum steps");

    if (!(v0->value == cone->value + bulk->value)) return fail("V0modG != CmodG + BmodG");
    if (!(bulk->value == class_of(GroupSpec::gm()) * quadric->value))
        return fail("BmodG != (L-1) * QmodMu2G");
    MotivicClass ln1 = MotivicClass::from_poly(IntPoly::lpow_minus_one(trace.n));
    if (!(ln1 * trace.final == v0->value)) return fail("(L^n - 1) * final != V0modG");
    if (!(v->value == MotivicClass::lpower(trace.n) * trace.final)) return fail("VmodG != L^n * final");
    return true;
}

VerifyReport verify_theorem(long long n_max) {
    if (n_max < 2) throw std::invalid_argument("verify_theorem: n_max must be >= 2");
    VerifyReport report;
    report.n_max = n_max;

    std::vector<MotivicClass> bo = bo_values(n_max);
    std::vector<MotivicClass> bso = bso_values(n_max, bo);

    auto check = [&](bool ok, long long n, const std::string& what) {
        ++report.checks_run;
        if (!ok && report.passed) {
            report.passed = false;
            report.first_failure = "n=" + std::to_string(n) + ": " + what;
        }
        return ok;
    };

    for (long long n = 2; n <= n_max; ++n) {
        check(bo[n] == class_of(GroupSpec::bo(n)), n, "recursion value for {BO_n} differs from the closed form");
        check(bso[n] == class_of(GroupSpec::bso(n)), n,
              "recursion value for {BSO_n} differs from the closed form");
        if (n % 2 == 1) {
            check(bso[n] == bo[n], n, "{BSO_n} != {BO_n} for odd n");
        } else {
            MotivicClass factor = MotivicClass::one() + MotivicClass::lpower(-n / 2);
            check(bso[n] == factor * bo[n], n, "{BSO_2m} != (1 + L^-m) {BO_2m}");
        }
    }
    return report;
}

} // namespace motivic
