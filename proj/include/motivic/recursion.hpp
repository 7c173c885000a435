#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motivic/group_classes.hpp"
#include "motivic/motivic_class.hpp"

namespace motivic {

/// Named intermediate classes in the stratification derivation of {BG_n},
/// where G_n is O_n or SO_n acting on its tautological representation V:
///   VmodG     {[V/G_n]}              the full representation
///   V0modG    {[V^0/G_n]}            V minus the origin
///   CmodG     {[C/G_n]}              the punctured isotropic cone q = 0
///   QmodMu2G  {[Q/(mu_2 x G_n)]}     the quadric q = 1, mu_2 acting by +-1
///   BmodG     {[B/G_n]}              the locus q != 0
///   Result    {BG_n}
enum class StepLabel { VmodG, V0modG, CmodG, QmodMu2G, BmodG, Result };

std::string step_label_name(StepLabel label);

struct DerivationStep {
    StepLabel label;
    std::string formula; // the identity being used, instantiated at n
    MotivicClass value;
    std::string anchor; // one-line justification of the identity
};

/// Ordered replay of the derivation of {BG_n}. For the base cases
/// (n <= 1, and n = 2 for SO) the trace holds a single Result step.
struct DerivationTrace {
    GroupKind group; // GroupKind::O or GroupKind::SO
    long long n = 0;
    std::vector<DerivationStep> steps;
    MotivicClass final;

    const DerivationStep* find(StepLabel label) const;
};

/// {BO_n} computed by the recursion
///   {BO_n} = (L^n - 1)^{-1} ((L-1){BO_{n-1}} + L^{-n+2}{BO_{n-2}})
/// from the base values {BO_0} = {BO_1} = 1, together with the labeled
/// derivation trace at n. Requires n >= 0.
std::pair<MotivicClass, DerivationTrace> recurse_bo(long long n);

/// {BSO_n} computed the same way. Bases: {BSO_1} = 1 and {BSO_2} = (L-1)^{-1}
/// (SO_2 = Gm is excluded from the stratification argument). For n >= 3 the
/// quadric stratum contributes {BSO_{n-1}} when n is even and {BO_{n-1}}
/// when n is odd; for odd n the result coincides with recurse_bo(n).
/// Requires n >= 1.
std::pair<MotivicClass, DerivationTrace> recurse_bso(long long n);

/// Check the internal identities of a trace: final equals the Result value
/// and, when the stratum steps are present,
///   V0modG = CmodG + BmodG
///   BmodG  = (L-1) * QmodMu2G
///   (L^n - 1) * final = V0modG
///   VmodG  = L^n * final.
/// On failure returns false and, if why != nullptr, stores a description.
bool validate_trace(const DerivationTrace& trace, std::string* why = nullptr);

struct VerifyReport {
    bool passed = true;
    long long n_max = 0;
    long long checks_run = 0;
    std::string first_failure;
};

/// For every 2 <= n <= n_max assert that the recursion reproduces the
/// closed forms, recurse_bo(n) = class_of(BO_n) and recurse_bso(n) =
/// class_of(BSO_n), and that the parity relations hold: {BSO_n} = {BO_n}
/// for odd n and {BSO_2m} = (1 + L^{-m}){BO_2m}. Requires n_max >= 2.
VerifyReport verify_theorem(long long n_max);

} // namespace motivic
