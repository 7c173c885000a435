#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "motivic/motivic_class.hpp"

namespace motivic {

/// Thrown by class_of() for groups whose class is deliberately not
/// provided ({O_n} has no formula here, only {BO_n} does).
class UnsupportedSpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GroupKind { O, SO, GL, SL, BO, BSO, BGL, BSL, Gm, Ga, BMu2 };

/// A group or classifying stack whose class is requested. n is the rank
/// parameter and is ignored for Gm, Ga and BMu2. For SO/BSO with even n
/// the split form is assumed.
struct GroupSpec {
    GroupKind kind;
    long long n = 0;

    static GroupSpec o(long long n) { return {GroupKind::O, n}; }
    static GroupSpec so(long long n) { return {GroupKind::SO, n}; }
    static GroupSpec gl(long long n) { return {GroupKind::GL, n}; }
    static GroupSpec sl(long long n) { return {GroupKind::SL, n}; }
    static GroupSpec bo(long long n) { return {GroupKind::BO, n}; }
    static GroupSpec bso(long long n) { return {GroupKind::BSO, n}; }
    static GroupSpec bgl(long long n) { return {GroupKind::BGL, n}; }
    static GroupSpec bsl(long long n) { return {GroupKind::BSL, n}; }
    static GroupSpec gm() { return {GroupKind::Gm, 0}; }
    static GroupSpec ga() { return {GroupKind::Ga, 0}; }
    static GroupSpec bmu2() { return {GroupKind::BMu2, 0}; }
};

std::optional<GroupKind> group_kind_from_name(std::string_view name);
std::string group_kind_name(GroupKind kind);
bool group_kind_takes_parameter(GroupKind kind);

/// The exact canonical class of the given group or classifying stack.
///
///   {BO_2m}   = L^{-m^2+2m} prod_{i=1..m} (L^{2i}-1)^{-1}
///   {BO_2m+1} = L^{-m^2}    prod_{i=1..m} (L^{2i}-1)^{-1}
///   {BSO_n}   = {BO_n} for odd n,  (1 + L^{-m}) {BO_n} for n = 2m
///   {SO_2m+1} = L^{2m^2+m} prod_{i=1..m} (1 - L^{-2i})
///   {SO_2m}   = L^{2m^2-m} (1 - L^{-m}) prod_{i=1..m-1} (1 - L^{-2i})
///   {GL_n}    = prod_{i=0..n-1} (L^n - L^i)
///   {SL_n}    = {GL_n} / (L - 1)            (n >= 1; SL_0 is trivial)
///   {BGL_n}   = {GL_n}^{-1}, {BSL_n} = {SL_n}^{-1}   (special groups)
///   {Gm}      = L - 1,  {Ga} = L,  {B mu_2} = 1
///
/// Throws UnsupportedSpecError for O(n) and std::invalid_argument for
/// negative n.
MotivicClass class_of(const GroupSpec& spec);

/// Class of the total space of an affine bundle of relative dimension d:
/// L^d * base.
MotivicClass affine_bundle_class(const MotivicClass& base, long long d);

/// {B(G x V)} for G acting linearly on a d-dimensional vector space V,
/// extended by the translations of V: L^{-d} * baseBG.
MotivicClass semidirect_vector_class(const MotivicClass& base_bg, long long d);

/// Class of the total space of a torsor under a special group:
/// {P} = {G} {S}.
MotivicClass special_torsor_class(const MotivicClass& group_class, const MotivicClass& base_class);

} // namespace motivic
