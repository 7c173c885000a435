#pragma once

#include <string>

#include <json.hpp>

#include "motivic/motivic_class.hpp"
#include "motivic/recursion.hpp"
#include "motivic/series.hpp"

namespace motivic {

enum class OutputFormat { Plain, Latex, Json };

/// Plain ASCII form that parses back to the same canonical class, e.g.
/// "L^-1 * (L^2-1)^-1". Denominator cyclotomic factors are regrouped into
/// (L^n - 1) blocks where the multiset allows it.
std::string to_plain(const MotivicClass& a);

/// LaTeX form using \mathbb{L}, e.g. "\mathbb{L}^{-1}(\mathbb{L}^{2}-1)^{-1}".
std::string to_latex(const MotivicClass& a);

/// JSON form with big integers as decimal strings:
/// {"sign":1,"lpow":-1,"num":[["1",0]],"den":{"1":1,"2":1}}.
/// num lists [coefficient, degree] pairs in ascending degree; den maps the
/// cyclotomic index to its multiplicity.
nlohmann::ordered_json to_json(const MotivicClass& a);

/// Rebuild a class from the JSON form; the result is renormalized, so a
/// canonical input round-trips identically.
MotivicClass class_from_json(const nlohmann::json& j);

std::string to_plain(const IntPoly& p);
std::string to_latex(const IntPoly& p);

std::string to_plain(const LaurentTail& t);
nlohmann::ordered_json to_json(const LaurentTail& t);

std::string format_class(const MotivicClass& a, OutputFormat fmt);

/// Parse "p" or "p/q" with optional sign into an exact rational.
Rational rational_from_string(const std::string& text);

std::string format_trace(const DerivationTrace& t, OutputFormat fmt);
nlohmann::ordered_json to_json(const DerivationTrace& t);

} // namespace motivic
