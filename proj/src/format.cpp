#include "motivic/format.hpp"

#include <sstream>
#include <vector>

namespace motivic {

namespace {

// Polynomial printers, descending degree. style_latex selects \mathbb{L}
// with braced exponents; otherwise plain "L^k" with '*' between coefficient
// and symbol so the output re-parses.
std::string poly_to_string(const IntPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [deg, coeff] = *it;
        const bool negative = coeff < 0;
        Int mag = negative ? Int(-coeff) : coeff;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit_coeff = mag == 1 && deg != 0;
        if (!unit_coeff) out << mag.str();
        if (deg != 0) {
            if (!unit_coeff) out << (latex ? "" : "*");
            if (latex) {
                out << "\\mathbb{L}";
                if (deg != 1) out << "^{" << deg << "}";
            } else {
                out << "L";
                if (deg != 1) out << "^" << deg;
            }
        }
    }
    return out.str();
}

std::string lpow_to_string(long long e, bool latex) {
    std::ostringstream out;
    if (latex) {
        out << "\\mathbb{L}";
        if (e != 1) out << "^{" << e << "}";
    } else {
        out << "L";
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

// Regroup the cyclotomic multiset into (L^n - 1) blocks: repeatedly extract
// the largest present index n whose full divisor set is present. Whatever
// cannot be grouped is emitted as an explicit cyclotomic polynomial.
struct DenGroups {
    std::vector<std::pair<long long, long long>> lpow_blocks; // (n, count), ascending n
    std::vector<std::pair<long long, long long>> cyclotomics; // (d, count), ascending d
};

DenGroups regroup_denominator(const CyclotomicMultiset& den) {
    CyclotomicMultiset rest = den;
    std::map<long long, long long> blocks;
    while (true) {
        long long best = 0;
        for (auto it = rest.entries().rbegin(); it != rest.entries().rend(); ++it) {
            const long long n = it->first;
            bool all = true;
            for (long long e = 1; all && e * e <= n; ++e) {
                if (n % e != 0) continue;
                if (rest.count(e) < 1 || rest.count(n / e) < 1) all = false;
            }
            if (all) {
                best = n;
                break;
            }
        }
        if (best == 0) break;
        for (long long e = 1; e * e <= best; ++e) {
            if (best % e != 0) continue;
            rest.remove_one(e);
            if (e != best / e) rest.remove_one(best / e);
        }
        ++blocks[best];
    }
    DenGroups g;
    g.lpow_blocks.assign(blocks.begin(), blocks.end());
    g.cyclotomics.assign(rest.entries().begin(), rest.entries().end());
    return g;
}

std::string class_to_string(const MotivicClass& a, bool latex) {
    if (a.is_zero()) return "0";

    std::vector<std::string> parts;
    if (a.lpow() != 0) parts.push_back(lpow_to_string(a.lpow(), latex));
    if (!a.num().is_one()) {
        if (a.num().term_count() == 1) // canonical num with one term is a constant
            parts.push_back(poly_to_string(a.num(), latex));
        else
            parts.push_back("(" + poly_to_string(a.num(), latex) + ")");
    }

    DenGroups groups = regroup_denominator(a.den());
    auto exponent = [&](long long count) {
        return latex ? "^{-" + std::to_string(count) + "}" : "^-" + std::to_string(count);
    };
    for (const auto& [n, count] : groups.lpow_blocks) {
        std::string base = latex ? "(" + lpow_to_string(n, true) + "-1)" : "(" + lpow_to_string(n, false) + "-1)";
        parts.push_back(base + exponent(count));
    }
    for (const auto& [d, count] : groups.cyclotomics)
        parts.push_back("(" + poly_to_string(cyclotomic(d), latex) + ")" + exponent(count));

    std::string body;
    if (parts.empty()) {
        body = "1";
    } else {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i > 0 && !latex) body += " * ";
            body += parts[i];
        }
    }
    if (a.sign() > 0) return body;
    if (latex) return "-" + body;
    // In the expression grammar '-' is part of the atom and '^' applies to
    // the negated atom, so "-L^4" would read back as (-L)^4. Emit "-1 * "
    // whenever the first factor carries an exponent.
    bool first_powered;
    if (parts.empty())
        first_powered = false;
    else if (a.lpow() != 0)
        first_powered = a.lpow() != 1;
    else if (!a.num().is_one())
        first_powered = false;
    else
        first_powered = true; // a denominator block, always "(...)^-k"
    return (first_powered ? "-1 * " : "-") + body;
}

} // namespace

std::string to_plain(const MotivicClass& a) { return class_to_string(a, false); }

std::string to_latex(const MotivicClass& a) { return class_to_string(a, true); }

std::string to_plain(const IntPoly& p) { return poly_to_string(p, false); }

std::string to_latex(const IntPoly& p) { return poly_to_string(p, true); }

nlohmann::ordered_json to_json(const MotivicClass& a) {
    nlohmann::ordered_json j;
    j["sign"] = a.sign();
    j["lpow"] = a.lpow();
    auto num = nlohmann::ordered_json::array();
    for (const auto& [deg, coeff] : a.num().terms())
        num.push_back({coeff.str(), deg});
    j["num"] = std::move(num);
    auto den = nlohmann::ordered_json::object();
    for (const auto& [d, k] : a.den().entries())
        den[std::to_string(d)] = k;
    j["den"] = std::move(den);
    return j;
}

MotivicClass class_from_json(const nlohmann::json& j) {
    const int sign = j.at("sign").get<int>();
    const long long lpow = j.at("lpow").get<long long>();
    std::vector<std::pair<long long, Int>> terms;
    for (const auto& pair : j.at("num")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("class_from_json: num entries must be [coefficient, degree]");
        terms.emplace_back(pair.at(1).get<long long>(), int_from_decimal(pair.at(0).get<std::string>()));
    }
    CyclotomicMultiset den;
    for (const auto& [key, value] : j.at("den").items())
        den.add(std::stoll(key), value.get<long long>());
    return MotivicClass::normalized(sign, lpow, IntPoly::from_terms(terms), std::move(den));
}

std::string to_plain(const LaurentTail& t) {
    if (t.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long long exp = t.leading_exp; exp >= t.order; --exp) {
        const Int c = t.coeff_at(exp);
        if (c == 0) continue;
        const bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = mag == 1 && exp != 0;
        if (!unit) out << mag.str();
        if (exp != 0) {
            if (!unit) out << "*";
            out << "L";
            if (exp != 1) out << "^" << exp;
        }
    }
    if (first) return "0";
    return out.str();
}

nlohmann::ordered_json to_json(const LaurentTail& t) {
    nlohmann::ordered_json j;
    j["leading_exp"] = t.leading_exp;
    j["order"] = t.order;
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : t.coeffs) coeffs.push_back(c.str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

std::string format_class(const MotivicClass& a, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::Plain: return to_plain(a);
    case OutputFormat::Latex: return to_latex(a);
    case OutputFormat::Json: return to_json(a).dump();
    }
    return {};
}

Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(int_from_decimal(text));
    Int den = int_from_decimal(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(int_from_decimal(text.substr(0, slash)), den);
}

std::string format_trace(const DerivationTrace& t, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return to_json(t).dump(2);
    std::ostringstream out;
    const std::string bg = "{B" + group_kind_name(t.group) + "_" + std::to_string(t.n) + "}";
    out << "derivation of " << bg << ":\n";
    for (const auto& step : t.steps) {
        out << "  [" << step_label_name(step.label) << "] " << step.formula << "\n";
        out << "      = " << (fmt == OutputFormat::Latex ? to_latex(step.value) : to_plain(step.value))
            << "\n";
        out << "      # " << step.anchor << "\n";
    }
    out << bg << " = " << (fmt == OutputFormat::Latex ? to_latex(t.final) : to_plain(t.final)) << "\n";
    return out.str();
}

nlohmann::ordered_json to_json(const DerivationTrace& t) {
    nlohmann::ordered_json j;
    j["group"] = group_kind_name(t.group);
    j["n"] = t.n;
    auto steps = nlohmann::ordered_json::array();
    for (const auto& step : t.steps) {
        nlohmann::ordered_json s;
        s["label"] = step_label_name(step.label);
        s["formula"] = step.formula;
        s["value"] = to_json(step.value);
        s["anchor"] = step.anchor;
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    j["final"] = to_json(t.final);
    return j;
}

} // namespace motivic
