#include "motivic/int_poly.hpp"

#include <stdexcept>

namespace motivic {

Int int_from_decimal(std::string_view text) {
    bool negative = false;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw std::invalid_argument("int_from_decimal: no digits");
    Int v = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("int_from_decimal: not a decimal integer");
        v *= 10;
        v += c - '0';
    }
    return negative ? Int(-v) : v;
}

IntPoly::IntPoly(long long constant) {
    if (constant != 0) terms_.emplace(0, constant);
}

IntPoly::IntPoly(Int constant) {
    if (constant != 0) terms_.emplace(0, std::move(constant));
}

IntPoly IntPoly::monomial(Int coeff, long long degree) {
    if (degree < 0) throw std::invalid_argument("IntPoly::monomial: negative degree");
    IntPoly p;
    if (coeff != 0) p.terms_.emplace(degree, std::move(coeff));
    return p;
}

IntPoly IntPoly::from_terms(const std::vector<std::pair<long long, Int>>& terms) {
    IntPoly p;
    for (const auto& [d, c] : terms) {
        if (d < 0) throw std::invalid_argument("IntPoly::from_terms: negative degree");
        if (c == 0) continue;
        auto [it, inserted] = p.terms_.emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) p.terms_.erase(it);
        }
    }
    return p;
}

IntPoly IntPoly::lpow_minus_one(long long n) {
    if (n < 1) throw std::invalid_argument("IntPoly::lpow_minus_one: n must be >= 1");
    IntPoly p;
    p.terms_.emplace(n, 1);
    p.terms_.emplace(0, -1);
    return p;
}

bool IntPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long long IntPoly::degree() const {
    if (is_zero()) throw std::logic_error("IntPoly::degree of zero polynomial");
    return terms_.rbegin()->first;
}

long long IntPoly::low_degree() const {
    if (is_zero()) throw std::logic_error("IntPoly::low_degree of zero polynomial");
    return terms_.begin()->first;
}

const Int& IntPoly::leading_coeff() const {
    if (is_zero()) throw std::logic_error("IntPoly::leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

const Int& IntPoly::trailing_coeff() const {
    if (is_zero()) throw std::logic_error("IntPoly::trailing_coeff of zero polynomial");
    return terms_.begin()->second;
}

Int IntPoly::coeff(long long degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Int(0) : it->second;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& [d, c] : terms_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Int IntPoly::eval(const Int& x) const {
    // Horner over the sparse terms, highest degree first.
    Int result = 0;
    long long prev = 0;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (first) {
            result = it->second;
            prev = it->first;
            first = false;
            continue;
        }
        result *= boost::multiprecision::pow(x, static_cast<unsigned>(prev - it->first));
        result += it->second;
        prev = it->first;
    }
    if (!first && prev > 0) result *= boost::multiprecision::pow(x, static_cast<unsigned>(prev));
    return result;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational result = 0;
    long long prev = 0;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (first) {
            result = Rational(it->second);
            prev = it->first;
            first = false;
            continue;
        }
        for (long long k = it->first; k < prev; ++k) result *= x;
        result += Rational(it->second);
        prev = it->first;
    }
    if (!first)
        for (long long k = 0; k < prev; ++k) result *= x;
    return result;
}

IntPoly IntPoly::shifted(long long k) const {
    if (k == 0 || is_zero()) return *this;
    if (k < 0 && low_degree() + k < 0)
        throw std::invalid_argument("IntPoly::shifted: shift would create negative degrees");
    IntPoly p;
    for (const auto& [d, c] : terms_) p.terms_.emplace(d + k, c);
    return p;
}

IntPoly IntPoly::reversed() const {
    if (is_zero()) return {};
    const long long n = degree();
    IntPoly p;
    for (const auto& [d, c] : terms_) p.terms_.emplace(n - d, c);
    return p;
}

void IntPoly::set(long long degree, Int c) {
    if (c == 0)
        terms_.erase(degree);
    else
        terms_[degree] = std::move(c);
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    for (const auto& [d, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    for (const auto& [d, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(d, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

IntPoly& IntPoly::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    if (c == 1) return *this;
    for (auto& [d, v] : terms_) v *= c;
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly p;
    for (const auto& [d, c] : terms_) p.terms_.emplace(d, -c);
    return p;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPoly p;
    // Iterate the smaller factor on the outside.
    const IntPoly& outer = a.term_count() <= b.term_count() ? a : b;
    const IntPoly& inner = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [da, ca] : outer.terms_) {
        for (const auto& [db, cb] : inner.terms_) {
            auto [it, inserted] = p.terms_.emplace(da + db, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) p.terms_.erase(it);
            }
        }
    }
    return p;
}

std::optional<IntPoly> IntPoly::divided_by(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("IntPoly::divided_by zero polynomial");
    if (is_zero()) return IntPoly{};
    const long long n = degree();
    const long long k = divisor.degree();
    if (n < k) return std::nullopt;

    std::vector<Int> rem(static_cast<std::size_t>(n) + 1);
    std::vector<Int> div(static_cast<std::size_t>(k) + 1);
    for (const auto& [d, c] : terms_) rem[static_cast<std::size_t>(d)] = c;
    for (const auto& [d, c] : divisor.terms_) div[static_cast<std::size_t>(d)] = c;
    const Int& lead = div[static_cast<std::size_t>(k)];

    std::vector<Int> quot(static_cast<std::size_t>(n - k) + 1);
    for (long long i = n - k; i >= 0; --i) {
        Int& top = rem[static_cast<std::size_t>(i + k)];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        Int f = top / lead;
        for (long long j = 0; j <= k; ++j) rem[static_cast<std::size_t>(i + j)] -= f * div[static_cast<std::size_t>(j)];
        quot[static_cast<std::size_t>(i)] = std::move(f);
    }
    for (long long j = 0; j < k; ++j)
        if (rem[static_cast<std::size_t>(j)] != 0) return std::nullopt;

    IntPoly q;
    for (long long i = 0; i <= n - k; ++i)
        if (quot[static_cast<std::size_t>(i)] != 0) q.terms_.emplace(i, std::move(quot[static_cast<std::size_t>(i)]));
    return q;
}

IntPoly IntPoly::pow(const IntPoly& base, unsigned long long e) {
    IntPoly result(1);
    IntPoly b = base;
    while (e > 0) {
        if (e & 1ULL) result = result * b;
        e >>= 1ULL;
        if (e > 0) b = b * b;
    }
    return result;
}

} // namespace motivic
