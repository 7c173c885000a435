#include "motivic/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>

namespace motivic {

long long euler_phi(long long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    long long result = n;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Assumes the cache mutex is held by the caller.
const IntPoly& cyclotomic_locked(std::map<long long, IntPoly>& cache, long long d) {
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    IntPoly p = IntPoly::lpow_minus_one(d);
    auto divide_out = [&](long long div) {
        if (div == d) return;
        auto q = p.divided_by(cyclotomic_locked(cache, div));
        if (!q) throw std::logic_error("cyclotomic: inexact division");
        p = std::move(*q);
    };
    for (long long e = 1; e * e <= d; ++e) {
        if (d % e != 0) continue;
        divide_out(e);
        if (e != d / e) divide_out(d / e);
    }
    return cache.emplace(d, std::move(p)).first->second;
}

} // namespace

const IntPoly& cyclotomic(long long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be >= 1");
    static std::map<long long, IntPoly> cache;
    static std::mutex mu;
    std::scoped_lock lock(mu);
    return cyclotomic_locked(cache, d);
}

const Int& cyclotomic_at_2(long long d) {
    static std::map<long long, Int> cache;
    static std::mutex mu;
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    Int value = cyclotomic(d).eval(Int(2));
    std::scoped_lock lock(mu);
    return cache.emplace(d, std::move(value)).first->second;
}

long long CyclotomicMultiset::count(long long d) const {
    auto it = mult_.find(d);
    return it == mult_.end() ? 0 : it->second;
}

void CyclotomicMultiset::add(long long d, long long k) {
    if (d < 1) throw std::invalid_argument("CyclotomicMultiset::add: d must be >= 1");
    if (k < 0) throw std::invalid_argument("CyclotomicMultiset::add: negative multiplicity");
    if (k == 0) return;
    mult_[d] += k;
}

void CyclotomicMultiset::remove_one(long long d) {
    auto it = mult_.find(d);
    if (it == mult_.end()) throw std::logic_error("CyclotomicMultiset::remove_one: factor not present");
    if (--it->second == 0) mult_.erase(it);
}

void CyclotomicMultiset::add_lpow_minus_one(long long n) {
    if (n < 1) throw std::invalid_argument("CyclotomicMultiset::add_lpow_minus_one: n must be >= 1");
    for (long long e = 1; e * e <= n; ++e) {
        if (n % e != 0) continue;
        add(e);
        if (e != n / e) add(n / e);
    }
}

CyclotomicMultiset CyclotomicMultiset::lcm(const CyclotomicMultiset& a, const CyclotomicMultiset& b) {
    CyclotomicMultiset r = a;
    for (const auto& [d, k] : b.mult_) {
        auto& m = r.mult_[d];
        if (k > m) m = k;
    }
    return r;
}

CyclotomicMultiset CyclotomicMultiset::difference(const CyclotomicMultiset& a, const CyclotomicMultiset& b) {
    CyclotomicMultiset r = a;
    for (const auto& [d, k] : b.mult_) {
        auto it = r.mult_.find(d);
        if (it == r.mult_.end() || it->second < k)
            throw std::logic_error("CyclotomicMultiset::difference: not a sub-multiset");
        it->second -= k;
        if (it->second == 0) r.mult_.erase(it);
    }
    return r;
}

CyclotomicMultiset& CyclotomicMultiset::operator*=(const CyclotomicMultiset& o) {
    for (const auto& [d, k] : o.mult_) mult_[d] += k;
    return *this;
}

IntPoly CyclotomicMultiset::product_poly() const {
    IntPoly p(1);
    for (const auto& [d, k] : mult_)
        for (long long i = 0; i < k; ++i) p = p * cyclotomic(d);
    return p;
}

long long CyclotomicMultiset::total_degree() const {
    long long deg = 0;
    for (const auto& [d, k] : mult_) deg += k * euler_phi(d);
    return deg;
}

} // namespace motivic
