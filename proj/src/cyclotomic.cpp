#include "nctori/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace nctori::cyclotomic {

std::vector<std::pair<unsigned long, unsigned long>> factorize(unsigned long n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<unsigned long, unsigned long>> factors;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned long k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        factors.emplace_back(p, k);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long phi = 1;
    for (auto [p, k] : factorize(n)) {
        unsigned long pk = 1;
        for (unsigned long i = 1; i < k; ++i) pk *= p;
        phi *= pk * (p - 1);
    }
    return n == 1 ? 1 : phi;
}

IntPoly cyclotomic_poly(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    static std::map<unsigned long, IntPoly> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    IntPoly result;
    if (n == 1) {
        result = IntPoly{-1, 1};
    } else {
        IntPoly quotient = IntPoly::x_power_minus_one(n);
        for (unsigned long d = 1; d < n; ++d)
            if (n % d == 0) quotient = quotient.divexact(cyclotomic_poly(d));
        result = quotient;
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(n, result);
    return result;
}

IntMatrix companion(const IntPoly &p) {
    if (!p.is_monic()) throw std::invalid_argument("companion: polynomial must be monic");
    const long d = p.degree();
    if (d < 1) throw std::invalid_argument("companion: degree must be >= 1");
    if (p.coeff(0) == 0)
        throw std::invalid_argument("companion: zero constant term (matrix not invertible)");
    IntMatrix c(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (long i = 1; i < d; ++i) c.at(i, i - 1) = 1;
    for (long i = 0; i < d; ++i) c.at(i, d - 1) = -p.coeff(i);
    return c;
}

IntMatrix companion_cyclotomic(unsigned long n) { return companion(cyclotomic_poly(n)); }

std::optional<unsigned long> matrix_order(const IntMatrix &a, unsigned long cap) {
    if (!a.is_square()) throw std::invalid_argument("matrix_order: matrix not square");
    IntMatrix power = a;
    for (unsigned long k = 1; k <= cap; ++k) {
        if (power.is_identity()) return k;
        if (k < cap) power = mat_mul(power, a);
    }
    return std::nullopt;
}

bool order_realizable(unsigned long m, unsigned long n) {
    if (m == 0 || n == 0) throw std::invalid_argument("order_realizable: arguments must be >= 1");
    if (m == 1) return true;
    unsigned long sum = 0;
    bool two_part_is_two = false;
    for (auto [p, k] : factorize(m)) {
        unsigned long pk1 = 1;
        for (unsigned long i = 1; i < k; ++i) pk1 *= p;
        sum += (p - 1) * pk1;
        if (p == 2 && k == 1) two_part_is_two = true;
    }
    if (two_part_is_two) sum -= 1;
    return sum <= n;
}

} // namespace nctori::cyclotomic
