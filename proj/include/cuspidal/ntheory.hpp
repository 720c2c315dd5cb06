#pragma once

// Exact integer and rational primitives shared by every other header.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cuspidal {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::domain_error("zero denominator");
    Integer n(num), d(den);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

inline std::string to_string(const Integer& x) { return x.str(); }

/// "p/q", or just "p" when the denominator is one.
inline std::string to_string(const Rational& x) {
    const Integer& d = boost::multiprecision::denominator(x);
    if (d == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + d.str();
}

inline bool is_integer(const Rational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

/// Largest integer <= x.
inline Integer floor_of(const Rational& x) {
    const Integer& n = boost::multiprecision::numerator(x);
    const Integer& d = boost::multiprecision::denominator(x);
    Integer q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

// ---------------------------------------------------------------------------
// machine-integer helpers

/// Representative of x mod n in [0, n).
constexpr std::int64_t mod(std::int64_t x, std::int64_t n) {
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

/// Inverse of a modulo n, in [0, n). Requires gcd(a, n) = 1; n = 1 gives 0.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("inverse_mod: modulus must be positive");
    if (n == 1) return 0;
    std::int64_t r0 = n, r1 = mod(a, n), s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) throw std::invalid_argument("inverse_mod: argument not invertible");
    return mod(s0, n);
}

/// Prime factorization by trial division over a 2,3 wheel, primes ascending.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    auto strip = [&](std::int64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (std::int64_t p = 5, step = 2; p * p <= n; p += step, step = 6 - step) strip(p);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (auto [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

/// All positive divisors of n, ascending.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> ds{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = ds.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline int moebius(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be positive");
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

inline std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    std::int64_t phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

/// prod_{p | n} (1 - p)
inline std::int64_t prod_one_minus_p(std::int64_t n) {
    std::int64_t r = 1;
    for (auto p : prime_divisors(n)) r *= (1 - p);
    return r;
}

/// Largest k with k^2 | n.
inline std::int64_t square_part_root(std::int64_t n) {
    std::int64_t k = 1;
    for (auto [p, e] : factorize(n))
        for (int i = 0; i < e / 2; ++i) k *= p;
    return k;
}

inline bool is_squarefree(std::int64_t n) { return square_part_root(n) == 1; }

/// Odd part of n.
inline std::int64_t odd_part(std::int64_t n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

/// Jacobi symbol (a | n) for odd positive n.
inline int jacobi(std::int64_t a, std::int64_t n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("jacobi: n must be odd and positive");
    a = mod(a, n);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

// ---------------------------------------------------------------------------
// second Bernoulli function

/// P2(x) = B2({x}) with B2(t) = t^2 - t + 1/6.
inline Rational p2(const Rational& x) {
    const Rational t = x - Rational(floor_of(x));
    return t * t - t + Rational(1, 6);
}

/// 6 * y^2 * P2(r / y) for an integer r; exact integer.
constexpr std::int64_t p2_scaled(std::int64_t r, std::int64_t y) {
    const std::int64_t t = mod(r, y);
    return 6 * t * t - 6 * t * y + y * y;
}

/// Sum of P2(alpha * n / y) over alpha in (Z/x)^x, by the Moebius closed form
/// (x / (6 y^2)) sum_{k | x} (mu(k) / k) (y, kn)^2. Requires y | x.
inline Rational unit_p2_sum(std::int64_t x, std::int64_t y, std::int64_t n) {
    if (x < 1 || y < 1 || x % y != 0)
        throw std::invalid_argument("unit_p2_sum: need positive y dividing x");
    Rational acc = 0;
    for (auto k : divisors(x)) {
        const int mu = moebius(k);
        if (mu == 0) continue;
        // gcd(y, 0) = y
        const std::int64_t g = std::gcd(y, k * n);
        acc += Rational(Integer(mu) * g * g, Integer(k));
    }
    return acc * Rational(Integer(x), Integer(6) * y * y);
}

// ---------------------------------------------------------------------------
// factored rationals

/// Rational number as prime -> nonzero exponent.
class FactoredInteger {
public:
    FactoredInteger() = default;

    /// From an explicit prime -> exponent map; zero exponents are dropped.
    explicit FactoredInteger(const std::map<std::int64_t, std::int64_t>& exps) {
        for (auto [p, e] : exps)
            if (e != 0) exps_[p] = e;
    }

    /// Multiplies by n^e for a positive integer n.
    void multiply(std::int64_t n, std::int64_t e) {
        for (auto [p, k] : factorize(n)) {
            auto& slot = exps_[p];
            slot += e * k;
            if (slot == 0) exps_.erase(p);
        }
    }

    const std::map<std::int64_t, std::int64_t>& exponents() const { return exps_; }

    std::string str() const {
        if (exps_.empty()) return "1";
        std::string s;
        for (auto [p, e] : exps_) {
            if (!s.empty()) s += "*";
            s += std::to_string(p) + "^" + std::to_string(e);
        }
        return s;
    }

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

private:
    std::map<std::int64_t, std::int64_t> exps_;
};

inline bool is_rational_square(const FactoredInteger& f) {
    return std::all_of(f.exponents().begin(), f.exponents().end(),
                       [](const auto& kv) { return kv.second % 2 == 0; });
}

}  // namespace cuspidal
