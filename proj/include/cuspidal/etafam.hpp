#pragma once

// The functions F_{m,h} built from generalized Dedekind eta functions E_{g,h},
// classical eta quotients, their orders at the cusps of X_0(N), and their
// q-expansions at infinity.

#include "cuspidal/errors.hpp"
#include "cuspidal/modcurve.hpp"
#include "cuspidal/ntheory.hpp"
#include "cuspidal/qseries.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuspidal {

/// Label (m, h) checked against a level: m in D_N, h reduced mod l(m).
inline FLabel make_label(std::int64_t m, std::int64_t h, const LevelContext& ctx) {
    if (!ctx.divides(m) || m == ctx.level())
        throw std::invalid_argument("F label needs m to be a proper divisor of " +
                                    std::to_string(ctx.level()) + ", got " + std::to_string(m));
    return {m, mod(h, ctx.ell(m))};
}

/// prod_{d | N} eta(d tau)^{r_d}
struct EtaQuotient {
    std::int64_t level = 1;
    std::map<std::int64_t, std::int64_t> exponents;

    void multiply(std::int64_t d, std::int64_t r) {
        if (r == 0) return;
        auto& slot = exponents[d];
        slot += r;
        if (slot == 0) exponents.erase(d);
    }
    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;
};

/// prod F_{m,h}^{e_{m,h}} with 0 <= h < l(m).
struct FProduct {
    std::int64_t level = 1;
    std::map<FLabel, std::int64_t> exponents;

    void multiply(const FLabel& f, std::int64_t e) {
        if (e == 0) return;
        auto& slot = exponents[f];
        slot += e;
        if (slot == 0) exponents.erase(f);
    }
    std::int64_t exponent(const FLabel& f) const {
        auto it = exponents.find(f);
        return it == exponents.end() ? 0 : it->second;
    }
    friend bool operator==(const FProduct&, const FProduct&) = default;
};

/// Rational combination of the cusps of X_0(N), indexed like ctx.cusps().
class CuspidalDivisor {
public:
    CuspidalDivisor() = default;
    explicit CuspidalDivisor(const LevelContext& ctx)
        : level_(ctx.level()), coeffs_(ctx.cusps().size()) {}
    CuspidalDivisor(std::int64_t level, std::vector<Rational> coeffs)
        : level_(level), coeffs_(std::move(coeffs)) {}

    std::int64_t level() const { return level_; }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    const Rational& at(const Cusp& p, const LevelContext& ctx) const {
        return coeffs_[ctx.index_of(p)];
    }

    Rational degree() const {
        Rational d = 0;
        for (const auto& x : coeffs_) d += x;
        return d;
    }

    bool is_integral() const {
        for (const auto& x : coeffs_)
            if (!is_integer(x)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : coeffs_)
            if (x != 0) return false;
        return true;
    }

    std::vector<Integer> integer_vector() const {
        std::vector<Integer> v;
        v.reserve(coeffs_.size());
        for (const auto& x : coeffs_) {
            if (!is_integer(x)) throw NonIntegral("divisor has a non-integral coefficient");
            v.push_back(boost::multiprecision::numerator(x));
        }
        return v;
    }

    static CuspidalDivisor from_integers(const LevelContext& ctx, const std::vector<Integer>& v) {
        CuspidalDivisor d(ctx);
        for (std::size_t i = 0; i < v.size(); ++i) d.coeffs_[i] = Rational(v[i]);
        return d;
    }

    /// sigma_s(D): the coefficient of D at P moves to sigma_s(P).
    CuspidalDivisor galois_image(std::int64_t s, const LevelContext& ctx) const {
        CuspidalDivisor out(ctx);
        const auto perm = galois_permutation(s, ctx);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[perm[i]] = coeffs_[i];
        return out;
    }

    CuspidalDivisor& operator+=(const CuspidalDivisor& o) {
        check_compatible(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CuspidalDivisor& operator-=(const CuspidalDivisor& o) {
        check_compatible(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    CuspidalDivisor& operator*=(const Rational& k) {
        for (auto& x : coeffs_) x *= k;
        return *this;
    }
    friend CuspidalDivisor operator+(CuspidalDivisor a, const CuspidalDivisor& b) { return a += b; }
    friend CuspidalDivisor operator-(CuspidalDivisor a, const CuspidalDivisor& b) { return a -= b; }
    friend CuspidalDivisor operator*(const Rational& k, CuspidalDivisor a) { return a *= k; }

    friend bool operator==(const CuspidalDivisor&, const CuspidalDivisor&) = default;

private:
    void check_compatible(const CuspidalDivisor& o) const {
        if (level_ != o.level_ || coeffs_.size() != o.coeffs_.size())
            throw std::invalid_argument("divisors live on different curves");
    }

    std::int64_t level_ = 1;
    std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------
// E_{g,h} index relations

/// E_{g,h} = sign * zeta_N^{zeta_power} * E_{g0,h0}
struct NormalizedEIndex {
    std::int64_t g0 = 0;
    std::int64_t h0 = 0;
    int sign = 1;
    std::int64_t zeta_power = 0;

    friend bool operator==(const NormalizedEIndex&, const NormalizedEIndex&) = default;
};

/// Moves (g, h) to 0 <= g0 <= N/2, 0 <= h0 < N using
/// E_{g+N,h} = E_{-g,-h} = -zeta_N^{-h} E_{g,h} and E_{g,h+N} = E_{g,h}.
inline NormalizedEIndex normalize_e_index(std::int64_t g, std::int64_t h, std::int64_t level) {
    if (level < 1) throw std::invalid_argument("level must be positive");
    if (mod(g, level) == 0 && mod(h, level) == 0)
        throw std::invalid_argument("E_{g,h} needs (g, h) not both divisible by N");
    NormalizedEIndex out;
    // E_{g0 + kN, h} = (-zeta^{-h})^k E_{g0, h}
    const std::int64_t k = g >= 0 ? g / level : -((-g + level - 1) / level);
    std::int64_t g0 = g - k * level;
    out.sign = (k % 2 == 0) ? 1 : -1;
    out.zeta_power = mod(-mod(h, level) * mod(k, level), level);
    std::int64_t h0 = mod(h, level);
    // E_{g,h} = E_{N-g,-h}
    if (2 * g0 > level) {
        g0 = level - g0;
        h0 = mod(-h0, level);
    }
    out.g0 = g0;
    out.h0 = h0;
    return out;
}

// ---------------------------------------------------------------------------
// eta quotients

/// Order of eta(d tau) at the cusp a/c: N (c, d)^2 / (24 d (c^2, N)).
inline Rational eta_order(std::int64_t d, const Cusp& p, const LevelContext& ctx) {
    if (!ctx.divides(d)) throw std::invalid_argument("eta_order: d must divide N");
    const std::int64_t n = ctx.level();
    const std::int64_t g = std::gcd(p.c, d);
    return Rational(Integer(n) * g * g, Integer(24) * d * std::gcd(p.c * p.c, n));
}

inline CuspidalDivisor eta_quotient_divisor(const EtaQuotient& q, const LevelContext& ctx) {
    CuspidalDivisor div(ctx);
    const auto& cs = ctx.cusps();
    for (auto [d, r] : q.exponents)
        for (std::size_t i = 0; i < cs.size(); ++i) div[i] += Rational(r) * eta_order(d, cs[i], ctx);
    return div;
}

/// F_{m,0} as prod_{k | m''} eta(k m tau)^{mu(k)}, up to a constant.
inline EtaQuotient f0_eta_quotient(std::int64_t m, const LevelContext& ctx) {
    const auto& dd = ctx.data(m);
    if (m == ctx.level()) throw std::invalid_argument("f0_eta_quotient: m must be a proper divisor");
    EtaQuotient q{ctx.level(), {}};
    for (auto k : divisors(dd.m_dprime)) q.multiply(k * m, moebius(k));
    return q;
}

/// The eta-quotient form of F_{m,h} when m'' = 2: F_{N/2,0} = eta(N/2)/eta(N),
/// F_{N/4,0} = eta(N/4)/eta(N/2), F_{N/4,1} = eta(N/2)^2 / (eta(N/4) eta(N)).
inline EtaQuotient m2_eta_form(const FLabel& f, const LevelContext& ctx) {
    const auto& dd = ctx.data(f.m);
    if (dd.m_dprime != 2) throw std::invalid_argument("m2_eta_form: needs m'' = 2");
    const std::int64_t n = ctx.level();
    EtaQuotient q{n, {}};
    if (dd.ell == 1) {
        q.multiply(n / 2, 1);
        q.multiply(n, -1);
    } else if (f.h == 0) {
        q.multiply(n / 4, 1);
        q.multiply(n / 2, -1);
    } else {
        q.multiply(n / 2, 2);
        q.multiply(n / 4, -1);
        q.multiply(n, -1);
    }
    return q;
}

// ---------------------------------------------------------------------------
// orders of F_{m,h}

namespace detail {

/// (l (N',c)^2 / (4 (c^2,N))) sum_{alpha in (Z/m'')^x} P2(alpha a'/m'' + delta h c'/l),
/// valid for every m''.
inline Rational bernoulli_order(const FLabel& f, const Cusp& p, const LevelContext& ctx) {
    const auto& dd = ctx.data(f.m);
    const std::int64_t n = ctx.level(), ell = dd.ell, mpp = dd.m_dprime, np = dd.n_prime;
    const std::int64_t g = std::gcd(np, p.c);
    const std::int64_t a1 = mod((np / g) % mpp * mod(p.a, mpp), mpp);  // a' mod m''
    const std::int64_t c1 = p.c / g;                                    // c'
    // delta h c' / l = delta (h c' (m''/l)) / m''
    const std::int64_t hc = mod(mod(f.h * (c1 % mpp), mpp) * ((mpp / ell) % mpp), mpp);
    std::int64_t sum6 = 0;  // sum of 6 m''^2 P2(r / m'')
    for (std::int64_t alpha = 1; alpha <= mpp; ++alpha) {
        if (std::gcd(alpha, mpp) != 1) continue;
        const std::int64_t delta = inverse_mod(alpha, mpp);
        const std::int64_t r = mod(alpha * a1 + delta * hc, mpp);
        sum6 += p2_scaled(r, mpp);
    }
    return Rational(Integer(ell) * g * g * sum6,
                    Integer(24) * std::gcd(p.c * p.c, n) * mpp * mpp);
}

}  // namespace detail

/// Order of F_{m,h} at a cusp. The m'' = 2 labels go through their eta forms.
inline Rational f_order(const FLabel& f, const Cusp& p, const LevelContext& ctx) {
    const auto& dd = ctx.data(f.m);
    if (dd.m_dprime == 2) {
        Rational r = 0;
        for (auto [d, e] : m2_eta_form(f, ctx).exponents) r += Rational(e) * eta_order(d, p, ctx);
        return r;
    }
    return detail::bernoulli_order(f, p, ctx);
}

enum class SpecialCusp { infinity, zero, half };

/// Closed forms at infinity, 0 and (for N = 2 N0 with N0 odd) the cusp 1/N0.
inline Rational f_order_special(const FLabel& f, SpecialCusp which, const LevelContext& ctx) {
    const auto& dd = ctx.data(f.m);
    const std::int64_t m = f.m, mpp = dd.m_dprime, ell = dd.ell;
    switch (which) {
    case SpecialCusp::infinity:
        return Rational(Integer(m) * prod_one_minus_p(mpp), Integer(24));
    case SpecialCusp::zero: {
        Rational s = 0;
        for (auto k : divisors(mpp)) {
            const int mu = moebius(k);
            if (mu == 0) continue;
            const std::int64_t g = std::gcd(ell, k * f.h);
            s += Rational(Integer(mu) * g * g, Integer(k));
        }
        return s * Rational(Integer(mpp), Integer(24) * ell);
    }
    case SpecialCusp::half: {
        const std::int64_t n = ctx.level();
        if (n % 2 != 0 || (n / 2) % 2 == 0)
            throw UnsupportedCusp("the cusp 1/N0 closed form needs N = 2 N0 with N0 odd");
        std::int64_t prod = 1;
        for (auto p : prime_divisors(mpp))
            if (p != 2) prod *= (1 - p);
        return Rational(Integer(m) * prod, Integer(24) * std::gcd<std::int64_t>(m, 2));
    }
    }
    throw std::logic_error("unknown special cusp");
}

inline CuspidalDivisor f_divisor(const FLabel& f, const LevelContext& ctx) {
    CuspidalDivisor div(ctx);
    const auto& cs = ctx.cusps();
    for (std::size_t i = 0; i < cs.size(); ++i) div[i] = f_order(f, cs[i], ctx);
    return div;
}

inline CuspidalDivisor fproduct_divisor(const FProduct& prod, const LevelContext& ctx) {
    CuspidalDivisor div(ctx);
    for (const auto& [f, e] : prod.exponents) div += Rational(e) * f_divisor(f, ctx);
    return div;
}

// ---------------------------------------------------------------------------
// q-expansions at infinity

/// q^{d/24} prod_{n >= 1} (1 - q^{dn}) to `precision` terms.
inline QSeries eta_qexpansion(std::int64_t d, std::size_t precision) {
    if (d < 1 || precision < 1) throw std::invalid_argument("eta_qexpansion: need d, precision >= 1");
    auto ring = std::make_shared<const CyclotomicRing>(1);
    QSeries s = QSeries::one(ring, Rational(Integer(d), Integer(24)), precision);
    const auto one = ring->one();
    for (std::size_t e = static_cast<std::size_t>(d); e < precision; e += static_cast<std::size_t>(d))
        s.multiply_binomial(one, e);
    return s;
}

/// Expansion of an eta quotient, rational coefficients.
inline QSeries eta_quotient_qexpansion(const EtaQuotient& q, std::size_t precision) {
    auto ring = std::make_shared<const CyclotomicRing>(1);
    Rational lead = 0;
    for (auto [d, r] : q.exponents) lead += Rational(Integer(d) * r, Integer(24));
    QSeries s = QSeries::one(ring, lead, precision);
    const auto one = ring->one();
    for (auto [d, r] : q.exponents)
        for (std::size_t e = static_cast<std::size_t>(d); e < precision;
             e += static_cast<std::size_t>(d))
            for (std::int64_t i = 0; i < (r > 0 ? r : -r); ++i) {
                if (r > 0)
                    s.multiply_binomial(one, e);
                else
                    s.divide_binomial(e);
            }
    return s;
}

/// Expansion of F_{m,h} at infinity with coefficients in Z[zeta_l], l = l(m).
inline QSeries f_qexpansion(const FLabel& f, std::size_t precision, const LevelContext& ctx) {
    const auto& dd = ctx.data(f.m);
    if (precision < static_cast<std::size_t>(f.m) + 1)
        throw PrecisionTooSmall("q-expansion of " + std::to_string(f.m) + "," +
                                std::to_string(f.h) + " needs precision at least m + 1");
    auto ring = std::make_shared<const CyclotomicRing>(dd.ell);
    if (dd.m_dprime == 2) return eta_quotient_qexpansion(m2_eta_form(f, ctx), precision).lift_to(ring);

    const std::int64_t m = f.m, mpp = dd.m_dprime, np = dd.n_prime;
    const auto reps = ctx.s_rep(m);
    Rational lead = 0;
    for (auto alpha : reps) {
        // N' B2(alpha/m'') / 2, alpha/m'' in (0, 1/2]
        const Rational x{Integer(alpha), Integer(mpp)};
        lead += Rational(np) * (x * x - x + Rational(1, 6)) / 2;
    }
    QSeries s = QSeries::one(ring, lead, precision);
    const auto prec = static_cast<std::int64_t>(precision);
    for (auto alpha : reps) {
        const std::int64_t delta = inverse_mod(alpha, mpp);
        const auto up = ring->zeta_power(delta * f.h);
        const auto down = ring->zeta_power(-delta * f.h);
        for (std::int64_t n = 1;; ++n) {
            const std::int64_t e1 = np * (n - 1) + alpha * m;
            const std::int64_t e2 = np * n - alpha * m;
            if (e1 >= prec && e2 >= prec) break;
            if (e1 < prec) s.multiply_binomial(up, static_cast<std::size_t>(e1));
            if (e2 < prec) s.multiply_binomial(down, static_cast<std::size_t>(e2));
        }
    }
    return s;
}

}  // namespace cuspidal
