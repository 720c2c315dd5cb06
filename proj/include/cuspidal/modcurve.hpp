#pragma once

// Cusps of X_0(N), their widths and fields of definition, the Galois action
// of Gal(Q(zeta_L)/Q) on them, and the divisor data l(m), m', m'', N'.

#include "cuspidal/ntheory.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cuspidal {

/// Cusp a/c of level c, with a in canonical form: the least positive integer
/// prime to N in its class modulo z = (c, N/c).
struct Cusp {
    std::int64_t a = 1;
    std::int64_t c = 1;
    std::int64_t z = 1;

    friend bool operator==(const Cusp& x, const Cusp& y) { return x.c == y.c && x.a == y.a; }
    friend bool operator<(const Cusp& x, const Cusp& y) {
        return x.c != y.c ? x.c < y.c : x.a < y.a;
    }
    friend std::ostream& operator<<(std::ostream& os, const Cusp& p) {
        return os << "(" << p.a << "," << p.c << ")";
    }
};

/// Label (m, h) of a function F_{m,h}: m a proper divisor of N, h taken mod l(m).
struct FLabel {
    std::int64_t m = 1;
    std::int64_t h = 0;

    friend auto operator<=>(const FLabel&, const FLabel&) = default;
    friend std::ostream& operator<<(std::ostream& os, const FLabel& f) {
        return os << "F[" << f.m << "," << f.h << "]";
    }
};

/// Notation attached to a divisor m of N.
struct DivisorData {
    std::int64_t m = 1;
    std::int64_t ell = 1;        // largest integer whose square divides N/m
    std::int64_t m_prime = 1;    // N/m
    std::int64_t m_dprime = 1;   // N/(m ell)
    std::int64_t n_prime = 1;    // N/ell
};

inline constexpr std::int64_t kMaxLevel = 1'000'000;

class LevelContext {
public:
    explicit LevelContext(std::int64_t level) : n_(level) {
        if (level < 1) throw std::invalid_argument("level must be a positive integer");
        if (level > kMaxLevel)
            throw std::invalid_argument("level " + std::to_string(level) + " exceeds " +
                                        std::to_string(kMaxLevel));
        divisors_ = cuspidal::divisors(n_);
        for (auto m : divisors_) {
            DivisorData d;
            d.m = m;
            d.m_prime = n_ / m;
            d.ell = square_part_root(d.m_prime);
            d.m_dprime = d.m_prime / d.ell;
            d.n_prime = n_ / d.ell;
            data_.push_back(d);
        }
        big_l_ = data_.front().ell;
        n0_ = odd_part(n_);
        for (const auto& d : data_) {
            if (d.m == n_) continue;
            for (std::int64_t h = 0; h < euler_phi(d.ell); ++h) basis_.push_back({d.m, h});
        }
        build_cusps();
    }

    std::int64_t level() const { return n_; }
    /// Largest integer whose square divides N.
    std::int64_t big_l() const { return big_l_; }
    std::int64_t n0() const { return n0_; }
    const std::vector<std::int64_t>& divisors() const { return divisors_; }

    /// D_N: divisors of N other than N.
    std::vector<std::int64_t> proper_divisors() const {
        return {divisors_.begin(), divisors_.end() - 1};
    }

    bool divides(std::int64_t d) const { return d >= 1 && n_ % d == 0; }

    const DivisorData& data(std::int64_t m) const {
        auto it = std::lower_bound(divisors_.begin(), divisors_.end(), m);
        if (it == divisors_.end() || *it != m)
            throw std::invalid_argument(std::to_string(m) + " does not divide " +
                                        std::to_string(n_));
        return data_[static_cast<std::size_t>(it - divisors_.begin())];
    }
    std::int64_t ell(std::int64_t m) const { return data(m).ell; }

    /// S(N): labels (m, h) with m in D_N and 0 <= h < phi(l(m)).
    const std::vector<FLabel>& basis_labels() const { return basis_; }

    /// All labels (m, h) with m in D_N and 0 <= h < l(m).
    std::vector<FLabel> all_labels() const {
        std::vector<FLabel> out;
        for (const auto& d : data_) {
            if (d.m == n_) continue;
            for (std::int64_t h = 0; h < d.ell; ++h) out.push_back({d.m, h});
        }
        return out;
    }

    /// Representatives of (Z/m'')^x / {+-1}: integers in [1, m''/2] prime to m''.
    std::vector<std::int64_t> s_rep(std::int64_t m) const {
        const std::int64_t mpp = data(m).m_dprime;
        std::vector<std::int64_t> reps;
        for (std::int64_t a = 1; 2 * a <= mpp; ++a)
            if (std::gcd(a, mpp) == 1) reps.push_back(a);
        if (reps.empty()) reps.push_back(1);
        return reps;
    }

    const std::vector<Cusp>& cusps() const { return cusps_; }

    std::size_t index_of(const Cusp& p) const {
        auto it = std::lower_bound(cusps_.begin(), cusps_.end(), p);
        if (it == cusps_.end() || !(*it == p)) throw std::invalid_argument("not a canonical cusp");
        return static_cast<std::size_t>(it - cusps_.begin());
    }

    /// Canonical representative of the cusp a/c. Requires c | N and (a, N) = 1.
    Cusp canonical(std::int64_t a, std::int64_t c) const {
        if (!divides(c)) throw std::invalid_argument("cusp level must divide N");
        if (std::gcd(a, n_) != 1) throw std::invalid_argument("cusp numerator must be prime to N");
        return from_residue(a, c);
    }

    /// Canonical cusp of level c whose numerator is congruent to r mod z.
    /// Requires c | N and (r, z) = 1.
    Cusp from_residue(std::int64_t r, std::int64_t c) const {
        const std::int64_t z = std::gcd(c, n_ / c);
        std::int64_t lift = z == 1 ? 1 : mod(r, z);
        if (std::gcd(lift, z) != 1) throw std::invalid_argument("residue must be prime to z");
        while (std::gcd(lift, n_) != 1) lift += z;
        return {lift, c, z};
    }

    Cusp infinity() const { return canonical(1, n_); }
    Cusp zero() const { return canonical(1, 1); }

private:
    void build_cusps() {
        for (auto c : divisors_) {
            const std::int64_t z = std::gcd(c, n_ / c);
            for (std::int64_t r = 0; r < z; ++r)
                if (std::gcd(r, z) == 1) cusps_.push_back(from_residue(r, c));
        }
        std::sort(cusps_.begin(), cusps_.end());
    }

    std::int64_t n_;
    std::int64_t big_l_ = 1;
    std::int64_t n0_ = 1;
    std::vector<std::int64_t> divisors_;
    std::vector<DivisorData> data_;
    std::vector<FLabel> basis_;
    std::vector<Cusp> cusps_;
};

inline LevelContext level_context(std::int64_t level) { return LevelContext(level); }

inline const std::vector<Cusp>& cusps(const LevelContext& ctx) { return ctx.cusps(); }

inline bool cusp_equiv(std::int64_t a, std::int64_t c, std::int64_t a2, std::int64_t c2,
                       const LevelContext& ctx) {
    return ctx.canonical(a, c) == ctx.canonical(a2, c2);
}

inline std::int64_t cusp_width(const Cusp& p, const LevelContext& ctx) {
    return ctx.level() / std::gcd(p.c * p.c, ctx.level());
}

/// The cusp is defined over Q(zeta_z); rational iff z <= 2.
inline std::int64_t field_modulus(const Cusp& p) { return p.z; }

/// sigma_s(a/c) = s* a / c with s s* = 1 mod L.
inline Cusp galois_act(std::int64_t s, const Cusp& p, const LevelContext& ctx) {
    const std::int64_t big_l = ctx.big_l();
    if (std::gcd(s, big_l) != 1)
        throw std::invalid_argument("galois_act: s must be prime to L");
    if (p.z <= 2) return p;
    // z | L, so s* mod z suffices
    const std::int64_t s_star = inverse_mod(mod(s, big_l), big_l);
    return ctx.from_residue(s_star * p.a, p.c);
}

/// Permutation of cusp indices induced by sigma_s.
inline std::vector<std::size_t> galois_permutation(std::int64_t s, const LevelContext& ctx) {
    std::vector<std::size_t> perm;
    perm.reserve(ctx.cusps().size());
    for (const auto& p : ctx.cusps()) perm.push_back(ctx.index_of(galois_act(s, p, ctx)));
    return perm;
}

/// Elements of (Z/L)^x as residues in [1, L]; {1} when L <= 2.
inline std::vector<std::int64_t> galois_group(const LevelContext& ctx) {
    std::vector<std::int64_t> out;
    const std::int64_t big_l = ctx.big_l();
    for (std::int64_t s = 1; s <= std::max<std::int64_t>(big_l, 1); ++s)
        if (std::gcd(s, big_l) == 1) out.push_back(s);
    return out;
}

/// A generating set of (Z/L)^x, picked greedily (empty when L <= 2).
inline std::vector<std::int64_t> galois_generators(const LevelContext& ctx) {
    const std::int64_t big_l = ctx.big_l();
    std::vector<std::int64_t> gens;
    if (big_l <= 2) return gens;
    std::set<std::int64_t> span{1};
    for (auto s : galois_group(ctx)) {
        if (span.count(s)) continue;
        gens.push_back(s);
        std::vector<std::int64_t> frontier(span.begin(), span.end());
        while (!frontier.empty()) {
            std::vector<std::int64_t> next;
            for (auto x : frontier)
                for (auto g : gens) {
                    const std::int64_t y = mod(x * g, big_l);
                    if (span.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
    }
    return gens;
}

/// Galois orbit id per cusp index; orbits numbered in order of first appearance.
inline std::vector<std::size_t> galois_orbits(const LevelContext& ctx) {
    const std::size_t n = ctx.cusps().size();
    std::vector<std::size_t> orbit(n, n);
    std::size_t next = 0;
    const auto group = galois_group(ctx);
    for (std::size_t i = 0; i < n; ++i) {
        if (orbit[i] != n) continue;
        for (auto s : group) orbit[ctx.index_of(galois_act(s, ctx.cusps()[i], ctx))] = next;
        ++next;
    }
    return orbit;
}

/// Bijection on divisors of N with l(m) = (iota(m), N / iota(m)).
inline std::int64_t iota(std::int64_t m, const LevelContext& ctx) {
    if (!ctx.divides(m)) throw std::invalid_argument("iota: m must divide N");
    std::int64_t out = 1;
    for (auto [p, r] : factorize(ctx.level())) {
        int f = 0;
        for (std::int64_t t = m; t % p == 0; t /= p) ++f;
        const int e = f % 2 == 0 ? (r + f + 1) / 2 : (r - f) / 2;
        for (int i = 0; i < e; ++i) out *= p;
    }
    return out;
}

/// Genus of X_0(N).
inline std::int64_t genus(std::int64_t level) {
    std::int64_t mu = level, nu2 = level % 4 == 0 ? 0 : 1, nu3 = level % 9 == 0 ? 0 : 1;
    for (auto p : prime_divisors(level)) {
        mu = mu / p * (p + 1);
        const int k4 = p == 2 ? 0 : (p % 4 == 1 ? 1 : -1);
        const int k3 = p == 3 ? 0 : (p % 3 == 1 ? 1 : -1);
        nu2 *= 1 + k4;
        nu3 *= 1 + k3;
    }
    std::int64_t cusps = 0;
    for (auto c : divisors(level)) cusps += euler_phi(std::gcd(c, level / c));
    return (12 + mu - 3 * nu2 - 4 * nu3 - 6 * cusps) / 12;
}

}  // namespace cuspidal
