#pragma once

// Modularity criteria on X_0(N) for eta quotients and products of F_{m,h}.

#include "cuspidal/errors.hpp"
#include "cuspidal/etafam.hpp"
#include "cuspidal/modcurve.hpp"
#include "cuspidal/ntheory.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuspidal {

enum class ConditionId {
    deg0,
    inf_integral,
    zero_integral,
    half_integral,
    mod_L,
    mod_2,
    ligozat_sum,
    ligozat_24_delta,
    ligozat_24_Ndelta,
    ligozat_square,
};

inline std::string to_string(ConditionId id) {
    switch (id) {
    case ConditionId::deg0: return "deg0";
    case ConditionId::inf_integral: return "inf_integral";
    case ConditionId::zero_integral: return "zero_integral";
    case ConditionId::half_integral: return "half_integral";
    case ConditionId::mod_L: return "mod_L";
    case ConditionId::mod_2: return "mod_2";
    case ConditionId::ligozat_sum: return "ligozat_sum";
    case ConditionId::ligozat_24_delta: return "ligozat_24_delta";
    case ConditionId::ligozat_24_Ndelta: return "ligozat_24_Ndelta";
    case ConditionId::ligozat_square: return "ligozat_square";
    }
    return "?";
}

struct ConditionResult {
    ConditionId id;
    bool pass = false;
    std::string witness;  // the exact value that was tested
};

struct CriterionReport {
    bool overall = true;
    std::vector<ConditionResult> conditions;

    void add(ConditionId id, bool pass, std::string witness) {
        conditions.push_back({id, pass, std::move(witness)});
        overall = overall && pass;
    }

    const ConditionResult& at(ConditionId id) const {
        for (const auto& c : conditions)
            if (c.id == id) return c;
        throw std::out_of_range("condition " + to_string(id) + " not in report");
    }

    std::vector<ConditionId> failed() const {
        std::vector<ConditionId> out;
        for (const auto& c : conditions)
            if (!c.pass) out.push_back(c.id);
        return out;
    }
};

/// F_{m,h}^k is modular on X_0(N) for k = lcm(2 m'', 24).
inline std::int64_t guaranteed_power(std::int64_t m, const LevelContext& ctx) {
    if (m == ctx.level()) throw std::invalid_argument("guaranteed_power: m must be in D_N");
    return lcm64(2 * ctx.data(m).m_dprime, 24);
}

/// Ligozat: sum r = 0, sum r d = 0 mod 24, sum r N/d = 0 mod 24, prod d^r a square.
inline CriterionReport ligozat_check(const EtaQuotient& q, const LevelContext& ctx) {
    const std::int64_t n = ctx.level();
    Integer sum = 0, sum_d = 0, sum_nd = 0;
    FactoredInteger prod;
    for (auto [d, r] : q.exponents) {
        if (!ctx.divides(d))
            throw std::invalid_argument("eta(" + std::to_string(d) + ") is not on level " +
                                        std::to_string(n));
        sum += r;
        sum_d += Integer(r) * d;
        sum_nd += Integer(r) * (n / d);
        prod.multiply(d, r);
    }
    CriterionReport rep;
    rep.add(ConditionId::ligozat_sum, sum == 0, sum.str());
    rep.add(ConditionId::ligozat_24_delta, sum_d % 24 == 0, sum_d.str());
    rep.add(ConditionId::ligozat_24_Ndelta, sum_nd % 24 == 0, sum_nd.str());
    rep.add(ConditionId::ligozat_square, is_rational_square(prod), prod.str());
    return rep;
}

/// Why the iff-criterion is unavailable at this level, if it is.
inline std::optional<std::string> thm17_obstruction(const LevelContext& ctx) {
    const std::int64_t big_l = ctx.big_l();
    if (big_l % 2 == 0) return "L = " + std::to_string(big_l) + " is even";
    if (!is_squarefree(big_l)) return "L = " + std::to_string(big_l) + " is not squarefree";
    const std::int64_t phi = euler_phi(ctx.level() / big_l);
    if (std::gcd(big_l, phi) != 1)
        return "(L, phi(N/L)) = (" + std::to_string(big_l) + ", " + std::to_string(phi) + ") = " +
               std::to_string(std::gcd(big_l, phi));
    return std::nullopt;
}

inline bool thm17_applies(const LevelContext& ctx) { return !thm17_obstruction(ctx).has_value(); }

inline void require_thm17(const LevelContext& ctx) {
    if (auto why = thm17_obstruction(ctx))
        throw HypothesisNotMet("N = " + std::to_string(ctx.level()) + ": " + *why);
}

namespace detail {

inline void validate_labels(const FProduct& f, const LevelContext& ctx) {
    for (const auto& [lab, e] : f.exponents) {
        if (!ctx.divides(lab.m) || lab.m == ctx.level())
            throw std::invalid_argument("label m = " + std::to_string(lab.m) + " is not in D_N");
        if (lab.h < 0 || lab.h >= ctx.ell(lab.m))
            throw std::invalid_argument("label h = " + std::to_string(lab.h) +
                                        " out of range for m = " + std::to_string(lab.m));
    }
}

/// The cusp 1/N0, N0 the odd part of N.
inline Cusp half_cusp(const LevelContext& ctx) { return ctx.canonical(1, ctx.n0()); }

inline void add_order_conditions(CriterionReport& rep, const FProduct& f, const LevelContext& ctx) {
    const CuspidalDivisor div = fproduct_divisor(f, ctx);
    const Rational deg = div.degree();
    rep.add(ConditionId::deg0, deg == 0, to_string(deg));

    Rational inf = 0, zero = 0, half = 0;
    const Cusp hc = half_cusp(ctx);
    for (const auto& [lab, e] : f.exponents) {
        inf += Rational(e) * f_order_special(lab, SpecialCusp::infinity, ctx);
        zero += Rational(e) * f_order_special(lab, SpecialCusp::zero, ctx);
        half += Rational(e) * f_order(lab, hc, ctx);
    }
    rep.add(ConditionId::inf_integral, is_integer(inf), to_string(inf));
    rep.add(ConditionId::zero_integral, is_integer(zero), to_string(zero));
    rep.add(ConditionId::half_integral, is_integer(half), to_string(half));
}

inline bool is_power_of(std::int64_t n, std::int64_t p) {
    if (n < p) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

inline void add_mod2_condition(CriterionReport& rep, const FProduct& f, const LevelContext& ctx) {
    bool pass = true;
    std::string witness;
    for (auto p : prime_divisors(ctx.level())) {
        if (p == 2) continue;
        std::int64_t s = 0;
        for (const auto& [lab, e] : f.exponents)
            if (is_power_of(ctx.data(lab.m).m_dprime, p)) s += e;
        pass = pass && s % 2 == 0;
        witness += (witness.empty() ? "" : ",") + std::to_string(p) + ":" + std::to_string(s);
    }
    rep.add(ConditionId::mod_2, pass, witness.empty() ? "none" : witness);
}

}  // namespace detail

/// sum_m m phi(m'') sum_h h e_{m,h}
inline Integer mod_l_sum(const FProduct& f, const LevelContext& ctx) {
    Integer s = 0;
    for (const auto& [lab, e] : f.exponents)
        s += Integer(lab.m) * euler_phi(ctx.data(lab.m).m_dprime) * lab.h * e;
    return s;
}

/// Necessary and sufficient conditions for an F-product to be modular on
/// X_0(N); needs L odd, squarefree and prime to phi(N/L).
inline CriterionReport thm17_check(const FProduct& f, const LevelContext& ctx) {
    require_thm17(ctx);
    detail::validate_labels(f, ctx);
    CriterionReport rep;
    detail::add_order_conditions(rep, f, ctx);
    const std::int64_t big_l = ctx.big_l();
    const Integer s = mod_l_sum(f, ctx);
    rep.add(ConditionId::mod_L, s % big_l == 0, s.str() + " mod " + std::to_string(big_l));
    detail::add_mod2_condition(rep, f, ctx);
    return rep;
}

/// Sufficient conditions for f^L to be modular on X_0(N); any level.
inline CriterionReport thm19_check(const FProduct& f, const LevelContext& ctx) {
    detail::validate_labels(f, ctx);
    CriterionReport rep;
    detail::add_order_conditions(rep, f, ctx);
    detail::add_mod2_condition(rep, f, ctx);
    return rep;
}

/// (F_{m,h} / F_{m,0})^{nL} with n = (3, L); modular whenever L is odd.
inline FProduct gunit(std::int64_t m, std::int64_t h, const LevelContext& ctx) {
    const std::int64_t big_l = ctx.big_l();
    if (big_l % 2 == 0) throw std::invalid_argument("gunit needs L odd");
    if (m == ctx.level()) throw std::invalid_argument("gunit needs m in D_N");
    const std::int64_t ell = ctx.ell(m);
    if (ell <= 1) throw std::invalid_argument("gunit needs l(m) > 1");
    if (h < 1 || h >= ell) throw std::invalid_argument("gunit needs 1 <= h <= l(m) - 1");
    const std::int64_t e = std::gcd<std::int64_t>(3, big_l) * big_l;
    FProduct f{ctx.level(), {}};
    f.multiply({m, h}, e);
    f.multiply({m, 0}, -e);
    return f;
}

}  // namespace cuspidal
