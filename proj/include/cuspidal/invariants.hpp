#pragma once

// Internal consistency suites over the F_{m,h} family at one level. Each
// returns a list of failure descriptions; empty means the suite passed.

#include "cuspidal/etafam.hpp"
#include "cuspidal/modcurve.hpp"
#include "cuspidal/ntheory.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace cuspidal {

using Failures = std::vector<std::string>;

namespace detail {

template <class T>
std::string describe(const LevelContext& ctx, const FLabel& f, const T& what) {
    std::ostringstream os;
    os << "N=" << ctx.level() << " " << f << ": " << what;
    return os.str();
}

}  // namespace detail

/// Every F_{m,h} has a degree-zero divisor.
inline Failures check_degree_zero(const LevelContext& ctx) {
    Failures out;
    for (const auto& f : ctx.all_labels()) {
        const Rational deg = f_divisor(f, ctx).degree();
        if (deg != 0) out.push_back(detail::describe(ctx, f, "degree " + to_string(deg)));
    }
    return out;
}

/// F_{m,0} agrees with prod_{k | m''} eta(k m)^{mu(k)} at every cusp.
inline Failures check_eta_identity(const LevelContext& ctx) {
    Failures out;
    for (auto m : ctx.proper_divisors()) {
        const FLabel f{m, 0};
        if (!(f_divisor(f, ctx) == eta_quotient_divisor(f0_eta_quotient(m, ctx), ctx)))
            out.push_back(detail::describe(ctx, f, "differs from its eta quotient"));
    }
    return out;
}

/// sigma_s(div F_{m,h}) = div F_{m, s h} for every s in (Z/L)^x.
inline Failures check_galois_equivariance(const LevelContext& ctx) {
    Failures out;
    const auto group = galois_group(ctx);
    for (const auto& f : ctx.all_labels()) {
        const CuspidalDivisor d = f_divisor(f, ctx);
        const std::int64_t ell = ctx.ell(f.m);
        for (auto s : group) {
            const FLabel g{f.m, mod(s * f.h, ell)};
            if (!(d.galois_image(s, ctx) == f_divisor(g, ctx)))
                out.push_back(detail::describe(ctx, f, "not equivariant under s=" + std::to_string(s)));
        }
    }
    return out;
}

/// The closed forms at infinity, 0 and (for N = 2 N0) 1/N0 match the general formula.
inline Failures check_closed_forms(const LevelContext& ctx) {
    Failures out;
    const std::int64_t n = ctx.level();
    const bool half = n % 2 == 0 && (n / 2) % 2 == 1;
    for (const auto& f : ctx.all_labels()) {
        if (f_order_special(f, SpecialCusp::infinity, ctx) != f_order(f, ctx.infinity(), ctx))
            out.push_back(detail::describe(ctx, f, "closed form at infinity"));
        if (f_order_special(f, SpecialCusp::zero, ctx) != f_order(f, ctx.zero(), ctx))
            out.push_back(detail::describe(ctx, f, "closed form at 0"));
        if (half && f_order_special(f, SpecialCusp::half, ctx) !=
                        f_order(f, ctx.canonical(1, ctx.n0()), ctx))
            out.push_back(detail::describe(ctx, f, "closed form at 1/N0"));
    }
    return out;
}

/// For m'' = 2 the eta forms agree with the general order formula.
inline Failures check_m2_forms(const LevelContext& ctx) {
    Failures out;
    for (const auto& f : ctx.all_labels()) {
        if (ctx.data(f.m).m_dprime != 2) continue;
        for (const auto& p : ctx.cusps())
            if (f_order(f, p, ctx) != detail::bernoulli_order(f, p, ctx))
                out.push_back(detail::describe(ctx, f, "eta form differs at a cusp of level " +
                                                           std::to_string(p.c)));
    }
    return out;
}

/// The expansion at infinity starts at the closed-form order and reads
/// 1 - zeta_l^h q^m + O(q^{m+1}) after normalization.
inline Failures check_qexpansion(const LevelContext& ctx) {
    Failures out;
    for (const auto& f : ctx.all_labels()) {
        const auto precision = static_cast<std::size_t>(f.m) + 1;
        const QSeries s = f_qexpansion(f, precision, ctx);
        const auto& ring = s.ring();
        if (s.leading_exponent() != f_order_special(f, SpecialCusp::infinity, ctx))
            out.push_back(detail::describe(ctx, f, "leading exponent " + to_string(s.leading_exponent())));
        if (s.coefficient(0) != ring.one())
            out.push_back(detail::describe(ctx, f, "leading coefficient " + ring.str(s.coefficient(0))));
        for (std::size_t k = 1; k < precision - 1; ++k)
            if (!CyclotomicRing::is_zero(s.coefficient(k)))
                out.push_back(detail::describe(ctx, f, "nonzero q^" + std::to_string(k) + " coefficient"));
        if (s.coefficient(precision - 1) != CyclotomicRing::neg(ring.zeta_power(f.h)))
            out.push_back(detail::describe(ctx, f, "q^m coefficient " + ring.str(s.coefficient(precision - 1))));
    }
    return out;
}

/// |S(N)| = #cusps - 1.
inline Failures check_basis_count(const LevelContext& ctx) {
    const std::size_t basis = ctx.basis_labels().size(), ncusps = ctx.cusps().size();
    if (basis + 1 == ncusps) return {};
    return {"N=" + std::to_string(ctx.level()) + ": |S(N)| = " + std::to_string(basis) + " but " +
            std::to_string(ncusps) + " cusps"};
}

}  // namespace cuspidal
