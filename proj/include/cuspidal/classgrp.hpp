#pragma once

// Cuspidal divisor class groups of X_0(N): the full group C_N, the rational
// group C(N) and the Galois-fixed subgroup C_N(Q).
//
// Degree-zero divisors are handled in Z^{n-1} by dropping the coordinate of
// the last cusp (infinity); that projection is injective on degree zero.

#include "cuspidal/errors.hpp"
#include "cuspidal/etafam.hpp"
#include "cuspidal/lattice.hpp"
#include "cuspidal/modcurve.hpp"
#include "cuspidal/ntheory.hpp"
#include "cuspidal/unitcheck.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cuspidal {

namespace detail {

inline Integer common_denominator(const std::vector<Rational>& xs) {
    Integer d = 1;
    for (const auto& x : xs) d = boost::multiprecision::lcm(d, boost::multiprecision::denominator(x));
    return d;
}

/// Row of integers x_j * D and the modulus D so that row . e = 0 mod D iff
/// sum_j x_j e_j is an integer.
inline void integrality_row(const std::vector<Rational>& xs, std::vector<std::vector<Integer>>& rows,
                            std::vector<Integer>& moduli) {
    const Integer d = common_denominator(xs);
    if (d == 1) return;
    std::vector<Integer> row;
    row.reserve(xs.size());
    for (const auto& x : xs) row.push_back(boost::multiprecision::numerator(Rational(x * d)));
    rows.push_back(std::move(row));
    moduli.push_back(d);
}

inline std::vector<Integer> drop_last(std::vector<Integer> v) {
    v.pop_back();
    return v;
}

/// Integral divisors spanned by rational combinations `divs` with exponent
/// vectors from `exps`, projected to Z^{n-1}.
inline Lattice projected_image(const Lattice& exps, const std::vector<CuspidalDivisor>& divs,
                               std::size_t ncusps) {
    std::vector<std::vector<Integer>> cols;
    for (std::size_t j = 0; j < exps.rank(); ++j) {
        const auto e = exps.basis().column(j);
        std::vector<Rational> acc(ncusps);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            const Rational ek(e[k]);
            for (std::size_t i = 0; i < ncusps; ++i) acc[i] += ek * divs[k][i];
        }
        std::vector<Integer> v;
        v.reserve(ncusps);
        for (const auto& x : acc) {
            if (!is_integer(x)) throw std::logic_error("modular unit with a non-integral divisor");
            v.push_back(boost::multiprecision::numerator(x));
        }
        cols.push_back(drop_last(std::move(v)));
    }
    return Lattice::from_columns(ncusps - 1, cols);
}

}  // namespace detail

/// Exponent vectors (over ctx.all_labels()) of the modular F-products.
struct ExponentLattice {
    std::vector<FLabel> labels;
    Lattice lattice;
};

inline ExponentLattice unit_exponent_lattice(const LevelContext& ctx) {
    require_thm17(ctx);
    ExponentLattice out{ctx.all_labels(), {}};
    const auto& labels = out.labels;
    const std::size_t k = labels.size();
    std::vector<std::vector<Integer>> rows;
    std::vector<Integer> moduli;

    std::vector<Rational> inf, zero, half;
    const Cusp hc = detail::half_cusp(ctx);
    for (const auto& f : labels) {
        inf.push_back(f_order_special(f, SpecialCusp::infinity, ctx));
        zero.push_back(f_order_special(f, SpecialCusp::zero, ctx));
        half.push_back(f_order(f, hc, ctx));
    }
    detail::integrality_row(inf, rows, moduli);
    detail::integrality_row(zero, rows, moduli);
    detail::integrality_row(half, rows, moduli);

    const std::int64_t big_l = ctx.big_l();
    if (big_l > 1) {
        std::vector<Integer> row;
        for (const auto& f : labels)
            row.push_back(Integer(f.m) * euler_phi(ctx.data(f.m).m_dprime) * f.h);
        rows.push_back(std::move(row));
        moduli.push_back(big_l);
    }
    for (auto p : prime_divisors(ctx.level())) {
        if (p == 2) continue;
        std::vector<Integer> row;
        for (const auto& f : labels) row.push_back(detail::is_power_of(ctx.data(f.m).m_dprime, p) ? 1 : 0);
        rows.push_back(std::move(row));
        moduli.push_back(2);
    }
    out.lattice = rows.empty() ? Lattice::full(k) : congruence_kernel(rows, moduli, k);
    return out;
}

/// Exponent vectors (over ctx.divisors()) of eta quotients passing the Ligozat test.
inline Lattice ligozat_exponent_lattice(const LevelContext& ctx) {
    const auto& ds = ctx.divisors();
    const std::size_t k = ds.size();
    const std::int64_t n = ctx.level();
    std::vector<std::vector<Integer>> rows;
    std::vector<Integer> moduli;
    std::vector<Integer> ones(k, 1), by_d, by_nd;
    for (auto d : ds) {
        by_d.push_back(d);
        by_nd.push_back(n / d);
    }
    rows.push_back(ones);
    moduli.push_back(0);
    rows.push_back(by_d);
    moduli.push_back(24);
    rows.push_back(by_nd);
    moduli.push_back(24);
    for (auto p : prime_divisors(n)) {
        std::vector<Integer> row;
        for (auto d : ds) {
            std::int64_t v = 0;
            for (std::int64_t t = d; t % p == 0; t /= p) ++v;
            row.push_back(v);
        }
        rows.push_back(std::move(row));
        moduli.push_back(2);
    }
    return congruence_kernel(rows, moduli, k);
}

/// Lattices shared by the class group computations at one level, all in Z^{n-1}.
struct CuspidalLattices {
    std::int64_t level = 0;
    bool all_rational = false;  // every cusp is defined over Q (L <= 2)
    Lattice degree_zero;        // all degree-zero divisors
    Lattice rational;           // Galois-stable degree-zero divisors
    Lattice eta;                // divisors of Ligozat eta quotients
    Lattice units;              // divisors of all modular units
};

inline Lattice degree_zero_lattice(const LevelContext& ctx) {
    return Lattice::full(ctx.cusps().size() - 1);
}

inline Lattice rational_degree_zero_lattice(const LevelContext& ctx) {
    const std::size_t n = ctx.cusps().size();
    const auto orbit = galois_orbits(ctx);
    std::size_t norb = 0;
    for (auto o : orbit) norb = std::max(norb, o + 1);
    std::vector<Integer> sizes(norb, 0);
    for (auto o : orbit) sizes[o] += 1;
    const Lattice kern = congruence_kernel({sizes}, {Integer(0)}, norb);
    std::vector<std::vector<Integer>> cols;
    for (std::size_t j = 0; j < kern.rank(); ++j) {
        const auto k = kern.basis().column(j);
        std::vector<Integer> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = k[orbit[i]];
        cols.push_back(detail::drop_last(std::move(v)));
    }
    return Lattice::from_columns(n - 1, cols);
}

inline Lattice eta_divisor_lattice(const LevelContext& ctx) {
    std::vector<CuspidalDivisor> divs;
    for (auto d : ctx.divisors()) divs.push_back(eta_quotient_divisor(EtaQuotient{ctx.level(), {{d, 1}}}, ctx));
    return detail::projected_image(ligozat_exponent_lattice(ctx), divs, ctx.cusps().size());
}

/// Divisors of modular units. Needs the iff-criterion, except when every cusp
/// is rational, where the Ligozat eta quotients already give every unit.
inline Lattice unit_divisor_lattice(const LevelContext& ctx) {
    if (!thm17_applies(ctx) && ctx.big_l() <= 2) return eta_divisor_lattice(ctx);
    const auto exps = unit_exponent_lattice(ctx);
    std::vector<CuspidalDivisor> divs;
    for (const auto& f : exps.labels) divs.push_back(f_divisor(f, ctx));
    return detail::projected_image(exps.lattice, divs, ctx.cusps().size());
}

inline CuspidalLattices cuspidal_lattices(const LevelContext& ctx) {
    CuspidalLattices out;
    out.level = ctx.level();
    out.all_rational = ctx.big_l() <= 2;
    out.degree_zero = degree_zero_lattice(ctx);
    out.rational = rational_degree_zero_lattice(ctx);
    out.eta = eta_divisor_lattice(ctx);
    out.units = out.all_rational && !thm17_applies(ctx) ? out.eta : unit_divisor_lattice(ctx);
    return out;
}

/// {x : sigma_s(x) - x in units for every Galois generator s}.
inline Lattice galois_fixed_lattice(const LevelContext& ctx, const Lattice& units) {
    const std::size_t n = ctx.cusps().size(), dim = n - 1;
    const auto gens = galois_generators(ctx);
    if (gens.empty() || dim == 0) return Lattice::full(dim);
    const auto res = snf(units.basis());
    std::vector<std::vector<Integer>> rows;
    std::vector<Integer> moduli;
    for (auto s : gens) {
        const auto perm = galois_permutation(s, ctx);
        // T_s - I on the basis e_i - e_{n-1}, i < n-1
        IntMatrix t(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (perm[i] < dim) t(perm[i], i) += 1;
            if (perm[n - 1] < dim) t(perm[n - 1], i) -= 1;
            t(i, i) -= 1;
        }
        const IntMatrix ut = res.u * t;
        for (std::size_t r = 0; r < dim; ++r) {
            if (res.diagonal[r] == 1) continue;
            std::vector<Integer> row(dim);
            for (std::size_t c = 0; c < dim; ++c) row[c] = ut(r, c);
            rows.push_back(std::move(row));
            moduli.push_back(res.diagonal[r]);
        }
    }
    if (rows.empty()) return Lattice::full(dim);
    return congruence_kernel(rows, moduli, dim);
}

/// C_N: degree-zero cuspidal divisors modulo principal ones.
inline AbelianGroup full_cuspidal_group(const LevelContext& ctx) {
    return quotient_group(degree_zero_lattice(ctx), unit_divisor_lattice(ctx));
}

/// C(N): rational degree-zero cuspidal divisors modulo divisors of eta quotients.
inline AbelianGroup rational_cuspidal_group(const LevelContext& ctx) {
    return quotient_group(rational_degree_zero_lattice(ctx), eta_divisor_lattice(ctx));
}

/// C_N(Q): classes in C_N fixed by Gal(Q(zeta_L)/Q).
inline AbelianGroup rational_cuspidal_subgroup(const LevelContext& ctx) {
    const Lattice units = unit_divisor_lattice(ctx);
    return quotient_group(galois_fixed_lattice(ctx, units), units);
}

/// Whether D is the divisor of a modular unit.
inline bool principality_test(const CuspidalDivisor& d, const LevelContext& ctx) {
    if (d.level() != ctx.level() || d.size() != ctx.cusps().size())
        throw std::invalid_argument("divisor is not on this level");
    if (!d.is_integral()) throw NonIntegral("divisor has a non-integral coefficient");
    if (d.degree() != 0) throw NonZeroDegree("divisor has degree " + to_string(d.degree()));
    return unit_divisor_lattice(ctx).contains(detail::drop_last(d.integer_vector()));
}

struct MainTheoremReport {
    std::int64_t level = 0;
    bool holds = false;
    bool all_rational = false;     // L <= 2, nothing to prove
    bool fixed_is_rational = false;  // C_N(Q) and C(N) given by the same sublattice
    bool eta_is_rational_units = false;  // Ligozat divisors are exactly the rational principal ones
    AbelianGroup rational;          // C(N)
    AbelianGroup fixed;             // C_N(Q)
    AbelianGroup full;              // C_N
};

/// Checks C_N(Q) = C(N): the Galois-fixed classes are exactly the classes of
/// rational divisors, and rational principal divisors are eta-quotient divisors.
inline MainTheoremReport verify_main_theorem(const LevelContext& ctx) {
    MainTheoremReport rep;
    rep.level = ctx.level();
    rep.all_rational = ctx.big_l() <= 2;
    if (!rep.all_rational) require_thm17(ctx);
    const auto lat = cuspidal_lattices(ctx);
    rep.rational = quotient_group(lat.rational, lat.eta);
    rep.full = quotient_group(lat.degree_zero, lat.units);
    const Lattice fixed = galois_fixed_lattice(ctx, lat.units);
    rep.fixed = quotient_group(fixed, lat.units);

    const Lattice rational_plus_units = lat.rational + lat.units;
    rep.fixed_is_rational = fixed == rational_plus_units;
    // eta <= rational meet units, with equality iff the indices agree
    rep.eta_is_rational_units = lat.units.contains(lat.eta) &&
                                quotient_group(rational_plus_units, lat.units) == rep.rational;
    rep.holds = rep.fixed_is_rational && rep.eta_is_rational_units && rep.fixed == rep.rational;
    return rep;
}

/// Rational representative of a Galois-stable class of q-power order:
/// returns (k, D') with D' = sum_s sigma_s(D) and D - k D' principal.
struct Rationalization {
    Integer k;
    CuspidalDivisor rational;
};

inline Rationalization averaging_rationalize(const CuspidalDivisor& d, const Integer& q_power,
                                             const LevelContext& ctx) {
    if (q_power < 2) throw std::invalid_argument("class order must be a prime power > 1");
    const auto f = factorize(static_cast<std::int64_t>(q_power));
    if (f.size() != 1) throw std::invalid_argument("class order must be a prime power");
    const std::int64_t q = f.begin()->first;
    const std::int64_t big_l = ctx.big_l();
    const std::int64_t phi = euler_phi(big_l);
    if (std::gcd(q, phi) != 1)
        throw BadOrder("q = " + std::to_string(q) + " is not prime to phi(L) = " + std::to_string(phi));
    if (!d.is_integral()) throw NonIntegral("divisor has a non-integral coefficient");
    if (d.degree() != 0) throw NonZeroDegree("divisor has degree " + to_string(d.degree()));

    const Lattice units = unit_divisor_lattice(ctx);
    auto principal = [&](const CuspidalDivisor& x) {
        return units.contains(detail::drop_last(x.integer_vector()));
    };
    if (!principal(Rational(q_power) * d))
        throw BadOrder("class order does not divide " + q_power.str());

    const auto group = galois_group(ctx);
    CuspidalDivisor sum(ctx);
    for (auto s : group) {
        const CuspidalDivisor img = d.galois_image(s, ctx);
        if (!principal(img - d))
            throw NotGaloisStable("class is moved by sigma_" + std::to_string(s));
        sum += img;
    }
    const std::int64_t qp = static_cast<std::int64_t>(q_power);
    Rationalization out{inverse_mod(mod(phi, qp), qp), sum};
    if (!principal(d - Rational(out.k) * sum))
        throw std::logic_error("averaged divisor is not in the same class");
    return out;
}

}  // namespace cuspidal
