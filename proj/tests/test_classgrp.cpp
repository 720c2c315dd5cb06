#include "cuspidal/classgrp.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cuspidal;

namespace {

using Vec = std::vector<Integer>;

AbelianGroup cyclic(long long n) { return AbelianGroup::from_diagonal({Integer(n)}); }

AbelianGroup group_of(std::initializer_list<long long> ds) {
    Vec v;
    for (auto d : ds) v.push_back(d);
    return AbelianGroup::from_diagonal(v);
}

/// Degree-zero divisor from its first n-1 coordinates.
CuspidalDivisor from_coords(const LevelContext& ctx, const Vec& x) {
    Vec full = x;
    Integer s = 0;
    for (const auto& c : x) s += c;
    full.push_back(-s);
    return CuspidalDivisor::from_integers(ctx, full);
}

Vec random_member(std::mt19937_64& rng, const Lattice& l) {
    std::uniform_int_distribution<int> c(-4, 4);
    Vec y(l.rank());
    for (auto& v : y) v = c(rng);
    return l.basis() * y;
}

bool is_prime(std::int64_t n) { return n > 1 && factorize(n).size() == 1 && factorize(n).begin()->second == 1; }

}  // namespace

TEST(UnitExponentLattice, Eleven) {
    const auto e = unit_exponent_lattice(LevelContext(11));
    ASSERT_EQ(e.labels, (std::vector<FLabel>{{1, 0}}));
    EXPECT_EQ(e.lattice, Lattice::from_columns(1, {{12}}));
}

TEST(UnitExponentLattice, Nine) {
    const LevelContext ctx(9);
    const auto e = unit_exponent_lattice(ctx);
    ASSERT_EQ(e.labels, (std::vector<FLabel>{{1, 0}, {1, 1}, {1, 2}, {3, 0}}));
    EXPECT_TRUE(e.lattice.contains(Vec{0, 12, 0, 0}));
    EXPECT_TRUE(e.lattice.contains(Vec{0, 0, 12, 0}));
    for (std::size_t j = 0; j < e.lattice.rank(); ++j) {
        FProduct f{9, {}};
        const auto col = e.lattice.basis().column(j);
        for (std::size_t i = 0; i < col.size(); ++i)
            f.multiply(e.labels[i], static_cast<std::int64_t>(col[i]));
        EXPECT_TRUE(thm17_check(f, ctx).overall);
    }
}

TEST(UnitExponentLattice, RequiresHypotheses) {
    EXPECT_THROW(unit_exponent_lattice(LevelContext(63)), HypothesisNotMet);
    EXPECT_THROW(full_cuspidal_group(LevelContext(63)), HypothesisNotMet);
    EXPECT_THROW(verify_main_theorem(LevelContext(63)), HypothesisNotMet);
    EXPECT_NO_THROW(rational_cuspidal_group(LevelContext(63)));
}

TEST(UnitDivisorLattice, Examples) {
    const LevelContext c11(11);
    EXPECT_EQ(unit_divisor_lattice(c11), Lattice::from_columns(1, {{5}}));
    const LevelContext c9(9);
    EXPECT_EQ(unit_divisor_lattice(c9), degree_zero_lattice(c9));
}

TEST(Groups, SmallLevels) {
    const LevelContext c11(11);
    EXPECT_EQ(full_cuspidal_group(c11), cyclic(5));
    EXPECT_EQ(rational_cuspidal_group(c11), cyclic(5));
    EXPECT_EQ(rational_cuspidal_subgroup(c11), cyclic(5));
    for (std::int64_t n : {9, 25}) {
        const LevelContext ctx(n);
        EXPECT_TRUE(full_cuspidal_group(ctx).trivial());
        EXPECT_TRUE(rational_cuspidal_group(ctx).trivial());
        EXPECT_TRUE(rational_cuspidal_subgroup(ctx).trivial());
    }
}

TEST(Groups, FrozenValues) {
    // computed values, cross-checked by the subgroup chain and the verifier
    EXPECT_EQ(rational_cuspidal_group(LevelContext(30)), group_of({2, 4, 24}));
    EXPECT_EQ(full_cuspidal_group(LevelContext(49)), group_of({2, 14}));
    EXPECT_EQ(rational_cuspidal_group(LevelContext(49)), cyclic(2));
    EXPECT_EQ(rational_cuspidal_group(LevelContext(50)), cyclic(15));
    EXPECT_EQ(full_cuspidal_group(LevelContext(50)), group_of({15, 15}));
    EXPECT_EQ(rational_cuspidal_group(LevelContext(37)), cyclic(3));
    EXPECT_EQ(rational_cuspidal_group(LevelContext(97)), cyclic(8));
}

TEST(Groups, PrimeLevelsMatchNumeratorFormula) {
    for (std::int64_t p = 2; p <= 100; ++p) {
        if (!is_prime(p)) continue;
        const LevelContext ctx(p);
        const Integer expected = boost::multiprecision::numerator(Rational(Integer(p - 1), Integer(12)));
        const auto g = rational_cuspidal_group(ctx);
        EXPECT_TRUE(g.cyclic()) << "p=" << p;
        EXPECT_EQ(g.order(), expected) << "p=" << p;
        EXPECT_EQ(full_cuspidal_group(ctx), g) << "p=" << p;
    }
}

TEST(Groups, GenusZeroLevelsAreTrivial) {
    for (std::int64_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25}) {
        const LevelContext ctx(n);
        EXPECT_TRUE(rational_cuspidal_group(ctx).trivial()) << "N=" << n;
        if (thm17_applies(ctx) || ctx.big_l() <= 2) {
            EXPECT_TRUE(full_cuspidal_group(ctx).trivial()) << "N=" << n;
        }
    }
}

TEST(Groups, SubgroupChainUpTo150) {
    for (std::int64_t n = 1; n <= 150; ++n) {
        const LevelContext ctx(n);
        if (!thm17_applies(ctx) && ctx.big_l() > 2) continue;
        const auto lat = cuspidal_lattices(ctx);
        const Lattice fixed = galois_fixed_lattice(ctx, lat.units);
        // eta <= units, rational + units <= fixed <= degree zero
        ASSERT_TRUE(lat.units.contains(lat.eta)) << "N=" << n;
        ASSERT_TRUE(fixed.contains(lat.rational + lat.units)) << "N=" << n;
        ASSERT_TRUE(lat.degree_zero.contains(fixed)) << "N=" << n;
        const auto c = quotient_group(lat.rational, lat.eta).order();
        const auto cq = quotient_group(fixed, lat.units).order();
        const auto cn = quotient_group(lat.degree_zero, lat.units).order();
        ASSERT_EQ(cq % c, 0) << "N=" << n;
        ASSERT_EQ(cn % cq, 0) << "N=" << n;
    }
}

TEST(Groups, UnitsPreserveOrbitSums) {
    // the units lattice meets the rational lattice exactly in the eta lattice
    for (std::int64_t n : {9, 25, 45, 49, 50, 75, 98}) {
        const LevelContext ctx(n);
        const auto lat = cuspidal_lattices(ctx);
        const auto a = quotient_group(lat.rational, lat.eta);
        const auto b = quotient_group(lat.rational + lat.units, lat.units);
        EXPECT_EQ(a, b) << "N=" << n;
    }
}

TEST(MainTheorem, PrimePowerTimesSquarefreeLevels) {
    for (std::int64_t n : {9, 18, 25, 45, 49, 50, 75, 98}) {
        const auto rep = verify_main_theorem(LevelContext(n));
        EXPECT_TRUE(rep.holds) << "N=" << n;
        EXPECT_TRUE(rep.fixed_is_rational) << "N=" << n;
        EXPECT_TRUE(rep.eta_is_rational_units) << "N=" << n;
        EXPECT_EQ(rep.fixed, rep.rational) << "N=" << n;
    }
}

TEST(MainTheorem, SquarefreeLevelsHaveAllGroupsEqual) {
    for (std::int64_t n : {30, 33, 42, 66, 70}) {
        const auto rep = verify_main_theorem(LevelContext(n));
        EXPECT_TRUE(rep.holds);
        EXPECT_TRUE(rep.all_rational);
        EXPECT_EQ(rep.rational, rep.fixed);
        EXPECT_EQ(rep.fixed, rep.full);
    }
}

TEST(MainTheorem, FrozenGroups) {
    const auto r49 = verify_main_theorem(LevelContext(49));
    EXPECT_EQ(r49.fixed, cyclic(2));
    EXPECT_EQ(r49.full, group_of({2, 14}));
    const auto r75 = verify_main_theorem(LevelContext(75));
    EXPECT_EQ(r75.rational, group_of({2, 4, 40}));
    EXPECT_EQ(r75.full, group_of({2, 4, 80, 80}));
}

TEST(Principality, Eleven) {
    const LevelContext ctx(11);
    // cusps (1,1) = 0 and (1,11) = infinity
    EXPECT_TRUE(principality_test(CuspidalDivisor::from_integers(ctx, {5, -5}), ctx));
    EXPECT_FALSE(principality_test(CuspidalDivisor::from_integers(ctx, {1, -1}), ctx));
    EXPECT_TRUE(principality_test(CuspidalDivisor(ctx), ctx));
    EXPECT_THROW(principality_test(CuspidalDivisor::from_integers(ctx, {1, 0}), ctx), NonZeroDegree);
    EXPECT_THROW(principality_test(CuspidalDivisor(11, {make_rational(1, 2), make_rational(-1, 2)}), ctx),
                 NonIntegral);
}

TEST(Principality, EtaQuotientDivisorsAreUnits) {
    for (std::int64_t n : {9, 25, 45, 49, 75}) {
        const LevelContext ctx(n);
        const auto lat = ligozat_exponent_lattice(ctx);
        const auto ds = ctx.divisors();
        for (std::size_t j = 0; j < lat.rank(); ++j) {
            EtaQuotient q{n, {}};
            const auto col = lat.basis().column(j);
            for (std::size_t i = 0; i < ds.size(); ++i) q.multiply(ds[i], static_cast<std::int64_t>(col[i]));
            EXPECT_TRUE(principality_test(eta_quotient_divisor(q, ctx), ctx)) << "N=" << n;
        }
    }
}

TEST(Averaging, LevelOneGaloisIsIdentity) {
    const LevelContext ctx(11);
    const auto r = averaging_rationalize(CuspidalDivisor::from_integers(ctx, {1, -1}), 5, ctx);
    EXPECT_EQ(r.k, 1);
    EXPECT_EQ(r.rational, CuspidalDivisor::from_integers(ctx, {1, -1}));
}

TEST(Averaging, RationalInputScalesByPhi) {
    const LevelContext ctx(49);
    // the class of (0) - (infinity) is rational
    CuspidalDivisor d(ctx);
    d[ctx.index_of(ctx.zero())] = 1;
    d[ctx.index_of(ctx.infinity())] = -1;
    // its class has order dividing 2 in C(49); 2 is not prime to phi(7)
    EXPECT_THROW(averaging_rationalize(d, 2, ctx), BadOrder);
    const CuspidalDivisor d7 = Rational(2) * d;  // principal, so any order works
    const auto r = averaging_rationalize(d7, 7, ctx);
    EXPECT_EQ(r.rational, Rational(6) * d7);
    EXPECT_EQ(mod(static_cast<std::int64_t>(r.k) * 6, 7), 1);
}

namespace {

/// Random Galois-stable classes, multiplied by `kill` so that their order is a
/// power of q; returns how many were nontrivial.
int check_averaging(std::int64_t n, std::int64_t q, std::int64_t kill) {
    const LevelContext ctx(n);
    const Lattice units = unit_divisor_lattice(ctx);
    const Lattice fixed = galois_fixed_lattice(ctx, units);
    const auto orbit = galois_orbits(ctx);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    int nontrivial = 0;
    for (int t = 0; t < 40; ++t) {
        Vec x = random_member(rng, fixed);
        for (auto& c : x) c *= kill;
        const CuspidalDivisor d = from_coords(ctx, x);
        nontrivial += !principality_test(d, ctx);
        const auto r = averaging_rationalize(d, q, ctx);
        EXPECT_TRUE(principality_test(d - Rational(r.k) * r.rational, ctx)) << "N=" << n;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (std::size_t j = 0; j < orbit.size(); ++j)
                if (orbit[i] == orbit[j]) {
                    EXPECT_EQ(r.rational[i], r.rational[j]) << "N=" << n;
                }
    }
    return nontrivial;
}

}  // namespace

TEST(Averaging, FortyNineSevenPowerClasses) {
    // C_N(Q) = Z/2 here, so every stable 7-power class is already trivial
    EXPECT_EQ(check_averaging(49, 7, 2), 0);
}

TEST(Averaging, SeventyFiveFivePowerClasses) {
    // C_N(Q) = Z/2 + Z/4 + Z/40 and phi(5) = 4 is prime to 5
    EXPECT_GT(check_averaging(75, 5, 8), 0);
}

TEST(Averaging, RejectsUnstableClasses) {
    const LevelContext ctx(49);
    // twice (1/7) - (infinity) has order dividing 7 in Z/2 + Z/14
    CuspidalDivisor d(ctx);
    d[ctx.index_of(ctx.canonical(1, 7))] = 2;
    d[ctx.index_of(ctx.infinity())] = -2;
    bool stable = true;
    for (auto s : galois_group(ctx))
        stable = stable && principality_test(d.galois_image(s, ctx) - d, ctx);
    if (stable)
        EXPECT_NO_THROW(averaging_rationalize(d, 7, ctx));
    else
        EXPECT_THROW(averaging_rationalize(d, 7, ctx), NotGaloisStable);
    EXPECT_THROW(averaging_rationalize(d, 6, ctx), std::invalid_argument);
    EXPECT_THROW(averaging_rationalize(d, 1, ctx), std::invalid_argument);
}
