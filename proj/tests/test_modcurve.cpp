#include "cuspidal/modcurve.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

using namespace cuspidal;

namespace {

/// Cusps of X_0(N) as orbits of P^1(Z/N) under (c:d) -> (c:c+d), with widths
/// as orbit sizes. Independent of the (a, c) model.
std::multiset<std::int64_t> orbit_widths(std::int64_t n) {
    if (n == 1) return {1};
    std::vector<std::int64_t> units;
    for (std::int64_t u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) units.push_back(u);
    // projective normal form: least (c, d) over unit multiples
    auto normal = [&](std::int64_t c, std::int64_t d) {
        std::pair<std::int64_t, std::int64_t> best{n, n};
        for (auto u : units) best = std::min(best, {c * u % n, d * u % n});
        return best;
    };
    std::set<std::pair<std::int64_t, std::int64_t>> points;
    for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d)
            if (std::gcd(std::gcd(c, d), n) == 1) points.insert(normal(c, d));
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    std::multiset<std::int64_t> widths;
    for (const auto& p : points) {
        if (seen.count(p)) continue;
        std::int64_t size = 0;
        auto cur = p;
        while (seen.insert(cur).second) {
            ++size;
            cur = normal(cur.first, (cur.first + cur.second) % n);
        }
        widths.insert(size);
    }
    return widths;
}

}  // namespace

TEST(LevelContext, NineHasExpectedDivisorData) {
    const LevelContext ctx(9);
    EXPECT_EQ(ctx.data(1).ell, 3);
    EXPECT_EQ(ctx.data(1).m_dprime, 3);
    EXPECT_EQ(ctx.data(1).n_prime, 3);
    EXPECT_EQ(ctx.data(3).ell, 1);
    EXPECT_EQ(ctx.data(3).m_dprime, 3);
    EXPECT_EQ(ctx.data(3).n_prime, 9);
    EXPECT_EQ(ctx.big_l(), 3);
}

TEST(LevelContext, TwelveAtThree) {
    const LevelContext ctx(12);
    const auto& d = ctx.data(3);
    EXPECT_EQ(d.m_prime, 4);
    EXPECT_EQ(d.ell, 2);
    EXPECT_EQ(d.m_dprime, 2);
}

TEST(LevelContext, PrimeLevel) {
    const LevelContext ctx(11);
    EXPECT_EQ(ctx.big_l(), 1);
    EXPECT_EQ(ctx.proper_divisors(), (std::vector<std::int64_t>{1}));
    ASSERT_EQ(ctx.basis_labels().size(), 1u);
    EXPECT_EQ(ctx.basis_labels()[0], (FLabel{1, 0}));
}

TEST(LevelContext, RejectsBadLevels) {
    EXPECT_THROW(LevelContext(0), std::invalid_argument);
    EXPECT_THROW(LevelContext(-5), std::invalid_argument);
    EXPECT_THROW(LevelContext(kMaxLevel + 1), std::invalid_argument);
    EXPECT_THROW(LevelContext(12).data(5), std::invalid_argument);
}

TEST(LevelContext, DivisorDataInvariants) {
    for (std::int64_t n = 1; n <= 300; ++n) {
        const LevelContext ctx(n);
        for (auto m : ctx.divisors()) {
            const auto& d = ctx.data(m);
            ASSERT_EQ(m * d.ell * d.m_dprime, n);
            ASSERT_EQ((n / m) % (d.ell * d.ell), 0);
            ASSERT_TRUE(is_squarefree((n / m) / (d.ell * d.ell)));
            if (m != n) {
                ASSERT_GE(d.m_dprime, 2);
                ASSERT_EQ(d.m_dprime % d.ell, 0);
            }
        }
    }
}

TEST(LevelContext, SRepSizes) {
    for (std::int64_t n = 2; n <= 200; ++n) {
        const LevelContext ctx(n);
        for (auto m : ctx.proper_divisors()) {
            const auto mpp = ctx.data(m).m_dprime;
            const auto reps = ctx.s_rep(m);
            if (mpp <= 2)
                ASSERT_EQ(reps, (std::vector<std::int64_t>{1}));
            else
                ASSERT_EQ(static_cast<std::int64_t>(reps.size()), euler_phi(mpp) / 2);
        }
    }
}

TEST(Cusps, Examples) {
    const LevelContext c11(11);
    EXPECT_EQ(c11.cusps(), (std::vector<Cusp>{{1, 1, 1}, {1, 11, 1}}));
    const LevelContext c9(9);
    EXPECT_EQ(c9.cusps(), (std::vector<Cusp>{{1, 1, 1}, {1, 3, 3}, {2, 3, 3}, {1, 9, 1}}));
    EXPECT_EQ(LevelContext(1).cusps().size(), 1u);
}

TEST(Cusps, CountAndWidthsMatchProjectiveLineOrbits) {
    for (std::int64_t n = 1; n <= 300; ++n) {
        const LevelContext ctx(n);
        std::int64_t expected = 0;
        for (auto c : ctx.divisors()) expected += euler_phi(std::gcd(c, n / c));
        ASSERT_EQ(static_cast<std::int64_t>(ctx.cusps().size()), expected) << "N=" << n;
        std::multiset<std::int64_t> widths;
        for (const auto& p : ctx.cusps()) widths.insert(cusp_width(p, ctx));
        ASSERT_EQ(widths, orbit_widths(n)) << "N=" << n;
        ASSERT_NO_THROW(ctx.index_of(ctx.infinity()));
        ASSERT_NO_THROW(ctx.index_of(ctx.zero()));
    }
}

TEST(Cusps, CanonicalFormIsLeastCoprimeLift) {
    for (std::int64_t n = 1; n <= 200; ++n) {
        const LevelContext ctx(n);
        for (const auto& p : ctx.cusps()) {
            ASSERT_EQ(std::gcd(p.a, n), 1);
            ASSERT_EQ(p.z, std::gcd(p.c, n / p.c));
            for (std::int64_t b = 1; b < p.a; ++b)
                ASSERT_FALSE(std::gcd(b, n) == 1 && mod(b - p.a, p.z) == 0);
        }
    }
}

TEST(Cusps, Equivalence) {
    const LevelContext ctx(9);
    EXPECT_TRUE(cusp_equiv(1, 3, 4, 3, ctx));
    EXPECT_FALSE(cusp_equiv(1, 3, 2, 3, ctx));
    EXPECT_TRUE(cusp_equiv(1, 1, 5, 1, ctx));
    EXPECT_THROW(cusp_equiv(3, 3, 1, 3, ctx), std::invalid_argument);
}

TEST(Cusps, WidthsAndFields) {
    const LevelContext c18(18);
    EXPECT_EQ(cusp_width(c18.canonical(1, 3), c18), 2);
    EXPECT_EQ(cusp_width(c18.infinity(), c18), 1);
    EXPECT_EQ(cusp_width(c18.zero(), c18), 18);
    EXPECT_EQ(field_modulus(c18.infinity()), 1);
    const LevelContext c9(9);
    EXPECT_EQ(field_modulus(c9.canonical(1, 3)), 3);
    const LevelContext c50(50);
    EXPECT_EQ(field_modulus(c50.canonical(1, 5)), 5);
}

TEST(Galois, Examples) {
    const LevelContext ctx(9);
    EXPECT_EQ(galois_act(2, ctx.canonical(1, 3), ctx), ctx.canonical(2, 3));
    EXPECT_EQ(galois_act(4, ctx.canonical(2, 3), ctx), ctx.canonical(2, 3));
    for (std::int64_t s : {1, 2, 4, 5, 7, 8}) EXPECT_EQ(galois_act(s, ctx.infinity(), ctx), ctx.infinity());
    EXPECT_THROW(galois_act(3, ctx.zero(), ctx), std::invalid_argument);
}

TEST(Galois, PermutationsPreserveLevelAndCompose) {
    for (std::int64_t n = 1; n <= 200; ++n) {
        const LevelContext ctx(n);
        const auto group = galois_group(ctx);
        for (auto s : group) {
            const auto perm = galois_permutation(s, ctx);
            std::set<std::size_t> image(perm.begin(), perm.end());
            ASSERT_EQ(image.size(), perm.size()) << "N=" << n << " s=" << s;
            for (std::size_t i = 0; i < perm.size(); ++i) {
                const Cusp& p = ctx.cusps()[i];
                ASSERT_EQ(ctx.cusps()[perm[i]].c, p.c);
                if (p.z <= 2) {
                    ASSERT_EQ(perm[i], i);
                }
            }
            for (auto t : group)
                for (const auto& p : ctx.cusps())
                    ASSERT_EQ(galois_act(s, galois_act(t, p, ctx), ctx), galois_act(s * t, p, ctx));
        }
    }
}

TEST(Galois, GeneratorsSpanTheGroup) {
    for (std::int64_t n = 1; n <= 300; ++n) {
        const LevelContext ctx(n);
        const std::int64_t big_l = ctx.big_l();
        const auto gens = galois_generators(ctx);
        if (big_l <= 2) {
            ASSERT_TRUE(gens.empty());
            continue;
        }
        std::set<std::int64_t> span{1};
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto x : std::vector<std::int64_t>(span.begin(), span.end()))
                for (auto g : gens) grew |= span.insert(mod(x * g, big_l)).second;
        }
        ASSERT_EQ(static_cast<std::int64_t>(span.size()), euler_phi(big_l)) << "N=" << n;
    }
}

TEST(Galois, OrbitsAreLevels) {
    const LevelContext ctx(9);
    const auto orbit = galois_orbits(ctx);
    EXPECT_EQ(orbit[1], orbit[2]);
    EXPECT_NE(orbit[0], orbit[1]);
    EXPECT_NE(orbit[3], orbit[1]);
}

TEST(Iota, Examples) {
    const LevelContext c9(9);
    EXPECT_EQ(iota(1, c9), 3);
    EXPECT_EQ(iota(3, c9), 1);
    EXPECT_EQ(iota(9, c9), 9);
    const LevelContext c30(30);
    for (auto m : c30.divisors()) EXPECT_EQ(std::gcd(iota(m, c30), 30 / iota(m, c30)), 1);
    const LevelContext c12(12);
    std::set<std::int64_t> image;
    for (auto m : c12.divisors()) image.insert(iota(m, c12));
    EXPECT_EQ(image, std::set<std::int64_t>(c12.divisors().begin(), c12.divisors().end()));
}

TEST(Iota, BijectionMatchingEll) {
    for (std::int64_t n = 1; n <= 300; ++n) {
        const LevelContext ctx(n);
        std::set<std::int64_t> image;
        for (auto m : ctx.divisors()) {
            const auto i = iota(m, ctx);
            ASSERT_TRUE(ctx.divides(i));
            ASSERT_EQ(ctx.ell(m), std::gcd(i, n / i)) << "N=" << n << " m=" << m;
            image.insert(i);
        }
        ASSERT_EQ(image.size(), ctx.divisors().size());
    }
}

TEST(Basis, CountIsCuspsMinusOne) {
    for (std::int64_t n = 1; n <= 300; ++n) {
        const LevelContext ctx(n);
        ASSERT_EQ(ctx.basis_labels().size() + 1, ctx.cusps().size()) << "N=" << n;
    }
}

TEST(Genus, KnownValues) {
    const std::map<std::int64_t, std::int64_t> known{{1, 0},  {11, 1}, {23, 2}, {37, 2}, {25, 0},
                                                     {49, 1}, {64, 3}, {100, 7}, {97, 7}, {60, 7}};
    for (auto [n, g] : known) EXPECT_EQ(genus(n), g) << "N=" << n;
}
