#pragma once

// JSON forms of divisors, criterion reports, groups and cusp tables. Numbers
// are decimal strings so rationals and big integers stay exact.

#include "cuspidal/classgrp.hpp"
#include "cuspidal/etafam.hpp"
#include "cuspidal/lattice.hpp"
#include "cuspidal/modcurve.hpp"
#include "cuspidal/unitcheck.hpp"

#include "json.hpp"

#include <string>

namespace cuspidal {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& x) {
    return {{"num", boost::multiprecision::numerator(x).str()},
            {"den", boost::multiprecision::denominator(x).str()}};
}

inline Json cusp_json(const Cusp& p) {
    return {{"a", std::to_string(p.a)}, {"c", std::to_string(p.c)}};
}

inline Json divisor_json(const CuspidalDivisor& d, const LevelContext& ctx) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < d.size(); ++i)
        entries.push_back({{"cusp", cusp_json(ctx.cusps()[i])}, {"order", rational_json(d[i])}});
    return {{"level", std::to_string(ctx.level())},
            {"entries", std::move(entries)},
            {"degree", rational_json(d.degree())}};
}

inline Json report_json(const CriterionReport& rep) {
    Json conds = Json::array();
    for (const auto& c : rep.conditions)
        conds.push_back({{"id", to_string(c.id)}, {"pass", c.pass}, {"witness", c.witness}});
    return {{"overall", rep.overall}, {"conditions", std::move(conds)}};
}

inline Json group_json(std::int64_t level, const std::string& kind, const AbelianGroup& g) {
    Json factors = Json::array();
    for (const auto& d : g.invariant_factors) factors.push_back(d.str());
    return {{"level", std::to_string(level)}, {"kind", kind}, {"invariant_factors", std::move(factors)}};
}

inline Json cusps_json(const LevelContext& ctx) {
    const auto orbit = galois_orbits(ctx);
    Json rows = Json::array();
    for (std::size_t i = 0; i < ctx.cusps().size(); ++i) {
        const Cusp& p = ctx.cusps()[i];
        rows.push_back({{"a", std::to_string(p.a)},
                        {"c", std::to_string(p.c)},
                        {"width", std::to_string(cusp_width(p, ctx))},
                        {"z", std::to_string(field_modulus(p))},
                        {"orbit", std::to_string(orbit[i])}});
    }
    return {{"level", std::to_string(ctx.level())}, {"cusps", std::move(rows)}};
}

}  // namespace cuspidal
