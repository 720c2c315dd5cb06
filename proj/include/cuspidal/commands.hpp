#pragma once

// Command implementations behind the CLI. Each returns its exit code and the
// text written to stdout and stderr, so they can be tested without a process.

#include "cuspidal/classgrp.hpp"
#include "cuspidal/errors.hpp"
#include "cuspidal/expr.hpp"
#include "cuspidal/invariants.hpp"
#include "cuspidal/json_io.hpp"
#include "cuspidal/modcurve.hpp"
#include "cuspidal/unitcheck.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace cuspidal {

enum ExitCode : int {
    kExitPass = 0,
    kExitFail = 1,
    kExitHypothesis = 2,
    kExitUsage = 64,
    kExitParse = 65,
};

struct CommandResult {
    int exit_code = kExitPass;
    std::string out;
    std::string err;
};

inline std::string cusp_label(const Cusp& p, const LevelContext& ctx) {
    if (p == ctx.infinity()) return "inf";
    if (p == ctx.zero()) return "0";
    return std::to_string(p.a) + "/" + std::to_string(p.c);
}

namespace detail {

/// Runs `body` and maps library exceptions to exit codes.
template <class F>
CommandResult guarded(F&& body) {
    CommandResult r;
    try {
        body(r);
    } catch (const ParseError& e) {
        r.exit_code = kExitParse;
        r.err += "parse error: " + std::string(e.what()) + "\n";
    } catch (const BindError& e) {
        r.exit_code = kExitParse;
        r.err += "bind error: " + std::string(e.what()) + "\n";
    } catch (const HypothesisNotMet& e) {
        r.exit_code = kExitHypothesis;
        r.err += "hypothesis not met: " + std::string(e.what()) + "\n";
    } catch (const std::overflow_error& e) {
        r.exit_code = kExitParse;
        r.err += "parse error: " + std::string(e.what()) + "\n";
    } catch (const std::invalid_argument& e) {
        r.exit_code = kExitUsage;
        r.err += "error: " + std::string(e.what()) + "\n";
    } catch (const std::domain_error& e) {
        r.exit_code = kExitUsage;
        r.err += "error: " + std::string(e.what()) + "\n";
    }
    return r;
}

inline BoundExpression parse_and_bind(const std::string& text, const LevelContext& ctx, CommandResult& r) {
    BoundExpression b = bind(parse(text), ctx);
    for (const auto& w : b.warnings) r.err += "warning: " + w + "\n";
    return b;
}

}  // namespace detail

inline CommandResult cmd_cusps(std::int64_t level, bool json) {
    return detail::guarded([&](CommandResult& r) {
        const LevelContext ctx(level);
        if (json) {
            r.out = cusps_json(ctx).dump(2) + "\n";
            return;
        }
        const auto orbit = galois_orbits(ctx);
        std::ostringstream os;
        os << "cusp\ta\tc\twidth\tz\torbit\n";
        for (std::size_t i = 0; i < ctx.cusps().size(); ++i) {
            const Cusp& p = ctx.cusps()[i];
            os << cusp_label(p, ctx) << "\t" << p.a << "\t" << p.c << "\t" << cusp_width(p, ctx) << "\t"
               << p.z << "\t" << orbit[i] << "\n";
        }
        r.out = os.str();
    });
}

inline CommandResult cmd_divisor(std::int64_t level, const std::string& expr, bool json) {
    return detail::guarded([&](CommandResult& r) {
        const LevelContext ctx(level);
        const BoundExpression b = detail::parse_and_bind(expr, ctx, r);
        const CuspidalDivisor d = b.divisor(ctx);
        if (json) {
            r.out = divisor_json(d, ctx).dump(2) + "\n";
            return;
        }
        std::ostringstream os;
        for (std::size_t i = 0; i < d.size(); ++i)
            os << cusp_label(ctx.cusps()[i], ctx) << ": " << to_string(d[i]) << "\n";
        os << "degree: " << to_string(d.degree()) << "\n";
        r.out = os.str();
    });
}

enum class Criterion { ligozat, thm17, thm19 };

inline std::optional<Criterion> parse_criterion(const std::string& s) {
    if (s == "ligozat") return Criterion::ligozat;
    if (s == "thm17") return Criterion::thm17;
    if (s == "thm19") return Criterion::thm19;
    return std::nullopt;
}

inline std::string render_report(const CriterionReport& rep) {
    std::ostringstream os;
    for (const auto& c : rep.conditions)
        os << (c.pass ? "pass" : "FAIL") << "  " << to_string(c.id) << "  " << c.witness << "\n";
    os << "overall: " << (rep.overall ? "pass" : "FAIL") << "\n";
    return os.str();
}

inline CommandResult cmd_check(std::int64_t level, const std::string& expr, Criterion criterion, bool json) {
    return detail::guarded([&](CommandResult& r) {
        const LevelContext ctx(level);
        const BoundExpression b = detail::parse_and_bind(expr, ctx, r);
        CriterionReport rep;
        if (criterion == Criterion::ligozat) {
            if (!b.f.exponents.empty()) throw BindError("the ligozat criterion applies to eta quotients only");
            rep = ligozat_check(b.eta, ctx);
        } else {
            if (!b.eta.exponents.empty())
                throw BindError("this criterion applies to products of F[m,h] only");
            rep = criterion == Criterion::thm17 ? thm17_check(b.f, ctx) : thm19_check(b.f, ctx);
        }
        r.out = json ? report_json(rep).dump(2) + "\n" : render_report(rep);
        r.exit_code = rep.overall ? kExitPass : kExitFail;
    });
}

enum class GroupKind { full, rational, fixed };

inline std::optional<GroupKind> parse_group_kind(const std::string& s) {
    if (s == "full") return GroupKind::full;
    if (s == "rational") return GroupKind::rational;
    if (s == "fixed") return GroupKind::fixed;
    return std::nullopt;
}

inline std::string to_string(GroupKind k) {
    switch (k) {
    case GroupKind::full: return "full";
    case GroupKind::rational: return "rational";
    case GroupKind::fixed: return "fixed";
    }
    return "?";
}

inline AbelianGroup compute_group(GroupKind kind, const LevelContext& ctx) {
    switch (kind) {
    case GroupKind::full: return full_cuspidal_group(ctx);
    case GroupKind::rational: return rational_cuspidal_group(ctx);
    case GroupKind::fixed: return rational_cuspidal_subgroup(ctx);
    }
    throw std::logic_error("unknown group kind");
}

inline CommandResult cmd_group(std::int64_t level, GroupKind kind, bool json) {
    return detail::guarded([&](CommandResult& r) {
        const LevelContext ctx(level);
        const AbelianGroup g = compute_group(kind, ctx);
        if (json) {
            r.out = group_json(level, to_string(kind), g).dump(2) + "\n";
            return;
        }
        const std::string n = std::to_string(level);
        const std::string name = kind == GroupKind::full       ? "C_" + n
                                 : kind == GroupKind::rational ? "C(" + n + ")"
                                                               : "C_" + n + "(Q)";
        r.out = name + " = " + g.str() + ", order " + g.order().str() + "\n";
    });
}

/// "A..B" or a single level.
inline std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
    auto number = [&](const std::string& t) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad range '" + s + "', expected A..B");
        return std::stoll(t);
    };
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const auto n = number(s);
        return {n, n};
    }
    const auto a = number(s.substr(0, dots)), b = number(s.substr(dots + 2));
    if (a > b) throw std::invalid_argument("bad range '" + s + "': start exceeds end");
    return {a, b};
}

struct VerifyOutcome {
    std::int64_t level = 0;
    enum class Status { pass, fail, skipped } status = Status::skipped;
    std::string reason;
    MainTheoremReport report;
};

inline VerifyOutcome verify_level(std::int64_t level) {
    VerifyOutcome v;
    v.level = level;
    const LevelContext ctx(level);
    if (ctx.big_l() > 2) {
        if (auto why = thm17_obstruction(ctx)) {
            v.reason = *why;
            return v;
        }
    }
    v.report = verify_main_theorem(ctx);
    v.status = v.report.holds ? VerifyOutcome::Status::pass : VerifyOutcome::Status::fail;
    if (v.report.all_rational) v.reason = "all cusps rational";
    return v;
}

/// Verifies C_N(Q) = C(N) on every level in [lo, hi]; levels run in parallel
/// and results are reported in ascending order.
inline CommandResult cmd_verify(std::int64_t lo, std::int64_t hi, bool json) {
    return detail::guarded([&](CommandResult& r) {
        if (lo < 1 || hi > kMaxLevel) throw std::invalid_argument("levels must lie in 1.." + std::to_string(kMaxLevel));
        std::vector<VerifyOutcome> results;
        const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
        for (std::int64_t start = lo; start <= hi; start += static_cast<std::int64_t>(width)) {
            std::vector<std::future<VerifyOutcome>> batch;
            for (std::int64_t n = start; n <= hi && n < start + static_cast<std::int64_t>(width); ++n)
                batch.push_back(std::async(std::launch::async, verify_level, n));
            for (auto& f : batch) results.push_back(f.get());
        }
        std::size_t passed = 0, failed = 0, skipped = 0;
        Json levels = Json::array();
        std::ostringstream os;
        for (const auto& v : results) {
            using S = VerifyOutcome::Status;
            const char* status = v.status == S::pass ? "pass" : v.status == S::fail ? "FAIL" : "skipped";
            (v.status == S::pass ? passed : v.status == S::fail ? failed : skipped) += 1;
            Json entry = {{"level", std::to_string(v.level)},
                          {"status", v.status == S::fail ? "fail" : status}};
            os << "N=" << v.level << ": " << status;
            if (v.status != S::skipped) {
                os << "  C(N) = " << v.report.rational.str() << "  C_N(Q) = " << v.report.fixed.str()
                   << "  C_N = " << v.report.full.str();
                entry["rational"] = group_json(v.level, "rational", v.report.rational)["invariant_factors"];
                entry["fixed"] = group_json(v.level, "fixed", v.report.fixed)["invariant_factors"];
                entry["full"] = group_json(v.level, "full", v.report.full)["invariant_factors"];
            }
            if (!v.reason.empty()) {
                os << "  (" << v.reason << ")";
                entry["reason"] = v.reason;
            }
            os << "\n";
            levels.push_back(std::move(entry));
        }
        os << "checked " << passed + failed << ", passed " << passed << ", failed " << failed << ", skipped "
           << skipped << "\n";
        r.out = json ? Json{{"levels", std::move(levels)}}.dump(2) + "\n" : os.str();
        r.exit_code = failed == 0 ? kExitPass : kExitFail;
    });
}

/// Runs the consistency suites for every level up to max_level (the
/// q-expansion suite stops at 60).
inline CommandResult cmd_selftest(std::int64_t max_level) {
    return detail::guarded([&](CommandResult& r) {
        if (max_level < 0 || max_level > kMaxLevel) throw std::invalid_argument("bad max level");
        struct Suite {
            const char* name;
            Failures (*run)(const LevelContext&);
            std::int64_t cap;
        };
        const Suite suites[] = {
            {"degree_zero", check_degree_zero, max_level},
            {"eta_identity", check_eta_identity, max_level},
            {"galois_equivariance", check_galois_equivariance, max_level},
            {"closed_forms", check_closed_forms, max_level},
            {"m2_eta_forms", check_m2_forms, max_level},
            {"basis_count", check_basis_count, max_level},
            {"qexpansion", check_qexpansion, std::min<std::int64_t>(max_level, 60)},
        };
        std::ostringstream os;
        bool ok = true;
        for (const auto& s : suites) {
            Failures all;
            for (std::int64_t n = 1; n <= s.cap; ++n) {
                auto f = s.run(LevelContext(n));
                all.insert(all.end(), f.begin(), f.end());
            }
            ok = ok && all.empty();
            os << (all.empty() ? "pass" : "FAIL") << "  " << s.name << "  levels 1.." << s.cap << "\n";
            for (const auto& f : all) os << "    " << f << "\n";
        }
        r.out = os.str();
        r.exit_code = ok ? kExitPass : kExitFail;
    });
}

}  // namespace cuspidal
