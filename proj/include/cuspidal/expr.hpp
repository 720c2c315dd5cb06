#pragma once

// Products of eta(d) and F[m,h] atoms.
//
//   expr := term (('*' | '/') term)*
//   term := atom ('^' signed_int)?
//   atom := 'eta' '(' uint ')' | 'F' '[' uint ',' uint ']' | '(' expr ')' | '1'
//
// '/' negates the exponent of the following term, a power of a parenthesized
// product multiplies every exponent inside, and '1' is the empty product.

#include "cuspidal/errors.hpp"
#include "cuspidal/etafam.hpp"
#include "cuspidal/modcurve.hpp"

#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cuspidal {

struct Atom {
    enum class Kind { eta, f };
    Kind kind = Kind::eta;
    std::int64_t a = 0;  // d for eta, m for F
    std::int64_t b = 0;  // h for F

    static Atom eta(std::int64_t d) { return {Kind::eta, d, 0}; }
    static Atom f(std::int64_t m, std::int64_t h) { return {Kind::f, m, h}; }

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

inline std::string render(const Atom& a) {
    if (a.kind == Atom::Kind::eta) return "eta(" + std::to_string(a.a) + ")";
    return "F[" + std::to_string(a.a) + "," + std::to_string(a.b) + "]";
}

/// Product of atoms with nonzero exponents; equal atoms are merged.
struct Expression {
    std::map<Atom, std::int64_t> terms;

    void multiply(const Atom& a, std::int64_t e);
    bool empty() const { return terms.empty(); }
    bool has_eta() const {
        for (const auto& [a, e] : terms)
            if (a.kind == Atom::Kind::eta) return true;
        return false;
    }
    bool has_f() const {
        for (const auto& [a, e] : terms)
            if (a.kind == Atom::Kind::f) return true;
        return false;
    }

    friend bool operator==(const Expression&, const Expression&) = default;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

}  // namespace detail

inline void Expression::multiply(const Atom& a, std::int64_t e) {
    if (e == 0) return;
    auto it = terms.find(a);
    if (it == terms.end()) {
        terms.emplace(a, e);
        return;
    }
    it->second = detail::checked_add(it->second, e);
    if (it->second == 0) terms.erase(it);
}

inline std::string render(const Expression& x) {
    if (x.empty()) return "1";
    std::string s;
    for (const auto& [a, e] : x.terms) {
        if (!s.empty()) s += " * ";
        s += render(a);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expression parse() {
        Expression x = expr();
        skip_ws();
        if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return x;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= src_.size()) fail(std::string("expected '") + c + "', found end of input");
            fail(std::string("expected '") + c + "', found '" + src_[pos_] + "'");
        }
    }

    std::int64_t uint() {
        skip_ws();
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            const int digit = src_[pos_] - '0';
            if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
                pos_ = start;
                fail("integer too large");
            }
            v = v * 10 + digit;
            ++pos_;
        }
        if (pos_ == start) fail(pos_ >= src_.size() ? "expected integer, found end of input"
                                                   : "expected integer");
        return v;
    }

    std::int64_t signed_int() {
        skip_ws();
        if (accept('-')) return -uint();
        accept('+');
        return uint();
    }

    Expression expr() {
        Expression x = term();
        while (true) {
            if (accept('*')) {
                merge(x, term(), 1);
            } else if (accept('/')) {
                merge(x, term(), -1);
            } else {
                return x;
            }
        }
    }

    static void merge(Expression& into, const Expression& y, std::int64_t sign) {
        for (const auto& [a, e] : y.terms) into.multiply(a, sign * e);
    }

    Expression term() {
        Expression base = atom();
        if (!accept('^')) return base;
        const std::int64_t k = signed_int();
        Expression out;
        for (const auto& [a, e] : base.terms) out.multiply(a, checked_mul(e, k));
        return out;
    }

    Expression atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected 'eta', 'F' or '(', found end of input");
        Expression x;
        if (src_.substr(pos_, 3) == "eta") {
            pos_ += 3;
            expect('(');
            const std::int64_t d = uint();
            expect(')');
            x.multiply(Atom::eta(d), 1);
        } else if (src_[pos_] == 'F') {
            ++pos_;
            expect('[');
            const std::int64_t m = uint();
            expect(',');
            const std::int64_t h = uint();
            expect(']');
            x.multiply(Atom::f(m, h), 1);
        } else if (src_[pos_] == '(') {
            ++pos_;
            x = expr();
            expect(')');
        } else if (src_[pos_] == '1' &&
                   (pos_ + 1 >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            ++pos_;
        } else {
            fail("expected 'eta', 'F' or '(', found '" + std::string(1, src_[pos_]) + "'");
        }
        return x;
    }
};

}  // namespace detail

inline Expression parse(std::string_view input) { return detail::Parser(input).parse(); }

/// An expression checked against a level, split into its eta and F parts.
struct BoundExpression {
    EtaQuotient eta;
    FProduct f;
    std::vector<std::string> warnings;

    CuspidalDivisor divisor(const LevelContext& ctx) const {
        return eta_quotient_divisor(eta, ctx) + fproduct_divisor(f, ctx);
    }
};

/// Checks every atom against the level; F indices h are reduced mod l(m).
inline BoundExpression bind(const Expression& x, const LevelContext& ctx) {
    const std::int64_t n = ctx.level();
    BoundExpression out{EtaQuotient{n, {}}, FProduct{n, {}}, {}};
    for (const auto& [a, e] : x.terms) {
        if (a.kind == Atom::Kind::eta) {
            if (!ctx.divides(a.a))
                throw BindError(render(a) + ": " + std::to_string(a.a) + " does not divide " +
                                std::to_string(n));
            out.eta.multiply(a.a, e);
            continue;
        }
        if (!ctx.divides(a.a) || a.a == n)
            throw BindError(render(a) + ": m = " + std::to_string(a.a) +
                            " is not a divisor of " + std::to_string(n) + " other than itself");
        const std::int64_t ell = ctx.ell(a.a);
        const std::int64_t h = a.b % ell;
        if (h != a.b)
            out.warnings.push_back(render(a) + " reduced to F[" + std::to_string(a.a) + "," +
                                   std::to_string(h) + "] since l(" + std::to_string(a.a) +
                                   ") = " + std::to_string(ell));
        out.f.multiply({a.a, h}, e);
    }
    return out;
}

}  // namespace cuspidal
