#pragma once

// Z[zeta_n] as Z[x]/Phi_n(x), elements stored as coefficient vectors in the
// power basis 1, x, ..., x^{phi(n)-1}.

#include "cuspidal/ntheory.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuspidal {

using Poly = std::vector<Integer>;  // ascending coefficients

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact division of a by a monic polynomial b.
inline Poly poly_div_exact(Poly a, const Poly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) {
        if (!a.empty()) throw std::logic_error("inexact polynomial division");
        return {};
    }
    Poly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const Integer c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(a);
    if (!a.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

/// n-th cyclotomic polynomial.
inline Poly cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    Poly xn1(static_cast<std::size_t>(n) + 1, 0);
    xn1[0] = -1;
    xn1[static_cast<std::size_t>(n)] = 1;
    for (auto d : divisors(n))
        if (d < n) xn1 = poly_div_exact(xn1, cyclotomic_polynomial(d));
    return xn1;
}

class CyclotomicRing {
public:
    using Elem = std::vector<Integer>;

    explicit CyclotomicRing(std::int64_t n) : n_(n), phi_(cyclotomic_polynomial(n)) {
        degree_ = phi_.size() - 1;
    }

    std::int64_t order() const { return n_; }
    std::size_t degree() const { return degree_; }

    Elem zero() const { return Elem(degree_, 0); }
    Elem from_integer(const Integer& k) const {
        Elem e = zero();
        e[0] = k;
        return e;
    }
    Elem one() const { return from_integer(1); }

    /// zeta_n^k
    Elem zeta_power(std::int64_t k) const {
        Poly p(static_cast<std::size_t>(mod(k, n_)) + 1, 0);
        p.back() = 1;
        return reduce(std::move(p));
    }

    Elem reduce(Poly p) const {
        for (std::size_t i = p.size(); i-- > degree_;) {
            const Integer c = p[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j <= degree_; ++j) p[i - degree_ + j] -= c * phi_[j];
        }
        p.resize(degree_, 0);
        return p;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        Poly p(2 * degree_ - 1, 0);
        for (std::size_t i = 0; i < degree_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < degree_; ++j) p[i + j] += a[i] * b[j];
        }
        return reduce(std::move(p));
    }

    static void add_into(Elem& a, const Elem& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    }
    static void sub_into(Elem& a, const Elem& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    }
    static Elem neg(Elem a) {
        for (auto& x : a) x = -x;
        return a;
    }
    static bool is_zero(const Elem& a) {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }

    std::string str(const Elem& a) const {
        std::string s;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            std::string term = a[i].str();
            if (i > 0) term += "*z^" + std::to_string(i);
            s += (s.empty() ? "" : " + ") + term;
        }
        return s.empty() ? "0" : s;
    }

private:
    std::int64_t n_;
    Poly phi_;
    std::size_t degree_ = 1;
};

}  // namespace cuspidal
