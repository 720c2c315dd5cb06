#pragma once

// Truncated Laurent-Puiseux series q^A (c_0 + c_1 q + ... + c_{P-1} q^{P-1})
// with coefficients in Z[zeta_l].

#include "cuspidal/cyclotomic.hpp"
#include "cuspidal/ntheory.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuspidal {

class QSeries {
public:
    using Elem = CyclotomicRing::Elem;

    QSeries(std::shared_ptr<const CyclotomicRing> ring, Rational leading, std::size_t precision)
        : ring_(std::move(ring)), leading_(std::move(leading)), coeffs_(precision, ring_->zero()) {}

    /// q^leading * 1 + O(q^{leading + precision}).
    static QSeries one(std::shared_ptr<const CyclotomicRing> ring, Rational leading,
                       std::size_t precision) {
        QSeries s(std::move(ring), std::move(leading), precision);
        if (precision > 0) s.coeffs_[0] = s.ring_->one();
        return s;
    }

    const CyclotomicRing& ring() const { return *ring_; }
    std::int64_t modulus() const { return ring_->order(); }
    const Rational& leading_exponent() const { return leading_; }
    std::size_t precision() const { return coeffs_.size(); }
    const Elem& coefficient(std::size_t k) const { return coeffs_.at(k); }
    const std::vector<Elem>& coefficients() const { return coeffs_; }

    /// In place: *this *= (1 - u q^e), u in Z[zeta_l], e >= 1.
    void multiply_binomial(const Elem& u, std::size_t e) {
        if (e == 0) throw std::invalid_argument("binomial exponent must be positive");
        for (std::size_t k = coeffs_.size(); k-- > e;) {
            if (CyclotomicRing::is_zero(coeffs_[k - e])) continue;
            CyclotomicRing::sub_into(coeffs_[k], ring_->mul(u, coeffs_[k - e]));
        }
    }

    /// In place: *this /= (1 - q^e), e >= 1.
    void divide_binomial(std::size_t e) {
        if (e == 0) throw std::invalid_argument("binomial exponent must be positive");
        for (std::size_t k = e; k < coeffs_.size(); ++k)
            CyclotomicRing::add_into(coeffs_[k], coeffs_[k - e]);
    }

    friend QSeries operator*(const QSeries& x, const QSeries& y) {
        if (x.modulus() != y.modulus()) throw std::invalid_argument("coefficient rings differ");
        const std::size_t p = std::min(x.precision(), y.precision());
        QSeries z(x.ring_, x.leading_ + y.leading_, p);
        for (std::size_t i = 0; i < p; ++i) {
            if (CyclotomicRing::is_zero(x.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j < p; ++j)
                CyclotomicRing::add_into(z.coeffs_[i + j], x.ring_->mul(x.coeffs_[i], y.coeffs_[j]));
        }
        return z;
    }

    /// Same series over Z[zeta_n] for a multiple n of the current modulus.
    QSeries lift_to(std::shared_ptr<const CyclotomicRing> target) const {
        const std::int64_t from = modulus(), to = target->order();
        if (to % from != 0) throw std::invalid_argument("can only lift to a multiple modulus");
        QSeries out(target, leading_, precision());
        for (std::size_t k = 0; k < precision(); ++k)
            for (std::size_t i = 0; i < coeffs_[k].size(); ++i) {
                if (coeffs_[k][i] == 0) continue;
                Elem t = target->zeta_power(static_cast<std::int64_t>(i) * (to / from));
                for (auto& c : t) c *= coeffs_[k][i];
                CyclotomicRing::add_into(out.coeffs_[k], t);
            }
        return out;
    }

    friend bool operator==(const QSeries& x, const QSeries& y) {
        return x.modulus() == y.modulus() && x.leading_ == y.leading_ && x.coeffs_ == y.coeffs_;
    }

    std::string str() const {
        std::string s = "q^(" + to_string(leading_) + ") * (";
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (CyclotomicRing::is_zero(coeffs_[k])) continue;
            s += (first ? "" : " + ") + std::string("(") + ring_->str(coeffs_[k]) + ")";
            if (k > 0) s += "q^" + std::to_string(k);
            first = false;
        }
        return s + " + O(q^" + std::to_string(coeffs_.size()) + "))";
    }

private:
    std::shared_ptr<const CyclotomicRing> ring_;
    Rational leading_;
    std::vector<Elem> coeffs_;
};

}  // namespace cuspidal
