#pragma once

// Integer matrices, Hermite and Smith normal forms, and sublattices of Z^n.

#include "cuspidal/ntheory.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cuspidal {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (auto x : row) a_.emplace_back(x);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& cols) {
        IntMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Integer> column(std::size_t j) const {
        std::vector<Integer> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    /// First `n` columns.
    IntMatrix leading_columns(std::size_t n) const {
        IntMatrix m(rows_, n);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    void swap_columns(std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }
    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    /// col_j += f * col_k
    void add_column(std::size_t j, std::size_t k, const Integer& f) {
        if (f == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) += f * (*this)(i, k);
    }
    /// row_i += f * row_k
    void add_row(std::size_t i, std::size_t k, const Integer& f) {
        if (f == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) += f * (*this)(k, j);
    }
    void negate_column(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
    }
    /// (col_j, col_k) <- (p col_j + q col_k, r col_j + s col_k)
    void combine_columns(std::size_t j, std::size_t k, const Integer& p, const Integer& q,
                         const Integer& r, const Integer& s) {
        for (std::size_t i = 0; i < rows_; ++i) {
            Integer x = (*this)(i, j), y = (*this)(i, k);
            (*this)(i, j) = p * x + q * y;
            (*this)(i, k) = r * x + s * y;
        }
    }
    void combine_rows(std::size_t i, std::size_t k, const Integer& p, const Integer& q,
                      const Integer& r, const Integer& s) {
        for (std::size_t j = 0; j < cols_; ++j) {
            Integer x = (*this)(i, j), y = (*this)(k, j);
            (*this)(i, j) = p * x + q * y;
            (*this)(k, j) = r * x + s * y;
        }
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
        IntMatrix z(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const Integer& xik = x(i, k);
                if (xik == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) z(i, j) += xik * y(k, j);
            }
        return z;
    }

    friend std::vector<Integer> operator*(const IntMatrix& x, const std::vector<Integer>& v) {
        if (x.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<Integer> out(x.rows_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) out[i] += x(i, k) * v[k];
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        os << "[";
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << "]";
        }
        return os << "]";
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> a_;
};

/// Extended gcd: returns (g, x, y) with a x + b y = g >= 0.
inline std::tuple<Integer, Integer, Integer> xgcd(const Integer& a, const Integer& b) {
    Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        Integer s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Integer t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0 < 0) return {-r0, -s0, -t0};
    return {r0, s0, t0};
}

/// floor(a / b) for b > 0
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (a < 0 && q * b != a) --q;
    return q;
}

struct HnfResult {
    IntMatrix h;                      // column Hermite form, H = M U
    IntMatrix u;                      // unimodular transform (empty unless requested)
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot row of column k, k < rank
};

/// Column-style Hermite normal form. Columns 0..rank-1 of H are in echelon
/// form with strictly increasing pivot rows; each pivot is positive and the
/// entries to its left in the pivot row lie in [0, pivot). The remaining
/// columns are zero.
inline HnfResult hnf_with_transform(const IntMatrix& m, bool track_u = true) {
    HnfResult res;
    res.h = m;
    IntMatrix& h = res.h;
    const std::size_t nc = m.cols();
    if (track_u) res.u = IntMatrix::identity(nc);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m.rows() && k < nc; ++i) {
        for (std::size_t j = k + 1; j < nc; ++j) {
            if (h(i, j) == 0) continue;
            if (h(i, k) == 0) {
                h.swap_columns(k, j);
                if (track_u) res.u.swap_columns(k, j);
                continue;
            }
            auto [g, x, y] = xgcd(h(i, k), h(i, j));
            const Integer a = h(i, k) / g, b = h(i, j) / g;
            // new col_k = x col_k + y col_j ; new col_j = -b col_k + a col_j
            h.combine_columns(k, j, x, y, -b, a);
            if (track_u) res.u.combine_columns(k, j, x, y, -b, a);
        }
        if (h(i, k) == 0) continue;
        if (h(i, k) < 0) {
            h.negate_column(k);
            if (track_u) res.u.negate_column(k);
        }
        for (std::size_t j = 0; j < k; ++j) {
            const Integer q = floor_div(h(i, j), h(i, k));
            h.add_column(j, k, -q);
            if (track_u) res.u.add_column(j, k, -q);
        }
        res.pivots.push_back(i);
        ++k;
    }
    res.rank = k;
    return res;
}

inline IntMatrix hnf(const IntMatrix& m) { return hnf_with_transform(m, false).h; }

/// Basis (as columns) of the integer kernel {x : M x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& m) {
    const auto res = hnf_with_transform(m, true);
    IntMatrix k(m.cols(), m.cols() - res.rank);
    for (std::size_t j = res.rank; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - res.rank) = res.u(i, j);
    return k;
}

struct SnfResult {
    std::vector<Integer> diagonal;  // d_1 | d_2 | ..., length min(rows, cols)
    IntMatrix u;                    // rows x rows, unimodular
    IntMatrix v;                    // cols x cols, unimodular
};

/// Smith normal form: U M V = diag(d_1, d_2, ...) with d_i >= 0 and d_i | d_{i+1}.
inline SnfResult snf(const IntMatrix& m) {
    SnfResult res;
    IntMatrix a = m;
    const std::size_t nr = m.rows(), nc = m.cols();
    res.u = IntMatrix::identity(nr);
    res.v = IntMatrix::identity(nc);
    const std::size_t n = std::min(nr, nc);
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = nr, pj = nc;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j)
                    if (a(i, j) != 0 && (pi == nr || abs(a(i, j)) < abs(a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == nr) break;
            if (pi != t) {
                a.swap_rows(t, pi);
                res.u.swap_rows(t, pi);
            }
            if (pj != t) {
                a.swap_columns(t, pj);
                res.v.swap_columns(t, pj);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (a(i, t) == 0) continue;
                const Integer q = a(i, t) / a(t, t);
                a.add_row(i, t, -q);
                res.u.add_row(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (a(t, j) == 0) continue;
                const Integer q = a(t, j) / a(t, t);
                a.add_column(j, t, -q);
                res.v.add_column(j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the whole trailing block
            std::size_t bad = nr;
            for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == nr) break;
            a.add_row(t, bad, Integer(1));
            res.u.add_row(t, bad, Integer(1));
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            res.u.negate_row(t);
        }
    }
    res.diagonal.reserve(n);
    for (std::size_t t = 0; t < n; ++t) res.diagonal.push_back(a(t, t));
    return res;
}

/// Finite abelian group Z/d_1 + ... + Z/d_k with 1 < d_1 | d_2 | ... | d_k.
struct AbelianGroup {
    std::vector<Integer> invariant_factors;

    /// From a Smith diagonal of a full-rank relation matrix; ones are dropped.
    static AbelianGroup from_diagonal(const std::vector<Integer>& diag) {
        AbelianGroup g;
        for (const auto& d : diag) {
            if (d == 0) throw std::domain_error("quotient group is infinite");
            if (d != 1) g.invariant_factors.push_back(d);
        }
        return g;
    }

    Integer order() const {
        Integer n = 1;
        for (const auto& d : invariant_factors) n *= d;
        return n;
    }

    Integer exponent() const {
        return invariant_factors.empty() ? Integer(1) : invariant_factors.back();
    }

    bool trivial() const { return invariant_factors.empty(); }
    bool cyclic() const { return invariant_factors.size() <= 1; }

    std::string str() const {
        if (invariant_factors.empty()) return "trivial";
        std::string s;
        for (const auto& d : invariant_factors) s += (s.empty() ? "Z/" : " + Z/") + d.str();
        return s;
    }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Sublattice of Z^n stored as the nonzero columns of its Hermite form.
class Lattice {
public:
    Lattice() = default;

    /// Lattice spanned by the columns of `gens` (ambient dimension gens.rows()).
    explicit Lattice(const IntMatrix& gens) : dim_(gens.rows()) {
        const auto res = hnf_with_transform(gens, false);
        basis_ = res.h.leading_columns(res.rank);
        pivots_ = res.pivots;
    }

    static Lattice from_columns(std::size_t dim, const std::vector<std::vector<Integer>>& cols) {
        return Lattice(IntMatrix::from_columns(dim, cols));
    }

    static Lattice full(std::size_t dim) { return Lattice(IntMatrix::identity(dim)); }

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }

    /// Coordinates y with basis() * y = v, if v lies in the lattice.
    std::optional<std::vector<Integer>> coordinates(const std::vector<Integer>& v) const {
        if (v.size() != dim_) throw std::invalid_argument("vector has wrong dimension");
        std::vector<Integer> y(rank());
        for (std::size_t k = 0; k < rank(); ++k) {
            const std::size_t row = pivots_[k];
            Integer rest = v[row];
            for (std::size_t j = 0; j < k; ++j) rest -= basis_(row, j) * y[j];
            if (rest % basis_(row, k) != 0) return std::nullopt;
            y[k] = rest / basis_(row, k);
        }
        if (basis_ * y != v) return std::nullopt;
        return y;
    }

    bool contains(const std::vector<Integer>& v) const { return coordinates(v).has_value(); }

    bool contains(const Lattice& other) const {
        for (std::size_t j = 0; j < other.rank(); ++j)
            if (!contains(other.basis_.column(j))) return false;
        return true;
    }

    /// Lattice spanned by both.
    Lattice operator+(const Lattice& other) const {
        if (dim_ != other.dim_) throw std::invalid_argument("lattice dimension mismatch");
        IntMatrix g(dim_, rank() + other.rank());
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < rank(); ++j) g(i, j) = basis_(i, j);
            for (std::size_t j = 0; j < other.rank(); ++j) g(i, rank() + j) = other.basis_(i, j);
        }
        return Lattice(g);
    }

    /// Image under a linear map given by an integer matrix (rows = new dimension).
    Lattice image(const IntMatrix& map) const {
        if (rank() == 0) return Lattice(IntMatrix(map.rows(), 0));
        return Lattice(map * basis_);
    }

    friend bool operator==(const Lattice& x, const Lattice& y) {
        return x.dim_ == y.dim_ && x.basis_ == y.basis_;
    }

private:
    std::size_t dim_ = 0;
    IntMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {x in Z^k : row_i . x = 0 mod moduli[i] for all i}. A modulus of 0 asks
/// for exact vanishing.
inline Lattice congruence_kernel(const std::vector<std::vector<Integer>>& rows,
                                 const std::vector<Integer>& moduli, std::size_t k) {
    if (rows.size() != moduli.size()) throw std::invalid_argument("one modulus per row");
    const std::size_t t = rows.size();
    IntMatrix m(t, k + t);
    for (std::size_t i = 0; i < t; ++i) {
        if (rows[i].size() != k) throw std::invalid_argument("congruence row length mismatch");
        for (std::size_t j = 0; j < k; ++j) m(i, j) = rows[i][j];
        m(i, k + i) = moduli[i];
    }
    const IntMatrix ker = integer_kernel(m);
    IntMatrix proj(k, ker.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < ker.cols(); ++j) proj(i, j) = ker(i, j);
    return Lattice(proj);
}

/// The finite group outer / inner for lattices of equal rank with inner inside outer.
inline AbelianGroup quotient_group(const Lattice& outer, const Lattice& inner) {
    if (outer.rank() != inner.rank())
        throw std::domain_error("quotient of lattices of different rank is infinite");
    if (outer.rank() == 0) return {};
    IntMatrix coords(outer.rank(), inner.rank());
    for (std::size_t j = 0; j < inner.rank(); ++j) {
        auto y = outer.coordinates(inner.basis().column(j));
        if (!y) throw std::invalid_argument("inner lattice is not contained in outer lattice");
        for (std::size_t i = 0; i < outer.rank(); ++i) coords(i, j) = (*y)[i];
    }
    return AbelianGroup::from_diagonal(snf(coords).diagonal);
}

}  // namespace cuspidal
