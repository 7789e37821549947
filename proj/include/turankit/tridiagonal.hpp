#pragma once

// The tridiagonal system whose inverse columns give the nonnegative
// multipliers that combine the single-square density inequalities.
//
// Rows and columns are indexed by m in [k, r-1]. Column m holds the
// coefficients of f_{m-1}, f_m, f_{m+1} in the m-th inequality:
//   d_{m-1,m} = -x_{m,r}
//   d_{m,m}   = 2 - (k-1) / (m x_{m,r})
//   d_{m+1,m} = -(1 - (k-1)/m) / x_{m,r}

#include "turankit/combinatorics.hpp"
#include "turankit/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace turankit {

/// Square matrix of rationals, indices shifted so that row/column `first`
/// is stored at position 0.
class IndexedMatrix {
public:
    IndexedMatrix(long first, std::size_t dim) : first_(first), dim_(dim), a_(dim * dim) {}

    long first() const { return first_; }
    long last() const { return first_ + static_cast<long>(dim_) - 1; }
    std::size_t dim() const { return dim_; }

    Rational& at(long row, long col) { return a_[offset(row, col)]; }
    const Rational& at(long row, long col) const { return a_[offset(row, col)]; }

    friend IndexedMatrix operator*(const IndexedMatrix& x, const IndexedMatrix& y) {
        if (x.first_ != y.first_ || x.dim_ != y.dim_) throw std::invalid_argument("IndexedMatrix: shape mismatch");
        IndexedMatrix out(x.first_, x.dim_);
        for (long i = x.first(); i <= x.last(); ++i)
            for (long l = x.first(); l <= x.last(); ++l) {
                const Rational& xil = x.at(i, l);
                if (xil.isZero()) continue;
                for (long j = x.first(); j <= x.last(); ++j) out.at(i, j) += xil * y.at(l, j);
            }
        return out;
    }

    bool isIdentity() const {
        for (long i = first(); i <= last(); ++i)
            for (long j = first(); j <= last(); ++j)
                if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
        return true;
    }

private:
    std::size_t offset(long row, long col) const {
        if (row < first_ || row > last() || col < first_ || col > last())
            throw std::out_of_range("IndexedMatrix: index (" + std::to_string(row) + "," + std::to_string(col) +
                                    ") outside [" + std::to_string(first_) + "," + std::to_string(last()) + "]");
        return static_cast<std::size_t>(row - first_) * dim_ + static_cast<std::size_t>(col - first_);
    }

    long first_;
    std::size_t dim_;
    std::vector<Rational> a_;
};

class TridiagonalSystem {
public:
    TridiagonalSystem(long k, long r) : k_(k), r_(r) {
        if (k < 2) throw std::invalid_argument("TridiagonalSystem: need k >= 2, got " + std::to_string(k));
        if (r <= k) throw std::invalid_argument("TridiagonalSystem: need r > k, got k=" + std::to_string(k) +
                                                " r=" + std::to_string(r));
        for (long m = k; m <= r - 1; ++m) diag_.push_back(columnCoefficient(m, m));
        for (long m = k; m <= r - 2; ++m) {
            super_.push_back(columnCoefficient(m, m + 1));
            sub_.push_back(columnCoefficient(m + 1, m));
        }
    }

    long k() const { return k_; }
    long r() const { return r_; }
    long first() const { return k_; }
    long last() const { return r_ - 1; }
    std::size_t dim() const { return static_cast<std::size_t>(r_ - k_); }

    /// d_{m,m} for m = k..r-1.
    const std::vector<Rational>& diagonal() const { return diag_; }
    /// d_{m,m+1} for m = k..r-2.
    const std::vector<Rational>& superDiagonal() const { return super_; }
    /// d_{m+1,m} for m = k..r-2.
    const std::vector<Rational>& subDiagonal() const { return sub_; }

    /// Coefficient of f_row in the inequality of column m (m in [k, r-1],
    /// |row - m| <= 1). Unlike entry(), row may fall one step outside the
    /// matrix: row k-1 and row r are the boundary terms of the telescoped sum.
    Rational columnCoefficient(long row, long m) const {
        if (m < k_ || m > r_ - 1) throw std::out_of_range("columnCoefficient: column outside [k, r-1]");
        const Rational x = xRatio(k_, m, r_);
        if (row == m - 1) return -x;
        if (row == m) return Rational(2) - Rational(k_ - 1) / (Rational(m) * x);
        if (row == m + 1) return -(Rational(1) - Rational(k_ - 1, m)) / x;
        return Rational(0);
    }

    /// d_{row,col} inside the matrix; zero off the three diagonals.
    Rational entry(long row, long col) const {
        check(row);
        check(col);
        return columnCoefficient(row, col);
    }

    /// D - eps I as a dense matrix.
    IndexedMatrix dense(const Rational& eps = Rational(0)) const {
        IndexedMatrix out(first(), dim());
        for (long i = first(); i <= last(); ++i)
            for (long j = std::max(first(), i - 1); j <= std::min(last(), i + 1); ++j)
                out.at(i, j) = entry(i, j) - (i == j ? eps : Rational(0));
        return out;
    }

private:
    void check(long idx) const {
        if (idx < k_ || idx > r_ - 1)
            throw std::out_of_range("TridiagonalSystem: index " + std::to_string(idx) + " outside [" +
                                    std::to_string(k_) + ", " + std::to_string(r_ - 1) + "]");
    }

    long k_;
    long r_;
    std::vector<Rational> diag_;
    std::vector<Rational> super_;
    std::vector<Rational> sub_;
};

inline TridiagonalSystem buildSystem(long k, long r) { return TridiagonalSystem(k, r); }

/// Largest eps for which every entry of (D - eps I)^{-1} is guaranteed positive:
/// (k-1) / ((r-1)(r-k)), exclusive.
inline Rational positivityThreshold(long k, long r) { return Rational(k - 1, (r - 1) * (r - k)); }

/// Leading/trailing principal minors of D - eps I.
///
/// theta(m) is the determinant on rows/columns {k..m}, phi(m) on {m..r-1}.
/// Boundary values: theta(k-2) = 0, theta(k-1) = 1, phi(r) = 1, phi(r+1) = 0.
struct RecurrenceTables {
    long k = 0;
    long r = 0;
    Rational epsilon;
    std::vector<Rational> theta;  // theta_{k-1} .. theta_{r-1}
    std::vector<Rational> phi;    // phi_k .. phi_{r+1}
    std::vector<Rational> zeta;   // zeta_m = phi_{m+1} - phi_m, m = k .. r-1
    Rational determinant;
    /// False when some theta/phi is nonpositive, i.e. eps is past the
    /// range where the sign argument applies.
    bool allPositive = true;

    Rational thetaAt(long m) const {
        if (m == k - 2) return Rational(0);
        if (m < k - 1 || m > r - 1) throw std::out_of_range("theta index " + std::to_string(m));
        return theta[static_cast<std::size_t>(m - (k - 1))];
    }
    Rational phiAt(long m) const {
        if (m < k || m > r + 1) throw std::out_of_range("phi index " + std::to_string(m));
        return phi[static_cast<std::size_t>(m - k)];
    }
    Rational zetaAt(long m) const {
        if (m < k || m > r - 1) throw std::out_of_range("zeta index " + std::to_string(m));
        return zeta[static_cast<std::size_t>(m - k)];
    }
};

inline RecurrenceTables recurrences(const TridiagonalSystem& sys, const Rational& eps) {
    if (eps.sign() < 0) throw std::invalid_argument("recurrences: eps must be nonnegative");
    const long k = sys.k();
    const long r = sys.r();
    RecurrenceTables t;
    t.k = k;
    t.r = r;
    t.epsilon = eps;

    auto shifted = [&](long m) { return sys.entry(m, m) - eps; };
    auto offProduct = [&](long a, long b) { return sys.entry(a, b) * sys.entry(b, a); };

    Rational before(0);  // theta_{m-2}
    Rational prev(1);    // theta_{m-1}
    t.theta.push_back(prev);
    for (long m = k; m <= r - 1; ++m) {
        Rational cur = shifted(m) * prev;
        if (m > k) cur -= offProduct(m - 1, m) * before;
        t.theta.push_back(cur);
        before = prev;
        prev = cur;
    }

    std::vector<Rational> reversed{Rational(0), Rational(1)};  // phi_{r+1}, phi_r
    for (long m = r - 1; m >= k; --m) {
        const Rational& next = reversed[reversed.size() - 1];
        const Rational& next2 = reversed[reversed.size() - 2];
        Rational cur = shifted(m) * next;
        if (m < r - 1) cur -= offProduct(m + 1, m) * next2;
        reversed.push_back(cur);
    }
    t.phi.assign(reversed.rbegin(), reversed.rend());

    for (long m = k; m <= r - 1; ++m) t.zeta.push_back(t.phiAt(m + 1) - t.phiAt(m));

    t.determinant = t.thetaAt(r - 1);
    if (t.determinant != t.phiAt(k))
        throw std::logic_error("recurrences: forward and reverse determinants disagree");

    for (long m = k - 1; m <= r - 1; ++m)
        if (t.thetaAt(m).sign() <= 0) t.allPositive = false;
    for (long m = k; m <= r; ++m)
        if (t.phiAt(m).sign() <= 0) t.allPositive = false;
    return t;
}

/// Entry (m, g) of (D - eps I)^{-1} from the minor tables:
///   m <= g: (-1)^{m+g} theta_{m-1} phi_{g+1} prod_{i=m}^{g-1} d_{i,i+1} / det
///   m >  g: (-1)^{m+g} theta_{g-1} phi_{m+1} prod_{i=g}^{m-1} d_{i+1,i} / det
inline Rational inverseEntry(const TridiagonalSystem& sys, const RecurrenceTables& t, long m, long g) {
    if (m < sys.first() || m > sys.last() || g < sys.first() || g > sys.last())
        throw std::out_of_range("inverseEntry: index outside [k, r-1]");
    if (t.determinant.isZero()) throw std::domain_error("inverseEntry: D - eps I is singular");
    Rational value;
    if (m <= g) {
        value = t.thetaAt(m - 1) * t.phiAt(g + 1);
        for (long i = m; i <= g - 1; ++i) value *= sys.entry(i, i + 1);
    } else {
        value = t.thetaAt(g - 1) * t.phiAt(m + 1);
        for (long i = g; i <= m - 1; ++i) value *= sys.entry(i + 1, i);
    }
    if ((m + g) % 2 != 0) value = -value;
    return value / t.determinant;
}

inline Rational inverseEntry(const TridiagonalSystem& sys, const Rational& eps, long m, long g) {
    return inverseEntry(sys, recurrences(sys, eps), m, g);
}

inline IndexedMatrix inverseMatrix(const TridiagonalSystem& sys, const Rational& eps) {
    const RecurrenceTables t = recurrences(sys, eps);
    IndexedMatrix out(sys.first(), sys.dim());
    for (long m = sys.first(); m <= sys.last(); ++m)
        for (long g = sys.first(); g <= sys.last(); ++g) out.at(m, g) = inverseEntry(sys, t, m, g);
    return out;
}

/// Solves A y = b by exact Gauss-Jordan elimination (any nonzero pivot).
inline std::vector<Rational> solveDense(IndexedMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.dim();
    const long f = a.first();
    auto A = [&](std::size_t i, std::size_t j) -> Rational& {
        return a.at(f + static_cast<long>(i), f + static_cast<long>(j));
    };
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A(pivot, col).isZero()) ++pivot;
        if (pivot == n) throw std::domain_error("solveDense: singular system");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(pivot, j), A(col, j));
            std::swap(b[pivot], b[col]);
        }
        const Rational inv = Rational(1) / A(col, col);
        for (std::size_t j = col; j < n; ++j) A(col, j) *= inv;
        b[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || A(i, col).isZero()) continue;
            const Rational factor = A(i, col);
            for (std::size_t j = col; j < n; ++j) A(i, j) -= factor * A(col, j);
            b[i] -= factor * b[col];
        }
    }
    return b;
}

/// The multipliers delta_k..delta_{r-1} with (D - eps I) delta = e_g, so the
/// weighted rows telescope to f_g plus the two boundary terms. Computed by a
/// direct solve and cross-checked against the minor-table formula.
inline std::vector<Rational> solveDelta(long k, long g, long r, const Rational& eps) {
    const TridiagonalSystem sys(k, r);
    if (g < k || g > r - 1) throw std::invalid_argument("solveDelta: need k <= g <= r-1");
    std::vector<Rational> rhs(sys.dim(), Rational(0));
    rhs[static_cast<std::size_t>(g - k)] = Rational(1);
    std::vector<Rational> delta = solveDense(sys.dense(eps), rhs);

    const RecurrenceTables t = recurrences(sys, eps);
    for (long m = k; m <= r - 1; ++m)
        if (delta[static_cast<std::size_t>(m - k)] != inverseEntry(sys, t, m, g))
            throw std::logic_error("solveDelta: direct solve disagrees with inverse formula at m=" +
                                   std::to_string(m));
    return delta;
}

}  // namespace turankit
