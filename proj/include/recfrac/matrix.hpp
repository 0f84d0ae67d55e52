#pragma once
// Dense square matrices over exact rationals, with an exact determinant
// computed by fraction-free Bareiss elimination after clearing row
// denominators. Indices are 0-based.

#include "recfrac/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace recfrac {

class SquareMatrix {
public:
    SquareMatrix() = default;

    explicit SquareMatrix(int order)
        : order_(order), e_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
        if (order < 0) throw std::invalid_argument("SquareMatrix: negative order");
    }

    SquareMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
        : SquareMatrix(static_cast<int>(rows.size())) {
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != order_)
                throw std::invalid_argument("SquareMatrix: ragged initializer");
            int j = 0;
            for (const Rational& v : row) at(i, j++) = v;
            ++i;
        }
    }

    int order() const { return order_; }

    Rational& at(int i, int j) {
        check_index(i, j);
        return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(j)];
    }

    const Rational& at(int i, int j) const {
        check_index(i, j);
        return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(j)];
    }

    bool operator==(const SquareMatrix&) const = default;

private:
    void check_index(int i, int j) const {
        if (i < 0 || j < 0 || i >= order_ || j >= order_)
            throw std::out_of_range("SquareMatrix: index out of range");
    }

    int order_ = 0;
    std::vector<Rational> e_;
};

inline SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("multiply: mismatched orders");
    const int n = a.order();
    SquareMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

// Copy of m with one row and one column removed.
inline SquareMatrix minor_matrix(const SquareMatrix& m, int cut_row, int cut_col) {
    const int n = m.order();
    if (cut_row < 0 || cut_col < 0 || cut_row >= n || cut_col >= n)
        throw std::out_of_range("minor_matrix: index out of range");
    SquareMatrix out(n - 1);
    for (int i = 0, oi = 0; i < n; ++i) {
        if (i == cut_row) continue;
        for (int j = 0, oj = 0; j < n; ++j) {
            if (j == cut_col) continue;
            out.at(oi, oj) = m.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

// Submatrix on the given (strictly increasing) row-and-column index set.
inline SquareMatrix principal_submatrix(const SquareMatrix& m, const std::vector<int>& keep) {
    const int k = static_cast<int>(keep.size());
    SquareMatrix out(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out.at(i, j) = m.at(keep[static_cast<std::size_t>(i)],
                                                        keep[static_cast<std::size_t>(j)]);
    return out;
}

// Exact determinant. Row denominators are cleared first, then the integer
// matrix is reduced by Bareiss elimination (every division below is exact),
// and the accumulated row scaling is divided back out at the end.
inline Rational det_exact(const SquareMatrix& m) {
    const int n = m.order();
    if (n == 0) return Rational(1);

    std::vector<Integer> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    Integer scale = 1;
    for (int i = 0; i < n; ++i) {
        Integer l = 1;
        for (int j = 0; j < n; ++j)
            l = boost::multiprecision::lcm(l, denominator(m.at(i, j)));
        for (int j = 0; j < n; ++j) {
            const Rational v = m.at(i, j) * Rational(l);
            a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(j)] = numerator(v);
        }
        scale *= l;
    }

    auto e = [&](int i, int j) -> Integer& {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
    };

    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = k;
        while (pivot < n && e(pivot, k) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(e(k, j), e(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Integer t = e(i, j) * e(k, k) - e(i, k) * e(k, j);
                e(i, j) = t / prev; // exact by the Bareiss identity
            }
        prev = e(k, k);
    }

    Integer det = e(n - 1, n - 1);
    if (sign < 0) det = -det;
    return Rational(det, scale);
}

} // namespace recfrac
