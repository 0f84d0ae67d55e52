#pragma once
// Triangular matrices and their two triangular functions, the
// parapermanent and the paradeterminant.
//
// A triangular matrix of order n has rows 1..n, row i holding entries in
// columns 1..i. Mathematical indices in this header are 1-based.
//
// Both functions are sums over all compositions (p_1, ..., p_r) of n: each
// composition contributes the product of the "factorial products" {a_ij}
// of the key elements it selects, where
//     {a_ij} = a_ij * a_i,j+1 * ... * a_ii,
// and the paradeterminant additionally weights the term by (-1)^(n-r).
//
// Three evaluation strategies are provided:
//   *_def          direct sum over compositions (exponential; oracle use),
//   *_fast         corner recursion in O(n^2) multiplications,
//   *_expand_table expansion over the inscribed table of an element,
//                  reproducing the decomposition by key cells (r, s) with
//                  s <= i <= r; i = 1 degenerates to the first-column
//                  expansion and i = n to the last-row expansion.

#include "recfrac/rational.hpp"

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace recfrac {

class TriMatrix {
public:
    TriMatrix() = default; // order 0

    explicit TriMatrix(int order) {
        if (order < 0) throw std::invalid_argument("TriMatrix: negative order");
        rows_.resize(static_cast<std::size_t>(order));
        for (int i = 0; i < order; ++i)
            rows_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Rational(0));
    }

    explicit TriMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].size() != i + 1)
                throw std::invalid_argument("TriMatrix: row " + std::to_string(i + 1) +
                                            " must have exactly " + std::to_string(i + 1) +
                                            " entries");
    }

    int order() const { return static_cast<int>(rows_.size()); }

    // Entry a_ij, 1 <= j <= i <= order().
    const Rational& a(int i, int j) const {
        check_index(i, j);
        return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }

    Rational& a(int i, int j) {
        check_index(i, j);
        return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }

    bool operator==(const TriMatrix&) const = default;

private:
    void check_index(int i, int j) const {
        if (i < 1 || i > order() || j < 1 || j > i)
            throw std::out_of_range("TriMatrix: need 1 <= j <= i <= order");
    }

    std::vector<std::vector<Rational>> rows_;
};

// Corner R_ij of a triangular matrix: rows j..i restricted to columns
// j..row, itself a triangular matrix of order i - j + 1.
struct Corner {
    int i = 0;
    int j = 1;
    TriMatrix matrix;
};

// The two degenerate index pairs (0, 1) and (n, n+1) denote empty corners
// by convention; their parapermanent and paradeterminant are both 1.
inline Corner corner(const TriMatrix& A, int i, int j) {
    const int n = A.order();
    if ((i == 0 && j == 1) || (i == n && j == n + 1)) return Corner{i, j, TriMatrix{}};
    if (!(1 <= j && j <= i && i <= n))
        throw std::out_of_range("corner: need 1 <= j <= i <= order (or a degenerate pair)");
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(i - j + 1));
    for (int r = j; r <= i; ++r) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(r - j + 1));
        for (int c = j; c <= r; ++c) row.push_back(A.a(r, c));
        rows.push_back(std::move(row));
    }
    return Corner{i, j, TriMatrix(std::move(rows))};
}

// {a_ij}: the product of the row-i entries from column j through the
// diagonal.
inline Rational factorial_product(const TriMatrix& A, int i, int j) {
    if (i < 1 || i > A.order() || j < 1 || j > i)
        throw std::out_of_range("factorial_product: need 1 <= j <= i <= order");
    Rational p = 1;
    for (int s = j; s <= i; ++s) p *= A.a(i, s);
    return p;
}

namespace detail {

// fp[i][j] = {a_ij} for all 1 <= j <= i <= n, computed with O(n^2)
// multiplications via the suffix recurrence {a_ij} = a_ij * {a_i,j+1}.
inline std::vector<std::vector<Rational>> all_factorial_products(const TriMatrix& A) {
    const int n = A.order();
    std::vector<std::vector<Rational>> fp(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        auto& row = fp[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(i) + 1, Rational(0));
        row[static_cast<std::size_t>(i)] = A.a(i, i);
        for (int j = i - 1; j >= 1; --j)
            row[static_cast<std::size_t>(j)] = A.a(i, j) * row[static_cast<std::size_t>(j) + 1];
    }
    return fp;
}

// Enumerates the compositions of n in lexicographic order, e.g. for n = 3:
// (1,1,1), (1,2), (2,1), (3).
inline void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            visit(parts);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            rec(remaining - p);
            parts.pop_back();
        }
    };
    rec(n);
}

// Prefix values L[t] = pper/ddet of the leading corner on rows 1..t,
// with L[0] = 1, via expansion by the last row.
inline std::vector<Rational> prefix_values(const std::vector<std::vector<Rational>>& fp, int n,
                                           bool signed_variant) {
    std::vector<Rational> L(static_cast<std::size_t>(n) + 1);
    L[0] = 1;
    for (int t = 1; t <= n; ++t) {
        Rational acc = 0;
        for (int s = 1; s <= t; ++s) {
            Rational term = fp[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] *
                            L[static_cast<std::size_t>(s) - 1];
            if (signed_variant && (t - s) % 2 != 0) term = -term;
            acc += term;
        }
        L[static_cast<std::size_t>(t)] = acc;
    }
    return L;
}

// Suffix values S[j] = pper/ddet of the corner on rows/columns j..n, with
// S[n+1] = 1, via expansion by the first column.
inline std::vector<Rational> suffix_values(const std::vector<std::vector<Rational>>& fp, int n,
                                           bool signed_variant) {
    std::vector<Rational> S(static_cast<std::size_t>(n) + 2);
    S[static_cast<std::size_t>(n) + 1] = 1;
    for (int j = n; j >= 1; --j) {
        Rational acc = 0;
        for (int r = j; r <= n; ++r) {
            Rational term = fp[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *
                            S[static_cast<std::size_t>(r) + 1];
            if (signed_variant && (r - j) % 2 != 0) term = -term;
            acc += term;
        }
        S[static_cast<std::size_t>(j)] = acc;
    }
    return S;
}

inline Rational by_definition(const TriMatrix& A, bool signed_variant) {
    const int n = A.order();
    if (n == 0) return Rational(1);
    Rational sum = 0;
    for_each_composition(n, [&](const std::vector<int>& parts) {
        Rational term = 1;
        int end = 0;
        for (int p : parts) {
            const int start = end + 1;
            end += p;
            term *= factorial_product(A, end, start);
        }
        if (signed_variant && (n - static_cast<int>(parts.size())) % 2 != 0) term = -term;
        sum += term;
    });
    return sum;
}

} // namespace detail

// Parapermanent/paradeterminant straight from the composition sum.
// Exponential in the order; intended as an oracle for the fast paths.
inline Rational pper_def(const TriMatrix& A) { return detail::by_definition(A, false); }
inline Rational ddet_def(const TriMatrix& A) { return detail::by_definition(A, true); }

// O(order^2) multiplications via the corner recursion.
inline Rational pper_fast(const TriMatrix& A) {
    const int n = A.order();
    if (n == 0) return Rational(1);
    const auto fp = detail::all_factorial_products(A);
    return detail::suffix_values(fp, n, false)[1];
}

inline Rational ddet_fast(const TriMatrix& A) {
    const int n = A.order();
    if (n == 0) return Rational(1);
    const auto fp = detail::all_factorial_products(A);
    return detail::suffix_values(fp, n, true)[1];
}

// Expansion over the inscribed table of the elements of row/column i:
//   pper(A) = sum_{s <= i} sum_{r >= i} {a_rs} * pper(R_{s-1,1}) * pper(R_{n,r+1}).
inline Rational pper_expand_table(const TriMatrix& A, int i) {
    const int n = A.order();
    if (i < 1 || i > n) throw std::out_of_range("pper_expand_table: index out of range");
    const auto fp = detail::all_factorial_products(A);
    const auto L = detail::prefix_values(fp, n, false);
    const auto S = detail::suffix_values(fp, n, false);
    Rational sum = 0;
    for (int s = 1; s <= i; ++s)
        for (int r = i; r <= n; ++r)
            sum += fp[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] *
                   L[static_cast<std::size_t>(s) - 1] * S[static_cast<std::size_t>(r) + 1];
    return sum;
}

// Paradeterminant analogue; the table cell (r, s) carries the sign
// (-1)^(r+s).
inline Rational ddet_expand_table(const TriMatrix& A, int i) {
    const int n = A.order();
    if (i < 1 || i > n) throw std::out_of_range("ddet_expand_table: index out of range");
    const auto fp = detail::all_factorial_products(A);
    const auto L = detail::prefix_values(fp, n, true);
    const auto S = detail::suffix_values(fp, n, true);
    Rational sum = 0;
    for (int s = 1; s <= i; ++s)
        for (int r = i; r <= n; ++r) {
            Rational term = fp[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] *
                            L[static_cast<std::size_t>(s) - 1] * S[static_cast<std::size_t>(r) + 1];
            if ((r + s) % 2 != 0) term = -term;
            sum += term;
        }
    return sum;
}

// Convenience forms for corners (empty corner -> 1).
inline Rational pper(const TriMatrix& A) { return pper_fast(A); }
inline Rational ddet(const TriMatrix& A) { return ddet_fast(A); }

} // namespace recfrac
