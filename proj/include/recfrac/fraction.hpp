#pragma once
// Recurrent fractions: n-dimensional generalizations of continued
// fractions, driven by a coefficient schedule a_{i,j} (i = 1..n, j >= 1).
//
// Truncation values are the quotients P_m / Q_m of two linear recurrences
//   P_m = sum_{i=1..n} a_{i,m} P_{m-i},  P_0 = 1, P_{<0} = 0   (m >= 1)
//   Q_m = sum_{i=1..n} a_{i,m} Q_{m-i},  Q_1 = 1, Q_{<=0} = 0  (m >= 2).
// For order 1 every truncation equals a_{1,1} (a constant fraction), and
// for n = 2 the recurrences above are exactly the classical continued
// fraction ones.
//
// Each fraction also has two triangular matrices whose parapermanents
// reproduce P_m and Q_m, linking this module to the triangular one.

#include "recfrac/rational.hpp"
#include "recfrac/triangular.hpp"

#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace recfrac {

// Monic recurrence polynomial x^n = a_1 x^{n-1} + ... + a_n with a_n != 0.
class MonicRecurrencePoly {
public:
    explicit MonicRecurrencePoly(std::vector<Rational> coefficients)
        : a_(std::move(coefficients)) {
        if (a_.empty())
            throw std::invalid_argument("MonicRecurrencePoly: order must be >= 1");
        if (a_.back() == 0)
            throw std::domain_error("MonicRecurrencePoly: the free coefficient a_n must be nonzero");
    }

    int order() const { return static_cast<int>(a_.size()); }

    // a_i, 1-based.
    const Rational& a(int i) const {
        if (i < 1 || i > order()) throw std::out_of_range("MonicRecurrencePoly: coefficient index");
        return a_[static_cast<std::size_t>(i - 1)];
    }

    const std::vector<Rational>& coefficients() const { return a_; }

    // Value of x^n - a_1 x^{n-1} - ... - a_n at v.
    Rational residual_at(const Rational& v) const {
        const int n = order();
        Rational acc = 1; // will become v^n - sum by Horner over (1, -a_1, ..., -a_n)
        for (int i = 1; i <= n; ++i) acc = acc * v - a(i);
        return acc;
    }

    bool operator==(const MonicRecurrencePoly&) const = default;

private:
    std::vector<Rational> a_;
};

// "x^3 = 12x^2 - 6x + 1" style rendering.
inline std::string polynomial_display(const MonicRecurrencePoly& p) {
    const int n = p.order();
    std::ostringstream out;
    out << "x^" << n << " =";
    bool first = true;
    for (int i = 1; i <= n; ++i) {
        const Rational& c = p.a(i);
        if (c == 0) continue;
        const Rational mag = abs_rat(c);
        if (first) {
            out << ' ' << (c < 0 ? "-" : "");
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const int e = n - i;
        const bool unit = mag == 1;
        if (!unit || e == 0) out << rational_to_string(mag);
        if (e >= 1) {
            out << 'x';
            if (e > 1) out << '^' << e;
        }
    }
    if (first) out << " 0";
    return out.str();
}

// A recurrent fraction of order n: schedule columns (a_{1,j}, ..., a_{n,j})
// for j = 1, 2, .... Periodic fractions repeat their stored columns
// forever; finite ones expose exactly the stored horizon.
class RecurrentFraction {
public:
    static RecurrentFraction periodic(int order, std::vector<std::vector<Rational>> columns) {
        return RecurrentFraction(order, std::move(columns), true);
    }

    static RecurrentFraction finite(int order, std::vector<std::vector<Rational>> columns) {
        return RecurrentFraction(order, std::move(columns), false);
    }

    int order() const { return order_; }
    bool is_periodic() const { return periodic_; }
    int stored_columns() const { return static_cast<int>(columns_.size()); }

    // Schedule column j (1-based).
    const std::vector<Rational>& column(long j) const {
        if (j < 1) throw std::out_of_range("RecurrentFraction: column index must be >= 1");
        if (periodic_)
            return columns_[static_cast<std::size_t>((j - 1) % static_cast<long>(columns_.size()))];
        if (j > static_cast<long>(columns_.size()))
            throw std::out_of_range("RecurrentFraction: column beyond the stored horizon");
        return columns_[static_cast<std::size_t>(j - 1)];
    }

private:
    RecurrentFraction(int order, std::vector<std::vector<Rational>> columns, bool periodic)
        : order_(order), columns_(std::move(columns)), periodic_(periodic) {
        if (order_ < 1) throw std::invalid_argument("RecurrentFraction: order must be >= 1");
        if (columns_.empty()) throw std::invalid_argument("RecurrentFraction: needs at least one column");
        for (const auto& c : columns_)
            if (static_cast<int>(c.size()) != order_)
                throw std::invalid_argument("RecurrentFraction: every column must have `order` entries");
    }

    int order_;
    std::vector<std::vector<Rational>> columns_;
    bool periodic_;
};

// The 1-periodic fraction whose every column is the coefficient vector of p.
inline RecurrentFraction from_polynomial(const MonicRecurrencePoly& p) {
    return RecurrentFraction::periodic(p.order(), {p.coefficients()});
}

// One truncation of a recurrent fraction: the exact pair (P_m, Q_m) and
// their quotient when defined.
struct Truncation {
    long index = 0;
    Rational p;
    Rational q;
    std::optional<Rational> value; // P_m / Q_m, absent when Q_m = 0
};

// All truncations 1..m in O(m * order) exact operations.
inline std::vector<Truncation> truncations(const RecurrentFraction& f, long m) {
    if (m < 1) throw std::invalid_argument("truncations: index must be >= 1");
    const int n = f.order();
    std::vector<Rational> P(static_cast<std::size_t>(m) + 1);
    std::vector<Rational> Q(static_cast<std::size_t>(m) + 1);
    P[0] = 1;
    Q[1] = 1;
    for (long t = 1; t <= m; ++t) {
        const std::vector<Rational>& col = f.column(t);
        Rational pa = 0;
        for (int i = 1; i <= n && i <= t; ++i)
            pa += col[static_cast<std::size_t>(i - 1)] * P[static_cast<std::size_t>(t - i)];
        P[static_cast<std::size_t>(t)] = pa;
        if (t >= 2) {
            Rational qa = 0;
            for (int i = 1; i <= n && t - i >= 1; ++i)
                qa += col[static_cast<std::size_t>(i - 1)] * Q[static_cast<std::size_t>(t - i)];
            Q[static_cast<std::size_t>(t)] = qa;
        }
    }
    std::vector<Truncation> out;
    out.reserve(static_cast<std::size_t>(m));
    for (long t = 1; t <= m; ++t) {
        Truncation tr;
        tr.index = t;
        tr.p = P[static_cast<std::size_t>(t)];
        tr.q = Q[static_cast<std::size_t>(t)];
        if (tr.q != 0) tr.value = Rational(tr.p / tr.q);
        out.push_back(std::move(tr));
    }
    return out;
}

inline Truncation truncation(const RecurrentFraction& f, long m) {
    return truncations(f, m).back();
}

namespace detail {

// Triangular-matrix entry for the fraction on schedule column `col` at
// diagonal distance d = row - column: the diagonal carries a_{1,col}, the
// d-th subdiagonal the ratio a_{d+1,col} / a_{d,col}, and entries below the
// bandwidth are zero.
inline Rational fraction_matrix_entry(const RecurrentFraction& f, long col, int d) {
    const int n = f.order();
    if (d >= n) return Rational(0);
    const std::vector<Rational>& c = f.column(col);
    if (d == 0) return c[0];
    if (c[static_cast<std::size_t>(d - 1)] == 0)
        throw std::domain_error(
            "matrix form undefined: schedule coefficient a_" + std::to_string(d) + "," +
            std::to_string(col) + " is zero, so the subdiagonal ratio does not exist");
    return c[static_cast<std::size_t>(d)] / c[static_cast<std::size_t>(d - 1)];
}

} // namespace detail

// Triangular matrix of order m whose parapermanent equals P_m. Row j uses
// schedule column j.
inline TriMatrix numerator_matrix(const RecurrentFraction& f, long m) {
    if (m < 1) throw std::invalid_argument("numerator_matrix: order must be >= 1");
    TriMatrix A(static_cast<int>(m));
    for (int j = 1; j <= m; ++j)
        for (int c = 1; c <= j; ++c)
            A.a(j, c) = detail::fraction_matrix_entry(f, j, j - c);
    return A;
}

// Triangular matrix of order m-1 whose parapermanent equals Q_m. Row j
// uses schedule column j + 1 (the denominator sequence lags the schedule
// by one column).
inline TriMatrix denominator_matrix(const RecurrentFraction& f, long m) {
    if (m < 1) throw std::invalid_argument("denominator_matrix: index must be >= 1");
    TriMatrix A(static_cast<int>(m - 1));
    for (int j = 1; j <= m - 1; ++j)
        for (int c = 1; c <= j; ++c)
            A.a(j, c) = detail::fraction_matrix_entry(f, j + 1, j - c);
    return A;
}

// u_m from u_0 = 1, u_{<0} = 0, u_t = sum a_i u_{t-i}; equals the numerator
// P_m of the 1-periodic fraction of p, and the complete homogeneous
// symmetric value h_m of the roots of p.
inline Rational recurrence_value(const MonicRecurrencePoly& p, long m) {
    if (m < 0) throw std::invalid_argument("recurrence_value: negative index");
    const int n = p.order();
    std::vector<Rational> u(static_cast<std::size_t>(m) + 1);
    u[0] = 1;
    for (long t = 1; t <= m; ++t) {
        Rational acc = 0;
        for (int i = 1; i <= n && i <= t; ++i)
            acc += p.a(i) * u[static_cast<std::size_t>(t - i)];
        u[static_cast<std::size_t>(t)] = acc;
    }
    return u[static_cast<std::size_t>(m)];
}

// sigma_0..sigma_n of the given values.
inline std::vector<Rational> elementary_symmetric(const std::vector<Rational>& xs) {
    std::vector<Rational> sigma(xs.size() + 1);
    sigma[0] = 1;
    std::size_t used = 0;
    for (const Rational& x : xs) {
        ++used;
        for (std::size_t j = used; j >= 1; --j)
            sigma[j] = sigma[j] + x * sigma[j - 1];
    }
    return sigma;
}

// The monic recurrence polynomial whose roots are xs: a_i = (-1)^(i-1) sigma_i.
// Requires every root nonzero (otherwise a_n = 0).
inline MonicRecurrencePoly poly_from_roots(const std::vector<Rational>& xs) {
    if (xs.empty()) throw std::invalid_argument("poly_from_roots: needs at least one root");
    const std::vector<Rational> sigma = elementary_symmetric(xs);
    std::vector<Rational> a(xs.size());
    for (std::size_t i = 1; i <= xs.size(); ++i) {
        a[i - 1] = sigma[i];
        if (i % 2 == 0) a[i - 1] = -a[i - 1];
    }
    return MonicRecurrencePoly(std::move(a));
}

// Complete homogeneous symmetric value h_m(xs): the sum of all degree-m
// monomials in xs. Zero entries contribute nothing and are dropped.
inline Rational complete_homogeneous(std::vector<Rational> xs, long m) {
    if (m < 0) throw std::invalid_argument("complete_homogeneous: negative degree");
    std::erase(xs, Rational(0));
    if (m == 0) return Rational(1);
    if (xs.empty()) return Rational(0);
    return recurrence_value(poly_from_roots(xs), m);
}

// Brute-force oracle for complete_homogeneous: enumerates every monomial
// degree split directly.
inline Rational complete_homogeneous_enumerated(const std::vector<Rational>& xs, long m) {
    if (m < 0) throw std::invalid_argument("complete_homogeneous_enumerated: negative degree");
    if (xs.empty()) return m == 0 ? Rational(1) : Rational(0);
    std::function<Rational(std::size_t, long)> rec = [&](std::size_t idx, long deg) -> Rational {
        if (deg == 0) return Rational(1);
        if (idx + 1 == xs.size()) return rpow(xs[idx], deg);
        Rational acc = 0;
        Rational pw = 1;
        for (long j = 0; j <= deg; ++j) {
            acc += pw * rec(idx + 1, deg - j);
            pw *= xs[idx];
        }
        return acc;
    };
    return rec(0, m);
}

// Result of the dominant-root extraction from truncation values.
struct RootResult {
    bool converged = false;
    Rational approximation;    // the last defined truncation value examined
    long iterations_used = 0;  // truncation index reached
    int certified_digits = 0;  // decimal digits stable across the final window
    std::string diagnostic;    // human-readable outcome note
    std::vector<Truncation> trace; // every truncation computed, in order
};

namespace detail {

inline int stable_digit_count(const Rational& maxdiff, int cap) {
    if (maxdiff <= 0) return cap;
    int d = 0;
    Rational bound(1, 10);
    while (d < cap && maxdiff < bound) {
        ++d;
        bound /= 10;
    }
    return d;
}

} // namespace detail

// Iterates the truncations of the 1-periodic fraction of p until the last
// three *defined* values pairwise agree within 10^-target_digits AND the
// polynomial residual of the latest value passes a derivative-scaled guard
//   |p(v)| <= G * 10^-target_digits,  G = n * max(1,|v|+1)^(n-1) * (1 + sum|a_i|),
// which rejects spurious agreement (e.g. oscillating truncations of a
// polynomial with no real dominant root). Truncations with Q_m = 0 are
// skipped for agreement purposes but still counted as iterations.
inline RootResult dominant_root(const MonicRecurrencePoly& p, int target_digits,
                                long max_iter = 200) {
    if (target_digits < 1) throw std::invalid_argument("dominant_root: target_digits must be >= 1");
    if (max_iter < 3) throw std::invalid_argument("dominant_root: max_iter must be >= 3");

    const int n = p.order();
    const Rational eps(1, pow10(target_digits));
    Rational coeff_sum = 1;
    for (int i = 1; i <= n; ++i) coeff_sum += abs_rat(p.a(i));

    RootResult res;
    std::vector<Rational> P(static_cast<std::size_t>(max_iter) + 1);
    std::vector<Rational> Q(static_cast<std::size_t>(max_iter) + 1);
    P[0] = 1;
    Q[1] = 1;
    std::deque<Rational> window; // last <= 3 defined values
    const int digit_cap = target_digits + 64;

    for (long t = 1; t <= max_iter; ++t) {
        Rational pa = 0;
        for (int i = 1; i <= n && i <= t; ++i)
            pa += p.a(i) * P[static_cast<std::size_t>(t - i)];
        P[static_cast<std::size_t>(t)] = pa;
        if (t >= 2) {
            Rational qa = 0;
            for (int i = 1; i <= n && t - i >= 1; ++i)
                qa += p.a(i) * Q[static_cast<std::size_t>(t - i)];
            Q[static_cast<std::size_t>(t)] = qa;
        }

        Truncation tr;
        tr.index = t;
        tr.p = P[static_cast<std::size_t>(t)];
        tr.q = Q[static_cast<std::size_t>(t)];
        if (tr.q != 0) tr.value = Rational(tr.p / tr.q);
        res.trace.push_back(tr);
        res.iterations_used = t;

        if (!tr.value) continue;
        const Rational v = *tr.value;
        res.approximation = v;
        window.push_back(v);
        if (window.size() > 3) window.pop_front();
        if (window.size() < 3) continue;

        Rational maxdiff = 0;
        for (std::size_t i = 0; i < window.size(); ++i)
            for (std::size_t j = i + 1; j < window.size(); ++j)
                maxdiff = std::max(maxdiff, abs_rat(window[i] - window[j]));
        if (maxdiff >= eps) continue;

        const Rational residual = abs_rat(p.residual_at(v));
        const Rational vbound = abs_rat(v) + 1;
        const Rational guard = Rational(n) * std::max(Rational(1), rpow(vbound, n - 1)) * coeff_sum;
        if (residual <= guard * eps) {
            res.converged = true;
            res.certified_digits = detail::stable_digit_count(maxdiff, digit_cap);
            res.diagnostic = "stabilized to " + std::to_string(res.certified_digits) +
                             " decimal digits at truncation " + std::to_string(t) +
                             "; polynomial residual within the guard bound";
            return res;
        }
    }

    // Did not converge: explain what was observed.
    std::ostringstream why;
    if (window.size() == 3) {
        Rational maxdiff = 0;
        for (std::size_t i = 0; i < window.size(); ++i)
            for (std::size_t j = i + 1; j < window.size(); ++j)
                maxdiff = std::max(maxdiff, abs_rat(window[i] - window[j]));
        if (maxdiff < eps) {
            const Rational residual = abs_rat(p.residual_at(window.back()));
            why << "truncation values agree to the target precision but fail the polynomial "
                   "residual check (|p(v)| = "
                << decimal_render(residual, std::min(target_digits, 12))
                << "); the sequence is not approaching a root of the polynomial "
                   "(oscillating truncations are the typical cause)";
        } else {
            why << "no three consecutive defined truncation values agreed to 10^-"
                << target_digits << " within " << max_iter << " iterations; last values:";
            for (const Rational& v : window)
                why << ' ' << decimal_render(v, std::min(target_digits, 12));
        }
    } else {
        why << "fewer than three defined truncation values in " << max_iter
            << " iterations (denominators vanish too often)";
    }
    res.certified_digits = 0;
    res.diagnostic = why.str();
    return res;
}

// Residual check for the ratio limit p_m / p_{m-1} -> dominant root: returns
// the sup-distance from the exact ratio to the supplied root enclosure, or
// nothing when p_{m-1} = 0 (ratio undefined at this index).
inline std::optional<Rational> lemma1_limit_check(const MonicRecurrencePoly& p,
                                                  const DecimalInterval& dominant, long m) {
    if (m < 1) throw std::invalid_argument("lemma1_limit_check: index must be >= 1");
    const int n = p.order();
    std::vector<Rational> u(static_cast<std::size_t>(m) + 1);
    u[0] = 1;
    for (long t = 1; t <= m; ++t) {
        Rational acc = 0;
        for (int i = 1; i <= n && i <= t; ++i)
            acc += p.a(i) * u[static_cast<std::size_t>(t - i)];
        u[static_cast<std::size_t>(t)] = acc;
    }
    const Rational& um = u[static_cast<std::size_t>(m)];
    const Rational& um1 = u[static_cast<std::size_t>(m - 1)];
    if (um1 == 0) return std::nullopt;
    const Rational ratio = um / um1;
    return std::max(abs_rat(ratio - dominant.lower), abs_rat(ratio - dominant.upper));
}

// The polynomial x^n = sum_{s=1..n} (sign)^(s-1) C(n,s) m^(n-s) x^(n-s)
// whose positive root is (m^n + sign)^(1/n) - ... (see the super-form
// construction in the forms module). sign = -1 with m = 1 is rejected: the
// radicand m^n - 1 degenerates to 0.
inline MonicRecurrencePoly super_poly(int n, const Integer& m, int sign) {
    if (n < 2) throw std::invalid_argument("super_poly: order must be >= 2");
    if (m < 1) throw std::invalid_argument("super_poly: base must be >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("super_poly: sign must be +1 or -1");
    if (sign == -1 && m == 1)
        throw std::domain_error("super_poly: base 1 with sign -1 gives the degenerate radicand 0");
    std::vector<Rational> a(static_cast<std::size_t>(n));
    for (int s = 1; s <= n; ++s) {
        Integer c = binomial(n, s) * ipow(m, static_cast<unsigned long>(n - s));
        if (sign == -1 && s % 2 == 0) c = -c;
        a[static_cast<std::size_t>(s - 1)] = Rational(c);
    }
    return MonicRecurrencePoly(std::move(a));
}

// The 1-periodic fraction of the plus-variant super polynomial; its
// subdiagonal matrix ratios are (n-i+1)/(i*m) at distance i.
inline RecurrentFraction super_fraction(int n, const Integer& m) {
    return from_polynomial(super_poly(n, m, +1));
}

// Semi-decision of fraction equality: truncations compared exactly up to
// the bound (two undefined truncations compare equal). Definite "false";
// "true" means indistinguishable up to the bound.
inline bool truncations_agree(const RecurrentFraction& f, const RecurrentFraction& g, long bound) {
    if (bound < 1) throw std::invalid_argument("truncations_agree: bound must be >= 1");
    const std::vector<Truncation> tf = truncations(f, bound);
    const std::vector<Truncation> tg = truncations(g, bound);
    for (std::size_t i = 0; i < tf.size(); ++i) {
        const bool df = tf[i].value.has_value();
        const bool dg = tg[i].value.has_value();
        if (df != dg) return false;
        if (df && *tf[i].value != *tg[i].value) return false;
    }
    return true;
}

} // namespace recfrac
