#pragma once
// (n, m)-forms: elements
//     s_0 + s_1 t + ... + s_{n-1} t^{n-1},   t = m^(1/n),
// represented by their rational coordinate vectors together with the
// n x n integral embedding
//     X[i][j] = s_{i-j}        for i >= j,
//     X[i][j] = m * s_{n+i-j}  for i <  j        (0-based indices),
// i.e. column j holds the coordinates of x * t^j. The embedding turns
// form multiplication into matrix multiplication, the norm into a
// determinant, and the degree-n relation of a form into the
// characteristic polynomial of its matrix.

#include "recfrac/fraction.hpp"
#include "recfrac/matrix.hpp"
#include "recfrac/rational.hpp"

#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace recfrac {

struct NmForm {
    int n = 1;
    Rational m;
    std::vector<Rational> s;

    bool operator==(const NmForm&) const = default;
};

inline NmForm make_form(int n, Rational m, std::vector<Rational> s) {
    if (n < 1) throw std::invalid_argument("make_form: n must be >= 1");
    if (static_cast<int>(s.size()) != n)
        throw std::invalid_argument("make_form: coordinate count must equal n");
    return NmForm{n, std::move(m), std::move(s)};
}

inline NmForm zero_form(int n, const Rational& m) {
    return make_form(n, m, std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
}

inline NmForm identity_form(int n, const Rational& m) {
    NmForm x = zero_form(n, m);
    x.s[0] = 1;
    return x;
}

inline bool is_zero(const NmForm& x) {
    for (const Rational& v : x.s)
        if (v != 0) return false;
    return true;
}

inline SquareMatrix embed(const NmForm& x) {
    const int n = x.n;
    SquareMatrix X(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            X.at(i, j) = i >= j ? x.s[static_cast<std::size_t>(i - j)]
                                : Rational(x.m * x.s[static_cast<std::size_t>(n + i - j)]);
    return X;
}

namespace detail {

inline void require_same_shape(const NmForm& x, const NmForm& y, const char* op) {
    if (x.n != y.n || x.m != y.m)
        throw std::invalid_argument(std::string(op) + ": mismatched form parameters (n, m)");
}

} // namespace detail

inline NmForm add(const NmForm& x, const NmForm& y) {
    detail::require_same_shape(x, y, "add");
    NmForm out = x;
    for (int i = 0; i < x.n; ++i) out.s[static_cast<std::size_t>(i)] += y.s[static_cast<std::size_t>(i)];
    return out;
}

inline NmForm sub(const NmForm& x, const NmForm& y) {
    detail::require_same_shape(x, y, "sub");
    NmForm out = x;
    for (int i = 0; i < x.n; ++i) out.s[static_cast<std::size_t>(i)] -= y.s[static_cast<std::size_t>(i)];
    return out;
}

inline NmForm scalar_mul(const Rational& c, const NmForm& x) {
    NmForm out = x;
    for (Rational& v : out.s) v *= c;
    return out;
}

inline NmForm negate(const NmForm& x) { return scalar_mul(Rational(-1), x); }

// Coordinate product: polynomial multiplication in t reduced by t^n = m,
//   s''_k = sum_{i+j=k} x_i y_j + m * sum_{i+j=k+n} x_i y_j.
inline NmForm multiply(const NmForm& x, const NmForm& y) {
    detail::require_same_shape(x, y, "multiply");
    const int n = x.n;
    std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        if (x.s[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < n; ++j) {
            const Rational term = x.s[static_cast<std::size_t>(i)] * y.s[static_cast<std::size_t>(j)];
            const int k = i + j;
            if (k < n)
                out[static_cast<std::size_t>(k)] += term;
            else
                out[static_cast<std::size_t>(k - n)] += x.m * term;
        }
    }
    return NmForm{n, x.m, std::move(out)};
}

inline NmForm pow_form(const NmForm& x, unsigned e) {
    NmForm acc = identity_form(x.n, x.m);
    NmForm base = x;
    while (e != 0) {
        if (e & 1u) acc = multiply(acc, base);
        base = multiply(base, base);
        e >>= 1u;
    }
    return acc;
}

// F(x): the determinant of the embedding. Multiplicative, rational, and
// equal to the product of the n algebraic conjugates of the form value.
inline Rational norm(const NmForm& x) { return det_exact(embed(x)); }

// The adjugate form: multiply(x, conjugate(x)) = (norm(x), 0, ..., 0) for
// every x (including zero divisors, where the product is the zero form).
// Its coordinates are the first column of the adjugate of the embedding.
inline NmForm conjugate(const NmForm& x) {
    const int n = x.n;
    const SquareMatrix X = embed(x);
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Rational d = det_exact(minor_matrix(X, 0, i));
        c[static_cast<std::size_t>(i)] = (i % 2 == 0) ? d : Rational(-d);
    }
    return NmForm{n, x.m, std::move(c)};
}

inline NmForm inverse(const NmForm& x) {
    const Rational nv = norm(x);
    if (nv == 0) throw std::domain_error("inverse: zero norm (zero form or zero divisor)");
    NmForm c = conjugate(x);
    for (Rational& v : c.s) v /= nv;
    return c;
}

namespace detail {

template <typename Visit>
inline void for_each_combination(int n, int k, Visit&& visit) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    std::iota(comb.begin(), comb.end(), 0);
    for (;;) {
        visit(static_cast<const std::vector<int>&>(comb));
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < k; ++t)
            comb[static_cast<std::size_t>(t)] = comb[static_cast<std::size_t>(t - 1)] + 1;
    }
}

} // namespace detail

// Coefficients (a_1, ..., a_n) of the degree-n relation
//   x^n = a_1 x^{n-1} + ... + a_n
// satisfied by the form: a_j = (-1)^(j-1) * (sum of the principal j x j
// minors of the embedding). In particular a_1 is the trace multiple n*s_0
// and a_n = (-1)^(n-1) * norm(x).
inline std::vector<Rational> min_poly_coeffs(const NmForm& x) {
    const int n = x.n;
    const SquareMatrix X = embed(x);
    std::vector<Rational> a(static_cast<std::size_t>(n), Rational(0));
    for (int j = 1; j <= n; ++j) {
        Rational sum = 0;
        detail::for_each_combination(n, j, [&](const std::vector<int>& keep) {
            sum += det_exact(principal_submatrix(X, keep));
        });
        a[static_cast<std::size_t>(j - 1)] = (j % 2 == 1) ? sum : Rational(-sum);
    }
    return a;
}

// The relation above as a monic recurrence polynomial; requires
// norm(x) != 0 so that the free coefficient is nonzero.
inline MonicRecurrencePoly min_poly(const NmForm& x) {
    std::vector<Rational> a = min_poly_coeffs(x);
    if (a.back() == 0)
        throw std::domain_error("min_poly: zero norm, relation has no nonzero free coefficient");
    return MonicRecurrencePoly(std::move(a));
}

// x^n - a_1 x^{n-1} - ... - a_n evaluated in the form algebra; the zero
// form for every x (Cayley-Hamilton for the embedding).
inline NmForm min_poly_residual(const NmForm& x) {
    const int n = x.n;
    const std::vector<Rational> a = min_poly_coeffs(x);
    NmForm acc = pow_form(x, static_cast<unsigned>(n));
    for (int j = 1; j <= n; ++j) {
        const NmForm term = scalar_mul(a[static_cast<std::size_t>(j - 1)],
                                       pow_form(x, static_cast<unsigned>(n - j)));
        acc = sub(acc, term);
    }
    return acc;
}

// Super form of shape (n, m^n + sign): coordinates (m^{n-1}, ..., m, 1).
// Its value is 1 / ((m^n + sign)^(1/n) - m) for sign = +1 and the analogous
// reciprocal for sign = -1, and its degree-n relation is super_poly.
struct SuperForm {
    NmForm form;
    MonicRecurrencePoly poly;
};

inline SuperForm super_form(int n, const Integer& m, int sign) {
    MonicRecurrencePoly poly = super_poly(n, m, sign); // validates n, m, sign
    const Rational radicand = Rational(ipow(m, static_cast<unsigned long>(n)) + sign);
    std::vector<Rational> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        s[static_cast<std::size_t>(i)] = Rational(ipow(m, static_cast<unsigned long>(n - 1 - i)));
    return SuperForm{NmForm{n, radicand, std::move(s)}, std::move(poly)};
}

// ---------------------------------------------------------------------------
// Certified evaluation.
// ---------------------------------------------------------------------------

namespace detail {

inline Interval eval_with_root(const NmForm& x, const DecimalInterval& root) {
    Interval acc = interval_point(x.s[0]);
    Interval tp = interval_point(Rational(1));
    const Interval t = to_interval(root);
    for (int i = 1; i < x.n; ++i) {
        tp = interval_mul(tp, t);
        acc = interval_add(acc, interval_scale(x.s[static_cast<std::size_t>(i)], tp));
    }
    return acc;
}

inline int decimal_length(const Integer& v) {
    return static_cast<int>(abs_int(v).str().size());
}

// Working precision headroom: enough digits to absorb the magnitude of the
// coordinates and of the root powers.
inline int eval_headroom(const NmForm& x) {
    int pad = 8 + decimal_length(numerator(x.m)) + decimal_length(denominator(x.m));
    for (const Rational& v : x.s)
        pad = std::max(pad, 8 + decimal_length(numerator(v)) + decimal_length(denominator(v)));
    return pad + x.n;
}

} // namespace detail

// Certified enclosure of the real value of the form, of width at most
// 10^-digits. Even n requires m >= 0.
inline DecimalInterval eval_interval(const NmForm& x, int digits) {
    if (digits < 0) throw std::invalid_argument("eval_interval: negative digit count");
    if (x.m < 0 && x.n % 2 == 0)
        throw std::domain_error("eval_interval: even n with negative m has no real root");
    const Rational target(1, pow10(digits));
    int work = digits + detail::eval_headroom(x);
    const int cap = digits + detail::eval_headroom(x) * 64 + 4096;
    for (;;) {
        const DecimalInterval root = nth_root_interval(x.m, x.n, work);
        const Interval v = detail::eval_with_root(x, root);
        if (interval_width(v) <= target) return DecimalInterval{v.lo, v.hi, digits};
        if (work > cap)
            throw std::runtime_error("eval_interval: failed to certify an enclosure");
        work = work * 2 + 8;
    }
}

// Truncating decimal rendering of the form value, certified to `digits`
// fractional digits: internal precision is raised until both enclosure
// endpoints render identically. Values indistinguishable from zero at the
// requested precision render as unsigned zero.
inline std::string eval_decimal(const NmForm& x, int digits) {
    if (digits < 0) throw std::invalid_argument("eval_decimal: negative digit count");
    bool rational_only = true;
    for (int i = 1; i < x.n; ++i)
        if (x.s[static_cast<std::size_t>(i)] != 0) rational_only = false;
    if (rational_only) return decimal_render(x.s[0], digits);

    const Rational tiny(1, pow10(digits + 2));
    for (int guard = 2; guard <= 512; guard *= 2) {
        const DecimalInterval enc = eval_interval(x, digits + guard);
        const std::string lo = decimal_render(enc.lower, digits);
        const std::string hi = decimal_render(enc.upper, digits);
        if (lo == hi) return lo;
        if (enc.lower <= 0 && enc.upper >= 0 && abs_rat(enc.lower) < tiny && abs_rat(enc.upper) < tiny)
            return decimal_render(Rational(0), digits);
    }
    throw std::runtime_error(
        "eval_decimal: value sits on a rendering boundary beyond certified precision");
}

// ---------------------------------------------------------------------------
// Serialization: "(n, m, [s0, s1, ...])" with exact rational entries.
// ---------------------------------------------------------------------------

inline std::string form_to_string(const NmForm& x) {
    std::ostringstream out;
    out << '(' << x.n << ", " << rational_to_string(x.m) << ", [";
    for (int i = 0; i < x.n; ++i) {
        if (i) out << ", ";
        out << rational_to_string(x.s[static_cast<std::size_t>(i)]);
    }
    out << "])";
    return out.str();
}

namespace detail {

struct FormScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_form: " + what + " at position " + std::to_string(pos) +
                                    " in '" + std::string(text) + "'");
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    std::string_view scalar_token() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size()) {
            const char c = text[pos];
            if (c == ',' || c == ']' || c == ')' || std::isspace(static_cast<unsigned char>(c)))
                break;
            ++pos;
        }
        if (pos == start) fail("expected a number");
        return text.substr(start, pos - start);
    }
};

} // namespace detail

inline NmForm parse_form(std::string_view text) {
    detail::FormScanner sc{text};
    sc.expect('(');
    int n = 0;
    try {
        const Integer nv = parse_integer(sc.scalar_token());
        if (nv < 1 || nv > 1000) throw std::invalid_argument("out of range");
        n = static_cast<int>(nv);
    } catch (const std::invalid_argument&) {
        sc.fail("invalid form degree");
    }
    sc.expect(',');
    Rational m;
    try {
        m = parse_rational(sc.scalar_token());
    } catch (const std::invalid_argument&) {
        sc.fail("invalid shape parameter");
    }
    sc.expect(',');
    sc.expect('[');
    std::vector<Rational> s;
    if (!sc.peek_is(']')) {
        for (;;) {
            try {
                s.push_back(parse_rational(sc.scalar_token()));
            } catch (const std::invalid_argument&) {
                sc.fail("invalid coordinate");
            }
            if (sc.peek_is(',')) {
                sc.expect(',');
                continue;
            }
            break;
        }
    }
    sc.expect(']');
    sc.expect(')');
    sc.skip_ws();
    if (sc.pos != text.size()) sc.fail("trailing characters");
    if (static_cast<int>(s.size()) != n)
        throw std::invalid_argument("parse_form: coordinate count " + std::to_string(s.size()) +
                                    " does not match degree " + std::to_string(n));
    return make_form(n, std::move(m), std::move(s));
}

} // namespace recfrac
