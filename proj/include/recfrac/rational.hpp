#pragma once
// Exact scalar arithmetic: arbitrary-precision integers and rationals,
// string parsing and rendering, truncating decimal output, certified
// n-th root enclosures, and small interval-arithmetic helpers used by
// the evaluation routines.
//
// Rationals are always held in canonical form (coprime numerator and
// denominator, denominator positive); the backend maintains that
// invariant on every operation.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace recfrac {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }
inline Rational abs_rat(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// base^e for a nonnegative integer exponent.
inline Integer ipow(Integer base, unsigned long e) {
    Integer r = 1;
    while (e != 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

// base^e for a (possibly negative) integer exponent; base must be nonzero
// when e < 0.
inline Rational rpow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rpow: zero base with negative exponent");
        Rational pos = rpow(base, -e);
        return Rational(1) / pos;
    }
    Rational r = 1;
    Rational b = base;
    unsigned long u = static_cast<unsigned long>(e);
    while (u != 0) {
        if (u & 1u) r *= b;
        b *= b;
        u >>= 1u;
    }
    return r;
}

inline Integer pow10(int d) {
    if (d < 0) throw std::invalid_argument("pow10: negative exponent");
    return ipow(10, static_cast<unsigned long>(d));
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // always exact: r is a running binomial coefficient
    }
    return r;
}

// ---------------------------------------------------------------------------
// String conversions.
// ---------------------------------------------------------------------------

inline std::string to_decimal_string(const Integer& v) { return v.str(); }

// Canonical rational rendering: "p" when the denominator is 1, else "p/q".
inline std::string rational_to_string(const Rational& q) {
    const Integer n = numerator(q);
    const Integer d = denominator(q);
    std::string out = n.str();
    if (d != 1) {
        out += '/';
        out += d.str();
    }
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// cpp_int's string constructor follows C++ literal rules, so a leading '0'
// would flip it into octal; strip leading zeros before constructing.
inline Integer integer_from_digits(std::string_view digits) {
    const std::size_t nz = digits.find_first_not_of('0');
    if (nz == std::string_view::npos) return Integer(0);
    return Integer{std::string(digits.substr(nz))};
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

} // namespace detail

inline Integer parse_integer(std::string_view text) {
    std::string_view t = detail::trim(text);
    bool neg = false;
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
        neg = t.front() == '-';
        t.remove_prefix(1);
    }
    if (!detail::all_digits(t))
        throw std::invalid_argument("parse_integer: not an integer literal: '" + std::string(text) + "'");
    Integer v = detail::integer_from_digits(t);
    return neg ? Integer(-v) : v;
}

// Exact value of a plain decimal literal such as "-12.345" (= -12345/1000).
inline Rational rational_from_decimal(std::string_view text) {
    std::string_view t = detail::trim(text);
    bool neg = false;
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
        neg = t.front() == '-';
        t.remove_prefix(1);
    }
    const std::size_t dot = t.find('.');
    std::string_view ip = dot == std::string_view::npos ? t : t.substr(0, dot);
    std::string_view fp = dot == std::string_view::npos ? std::string_view{} : t.substr(dot + 1);
    if (ip.empty() && fp.empty())
        throw std::invalid_argument("rational_from_decimal: no digits in '" + std::string(text) + "'");
    if ((!ip.empty() && !detail::all_digits(ip)) || (!fp.empty() && !detail::all_digits(fp)))
        throw std::invalid_argument("rational_from_decimal: malformed literal '" + std::string(text) + "'");
    std::string digits;
    digits.reserve(ip.size() + fp.size());
    digits.append(ip);
    digits.append(fp);
    Rational r(detail::integer_from_digits(digits), pow10(static_cast<int>(fp.size())));
    return neg ? Rational(-r) : r;
}

// Accepts "p", "p/q", or a plain decimal literal; all exact.
inline Rational parse_rational(std::string_view text) {
    std::string_view t = detail::trim(text);
    const std::size_t slash = t.find('/');
    if (slash == std::string_view::npos) {
        if (t.find('.') != std::string_view::npos) return rational_from_decimal(t);
        return Rational(parse_integer(t));
    }
    Integer p = parse_integer(t.substr(0, slash));
    Integer q = parse_integer(t.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + std::string(text) + "'");
    if (q < 0) { // keep the canonical positive-denominator representation
        p = -p;
        q = -q;
    }
    return Rational(p, q);
}

// Truncating decimal rendering: the integer part followed by exactly
// `digits` fractional digits of |q|, truncated toward zero, with a leading
// '-' whenever q < 0. digits == 0 renders no decimal point at all.
// Parsing the output back yields a rational within 10^-digits of q.
inline std::string decimal_render(const Rational& q, int digits) {
    if (digits < 0) throw std::invalid_argument("decimal_render: negative digit count");
    const bool neg = q < 0;
    const Integer n = abs_int(numerator(q));
    const Integer d = denominator(q);
    const Integer ip = n / d;
    std::string out = neg ? "-" : "";
    out += ip.str();
    if (digits > 0) {
        const Integer rem = n % d;
        Integer scaled = (rem * pow10(digits)) / d;
        std::string frac = scaled.str();
        out += '.';
        out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
        out += frac;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Certified root enclosures.
// ---------------------------------------------------------------------------

// A two-sided rational enclosure whose width is at most 10^-digits.
struct DecimalInterval {
    Rational lower;
    Rational upper;
    int digits = 0;

    bool operator==(const DecimalInterval&) const = default;
};

// floor(a^(1/n)) for a >= 0, n >= 1, by integer binary search.
inline Integer integer_nth_root(const Integer& a, int n) {
    if (n < 1) throw std::invalid_argument("integer_nth_root: order must be >= 1");
    if (a < 0) throw std::domain_error("integer_nth_root: negative radicand");
    if (a == 0 || a == 1 || n == 1) return a;
    const unsigned long bits = boost::multiprecision::msb(a) + 1;
    Integer hi = Integer(1) << static_cast<unsigned>((bits + static_cast<unsigned long>(n) - 1) /
                                                     static_cast<unsigned long>(n));
    Integer lo = 0;
    while (lo < hi) {
        Integer mid = (lo + hi + 1) >> 1;
        if (ipow(mid, static_cast<unsigned long>(n)) <= a)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// Certified enclosure of x^(1/n). Exact roots (including n == 1 and
// perfect rational powers) collapse to a zero-width interval; otherwise the
// bounds are consecutive multiples of 10^-digits, so
//   lower^n <= x <= upper^n  and  upper - lower <= 10^-digits.
// Negative x requires odd n.
inline DecimalInterval nth_root_interval(const Rational& x, int n, int digits) {
    if (n < 1) throw std::invalid_argument("nth_root_interval: order must be >= 1");
    if (digits < 0) throw std::invalid_argument("nth_root_interval: negative digit count");
    if (x < 0) {
        if (n % 2 == 0) throw std::domain_error("nth_root_interval: even root of a negative value");
        DecimalInterval pos = nth_root_interval(Rational(-x), n, digits);
        return DecimalInterval{Rational(-pos.upper), Rational(-pos.lower), digits};
    }
    if (n == 1 || x == 0) return DecimalInterval{x, x, digits};

    const Integer p = numerator(x);
    const Integer q = denominator(x);
    const Integer rp = integer_nth_root(p, n);
    const Integer rq = integer_nth_root(q, n);
    if (ipow(rp, static_cast<unsigned long>(n)) == p && ipow(rq, static_cast<unsigned long>(n)) == q) {
        Rational exact(rp, rq);
        return DecimalInterval{exact, exact, digits};
    }

    const Integer scale = pow10(digits);
    const Integer rhs = p * ipow(scale, static_cast<unsigned long>(n));
    Integer lo = integer_nth_root(rhs / q, n);
    while (ipow(lo + 1, static_cast<unsigned long>(n)) * q <= rhs) ++lo;
    while (lo > 0 && ipow(lo, static_cast<unsigned long>(n)) * q > rhs) --lo;
    return DecimalInterval{Rational(lo, scale), Rational(lo + 1, scale), digits};
}

// ---------------------------------------------------------------------------
// Plain interval arithmetic over exact rationals.
// ---------------------------------------------------------------------------

struct Interval {
    Rational lo;
    Rational hi;
};

inline Interval interval_point(const Rational& v) { return Interval{v, v}; }
inline Interval to_interval(const DecimalInterval& d) { return Interval{d.lower, d.upper}; }
inline Rational interval_width(const Interval& a) { return Rational(a.hi - a.lo); }
inline bool interval_contains(const Interval& a, const Rational& v) { return a.lo <= v && v <= a.hi; }

inline Interval interval_add(const Interval& a, const Interval& b) {
    return Interval{Rational(a.lo + b.lo), Rational(a.hi + b.hi)};
}

inline Interval interval_scale(const Rational& c, const Interval& a) {
    if (c >= 0) return Interval{Rational(c * a.lo), Rational(c * a.hi)};
    return Interval{Rational(c * a.hi), Rational(c * a.lo)};
}

inline Interval interval_mul(const Interval& a, const Interval& b) {
    const Rational p1 = a.lo * b.lo;
    const Rational p2 = a.lo * b.hi;
    const Rational p3 = a.hi * b.lo;
    const Rational p4 = a.hi * b.hi;
    return Interval{std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

inline Interval interval_pow(const Interval& a, unsigned e) {
    Interval r = interval_point(Rational(1));
    for (unsigned i = 0; i < e; ++i) r = interval_mul(r, a);
    return r;
}

} // namespace recfrac
