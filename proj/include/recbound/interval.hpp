#pragma once

#include <string>

#include "recbound/numeric.hpp"

namespace recbound {

/// Closed interval with exact rational endpoints. Rational arithmetic on
/// intervals is exact; only transcendental maps (log, roots) round, and they
/// always round outward.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h);
    static RatInterval point(const Rat& v) { return RatInterval(v, v); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool intersects(const RatInterval& o) const { return lo <= o.hi && o.lo <= hi; }
    bool contains_interval(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }

    RatInterval operator+(const RatInterval& o) const;
    RatInterval operator-(const RatInterval& o) const;
    RatInterval operator*(const RatInterval& o) const;
    RatInterval operator-() const { return RatInterval(-hi, -lo); }
    /// Division; divisor interval must not contain zero.
    RatInterval operator/(const RatInterval& o) const;

    RatInterval operator+(const Rat& v) const { return RatInterval(lo + v, hi + v); }
    RatInterval operator-(const Rat& v) const { return RatInterval(lo - v, hi - v); }
    RatInterval operator*(const Rat& v) const;

    RatInterval abs() const;
    RatInterval pow(unsigned long n) const;
    RatInterval intersect(const RatInterval& o) const;

    std::string str() const;
};

/// Outward enclosure of log(x) for rational x > 0 at the given working
/// precision in bits.
RatInterval log_enclosure(const Rat& x, unsigned prec);

/// Outward enclosure of log(n) for integer n > 0.
RatInterval log_enclosure(const Int& n, unsigned prec);

/// Outward enclosure of the n-th root of rational x >= 0.
RatInterval nth_root_enclosure(const Rat& x, unsigned long n, unsigned prec);

Rat nth_root_upper(const Rat& x, unsigned long n, unsigned prec);
Rat nth_root_lower(const Rat& x, unsigned long n, unsigned prec);

/// Outward interval square root (lo >= 0 required).
RatInterval sqrt_enclosure(const RatInterval& x, unsigned prec);

/// Outward enclosure of log over a positive interval.
RatInterval log_enclosure(const RatInterval& x, unsigned prec);

}  // namespace recbound
