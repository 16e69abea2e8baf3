#include "recbound/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cassert>

#include "recbound/errors.hpp"

namespace recbound {

RatInterval::RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw Error("interval endpoints out of order");
}

RatInterval RatInterval::operator+(const RatInterval& o) const {
    return RatInterval(lo + o.lo, hi + o.hi);
}

RatInterval RatInterval::operator-(const RatInterval& o) const {
    return RatInterval(lo - o.hi, hi - o.lo);
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return RatInterval(std::min(std::min(a, b), std::min(c, d)),
                       std::max(std::max(a, b), std::max(c, d)));
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
    if (o.contains_zero()) throw DivisionByZero("interval division by interval containing zero");
    return *this * RatInterval(Rat(1) / o.hi, Rat(1) / o.lo);
}

RatInterval RatInterval::operator*(const Rat& v) const {
    if (v >= 0) return RatInterval(lo * v, hi * v);
    return RatInterval(hi * v, lo * v);
}

RatInterval RatInterval::abs() const {
    if (lo >= 0) return *this;
    if (hi <= 0) return RatInterval(-hi, -lo);
    return RatInterval(Rat(0), std::max(Rat(-lo), hi));
}

RatInterval RatInterval::pow(unsigned long n) const {
    if (n == 0) return point(Rat(1));
    bool even = (n % 2 == 0);
    if (lo >= 0) return RatInterval(pow_rat(lo, n), pow_rat(hi, n));
    if (hi <= 0) {
        if (even) return RatInterval(pow_rat(hi, n), pow_rat(lo, n));
        return RatInterval(pow_rat(lo, n), pow_rat(hi, n));
    }
    if (even) return RatInterval(Rat(0), std::max(pow_rat(lo, n), pow_rat(hi, n)));
    return RatInterval(pow_rat(lo, n), pow_rat(hi, n));
}

RatInterval RatInterval::intersect(const RatInterval& o) const {
    Rat l = std::max(lo, o.lo), h = std::min(hi, o.hi);
    if (l > h) throw Error("empty interval intersection");
    return RatInterval(l, h);
}

std::string RatInterval::str() const {
    return "[" + rat_to_string(lo) + ", " + rat_to_string(hi) + "]";
}

namespace {

/// Exact conversion: every finite MPFR value is a binary rational.
Rat rat_from_mpfr(mpfr_srcptr f) {
    if (mpfr_zero_p(f)) return Rat(0);
    assert(mpfr_number_p(f));
    Int m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), f);
    Rat r(m);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    r.canonicalize();
    return r;
}

struct MpfrTmp {
    mpfr_t v;
    explicit MpfrTmp(unsigned prec) { mpfr_init2(v, prec); }
    ~MpfrTmp() { mpfr_clear(v); }
    MpfrTmp(const MpfrTmp&) = delete;
    MpfrTmp& operator=(const MpfrTmp&) = delete;
};

}  // namespace

RatInterval log_enclosure(const Rat& x, unsigned prec) {
    if (x <= 0) throw ZeroArgument("log of non-positive rational");
    MpfrTmp lo(prec), hi(prec);
    mpfr_set_q(lo.v, x.get_mpq_t(), MPFR_RNDD);
    mpfr_log(lo.v, lo.v, MPFR_RNDD);
    mpfr_set_q(hi.v, x.get_mpq_t(), MPFR_RNDU);
    mpfr_log(hi.v, hi.v, MPFR_RNDU);
    return RatInterval(rat_from_mpfr(lo.v), rat_from_mpfr(hi.v));
}

RatInterval log_enclosure(const Int& n, unsigned prec) {
    if (n <= 0) throw ZeroArgument("log of non-positive integer");
    MpfrTmp lo(prec), hi(prec);
    mpfr_set_z(lo.v, n.get_mpz_t(), MPFR_RNDD);
    mpfr_log(lo.v, lo.v, MPFR_RNDD);
    mpfr_set_z(hi.v, n.get_mpz_t(), MPFR_RNDU);
    mpfr_log(hi.v, hi.v, MPFR_RNDU);
    return RatInterval(rat_from_mpfr(lo.v), rat_from_mpfr(hi.v));
}

RatInterval log_enclosure(const RatInterval& x, unsigned prec) {
    RatInterval l = log_enclosure(x.lo, prec);
    RatInterval h = log_enclosure(x.hi, prec);
    return RatInterval(l.lo, h.hi);
}

Rat nth_root_upper(const Rat& x, unsigned long n, unsigned prec) {
    if (x < 0) throw ZeroArgument("root of negative rational");
    if (x == 0) return Rat(0);
    MpfrTmp t(prec);
    mpfr_set_q(t.v, x.get_mpq_t(), MPFR_RNDU);
    mpfr_rootn_ui(t.v, t.v, n, MPFR_RNDU);
    return rat_from_mpfr(t.v);
}

Rat nth_root_lower(const Rat& x, unsigned long n, unsigned prec) {
    if (x < 0) throw ZeroArgument("root of negative rational");
    if (x == 0) return Rat(0);
    MpfrTmp t(prec);
    mpfr_set_q(t.v, x.get_mpq_t(), MPFR_RNDD);
    mpfr_rootn_ui(t.v, t.v, n, MPFR_RNDD);
    Rat r = rat_from_mpfr(t.v);
    return r < 0 ? Rat(0) : r;
}

RatInterval nth_root_enclosure(const Rat& x, unsigned long n, unsigned prec) {
    return RatInterval(nth_root_lower(x, n, prec), nth_root_upper(x, n, prec));
}

RatInterval sqrt_enclosure(const RatInterval& x, unsigned prec) {
    if (x.lo < 0) throw ZeroArgument("sqrt of interval with negative lower end");
    return RatInterval(nth_root_lower(x.lo, 2, prec), nth_root_upper(x.hi, 2, prec));
}

}  // namespace recbound
