#pragma once

#include <gmpxx.h>

#include <string>

namespace recbound {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p/q", "p", or a plain decimal like "-1.25" into an exact rational.
Rat rat_from_string(const std::string& s);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string rat_to_string(const Rat& q);

/// Decimal rendering for human-facing output, round-to-nearest at the given
/// number of significant digits. Deterministic for identical inputs.
std::string rat_to_decimal(const Rat& q, int digits = 15);

Int rat_ceil(const Rat& q);
Int rat_floor(const Rat& q);

inline Rat rat_abs(const Rat& q) { return q >= 0 ? q : Rat(-q); }

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

}  // namespace recbound
