#include "recbound/numeric.hpp"

#include <mpfr.h>

#include <cstring>
#include <vector>

#include "recbound/errors.hpp"

namespace recbound {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw ParseError("rational literal mixes '.' and '/': " + s);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        Int num;
        if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
            throw ParseError("bad decimal literal: " + s);
        Int den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational literal: " + s);
    if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

std::string rat_to_decimal(const Rat& q, int digits) {
    if (q == 0) return "0";
    mpfr_t f;
    mpfr_init2(f, 256);
    mpfr_set_q(f, q.get_mpq_t(), MPFR_RNDN);
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRg", digits);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, f);
    std::string res(out);
    mpfr_free_str(out);
    mpfr_clear(f);
    return res;
}

Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

}  // namespace recbound
