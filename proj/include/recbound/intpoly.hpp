#pragma once

#include <string>
#include <vector>

#include "recbound/interval.hpp"
#include "recbound/numeric.hpp"

namespace recbound {

/**
 * Dense integer polynomial, constant term first. The zero polynomial has an
 * empty coefficient vector; otherwise the leading coefficient is non-zero.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(Int c);
    /// x^k with unit coefficient.
    static IntPoly monomial(unsigned k, Int c = Int(1));

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& lead() const;
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const Int& k) const;

    Rat eval(const Rat& x) const;
    Int eval_int(const Int& x) const;
    RatInterval eval(const RatInterval& x) const;
    /// Sign of the value at a rational point: -1, 0, +1.
    int sign_at(const Rat& x) const;

    IntPoly derivative() const;

    /// gcd of all coefficients, sign matching the leading coefficient.
    Int content() const;
    /// content-free copy with positive leading coefficient.
    IntPoly primitive() const;

    /// Exact quotient; throws if the division is not exact.
    IntPoly divexact(const IntPoly& d) const;
    bool divides(const IntPoly& d) const;

    /// p(x^a)
    IntPoly compose_xpow(unsigned a) const;
    /// p(-x)
    IntPoly reflect() const;

    /// p / gcd(p, p'), primitive with positive leading coefficient.
    IntPoly squarefree_part() const;

    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    Int max_abs_coeff() const;
    /// Sum of squared coefficients.
    Int l2_norm_sq() const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Int> c_;
    void normalize();
};

}  // namespace recbound
