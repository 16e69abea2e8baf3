#pragma once

#include <utility>
#include <vector>

#include "recbound/intpoly.hpp"
#include "recbound/numeric.hpp"

namespace recbound {

/**
 * Dense rational polynomial, constant term first. Internal substrate for
 * Sturm chains, field-element reduction and characteristic polynomials;
 * the public exact types are IntPoly / AlgebraicReal / FieldElement.
 */
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    explicit QPoly(const IntPoly& p);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& lead() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& k) const;
    QPoly operator-() const;

    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const;

    QPoly derivative() const;
    QPoly monic() const;

    /// Euclidean division: returns (quotient, remainder).
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const;

    static QPoly gcd(const QPoly& a, const QPoly& b);  // monic

    /// Clears denominators and the content; primitive, positive lead.
    IntPoly to_intpoly_primitive() const;

private:
    std::vector<Rat> c_;
    void normalize();
};

}  // namespace recbound
