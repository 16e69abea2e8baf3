#include "recbound/intpoly.hpp"

#include <cassert>

#include "recbound/errors.hpp"
#include "recbound/qpoly.hpp"

namespace recbound {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) { return IntPoly(std::vector<Int>{std::move(c)}); }

IntPoly IntPoly::monomial(unsigned k, Int c) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

const Int& IntPoly::lead() const {
    if (c_.empty()) throw Error("lead of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& k) const {
    if (k == 0) return IntPoly();
    std::vector<Int> r(c_);
    for (auto& x : r) x *= k;
    return IntPoly(std::move(r));
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
}

Int IntPoly::eval_int(const Int& x) const {
    Int acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RatInterval IntPoly::eval(const RatInterval& x) const {
    RatInterval acc = RatInterval::point(Rat(0));
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
}

int IntPoly::sign_at(const Rat& x) const {
    Rat v = eval(x);
    return sgn(v);
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<unsigned long>(i));
    return IntPoly(std::move(r));
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g == 0) return Int(0);
    if (!c_.empty() && c_.back() < 0) g = -g;
    return g;
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    std::vector<Int> r(c_);
    for (auto& x : r) x /= g;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    auto [q, r] = QPoly(*this).divmod(QPoly(d));
    if (!r.is_zero()) throw Error("inexact polynomial division");
    std::vector<Int> out(q.degree() + 1);
    for (int i = 0; i <= q.degree(); ++i) {
        Rat ci = q.coeff(i);
        if (ci.get_den() != 1) throw Error("inexact polynomial division (non-integer quotient)");
        out[i] = ci.get_num();
    }
    return IntPoly(std::move(out));
}

bool IntPoly::divides(const IntPoly& d) const {
    if (d.is_zero()) return false;
    if (is_zero()) return true;
    if (degree() < d.degree()) return false;
    auto [q, r] = QPoly(*this).divmod(QPoly(d));
    (void)q;
    return r.is_zero();
}

IntPoly IntPoly::compose_xpow(unsigned a) const {
    if (is_zero() || a == 0) return a == 0 ? IntPoly::constant(eval_int(Int(1))) : IntPoly();
    std::vector<Int> r(static_cast<size_t>(degree()) * a + 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i * a] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reflect() const {
    std::vector<Int> r(c_);
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::squarefree_part() const {
    if (is_zero()) throw Error("squarefree part of zero polynomial");
    if (degree() == 0) return IntPoly::constant(Int(1));
    IntPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return primitive();
    return divexact(g).primitive();
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    QPoly g = QPoly::gcd(QPoly(a), QPoly(b));
    return g.to_intpoly_primitive();
}

Int IntPoly::max_abs_coeff() const {
    Int m(0);
    for (const auto& x : c_) {
        Int a = ::abs(x);
        if (a > m) m = a;
    }
    return m;
}

Int IntPoly::l2_norm_sq() const {
    Int s(0);
    for (const auto& x : c_) s += x * x;
    return s;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        bool first = out.empty();
        if (a > 0 && !first) out += " + ";
        if (a < 0) out += first ? "-" : " - ";
        Int mag = ::abs(a);
        bool unit = (mag == 1) && i > 0;
        if (!unit) out += mag.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace recbound
