#pragma once

// Elements of Q(lambda), kept as num/den with gcd 1 and monic denominator.

#include <string>

#include "ellmf/rational.hpp"
#include "ellmf/upoly.hpp"

namespace ellmf {

class Scalar {
  public:
    Scalar() : den_(1) {}
    Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    Scalar(int c) : Scalar(Rational(c)) {}           // NOLINT
    Scalar(const UPoly& p) : num_(p), den_(1) {}    // NOLINT
    /// Throws DomainError if den is zero.
    Scalar(UPoly num, UPoly den);

    static Scalar lambda() { return Scalar(UPoly::lambda()); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// True when lambda does not occur.
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    /// Only meaningful when is_rational().
    Rational as_rational() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.num_, a.den_); }
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Value at lambda = x; throws DomainError if the denominator vanishes.
    Rational evaluate(const Rational& x) const;

    std::string str() const;

  private:
    void normalize();
    UPoly num_;
    UPoly den_;
};

}  // namespace ellmf
