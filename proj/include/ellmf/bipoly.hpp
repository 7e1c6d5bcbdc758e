#pragma once

// Polynomials in X, Y with coefficients in Q(lambda).

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ellmf/error.hpp"
#include "ellmf/scalar.hpp"

namespace ellmf {

class BiPoly {
  public:
    using Monomial = std::pair<int, int>;  // (x-exponent, y-exponent)

    BiPoly() = default;
    BiPoly(const Scalar& c);  // NOLINT
    BiPoly(int c) : BiPoly(Scalar(c)) {}
    static BiPoly monomial(const Scalar& c, int xe, int ye);
    static BiPoly X() { return monomial(Scalar(1), 1, 0); }
    static BiPoly Y() { return monomial(Scalar(1), 0, 1); }

    const std::map<Monomial, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Scalar coeff(int xe, int ye) const;
    /// Nonzero constant.
    bool is_unit() const;
    /// Common total degree of all terms; nullopt for zero or inhomogeneous.
    std::optional<int> homogeneous_degree() const;
    /// Largest term in lex order (x first); throws on zero.
    std::pair<Monomial, Scalar> leading_term() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Scalar& k);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
    friend BiPoly operator*(const Scalar& k, BiPoly a) { return a *= k; }
    friend BiPoly operator-(const BiPoly& a) { return Scalar(-1) * a; }
    bool operator==(const BiPoly& o) const { return t_ == o.t_; }

    /// Coefficients evaluated at lambda = x.
    BiPoly specialize(const Rational& x) const;
    /// Every coefficient free of lambda.
    bool is_rational() const;

    /// E.g. "x^3*y - (lambda + 1)*x^2*y^2 + lambda*x*y^3"; terms in decreasing lex order.
    std::string str() const;

  private:
    void add_term(const Monomial& m, const Scalar& c);
    std::map<Monomial, Scalar> t_;
};

/// Thrown by exact_div when the divisor does not divide; carries the remainder.
class InexactDivision : public DomainError {
  public:
    InexactDivision(BiPoly rem)
        : DomainError("inexact division, remainder " + rem.str()), remainder(std::move(rem)) {}
    BiPoly remainder;
};

/// q with q * b = a. Throws DomainError on b = 0 and InexactDivision otherwise.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);

}  // namespace ellmf
