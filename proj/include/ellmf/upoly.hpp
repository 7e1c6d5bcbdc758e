#pragma once

// Univariate polynomials in lambda with rational coefficients.

#include <string>
#include <utility>
#include <vector>

#include "ellmf/rational.hpp"

namespace ellmf {

class UPoly {
  public:
    UPoly() = default;
    UPoly(const Rational& c);  // NOLINT: constants convert implicitly
    UPoly(int c) : UPoly(Rational(c)) {}
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly lambda();

    /// coeffs()[k] is the coefficient of lambda^k; no trailing zeros.
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& leading() const;
    bool is_constant() const { return c_.size() <= 1; }
    Rational constant_term() const { return c_.empty() ? Rational(0) : c_[0]; }

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend UPoly operator-(const UPoly& a) { return UPoly() - a; }
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    /// Quotient and remainder; throws DomainError on division by zero.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    UPoly scaled(const Rational& k) const;
    Rational evaluate(const Rational& x) const;

    /// Rendering in the variable name `var`, e.g. "1 + lambda".
    std::string str(const std::string& var = "lambda") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace ellmf
