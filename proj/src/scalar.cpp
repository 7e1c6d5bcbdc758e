#include "ellmf/scalar.hpp"

#include "ellmf/error.hpp"

namespace ellmf {

Scalar::Scalar(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly(1);
        return;
    }
    const UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        num_ = num_.scaled(Rational(1) / lead);
        den_ = den_.scaled(Rational(1) / lead);
    }
}

Rational Scalar::as_rational() const {
    if (!is_rational()) throw DomainError("scalar depends on lambda");
    return num_.constant_term() / den_.constant_term();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DomainError("division by zero scalar");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational Scalar::evaluate(const Rational& x) const {
    const Rational d = den_.evaluate(x);
    if (d == 0) throw DomainError("denominator vanishes at lambda = " + to_string(x));
    return num_.evaluate(x) / d;
}

std::string Scalar::str() const {
    if (den_ == UPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace ellmf
