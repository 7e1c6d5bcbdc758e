#include "ellmf/upoly.hpp"

#include <sstream>

#include "ellmf/error.hpp"

namespace ellmf {

UPoly::UPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

UPoly UPoly::lambda() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

const Rational& UPoly::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    UPoly q, r = *this;
    if (degree() < d.degree()) return {q, r};
    q.c_.assign(static_cast<std::size_t>(degree() - d.degree() + 1), Rational(0));
    const Rational& lead = d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - d.degree());
        const Rational k = r.leading() / lead;
        q.c_[shift] = k;
        for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[i + shift] -= k * d.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

UPoly UPoly::scaled(const Rational& k) const {
    UPoly r = *this;
    for (auto& x : r.c_) x *= k;
    r.trim();
    return r;
}

Rational UPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string UPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        const bool neg = sgn(c) < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1) os << to_string(mag) << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.scaled(Rational(1) / x.leading());
}

}  // namespace ellmf
