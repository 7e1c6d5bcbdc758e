#include "ellmf/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace ellmf {

BiPoly::BiPoly(const Scalar& c) {
    if (!c.is_zero()) t_.emplace(Monomial{0, 0}, c);
}

BiPoly BiPoly::monomial(const Scalar& c, int xe, int ye) {
    if (xe < 0 || ye < 0) throw DomainError("negative exponent");
    BiPoly p;
    p.add_term({xe, ye}, c);
    return p;
}

Scalar BiPoly::coeff(int xe, int ye) const {
    auto it = t_.find({xe, ye});
    return it == t_.end() ? Scalar(0) : it->second;
}

bool BiPoly::is_unit() const { return t_.size() == 1 && t_.begin()->first == Monomial{0, 0}; }

std::optional<int> BiPoly::homogeneous_degree() const {
    if (t_.empty()) return std::nullopt;
    const int d = t_.begin()->first.first + t_.begin()->first.second;
    for (const auto& [m, c] : t_)
        if (m.first + m.second != d) return std::nullopt;
    return d;
}

std::pair<BiPoly::Monomial, Scalar> BiPoly::leading_term() const {
    if (t_.empty()) throw DomainError("leading term of zero");
    return *t_.rbegin();
}

void BiPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    BiPoly r;
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) r.add_term({m1.first + m2.first, m1.second + m2.second}, c1 * c2);
    t_ = std::move(r.t_);
    return *this;
}

BiPoly& BiPoly::operator*=(const Scalar& k) {
    if (k.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [m, c] : t_) c *= k;
    return *this;
}

BiPoly BiPoly::specialize(const Rational& x) const {
    BiPoly r;
    for (const auto& [m, c] : t_) r.add_term(m, Scalar(c.evaluate(x)));
    return r;
}

bool BiPoly::is_rational() const {
    for (const auto& [m, c] : t_)
        if (!c.is_rational()) return false;
    return true;
}

namespace {

std::string monomial_str(int xe, int ye) {
    std::string s;
    auto var = [&](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (e > 1) s += '^' + std::to_string(e);
    };
    var("x", xe);
    var("y", ye);
    return s;
}

}  // namespace

std::string BiPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        const std::string mono = monomial_str(m.first, m.second);
        bool neg = false;
        std::string cs;
        const auto& nc = c.num().coeffs();
        const bool single = c.den() == UPoly(1) &&
                            std::count_if(nc.begin(), nc.end(), [](const Rational& q) { return q != 0; }) == 1;
        if (c.is_rational()) {
            Rational q = c.as_rational();
            neg = sgn(q) < 0;
            if (neg) q = -q;
            if (q != 1 || mono.empty()) cs = to_string(q);
        } else if (single) {
            neg = sgn(c.num().leading()) < 0;
            cs = (neg ? -c : c).str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        os << cs;
        if (!cs.empty() && !mono.empty()) os << '*';
        os << mono;
    }
    return os.str();
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    const auto [lm, lc] = b.leading_term();
    BiPoly q, rem, p = a;
    while (!p.is_zero()) {
        const auto [m, c] = p.leading_term();
        const BiPoly lead = BiPoly::monomial(c, m.first, m.second);
        if (m.first >= lm.first && m.second >= lm.second) {
            const BiPoly t = BiPoly::monomial(c / lc, m.first - lm.first, m.second - lm.second);
            q += t;
            p -= t * b;
        } else {
            rem += lead;
            p -= lead;
        }
    }
    if (!rem.is_zero()) throw InexactDivision(rem);
    return q;
}

}  // namespace ellmf
