#include "ellmf/k0lattice.hpp"

#include <algorithm>
#include <ostream>

#include "ellmf/error.hpp"

namespace ellmf {

K0Class& K0Class::operator+=(const K0Class& o) {
    a0 += o.a0;
    for (int i = 0; i < 4; ++i) a[i] += o.a[i];
    n += o.n;
    return *this;
}

K0Class& K0Class::operator-=(const K0Class& o) {
    a0 -= o.a0;
    for (int i = 0; i < 4; ++i) a[i] -= o.a[i];
    n -= o.n;
    return *this;
}

K0Class operator*(std::int64_t k, const K0Class& x) {
    K0Class r;
    r.a0 = k * x.a0;
    for (int i = 0; i < 4; ++i) r.a[i] = k * x.a[i];
    r.n = k * x.n;
    return r;
}

std::ostream& operator<<(std::ostream& os, const K0Class& c) {
    return os << '(' << c.a0 << ';' << c.a[0] << ',' << c.a[1] << ',' << c.a[2] << ',' << c.a[3] << ';' << c.n
              << ')';
}

namespace classes {

K0Class structure_sheaf() { return K0Class{1, {0, 0, 0, 0}, 0}; }

K0Class skyscraper() { return K0Class{0, {0, 0, 0, 0}, 1}; }

K0Class simple(int i, int j) {
    if (i < 1 || i > 4) throw DomainError("simple sheaf index must be in 1..4");
    K0Class e;
    e.a[i - 1] = 1;
    // [S_{i,0}] = delta - [S_{i,1}]
    return (((j % 2) + 2) % 2 == 1) ? e : skyscraper() - e;
}

K0Class canonical() { return tensor_omega(structure_sheaf()); }

}  // namespace classes

bool Slope::operator==(const Slope& o) const {
    if (kind != o.kind) return false;
    return kind != Kind::Finite || value == o.value;
}

std::string Slope::str() const {
    switch (kind) {
        case Kind::Finite: return to_string(value);
        case Kind::Infinite: return "inf";
        case Kind::Undefined: break;
    }
    return "undefined";
}

std::int64_t rank(const K0Class& c) { return c.a0; }

std::int64_t degree(const K0Class& c) { return c.a[0] + c.a[1] + c.a[2] + c.a[3] + 2 * c.n; }

std::int64_t chi(const K0Class& c) { return c.a0 + c.n; }

Invariants invariants(const K0Class& c) {
    Invariants inv{rank(c), degree(c), chi(c), Slope::undefined()};
    if (inv.rank != 0) {
        Rational q(inv.degree, inv.rank);
        q.canonicalize();
        inv.slope = Slope::finite(q);
    } else if (inv.degree != 0) {
        inv.slope = Slope::infinite();
    }
    return inv;
}

K0Class tensor_omega(const K0Class& c) {
    // e0 -> e0 + sum ei - 2 delta,  ei -> delta - ei,  delta -> delta
    K0Class r;
    r.a0 = c.a0;
    r.n = c.n - 2 * c.a0;
    for (int i = 0; i < 4; ++i) {
        r.a[i] = c.a0 - c.a[i];
        r.n += c.a[i];
    }
    return r;
}

K0Class twist_by_c(const K0Class& c) {
    K0Class r = c;
    r.n += c.a0;
    return r;
}

namespace {

// Coordinates in the basis of the exceptional collection
// (O, O(c), S_{1,0}, .., S_{4,0}):
//   e0 = [O],  delta = [O(c)] - [O],  ei = delta - [S_{i,0}].
std::array<std::int64_t, 6> collection_coordinates(const K0Class& c) {
    const std::int64_t sa = c.a[0] + c.a[1] + c.a[2] + c.a[3];
    return {c.a0 - sa - c.n, sa + c.n, -c.a[0], -c.a[1], -c.a[2], -c.a[3]};
}

// Gram matrix of the Euler form on the exceptional collection.
constexpr std::array<std::array<std::int64_t, 6>, 6> kGram{{
    {1, 2, 1, 1, 1, 1},
    {0, 1, 1, 1, 1, 1},
    {0, 0, 1, 0, 0, 0},
    {0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 1},
}};

}  // namespace

std::int64_t euler_pairing(const K0Class& x, const K0Class& y) {
    const auto u = collection_coordinates(x);
    const auto v = collection_coordinates(y);
    std::int64_t s = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) s += u[i] * kGram[i][j] * v[j];
    return s;
}

LVector LVector::normal_form() const {
    LVector r;
    r.c = c;
    for (int i = 0; i < 4; ++i) {
        // x = 2q + rem with rem in {0,1}; 2 xi = c
        std::int64_t rem = ((x[i] % 2) + 2) % 2;
        r.x[i] = rem;
        r.c += (x[i] - rem) / 2;
    }
    return r;
}

bool LVector::operator==(const LVector& o) const {
    const auto p = normal_form();
    const auto q = o.normal_form();
    return p.x == q.x && p.c == q.c;
}

LVector LVector::x_bar(int i) {
    if (i < 1 || i > 4) throw DomainError("x_bar index must be in 1..4");
    LVector v;
    v.x[i - 1] = 1;
    return v;
}

LVector LVector::c_bar() {
    LVector v;
    v.c = 1;
    return v;
}

LVector LVector::omega_bar() { return LVector{{1, 1, 1, 1}, -2}; }

LVector LVector::operator+(const LVector& o) const {
    LVector r;
    for (int i = 0; i < 4; ++i) r.x[i] = x[i] + o.x[i];
    r.c = c + o.c;
    return r;
}

std::int64_t LVector::delta() const { return x[0] + x[1] + x[2] + x[3] + 2 * c; }

K0Class line_bundle_class(const LVector& v) {
    const LVector nf = v.normal_form();
    K0Class r;
    r.a0 = 1;
    r.a = nf.x;
    r.n = nf.c;
    return r;
}

std::int64_t q_form(const K0Class& c) {
    std::int64_t sq = c.a0 * c.a0;
    std::int64_t cross = 0;
    for (auto ai : c.a) {
        sq += ai * ai;
        cross += c.a0 * ai;
    }
    return sq - cross;
}

std::string to_string(RootType t) {
    switch (t) {
        case RootType::Real: return "real";
        case RootType::Imaginary: return "imaginary";
        case RootType::NotRoot: break;
    }
    return "not-a-root";
}

RootKind classify_root(const K0Class& c) {
    RootKind k;
    const auto q = q_form(c);
    if (q == 1)
        k.type = RootType::Real;
    else if (q == 0 && !c.is_zero())
        k.type = RootType::Imaginary;
    else
        k.type = RootType::NotRoot;
    const auto r = rank(c);
    k.is_sheaf_class = r > 0 || (r == 0 && degree(c) > 0);
    return k;
}

const std::vector<RealRootPattern>& real_root_patterns() {
    // alpha0 = 2m + offset[0], alpha_i = m + offset[i];  (r0, d0, chi0)
    static const std::vector<RealRootPattern> rows{
        {{0, 1, 0, 0, 0}, 0, 1, 0},
        {{0, 0, 1, 0, 0}, 0, 1, 0},
        {{0, 0, 0, 1, 0}, 0, 1, 0},
        {{0, 0, 0, 0, 1}, 0, 1, 0},

        {{1, 0, 0, 0, 0}, 1, 0, 1},

        {{1, 1, 0, 0, 0}, 1, 1, 1},
        {{1, 0, 1, 0, 0}, 1, 1, 1},
        {{1, 0, 0, 1, 0}, 1, 1, 1},
        {{1, 0, 0, 0, 1}, 1, 1, 1},

        {{1, 1, 1, 0, 0}, 1, 2, 1},
        {{1, 0, 0, 1, 1}, 1, 2, 1},
        {{1, 1, 0, 1, 0}, 1, 2, 1},
        {{1, 0, 1, 0, 1}, 1, 2, 1},
        {{1, 1, 0, 0, 1}, 1, 2, 1},
        {{1, 0, 1, 1, 0}, 1, 2, 1},

        {{1, 0, 1, 1, 1}, 1, 3, 1},
        {{1, 1, 0, 1, 1}, 1, 3, 1},
        {{1, 1, 1, 0, 1}, 1, 3, 1},
        {{1, 1, 1, 1, 0}, 1, 3, 1},

        {{1, 1, 1, 1, 1}, 1, 4, 1},

        {{2, 0, 1, 1, 1}, 2, 3, 2},
        {{2, 1, 0, 1, 1}, 2, 3, 2},
        {{2, 1, 1, 0, 1}, 2, 3, 2},
        {{2, 1, 1, 1, 0}, 2, 3, 2},
    };
    return rows;
}

K0Class pattern_class(const RealRootPattern& p, std::int64_t m, std::int64_t n) {
    K0Class c;
    c.a0 = 2 * m + p.offset[0];
    for (int i = 0; i < 4; ++i) c.a[i] = m + p.offset[i + 1];
    c.n = n;
    return c;
}

std::vector<K0Class> enumerate_real_roots(std::int64_t m_max, std::int64_t n_min, std::int64_t n_max) {
    std::vector<K0Class> out;
    if (m_max < 0 || n_min > n_max) return out;
    const K0Class delta = classes::skyscraper();
    for (std::int64_t m = 0; m <= m_max; ++m) {
        for (const auto& row : real_root_patterns()) {
            const K0Class alpha = pattern_class(row, m, 0);
            for (std::int64_t n = n_min; n <= n_max; ++n) {
                out.push_back(alpha + n * delta);
                out.push_back(-alpha + n * delta);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool K0Box::contains(const K0Class& c) const {
    if (c.a0 < a0_min || c.a0 > a0_max || c.n < n_min || c.n > n_max) return false;
    return std::all_of(c.a.begin(), c.a.end(), [&](auto x) { return x >= a_min && x <= a_max; });
}

std::vector<K0Class> real_roots_bruteforce(const K0Box& box) {
    std::vector<K0Class> out;
    K0Class c;
    for (c.a0 = box.a0_min; c.a0 <= box.a0_max; ++c.a0)
        for (c.a[0] = box.a_min; c.a[0] <= box.a_max; ++c.a[0])
            for (c.a[1] = box.a_min; c.a[1] <= box.a_max; ++c.a[1])
                for (c.a[2] = box.a_min; c.a[2] <= box.a_max; ++c.a[2])
                    for (c.a[3] = box.a_min; c.a[3] <= box.a_max; ++c.a[3])
                        for (c.n = box.n_min; c.n <= box.n_max; ++c.n)
                            if (q_form(c) == 1) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<K0Class> real_roots_bruteforce(std::int64_t bound) {
    if (bound < 1) throw DomainError("bruteforce box bound must be >= 1");
    return real_roots_bruteforce(K0Box{-bound, bound, -bound, bound, -bound, bound});
}

}  // namespace ellmf
