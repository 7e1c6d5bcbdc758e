#pragma once

// Grothendieck lattice of the weighted projective line P^1(2,2,2,2;lambda).
//
// Classes are written in the basis (e0, e1..e4, delta) where
//   e0    = [O]
//   ei    = [S_{i,1}]   (simple sheaf over the i-th exceptional point)
//   delta = [S_x]       (ordinary skyscraper, equal to [S_{i,0}] + [S_{i,1}])
// so that the finite part (a0; a1..a4) lives in the root lattice of affine D4.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ellmf/rational.hpp"

namespace ellmf {

struct K0Class {
    std::int64_t a0 = 0;
    std::array<std::int64_t, 4> a{0, 0, 0, 0};
    std::int64_t n = 0;

    auto operator<=>(const K0Class&) const = default;

    K0Class& operator+=(const K0Class& o);
    K0Class& operator-=(const K0Class& o);
    friend K0Class operator+(K0Class x, const K0Class& y) { return x += y; }
    friend K0Class operator-(K0Class x, const K0Class& y) { return x -= y; }
    friend K0Class operator-(const K0Class& x) { return K0Class{} - x; }
    friend K0Class operator*(std::int64_t k, const K0Class& x);

    bool is_zero() const { return *this == K0Class{}; }
};

std::ostream& operator<<(std::ostream& os, const K0Class& c);

namespace classes {
K0Class structure_sheaf();                 // [O]
K0Class simple(int i, int j);              // [S_{i,j}], i in 1..4, j mod 2
K0Class skyscraper();                      // [S_x] = delta
K0Class canonical();                       // [omega]
}  // namespace classes

/// Slope deg/rk as an element of Q u {inf}, or undefined for the zero class.
struct Slope {
    enum class Kind { Finite, Infinite, Undefined };
    Kind kind = Kind::Undefined;
    Rational value;  // meaningful only for Finite

    static Slope finite(Rational q) { return {Kind::Finite, std::move(q)}; }
    static Slope infinite() { return {Kind::Infinite, Rational(0)}; }
    static Slope undefined() { return {Kind::Undefined, Rational(0)}; }

    bool operator==(const Slope& o) const;
    std::string str() const;
};

struct Invariants {
    std::int64_t rank = 0;
    std::int64_t degree = 0;
    std::int64_t chi = 0;
    Slope slope;
};

std::int64_t rank(const K0Class& c);
std::int64_t degree(const K0Class& c);
std::int64_t chi(const K0Class& c);
Invariants invariants(const K0Class& c);

/// Action of - (x) omega on K0. An involution.
K0Class tensor_omega(const K0Class& c);

/// Action of - (x) O(c) on K0.
K0Class twist_by_c(const K0Class& c);

/// Euler form <x, y> = dim Hom(x, y) - dim Ext^1(x, y), extended bilinearly.
std::int64_t euler_pairing(const K0Class& x, const K0Class& y);

/// Element of the rank one group L = <x1..x4, c | 2 xi = c>.
/// Coordinates are free; normal_form() moves them into x-coefficients in {0,1}.
struct LVector {
    std::array<std::int64_t, 4> x{0, 0, 0, 0};
    std::int64_t c = 0;

    LVector normal_form() const;
    /// Equality in L (compares normal forms).
    bool operator==(const LVector& o) const;

    static LVector x_bar(int i);
    static LVector c_bar();
    static LVector omega_bar();  // sum of the xi minus 2c, in normal form
    LVector operator+(const LVector& o) const;
    /// delta(v): degree of O(v), with delta(xi) = 1, delta(c) = 2.
    std::int64_t delta() const;
};

K0Class line_bundle_class(const LVector& v);

/// q(a0; a) = a0^2 + sum ai^2 - a0 * sum ai, the Tits form of affine D4; n is ignored.
std::int64_t q_form(const K0Class& c);

enum class RootType { Real, Imaginary, NotRoot };

struct RootKind {
    RootType type = RootType::NotRoot;
    bool is_sheaf_class = false;
    bool operator==(const RootKind&) const = default;
};

std::string to_string(RootType t);

RootKind classify_root(const K0Class& c);

/// One row of the table of positive real roots of affine D4, as a function of
/// m >= 0: alpha0 = 2m + offset[0], alpha_i = m + offset[i]. The remaining
/// fields are the tabulated (rank, degree, chi) of alpha + n delta:
/// r = 2m + r0, d = 4m + d0 + 2n, chi = 2m + chi0 + n.
struct RealRootPattern {
    std::array<int, 5> offset;
    int r0, d0, chi0;
};

/// The 24 rows parametrising positive real roots (m >= 0).
const std::vector<RealRootPattern>& real_root_patterns();

/// Finite part alpha of a pattern row at parameter m, with delta-coefficient n.
K0Class pattern_class(const RealRootPattern& p, std::int64_t m, std::int64_t n);

/// All classes +-alpha + n delta with alpha from the patterns at 0 <= m <= m_max
/// and n_min <= n <= n_max; deduplicated and sorted lexicographically.
std::vector<K0Class> enumerate_real_roots(std::int64_t m_max, std::int64_t n_min, std::int64_t n_max);

/// Exhaustive scan of the box [-bound, bound]^6 for classes with q = 1.
std::vector<K0Class> real_roots_bruteforce(std::int64_t bound);

/// Same scan over an arbitrary per-coordinate box (inclusive bounds).
struct K0Box {
    std::int64_t a0_min, a0_max;
    std::int64_t a_min, a_max;  // shared by a1..a4
    std::int64_t n_min, n_max;
    bool contains(const K0Class& c) const;
};
std::vector<K0Class> real_roots_bruteforce(const K0Box& box);

}  // namespace ellmf
