#pragma once

// Action of the grade shift M -> M(1) on (rank, degree).

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ellmf {

struct RDPair {
    std::int64_t r = 0;
    std::int64_t d = 0;
    bool operator==(const RDPair&) const = default;
    bool is_zero() const { return r == 0 && d == 0; }
};

std::ostream& operator<<(std::ostream& os, const RDPair& p);

using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;

RDPair apply(const IntMatrix2& m, const RDPair& p);
IntMatrix2 multiply(const IntMatrix2& a, const IntMatrix2& b);
std::int64_t determinant(const IntMatrix2& m);

/// [[-1,-1],[2,1]]: the effect of (1) on (rk, deg). Order 4, M^2 = -I.
const IntMatrix2& shift_matrix();

/// M^k (r, d) for any integer k.
RDPair shift_rd(const RDPair& p, std::int64_t k);

/// The three pieces of the fundamental domain:
///   R1: r >= 0, d > 0;   R2: r > 0, d = 0;   R3: r > 0, d < -2r.
enum class Region { R1, R2, R3, Outside };

std::string to_string(Region r);

Region region(const RDPair& p);

inline bool in_fundamental_domain(const RDPair& p) { return region(p) != Region::Outside; }

struct Reduction {
    RDPair image;
    int k = 0;  // 0..3, with shift_rd(p, k) == image
};

/// Throws DomainError("zero class") on (0, 0).
Reduction reduce_to_fundamental(const RDPair& p);

}  // namespace ellmf
