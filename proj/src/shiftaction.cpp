#include "ellmf/shiftaction.hpp"

#include <ostream>

#include "ellmf/error.hpp"

namespace ellmf {

std::ostream& operator<<(std::ostream& os, const RDPair& p) { return os << '(' << p.r << ',' << p.d << ')'; }

RDPair apply(const IntMatrix2& m, const RDPair& p) {
    return {m[0][0] * p.r + m[0][1] * p.d, m[1][0] * p.r + m[1][1] * p.d};
}

IntMatrix2 multiply(const IntMatrix2& a, const IntMatrix2& b) {
    IntMatrix2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

std::int64_t determinant(const IntMatrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

const IntMatrix2& shift_matrix() {
    static const IntMatrix2 m{{{-1, -1}, {2, 1}}};
    return m;
}

RDPair shift_rd(const RDPair& p, std::int64_t k) {
    const auto steps = ((k % 4) + 4) % 4;
    RDPair q = p;
    for (std::int64_t i = 0; i < steps; ++i) q = apply(shift_matrix(), q);
    return q;
}

std::string to_string(Region r) {
    switch (r) {
        case Region::R1: return "R1";
        case Region::R2: return "R2";
        case Region::R3: return "R3";
        case Region::Outside: break;
    }
    return "outside";
}

Region region(const RDPair& p) {
    if (p.r >= 0 && p.d > 0) return Region::R1;
    if (p.r > 0 && p.d == 0) return Region::R2;
    if (p.r > 0 && p.d < -2 * p.r) return Region::R3;
    return Region::Outside;
}

Reduction reduce_to_fundamental(const RDPair& p) {
    if (p.is_zero()) throw DomainError("zero class");
    RDPair q = p;
    for (int k = 0; k < 4; ++k) {
        if (in_fundamental_domain(q)) return {q, k};
        q = apply(shift_matrix(), q);
    }
    // Unreachable for nonzero input: every orbit meets the domain.
    throw DomainError("orbit does not meet the fundamental domain");
}

}  // namespace ellmf
