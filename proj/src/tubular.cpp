#include "ellmf/tubular.hpp"

#include <numeric>

#include "ellmf/error.hpp"

namespace ellmf {

const RSMatrices& rs_matrices() {
    static const RSMatrices m{{{{1, 1}, {0, 1}}}, {{{1, 0}, {1, 1}}}};
    return m;
}

MutationWord::MutationWord(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
        if (c != 'R' && c != 'S') throw ParseError("mutation words use only the letters R and S");
}

Rational MutationWord::apply(const Rational& slope) const {
    Rational q = slope;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        if (*it == 'S')
            q = q + 1;
        else
            q = q / (q + 1);
    }
    return q;
}

IntMatrix2 MutationWord::matrix() const {
    IntMatrix2 m{{{1, 0}, {0, 1}}};
    for (char c : letters_) m = multiply(m, c == 'R' ? rs_matrices().R : rs_matrices().S);
    return m;
}

MutationWord word_for_slope(const Rational& q) {
    if (sgn(q) <= 0) throw DomainError("slope word requires q > 0");
    std::string w;
    Rational x = q;
    // Strip the outermost letter at each step.
    while (x != 1) {
        if (x > 1) {
            w.push_back('S');
            x -= 1;
        } else {
            w.push_back('R');
            x = x / (1 - x);
        }
    }
    return MutationWord(std::move(w));
}

IntMatrix2 phi_from_infinity(const Rational& q) {
    if (sgn(q) > 0) return multiply(word_for_slope(q).matrix(), rs_matrices().R);
    // minimal m with q + m > 0
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    const BigInt m_big = -fl + (q.get_den() == 1 ? 1 : 0);
    const long m = m_big.get_si();
    IntMatrix2 mat = phi_from_infinity(q + m);
    const IntMatrix2 s_inv{{{1, 0}, {-1, 1}}};
    for (long i = 0; i < m; ++i) mat = multiply(s_inv, mat);
    return mat;
}

TubeInfo tube_invariants(const RDPair& p) {
    if (p.is_zero()) throw DomainError("zero class");
    TubeInfo t;
    t.g = std::gcd(p.r, p.d);
    t.rank_one_exists = t.g % 2 == 0;
    if (t.rank_one_exists) t.rank_one_length = t.g / 2;
    t.rank_two_length = t.g;
    t.finitely_many = t.g % 2 == 1;
    if (t.finitely_many) t.count_if_finite = 8;
    t.has_exceptional = t.g == 1;
    return t;
}

std::pair<K0Class, K0Class> mutate_pair_left(const K0Class& e, const K0Class& f) {
    return {f - euler_pairing(e, f) * e, e};
}

std::pair<K0Class, K0Class> mutate_pair_right(const K0Class& e, const K0Class& f) {
    return {f, e - euler_pairing(e, f) * f};
}

}  // namespace ellmf
