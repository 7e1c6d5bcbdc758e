#pragma once

// Tubular mutations R, S acting on (rank, degree) and on slopes.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellmf/k0lattice.hpp"
#include "ellmf/rational.hpp"
#include "ellmf/shiftaction.hpp"

namespace ellmf {

/// R = [[1,1],[0,1]]  (slope q -> q/(q+1), inf -> 1)
/// S = [[1,0],[1,1]]  (slope q -> q+1)
struct RSMatrices {
    IntMatrix2 R;
    IntMatrix2 S;
};
const RSMatrices& rs_matrices();

/// Word over {R, S}. Stored and rendered outermost letter first: "RRS" is
/// R o R o S, so the rightmost letter acts first.
class MutationWord {
  public:
    MutationWord() = default;
    explicit MutationWord(std::string letters);

    const std::string& str() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    /// Action on a positive slope.
    Rational apply(const Rational& slope) const;
    /// Product of the letter matrices in written order.
    IntMatrix2 matrix() const;

    bool operator==(const MutationWord&) const = default;

  private:
    std::string letters_;
};

/// The unique word w with w . 1 = q. Throws DomainError for q <= 0.
MutationWord word_for_slope(const Rational& q);

/// Matrix of an autoequivalence carrying the slope-infinity tube to slope q:
/// w_q o R for q > 0, and S^{-m} times the matrix for q + m (m minimal) otherwise.
IntMatrix2 phi_from_infinity(const Rational& q);

struct TubeInfo {
    std::int64_t g = 0;
    bool rank_one_exists = false;
    std::optional<std::int64_t> rank_one_length;
    std::int64_t rank_two_length = 0;
    bool finitely_many = false;
    std::optional<std::int64_t> count_if_finite;
    bool has_exceptional = false;
    bool operator==(const TubeInfo&) const = default;
};

/// Throws DomainError on (0, 0).
TubeInfo tube_invariants(const RDPair& p);

/// (E, F) -> (L_E F, E) at the level of classes.
std::pair<K0Class, K0Class> mutate_pair_left(const K0Class& e, const K0Class& f);
/// (E, F) -> (F, R_E F) at the level of classes.
std::pair<K0Class, K0Class> mutate_pair_right(const K0Class& e, const K0Class& f);

}  // namespace ellmf
