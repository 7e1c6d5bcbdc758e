#pragma once

// Cohomology tables of indecomposable sheaves, Betti tables of the
// corresponding matrix factorizations, and their classification.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellmf/k0lattice.hpp"
#include "ellmf/shiftaction.hpp"

namespace ellmf {

/// 4x2 table of cohomology dimensions. Row semantics:
///   ( h0(F),          h0(F x w)      )
///   ( h0(F(c) x w),   h0(F(c))       )
///   ( h1(F x w),      h1(F)          )
///   ( h1(F(c)),       h1(F(c) x w)   )
struct CohomTable {
    std::array<std::array<std::int64_t, 2>, 4> rows{};

    bool balanced() const;
    /// Swap the two columns (the effect of - x w).
    CohomTable mirrored() const;
    bool operator==(const CohomTable&) const = default;
    auto operator<=>(const CohomTable&) const = default;
};

/// Which tube an indecomposable with a given table lives in.
enum class TubeTag {
    Rank1,            // F x w = F
    Rank2,            // rank two tube not containing O
    Rank2SocleO,      // distinguished tube {O, w}, socle O
    Rank2SocleOmega,  // distinguished tube {O, w}, socle w
};

std::string to_string(TubeTag t);

struct CohomEntry {
    CohomTable table;
    int multiplicity = 0;
    TubeTag tag = TubeTag::Rank2;
    bool operator==(const CohomEntry&) const = default;
};

/// Table of the rank one tube indecomposable of type (r, d), if one exists
/// (gcd(r, d) even). Throws DomainError("not reduced") outside the domain.
std::optional<CohomTable> cohom_rank_one(const RDPair& p);

/// All tables of rank two tube indecomposables of type (r, d) with the number
/// of indecomposables realising each. Throws DomainError outside the domain.
std::vector<CohomEntry> cohom_rank_two(const RDPair& p);

/// Table of the indecomposable with root class cl, for (r, d) in R1 or R3,
/// computed from Euler characteristics and the vanishing of h1 (resp. h0).
CohomTable cohom_via_euler(const K0Class& cl);

/// Complete graded Betti numbers, stored for i in {0, 1}; the remaining ones
/// follow from beta_{i,j} = beta_{i+2,j+4}.
class BettiTable {
  public:
    using Key = std::pair<int, std::int64_t>;

    BettiTable() = default;
    BettiTable(std::initializer_list<std::pair<const Key, std::int64_t>> init);

    std::int64_t get(int i, std::int64_t j) const;
    /// Setting 0 removes the entry. i must be 0 or 1; counts must be >= 0.
    void set(int i, std::int64_t j, std::int64_t count);
    void add(int i, std::int64_t j, std::int64_t count);

    const std::map<Key, std::int64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::int64_t column_total(int i) const;
    bool balanced() const { return column_total(0) == column_total(1); }
    /// Smallest and largest j in the support; (0, -1) for the empty table.
    std::pair<std::int64_t, std::int64_t> support() const;

    bool operator==(const BettiTable&) const = default;

    /// Rendering with row j, column i holding beta_{i,i+j}; rows start at the
    /// smallest j present.
    std::string standard_format() const;
    /// One line per entry: "beta_{i,j} = n".
    std::string entry_list() const;

  private:
    std::map<Key, std::int64_t> entries_;
};

BettiTable betti_from_cohom(const CohomTable& t);

/// Table of M(m): output(i, j) = input(i, j + m).
BettiTable translate_betti(const BettiTable& t, std::int64_t m);
/// Table of M[1]: output(0, j) = input(1, j + 4), output(1, j) = input(0, j).
BettiTable suspend_betti(const BettiTable& t);
/// Table of M[-1], inverse of suspend_betti: output(0, j) = input(1, j),
/// output(1, j) = input(0, j - 4).
BettiTable syzygy_betti(const BettiTable& t);

enum class BettiType {
    FirstKindOddA,
    FirstKindOddB,
    FirstKindEvenA,
    FirstKindEvenB,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    TypeV,
};

std::string to_string(BettiType t);
std::optional<BettiType> betti_type_from_string(const std::string& s);
bool is_first_kind(BettiType t);

/// A classified table. First kind types use r; types I-V use (a, b).
/// shift is the m with translate_betti(input, m) == template_table(*this).
struct BettiClass {
    BettiType type = BettiType::TypeI;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t r = 0;
    std::int64_t shift = 0;

    bool valid() const;
    std::string label() const;  // e.g. "TypeII(0,1)" or "FirstKindOddA(3)"
    bool operator==(const BettiClass&) const = default;
};

/// The normalised table of a class (its shift is ignored).
BettiTable template_table(const BettiClass& c);

/// Throws DomainError("not an indecomposable table") if no template matches.
BettiClass normalize_and_classify(const BettiTable& t);

/// (rank, degree) from alternating sums of Betti numbers over residues mod 4.
RDPair rd_from_betti(const BettiTable& t);

struct IndecCount {
    enum class Kind { Finite, Family };
    enum class Base { FullLine, LineMinusInfinity };
    Kind kind = Kind::Finite;
    std::int64_t value = 0;  // count when Finite, level when Family
    Base base = Base::FullLine;

    static IndecCount finite(std::int64_t k) { return {Kind::Finite, k, Base::FullLine}; }
    static IndecCount family(std::int64_t level, Base b) { return {Kind::Family, level, b}; }
    bool operator==(const IndecCount&) const = default;
    std::string str() const;
};

IndecCount indec_count(const BettiClass& c);

/// Laurent polynomial with integer coefficients, zero coefficients dropped.
struct LaurentPoly {
    std::map<std::int64_t, std::int64_t> coeffs;
    std::int64_t at_one() const;
    std::string str() const;
    bool operator==(const LaurentPoly&) const = default;
};

struct HilbertData {
    LaurentPoly numerator;  // sum beta_{0,j} t^j - sum beta_{1,j} t^j
    LaurentPoly p;          // numerator / (1 - t); H_M(t) = p(t) / (1 - t)
    std::int64_t e = 0;     // multiplicity p(1)
    std::int64_t mu = 0;    // number of generators
    bool ulrich = false;
};

/// Throws DomainError("not an MCM table") if (1 - t) does not divide the
/// numerator or the multiplicity is not positive.
HilbertData hilbert(const BettiTable& t);

/// All classes with 0 <= a <= a_max, 0 <= b <= b_max (types I-V) and
/// 1 <= r <= r_max (first kind), in (type, a, b, r) order.
std::vector<BettiClass> betti_catalog(std::int64_t a_max, std::int64_t b_max, std::int64_t r_max);

}  // namespace ellmf
