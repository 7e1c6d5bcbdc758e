#pragma once

// Graded matrix factorizations of f = XY(X - Y)(X - lambda Y) over Q(lambda).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellmf/bipoly.hpp"
#include "ellmf/shiftaction.hpp"
#include "ellmf/tables.hpp"

namespace ellmf {

/// Matrix of polynomials between graded free modules. Row i is S(-row_twists[i]),
/// column j is S(-col_twists[j]); entry (i, j) is zero or homogeneous of degree
/// col_twists[j] - row_twists[i].
class GradedMatrix {
  public:
    GradedMatrix() = default;
    GradedMatrix(std::vector<std::vector<BiPoly>> entries, std::vector<std::int64_t> row_twists,
                 std::vector<std::int64_t> col_twists);

    std::size_t rows() const { return row_twists_.size(); }
    std::size_t cols() const { return col_twists_.size(); }
    const BiPoly& at(std::size_t i, std::size_t j) const { return e_[i][j]; }
    BiPoly& at(std::size_t i, std::size_t j) { return e_[i][j]; }
    const std::vector<std::vector<BiPoly>>& entries() const { return e_; }
    const std::vector<std::int64_t>& row_twists() const { return row_twists_; }
    const std::vector<std::int64_t>& col_twists() const { return col_twists_; }

    /// (i, j) of entries that are neither zero nor homogeneous of the right degree.
    std::vector<std::pair<std::size_t, std::size_t>> inhomogeneous_cells() const;
    bool has_unit_entry() const;

    void erase_row(std::size_t i);
    void erase_col(std::size_t j);

    GradedMatrix specialize(const Rational& lambda) const;
    bool operator==(const GradedMatrix&) const = default;

  private:
    std::vector<std::vector<BiPoly>> e_;
    std::vector<std::int64_t> row_twists_;
    std::vector<std::int64_t> col_twists_;
};

/// Plain matrix product of the entries (twists are not checked).
std::vector<std::vector<BiPoly>> multiply(const GradedMatrix& a, const GradedMatrix& b);

/// Either a symbolic lambda or a specific rational value (never 0 or 1).
struct LambdaSpec {
    std::optional<Rational> value;
    static LambdaSpec symbolic() { return {}; }
    /// Throws DomainError for 0 or 1.
    static LambdaSpec numeric(const Rational& v);
    Scalar scalar() const;
    bool operator==(const LambdaSpec&) const = default;
};

struct MatrixFactorization {
    GradedMatrix A;
    GradedMatrix B;
    BiPoly f;
    LambdaSpec lambda;

    std::size_t size() const { return A.rows(); }
    bool operator==(const MatrixFactorization&) const = default;
};

struct Constants {
    BiPoly f;
    std::array<BiPoly, 4> l;
    BiPoly fx;
    BiPoly fy;
};

Constants constants(const LambdaSpec& lambda = {});

/// Point of P^1 over Q(lambda), kept in canonical form: p1 = 1, or (1, 0).
class PointP1 {
  public:
    /// Throws DomainError for (0, 0).
    PointP1(const Scalar& p0, const Scalar& p1);
    const Scalar& p0() const { return p0_; }
    const Scalar& p1() const { return p1_; }
    bool operator==(const PointP1&) const = default;
    std::string str() const;

  private:
    Scalar p0_, p1_;
};

/// Point of the i-th linear factor: [0:1], [1:0], [1:1], [lambda:1].
PointP1 branch_point(int i, const LambdaSpec& lambda = {});

/// (l_i, f / l_i), presenting R / l_i.
MatrixFactorization mf_linear(int i, const LambdaSpec& lambda = {});
/// (f / l_i, l_i), presenting R / (f / l_i).
MatrixFactorization mf_linear_complement(int i, const LambdaSpec& lambda = {});
MatrixFactorization mf_kst(const LambdaSpec& lambda = {});

struct ChainMaps {
    GradedMatrix phi0, psi0, phi_inf, psi_inf;
};
ChainMaps phi_psi_maps(const LambdaSpec& lambda = {});
/// (p1 phi0 + p0 phi_inf, p1 psi0 + p0 psi_inf).
std::pair<GradedMatrix, GradedMatrix> phi_psi_at(const PointP1& p, const LambdaSpec& lambda = {});

MatrixFactorization mf_cone(const PointP1& p, const LambdaSpec& lambda = {});
MatrixFactorization mf_Mp_reduced(const PointP1& p, const LambdaSpec& lambda = {});

/// Block sum of two factorizations of the same f.
MatrixFactorization direct_sum(const MatrixFactorization& m, const MatrixFactorization& n);
/// The 1x1 factorization (1, f) with both twists 0 on the left.
MatrixFactorization trivial_mf(const LambdaSpec& lambda = {});
/// Adds s to every twist, so the result presents M(-s).
MatrixFactorization shift_degrees(const MatrixFactorization& m, std::int64_t s);

struct CellDefect {
    std::string where;  // "AB", "BA", "A", "B" (homogeneity), "twists"
    std::size_t row = 0;
    std::size_t col = 0;
    BiPoly defect;      // product minus the expected value; zero for homogeneity/twist failures
};

struct VerifyResult {
    bool ok = true;
    std::vector<CellDefect> defects;
};

/// Never throws on a mathematical defect; shape mismatches are reported as defects too.
VerifyResult verify_mf(const MatrixFactorization& m);

/// Removes trivial summands until no entry of A or B is a nonzero constant.
/// Throws DomainError if the input does not verify.
MatrixFactorization reduce_mf(const MatrixFactorization& m);

/// Throws DomainError("reduce first") on non-minimal input.
BettiTable betti_of_mf(const MatrixFactorization& m);

/// Throws DomainError if a denominator vanishes or m is already numeric.
MatrixFactorization specialize(const MatrixFactorization& m, const Rational& lambda);

struct BranchReport {
    int index = 0;
    PointP1 point;
    RDPair mp;        // M_{p_i}
    RDPair sub;       // R / l_i (-1)
    RDPair quotient;  // R / (f / l_i)
    bool additive = false;
};

BranchReport branch_extension_invariants(int i, const LambdaSpec& lambda = {});

}  // namespace ellmf
