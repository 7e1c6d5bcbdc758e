#include <gtest/gtest.h>

#include <random>

#include "ellmf/mf.hpp"

using namespace ellmf;

namespace {

const BiPoly X = BiPoly::X();
const BiPoly Y = BiPoly::Y();
const Scalar L = Scalar::lambda();

BiPoly mono(const Scalar& c, int xe, int ye) { return BiPoly::monomial(c, xe, ye); }

const LambdaSpec kSym = LambdaSpec::symbolic();

BettiTable mp_table() { return BettiTable{{{0, 0}, 1}, {{0, 1}, 1}, {{1, 2}, 1}, {{1, 3}, 1}}; }

std::vector<PointP1> sample_points() {
    std::vector<PointP1> pts{PointP1(0, 1), PointP1(1, 0), PointP1(1, 1), PointP1(L, 1)};
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    while (pts.size() < 20) pts.emplace_back(Scalar(Rational(num(rng), den(rng))), Scalar(1));
    return pts;
}

}  // namespace

// ---------------------------------------------------------------- scalars

TEST(Scalar, CanonicalForm) {
    const Scalar s(UPoly::lambda() * UPoly::lambda() - UPoly(1), UPoly(2) * (UPoly::lambda() - UPoly(1)));
    EXPECT_EQ(s.num(), (UPoly(std::vector<Rational>{Rational(1, 2), Rational(1, 2)})));
    EXPECT_EQ(s.den(), UPoly(1));
    EXPECT_EQ(L / L, Scalar(1));
    EXPECT_EQ((Scalar(1) / (L - 1)).den(), UPoly::lambda() - UPoly(1));
    EXPECT_THROW(Scalar(1) / Scalar(0), DomainError);
    EXPECT_THROW(Scalar(UPoly(1), UPoly()), DomainError);
}

TEST(Scalar, FieldAxiomsOnSamples) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> u(-4, 4);
    auto rnd = [&] {
        UPoly n(std::vector<Rational>{Rational(u(rng)), Rational(u(rng)), Rational(u(rng))});
        UPoly d(std::vector<Rational>{Rational(u(rng)), Rational(1 + (u(rng) & 1))});
        return Scalar(n, d.is_zero() ? UPoly(1) : d);
    };
    for (int k = 0; k < 200; ++k) {
        const Scalar a = rnd(), b = rnd(), c = rnd();
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a - a, Scalar(0));
        if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    }
}

TEST(Scalar, Evaluate) {
    const Scalar s = (L + 1) / (L - 2);
    EXPECT_EQ(s.evaluate(3), Rational(4));
    EXPECT_THROW(s.evaluate(2), DomainError);
}

// ---------------------------------------------------------------- polynomials

TEST(BiPoly, ExactDivisionExamples) {
    const Constants c = constants();
    const BiPoly q = exact_div(c.f, X);
    EXPECT_EQ(q, mono(1, 2, 1) - mono(L + 1, 1, 2) + mono(L, 0, 3));
    EXPECT_EQ(exact_div(c.f, X * Y), mono(1, 2, 0) - mono(L + 1, 1, 1) + mono(L, 0, 2));
    EXPECT_EQ(q * X, c.f);
    EXPECT_EQ(c.f.str(), "x^3*y + (-1 - lambda)*x^2*y^2 + lambda*x*y^3");
}

TEST(BiPoly, InexactDivisionReportsRemainder) {
    try {
        exact_div(X, Y);
        FAIL() << "expected InexactDivision";
    } catch (const InexactDivision& e) {
        EXPECT_EQ(e.remainder, X);
    }
    EXPECT_THROW(exact_div(X * X + Y, X), InexactDivision);
    EXPECT_THROW(exact_div(X, BiPoly()), DomainError);
}

TEST(BiPoly, DivisionRoundTripOnRandomProducts) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> u(-3, 3), e(0, 3);
    auto rnd = [&] {
        BiPoly p;
        for (int k = 0; k < 4; ++k) p += mono(Scalar(u(rng)) + Scalar(u(rng)) * L, e(rng), e(rng));
        return p;
    };
    for (int k = 0; k < 100; ++k) {
        const BiPoly a = rnd(), b = rnd();
        if (b.is_zero()) continue;
        EXPECT_EQ(exact_div(a * b, b), a);
    }
}

TEST(BiPoly, Homogeneity) {
    EXPECT_EQ(constants().f.homogeneous_degree(), 4);
    EXPECT_FALSE((X + X * Y).homogeneous_degree().has_value());
    EXPECT_FALSE(BiPoly().homogeneous_degree().has_value());
    EXPECT_TRUE(BiPoly(3).is_unit());
    EXPECT_FALSE(X.is_unit());
}

TEST(Constants, Identities) {
    for (const LambdaSpec& lam : {kSym, LambdaSpec::numeric(2), LambdaSpec::numeric(Rational(-3, 5))}) {
        const Constants c = constants(lam);
        EXPECT_EQ(X * c.fx + Y * c.fy, c.f);
        EXPECT_EQ(c.l[0] * c.l[1] * c.l[2] * c.l[3], c.f);
        EXPECT_NO_THROW(exact_div(c.fy, X));
        EXPECT_NO_THROW(exact_div(c.fx, Y));
    }
    EXPECT_THROW(LambdaSpec::numeric(1), DomainError);
    EXPECT_THROW(LambdaSpec::numeric(0), DomainError);
}

TEST(Constants, FxIsQuarterPartialDerivative) {
    const Constants c = constants();
    // d/dx of f, term by term
    BiPoly dfx, dfy;
    for (const auto& [m, k] : c.f.terms()) {
        if (m.first > 0) dfx += mono(k * Scalar(m.first), m.first - 1, m.second);
        if (m.second > 0) dfy += mono(k * Scalar(m.second), m.first, m.second - 1);
    }
    EXPECT_EQ(Scalar(4) * c.fx, dfx);
    EXPECT_EQ(Scalar(4) * c.fy, dfy);
}

// ---------------------------------------------------------------- constructors

TEST(Linear, VerifiesAndHasExpectedBetti) {
    for (int i = 1; i <= 4; ++i) {
        const MatrixFactorization m = mf_linear(i);
        EXPECT_TRUE(verify_mf(m).ok) << i;
        EXPECT_EQ(betti_of_mf(m), (BettiTable{{{0, 0}, 1}, {{1, 1}, 1}}));
        EXPECT_TRUE(verify_mf(mf_linear_complement(i)).ok);
    }
    const MatrixFactorization m1 = mf_linear(1);
    EXPECT_EQ(m1.A.at(0, 0), X);
    EXPECT_EQ(m1.B.at(0, 0), mono(1, 2, 1) - mono(L + 1, 1, 2) + mono(L, 0, 3));
}

TEST(Kst, VerifiesWithExpectedShape) {
    const MatrixFactorization m = mf_kst();
    EXPECT_TRUE(verify_mf(m).ok);
    EXPECT_EQ(m.A.at(1, 0).homogeneous_degree(), 3);
    EXPECT_EQ(betti_of_mf(m), (BettiTable{{{0, 0}, 1}, {{0, -2}, 1}, {{1, 1}, 2}}));
    EXPECT_EQ(reduce_mf(m), m);
    EXPECT_EQ(rd_from_betti(betti_of_mf(m)), (RDPair{-1, 0}));
}

TEST(Kst, FlippedSignIsCaught) {
    MatrixFactorization m = mf_kst();
    m.A.at(1, 0) = -m.A.at(1, 0);
    const VerifyResult v = verify_mf(m);
    EXPECT_FALSE(v.ok);
    bool cell11 = false;
    for (const auto& d : v.defects)
        if (d.where == "AB" && d.row == 1 && d.col == 1) {
            cell11 = true;
            EXPECT_FALSE(d.defect.is_zero());
        }
    EXPECT_TRUE(cell11);
}

TEST(Verify, ReportsInhomogeneousEntryAndBadTwists) {
    MatrixFactorization m = mf_linear(1);
    m.A.at(0, 0) = X + BiPoly(1);
    VerifyResult v = verify_mf(m);
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.defects.front().where, "A");

    const MatrixFactorization good = mf_linear(2);
    MatrixFactorization bad(good);
    bad.B = GradedMatrix(good.B.entries(), {2}, {4});
    v = verify_mf(bad);
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.defects.front().where, "twists");
}

TEST(ChainMaps, SquaresCommute) {
    const MatrixFactorization k = mf_kst();
    const ChainMaps c = phi_psi_maps();
    const BiPoly fy_x = exact_div(constants().fy, X);
    EXPECT_EQ(c.phi0.at(1, 1), -fy_x);
    for (const auto& [phi, psi] : {std::pair{c.phi0, c.psi0}, std::pair{c.phi_inf, c.psi_inf}}) {
        // A psi = -phi B and B phi = -psi A
        auto lhs = multiply(k.A, psi), rhs = multiply(phi, k.B);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(lhs[i][j] + rhs[i][j], BiPoly());
        lhs = multiply(k.B, phi);
        rhs = multiply(psi, k.A);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(lhs[i][j] + rhs[i][j], BiPoly());
        EXPECT_TRUE(phi.inhomogeneous_cells().empty());
        EXPECT_TRUE(psi.inhomogeneous_cells().empty());
    }
}

TEST(ChainMaps, LinearCombination) {
    const ChainMaps c = phi_psi_maps();
    const auto [phi, psi] = phi_psi_at(PointP1(1, 1));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            EXPECT_EQ(phi.at(i, j), c.phi0.at(i, j) + c.phi_inf.at(i, j));
            EXPECT_EQ(psi.at(i, j), c.psi0.at(i, j) + c.psi_inf.at(i, j));
        }
}

TEST(Cone, VerifiesAtBranchPoints) {
    for (const PointP1& p : {PointP1(0, 1), PointP1(1, 0), PointP1(1, 1), PointP1(L, 1)}) {
        const MatrixFactorization m = mf_cone(p);
        EXPECT_EQ(m.size(), 4u);
        EXPECT_TRUE(verify_mf(m).ok) << p.str();
        EXPECT_EQ(m.A.row_twists(), (std::vector<std::int64_t>{1, -1, 2, 0}));
        EXPECT_EQ(m.A.col_twists(), (std::vector<std::int64_t>{2, 2, 3, 3}));
        EXPECT_EQ(m.B.col_twists(), (std::vector<std::int64_t>{5, 3, 6, 4}));
    }
}

TEST(MpReduced, Branches) {
    MatrixFactorization m = mf_Mp_reduced(PointP1(0, 1));
    EXPECT_EQ(m.A.at(0, 0), X);
    EXPECT_EQ(m.A.at(0, 1), Y * Y);
    EXPECT_EQ(m.A.at(1, 0), BiPoly());
    EXPECT_EQ(m.A.at(1, 1), exact_div(constants().f, X));

    m = mf_Mp_reduced(PointP1(1, 0));
    EXPECT_EQ(m.A.at(0, 0), Y);
    EXPECT_EQ(m.A.at(0, 1), X * X);
    EXPECT_EQ(m.A.at(1, 1), exact_div(constants().f, Y));

    for (const PointP1& p : sample_points()) {
        m = mf_Mp_reduced(p);
        EXPECT_TRUE(verify_mf(m).ok) << p.str();
        EXPECT_EQ(betti_of_mf(m), mp_table());
        EXPECT_EQ(reduce_mf(m), m);
    }
}

TEST(MpReduced, ClassifiesAsSkyscraperOfDegreeTwo) {
    const BettiTable t = betti_of_mf(mf_Mp_reduced(PointP1(1, 1)));
    EXPECT_EQ(rd_from_betti(t), (RDPair{0, 2}));
    const BettiClass c = normalize_and_classify(t);
    EXPECT_EQ(c.label(), "TypeI(1,1)");
    EXPECT_EQ(indec_count(c), IndecCount::family(1, IndecCount::Base::FullLine));
}

TEST(MpReduced, ScaledPointGivesSameFactorization) {
    EXPECT_EQ(mf_Mp_reduced(PointP1(3, 3)), mf_Mp_reduced(PointP1(1, 1)));
    EXPECT_EQ(mf_Mp_reduced(PointP1(Scalar(5), Scalar(0))), mf_Mp_reduced(PointP1(1, 0)));
    EXPECT_THROW(PointP1(0, 0), DomainError);
}

// ---------------------------------------------------------------- reduction

TEST(Reduce, ConeAtZeroHasPropTwists) {
    const MatrixFactorization r = reduce_mf(mf_cone(PointP1(0, 1)));
    EXPECT_EQ(r.size(), 2u);
    EXPECT_TRUE(verify_mf(r).ok);
    auto rows = r.A.row_twists(), cols = r.A.col_twists();
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    EXPECT_EQ(rows, (std::vector<std::int64_t>{0, 1}));
    EXPECT_EQ(cols, (std::vector<std::int64_t>{2, 3}));
}

TEST(Reduce, ConeMatchesPropBettiOnSamplePoints) {
    for (const PointP1& p : sample_points()) {
        const MatrixFactorization r = reduce_mf(mf_cone(p));
        EXPECT_TRUE(verify_mf(r).ok) << p.str();
        EXPECT_EQ(betti_of_mf(r), betti_of_mf(mf_Mp_reduced(p))) << p.str();
    }
}

TEST(Reduce, TrivialSummandIsRemoved) {
    const MatrixFactorization sum = direct_sum(mf_linear(1), trivial_mf());
    EXPECT_TRUE(verify_mf(sum).ok);
    EXPECT_EQ(reduce_mf(sum), mf_linear(1));
    const MatrixFactorization other = direct_sum(trivial_mf(), mf_kst());
    EXPECT_EQ(reduce_mf(other), mf_kst());
}

TEST(Reduce, RejectsNonFactorization) {
    MatrixFactorization m = mf_kst();
    m.B.at(0, 0) = BiPoly();
    EXPECT_THROW(reduce_mf(m), DomainError);
    EXPECT_THROW(betti_of_mf(mf_cone(PointP1(1, 1))), DomainError);
}

// ---------------------------------------------------------------- specialization

TEST(Specialize, CommutesWithConstruction) {
    const Rational two(2);
    const LambdaSpec num = LambdaSpec::numeric(two);
    EXPECT_EQ(specialize(mf_kst(), two), mf_kst(num));
    for (int i = 1; i <= 4; ++i) EXPECT_EQ(specialize(mf_linear(i), two), mf_linear(i, num));
    for (const auto& [sym_pt, num_pt] : {std::pair{PointP1(0, 1), PointP1(0, 1)}, std::pair{PointP1(1, 0), PointP1(1, 0)},
                                         std::pair{PointP1(1, 1), PointP1(1, 1)}, std::pair{PointP1(L, 1), PointP1(2, 1)}}) {
        const MatrixFactorization sc = specialize(mf_cone(sym_pt), two);
        EXPECT_EQ(sc, mf_cone(num_pt, num));
        EXPECT_EQ(verify_mf(sc).ok, verify_mf(mf_cone(num_pt, num)).ok);
        EXPECT_EQ(specialize(mf_Mp_reduced(sym_pt), two), mf_Mp_reduced(num_pt, num));
        EXPECT_EQ(specialize(reduce_mf(mf_cone(sym_pt)), two), reduce_mf(mf_cone(num_pt, num)));
    }
    EXPECT_THROW(specialize(mf_kst(num), two), DomainError);
    EXPECT_THROW(specialize(mf_kst(), 1), DomainError);
}

TEST(Specialize, DenominatorVanishing) {
    // At p = [lambda : 1] the cone reduction divides by lambda.
    const MatrixFactorization r = reduce_mf(mf_cone(PointP1(L, 1)));
    EXPECT_TRUE(verify_mf(r).ok);
    EXPECT_NO_THROW(specialize(r, 3));
}

// ---------------------------------------------------------------- branch points

TEST(BranchPoints, AdditivityAtEachPoint) {
    for (int i = 1; i <= 4; ++i) {
        const BranchReport rep = branch_extension_invariants(i);
        EXPECT_TRUE(rep.additive) << i;
        EXPECT_EQ(rep.mp, (RDPair{0, 2}));
        EXPECT_EQ(rep.sub, (RDPair{0, 1}));
        EXPECT_EQ(rep.quotient, (RDPair{0, 1}));
    }
    EXPECT_EQ(branch_extension_invariants(3).point, PointP1(1, 1));
    EXPECT_EQ(branch_extension_invariants(1).point, PointP1(0, 1));
    EXPECT_THROW(branch_extension_invariants(5), DomainError);
}
