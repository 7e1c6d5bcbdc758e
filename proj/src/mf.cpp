#include "ellmf/mf.hpp"

#include "ellmf/error.hpp"

namespace ellmf {

GradedMatrix::GradedMatrix(std::vector<std::vector<BiPoly>> entries, std::vector<std::int64_t> row_twists,
                           std::vector<std::int64_t> col_twists)
    : e_(std::move(entries)), row_twists_(std::move(row_twists)), col_twists_(std::move(col_twists)) {
    if (e_.size() != row_twists_.size()) throw DomainError("row count does not match row twists");
    for (const auto& row : e_)
        if (row.size() != col_twists_.size()) throw DomainError("column count does not match column twists");
}

std::vector<std::pair<std::size_t, std::size_t>> GradedMatrix::inhomogeneous_cells() const {
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) {
            const BiPoly& p = e_[i][j];
            if (p.is_zero()) continue;
            const auto d = p.homogeneous_degree();
            if (!d || *d != col_twists_[j] - row_twists_[i]) bad.emplace_back(i, j);
        }
    return bad;
}

bool GradedMatrix::has_unit_entry() const {
    for (const auto& row : e_)
        for (const auto& p : row)
            if (p.is_unit()) return true;
    return false;
}

void GradedMatrix::erase_row(std::size_t i) {
    e_.erase(e_.begin() + static_cast<std::ptrdiff_t>(i));
    row_twists_.erase(row_twists_.begin() + static_cast<std::ptrdiff_t>(i));
}

void GradedMatrix::erase_col(std::size_t j) {
    for (auto& row : e_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(j));
    col_twists_.erase(col_twists_.begin() + static_cast<std::ptrdiff_t>(j));
}

GradedMatrix GradedMatrix::specialize(const Rational& lambda) const {
    GradedMatrix r = *this;
    for (auto& row : r.e_)
        for (auto& p : row) p = p.specialize(lambda);
    return r;
}

std::vector<std::vector<BiPoly>> multiply(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix shapes do not compose");
    std::vector<std::vector<BiPoly>> out(a.rows(), std::vector<BiPoly>(b.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero()) out[i][j] += a.at(i, k) * b.at(k, j);
        }
    return out;
}

LambdaSpec LambdaSpec::numeric(const Rational& v) {
    if (v == 0 || v == 1) throw DomainError("lambda must differ from 0 and 1");
    return LambdaSpec{v};
}

Scalar LambdaSpec::scalar() const { return value ? Scalar(*value) : Scalar::lambda(); }

Constants constants(const LambdaSpec& lambda) {
    const Scalar lam = lambda.scalar();
    const BiPoly x = BiPoly::X(), y = BiPoly::Y();
    Constants c;
    c.l = {x, y, x - y, x - lam * y};
    c.f = c.l[0] * c.l[1] * c.l[2] * c.l[3];
    const Scalar quarter(Rational(1, 4));
    const Scalar onepl = Scalar(1) + lam;
    c.fx = quarter * (BiPoly::monomial(3, 2, 1) - BiPoly::monomial(Scalar(2) * onepl, 1, 2) +
                      BiPoly::monomial(lam, 0, 3));
    c.fy = quarter * (BiPoly::monomial(1, 3, 0) - BiPoly::monomial(Scalar(2) * onepl, 2, 1) +
                      BiPoly::monomial(Scalar(3) * lam, 1, 2));
    return c;
}

PointP1::PointP1(const Scalar& p0, const Scalar& p1) {
    if (p1.is_zero()) {
        if (p0.is_zero()) throw DomainError("[0:0] is not a point");
        p0_ = Scalar(1);
        p1_ = Scalar(0);
    } else {
        p0_ = p0 / p1;
        p1_ = Scalar(1);
    }
}

std::string PointP1::str() const { return "[" + p0_.str() + ":" + p1_.str() + "]"; }

namespace {

void check_index(int i) {
    if (i < 1 || i > 4) throw DomainError("linear factor index must be in 1..4");
}

using Rows = std::vector<std::vector<BiPoly>>;

}  // namespace

PointP1 branch_point(int i, const LambdaSpec& lambda) {
    check_index(i);
    switch (i) {
        case 1: return PointP1(0, 1);
        case 2: return PointP1(1, 0);
        case 3: return PointP1(1, 1);
        default: return PointP1(lambda.scalar(), 1);
    }
}

MatrixFactorization mf_linear(int i, const LambdaSpec& lambda) {
    check_index(i);
    const Constants c = constants(lambda);
    const BiPoly& l = c.l[i - 1];
    return {GradedMatrix({{l}}, {0}, {1}), GradedMatrix({{exact_div(c.f, l)}}, {1}, {4}), c.f, lambda};
}

MatrixFactorization mf_linear_complement(int i, const LambdaSpec& lambda) {
    check_index(i);
    const Constants c = constants(lambda);
    const BiPoly& l = c.l[i - 1];
    return {GradedMatrix({{exact_div(c.f, l)}}, {0}, {3}), GradedMatrix({{l}}, {3}, {4}), c.f, lambda};
}

MatrixFactorization mf_kst(const LambdaSpec& lambda) {
    const Constants c = constants(lambda);
    const BiPoly x = BiPoly::X(), y = BiPoly::Y();
    GradedMatrix a(Rows{{x, y}, {-c.fy, c.fx}}, {0, -2}, {1, 1});
    GradedMatrix b(Rows{{c.fx, -y}, {c.fy, x}}, {1, 1}, {4, 2});
    return {std::move(a), std::move(b), c.f, lambda};
}

ChainMaps phi_psi_maps(const LambdaSpec& lambda) {
    const Constants c = constants(lambda);
    const BiPoly fy_x = exact_div(c.fy, BiPoly::X());
    const BiPoly fx_y = exact_div(c.fx, BiPoly::Y());
    const std::vector<std::int64_t> phi_rows{2, 0}, phi_cols{2, 2}, psi_rows{3, 3}, psi_cols{5, 3};
    ChainMaps m;
    m.phi0 = GradedMatrix(Rows{{0, 1}, {0, -fy_x}}, phi_rows, phi_cols);
    m.psi0 = GradedMatrix(Rows{{-fy_x, -1}, {0, 0}}, psi_rows, psi_cols);
    m.phi_inf = GradedMatrix(Rows{{1, 0}, {fx_y, 0}}, phi_rows, phi_cols);
    m.psi_inf = GradedMatrix(Rows{{0, 0}, {-fx_y, 1}}, psi_rows, psi_cols);
    return m;
}

namespace {

GradedMatrix combine(const Scalar& s, const GradedMatrix& u, const Scalar& t, const GradedMatrix& v) {
    Rows e(u.rows(), std::vector<BiPoly>(u.cols()));
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j) e[i][j] = s * u.at(i, j) + t * v.at(i, j);
    return GradedMatrix(std::move(e), u.row_twists(), u.col_twists());
}

// [[p, 0], [q, r]] with the given twists.
GradedMatrix lower_block(const GradedMatrix& p, const GradedMatrix& q, const GradedMatrix& r,
                         std::vector<std::int64_t> row_twists, std::vector<std::int64_t> col_twists) {
    const std::size_t n = p.rows();
    Rows e(2 * n, std::vector<BiPoly>(2 * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            e[i][j] = p.at(i, j);
            e[n + i][j] = q.at(i, j);
            e[n + i][n + j] = r.at(i, j);
        }
    return GradedMatrix(std::move(e), std::move(row_twists), std::move(col_twists));
}

GradedMatrix negated(const GradedMatrix& m) {
    return combine(Scalar(-1), m, Scalar(0), m);
}

}  // namespace

std::pair<GradedMatrix, GradedMatrix> phi_psi_at(const PointP1& p, const LambdaSpec& lambda) {
    const ChainMaps m = phi_psi_maps(lambda);
    return {combine(p.p1(), m.phi0, p.p0(), m.phi_inf), combine(p.p1(), m.psi0, p.p0(), m.psi_inf)};
}

MatrixFactorization mf_cone(const PointP1& p, const LambdaSpec& lambda) {
    const MatrixFactorization k = mf_kst(lambda);
    const auto [phi, psi] = phi_psi_at(p, lambda);
    GradedMatrix a = lower_block(k.A, negated(phi), k.A, {1, -1, 2, 0}, {2, 2, 3, 3});
    GradedMatrix b = lower_block(k.B, negated(psi), k.B, {2, 2, 3, 3}, {5, 3, 6, 4});
    return {std::move(a), std::move(b), k.f, lambda};
}

MatrixFactorization mf_Mp_reduced(const PointP1& p, const LambdaSpec& lambda) {
    const Constants c = constants(lambda);
    const BiPoly x = BiPoly::X(), y = BiPoly::Y();
    const BiPoly f_x = exact_div(c.f, x);
    const BiPoly f_y = exact_div(c.f, y);
    Rows a, b;
    if (!p.p1().is_zero()) {
        const Scalar t = p.p0() / p.p1();
        const Scalar s = Scalar(1) / p.p1();
        const BiPoly y2 = s * (y * y);
        const BiPoly f_xy = p.p0() * exact_div(f_x, y);
        a = {{x - t * y, y2}, {-f_xy, f_x}};
        b = {{f_x, -y2}, {f_xy, x - t * y}};
    } else {
        a = {{y, x * x}, {0, f_y}};
        b = {{f_y, -(x * x)}, {0, y}};
    }
    return {GradedMatrix(std::move(a), {1, 0}, {2, 3}), GradedMatrix(std::move(b), {2, 3}, {5, 4}), c.f, lambda};
}

MatrixFactorization direct_sum(const MatrixFactorization& m, const MatrixFactorization& n) {
    if (!(m.f == n.f) || !(m.lambda == n.lambda)) throw DomainError("direct sum of factorizations of different f");
    auto block = [](const GradedMatrix& p, const GradedMatrix& q) {
        const std::size_t r = p.rows() + q.rows(), c = p.cols() + q.cols();
        Rows e(r, std::vector<BiPoly>(c));
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) e[i][j] = p.at(i, j);
        for (std::size_t i = 0; i < q.rows(); ++i)
            for (std::size_t j = 0; j < q.cols(); ++j) e[p.rows() + i][p.cols() + j] = q.at(i, j);
        auto rt = p.row_twists();
        rt.insert(rt.end(), q.row_twists().begin(), q.row_twists().end());
        auto ct = p.col_twists();
        ct.insert(ct.end(), q.col_twists().begin(), q.col_twists().end());
        return GradedMatrix(std::move(e), std::move(rt), std::move(ct));
    };
    return {block(m.A, n.A), block(m.B, n.B), m.f, m.lambda};
}

MatrixFactorization trivial_mf(const LambdaSpec& lambda) {
    const Constants c = constants(lambda);
    return {GradedMatrix({{BiPoly(1)}}, {0}, {0}), GradedMatrix({{c.f}}, {0}, {4}), c.f, lambda};
}

MatrixFactorization shift_degrees(const MatrixFactorization& m, std::int64_t s) {
    auto shift = [s](const GradedMatrix& g) {
        auto rt = g.row_twists(), ct = g.col_twists();
        for (auto& t : rt) t += s;
        for (auto& t : ct) t += s;
        return GradedMatrix(g.entries(), std::move(rt), std::move(ct));
    };
    return {shift(m.A), shift(m.B), m.f, m.lambda};
}

namespace {

void check_product(const GradedMatrix& p, const GradedMatrix& q, const BiPoly& f, const char* where,
                   VerifyResult& out) {
    const Rows prod = multiply(p, q);
    for (std::size_t i = 0; i < prod.size(); ++i)
        for (std::size_t j = 0; j < prod[i].size(); ++j) {
            BiPoly d = prod[i][j];
            if (i == j) d -= f;
            if (!d.is_zero()) out.defects.push_back({where, i, j, d});
        }
}

}  // namespace

VerifyResult verify_mf(const MatrixFactorization& m) {
    VerifyResult out;
    const std::size_t n = m.A.rows();
    const bool square = m.A.cols() == n && m.B.rows() == n && m.B.cols() == n;
    if (!square) {
        out.ok = false;
        out.defects.push_back({"shape", 0, 0, BiPoly()});
        return out;
    }
    const auto deg = m.f.homogeneous_degree();
    if (!deg) out.defects.push_back({"f", 0, 0, m.f});
    for (std::size_t k = 0; k < n; ++k) {
        if (m.A.col_twists()[k] != m.B.row_twists()[k]) out.defects.push_back({"twists", 0, k, BiPoly()});
        if (deg && m.B.col_twists()[k] != m.A.row_twists()[k] + *deg)
            out.defects.push_back({"twists", 1, k, BiPoly()});
    }
    for (auto [i, j] : m.A.inhomogeneous_cells()) out.defects.push_back({"A", i, j, BiPoly()});
    for (auto [i, j] : m.B.inhomogeneous_cells()) out.defects.push_back({"B", i, j, BiPoly()});
    check_product(m.A, m.B, m.f, "AB", out);
    check_product(m.B, m.A, m.f, "BA", out);
    out.ok = out.defects.empty();
    return out;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> first_unit(const GradedMatrix& g) {
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (g.at(i, j).is_unit()) return std::make_pair(i, j);
    return std::nullopt;
}

// p(i, j) is a unit. Clears its row and column in p with the inverse operations
// applied to q (so pq and qp are unchanged), then drops row i / column j of p and
// row j / column i of q.
void eliminate(GradedMatrix& p, GradedMatrix& q, std::size_t i, std::size_t j) {
    const Scalar inv = Scalar(1) / p.at(i, j).coeff(0, 0);
    const std::size_t n = p.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i || p.at(k, j).is_zero()) continue;
        const BiPoly coef = inv * p.at(k, j);
        for (std::size_t l = 0; l < n; ++l)
            if (!p.at(i, l).is_zero()) p.at(k, l) -= coef * p.at(i, l);
        for (std::size_t r = 0; r < n; ++r)
            if (!q.at(r, k).is_zero()) q.at(r, i) += coef * q.at(r, k);
    }
    for (std::size_t l = 0; l < n; ++l) {
        if (l == j || p.at(i, l).is_zero()) continue;
        const BiPoly coef = inv * p.at(i, l);
        p.at(i, l) = BiPoly();
        for (std::size_t s = 0; s < n; ++s)
            if (!q.at(l, s).is_zero()) q.at(j, s) += coef * q.at(l, s);
    }
    p.erase_row(i);
    p.erase_col(j);
    q.erase_row(j);
    q.erase_col(i);
}

}  // namespace

MatrixFactorization reduce_mf(const MatrixFactorization& m) {
    if (!verify_mf(m).ok) throw DomainError("input is not a matrix factorization");
    MatrixFactorization r = m;
    while (r.A.rows() > 0) {
        if (auto u = first_unit(r.A)) {
            eliminate(r.A, r.B, u->first, u->second);
        } else if (auto v = first_unit(r.B)) {
            eliminate(r.B, r.A, v->first, v->second);
        } else {
            break;
        }
    }
    return r;
}

BettiTable betti_of_mf(const MatrixFactorization& m) {
    if (m.A.has_unit_entry() || m.B.has_unit_entry()) throw DomainError("reduce first");
    BettiTable t;
    for (auto u : m.A.row_twists()) t.add(0, u, 1);
    for (auto v : m.A.col_twists()) t.add(1, v, 1);
    return t;
}

MatrixFactorization specialize(const MatrixFactorization& m, const Rational& lambda) {
    if (m.lambda.value) throw DomainError("factorization already has a numeric lambda");
    return {m.A.specialize(lambda), m.B.specialize(lambda), m.f.specialize(lambda), LambdaSpec::numeric(lambda)};
}

BranchReport branch_extension_invariants(int i, const LambdaSpec& lambda) {
    check_index(i);
    const PointP1 p = branch_point(i, lambda);
    BranchReport rep{i, p, {}, {}, {}, false};
    rep.mp = rd_from_betti(betti_of_mf(reduce_mf(mf_Mp_reduced(p, lambda))));
    rep.sub = rd_from_betti(betti_of_mf(shift_degrees(mf_linear(i, lambda), 1)));
    rep.quotient = rd_from_betti(betti_of_mf(mf_linear_complement(i, lambda)));
    rep.additive = rep.mp.r == rep.sub.r + rep.quotient.r && rep.mp.d == rep.sub.d + rep.quotient.d;
    return rep;
}

}  // namespace ellmf
