#include "ellmf/serialize.hpp"

#include <set>

#include "ellmf/error.hpp"

namespace ellmf {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing");
    return *it;
}

std::int64_t as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
}

Json upoly_to_json(const UPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

UPoly upoly_from_json(const Json& j, const std::string& path, bool numeric) {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rational strings");
    if (numeric && j.size() != 1) fail(path, "numeric lambda requires a single coefficient");
    std::vector<Rational> cs;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string p = path + "[" + std::to_string(k) + "]";
        if (!j[k].is_string()) fail(p, "expected a rational string");
        try {
            cs.push_back(parse_rational(j[k].get<std::string>()));
        } catch (const ParseError& e) {
            fail(p, e.what());
        }
    }
    if (cs.back() == 0) fail(path, "leading coefficient is zero");
    return UPoly(std::move(cs));
}

std::vector<std::int64_t> twists_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of integers");
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_int(j[k], path + "[" + std::to_string(k) + "]"));
    return out;
}

Json matrix_to_json(const GradedMatrix& g) {
    Json rows = Json::array();
    for (const auto& row : g.entries()) {
        Json r = Json::array();
        for (const auto& p : row) r.push_back(poly_to_json(p));
        rows.push_back(std::move(r));
    }
    return Json{{"rows", rows}, {"row_twists", g.row_twists()}, {"col_twists", g.col_twists()}};
}

GradedMatrix matrix_from_json(const Json& j, const std::string& path, bool numeric) {
    const auto rt = twists_from_json(field(j, "row_twists", path), path + ".row_twists");
    const auto ct = twists_from_json(field(j, "col_twists", path), path + ".col_twists");
    const Json& rows = field(j, "rows", path);
    if (!rows.is_array() || rows.size() != rt.size()) fail(path + ".rows", "expected one row per row twist");
    std::vector<std::vector<BiPoly>> e;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string rp = path + ".rows[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != ct.size()) fail(rp, "expected one entry per column twist");
        std::vector<BiPoly> row;
        for (std::size_t k = 0; k < ct.size(); ++k)
            row.push_back(poly_from_json(rows[i][k], rp + "[" + std::to_string(k) + "]", numeric));
        e.push_back(std::move(row));
    }
    return GradedMatrix(std::move(e), rt, ct);
}

}  // namespace

Json poly_to_json(const BiPoly& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t{{"x", m.first}, {"y", m.second}, {"c", upoly_to_json(c.num())}};
        if (!(c.den() == UPoly(1))) t["d"] = upoly_to_json(c.den());
        out.push_back(std::move(t));
    }
    return out;
}

BiPoly poly_from_json(const Json& j, const std::string& path, bool numeric) {
    if (!j.is_array()) fail(path, "expected an array of terms");
    BiPoly p;
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string tp = path + "[" + std::to_string(k) + "]";
        const auto x = as_int(field(j[k], "x", tp), tp + ".x");
        const auto y = as_int(field(j[k], "y", tp), tp + ".y");
        if (x < 0 || y < 0 || x > 1000 || y > 1000) fail(tp, "exponent out of range");
        if (!seen.insert({x, y}).second) fail(tp, "repeated monomial");
        for (const auto& [key, val] : j[k].items())
            if (key != "x" && key != "y" && key != "c" && key != "d") fail(tp + "." + key, "unknown key");
        const UPoly num = upoly_from_json(field(j[k], "c", tp), tp + ".c", numeric);
        UPoly den(1);
        if (j[k].contains("d")) den = upoly_from_json(j[k]["d"], tp + ".d", numeric);
        p += BiPoly::monomial(Scalar(num, den), static_cast<int>(x), static_cast<int>(y));
    }
    return p;
}

Json mf_to_json(const MatrixFactorization& m) {
    Json j;
    j["lambda"] = m.lambda.value ? Json(to_string(*m.lambda.value)) : Json("sym");
    j["f"] = poly_to_json(m.f);
    j["A"] = matrix_to_json(m.A);
    j["B"] = matrix_to_json(m.B);
    return j;
}

MatrixFactorization mf_from_json(const Json& j) {
    const Json& lam = field(j, "lambda", "$");
    if (!lam.is_string()) fail("$.lambda", "expected \"sym\" or a rational string");
    LambdaSpec spec;
    if (lam.get<std::string>() != "sym") {
        try {
            spec = LambdaSpec::numeric(parse_rational(lam.get<std::string>()));
        } catch (const Error& e) {
            fail("$.lambda", e.what());
        }
    }
    const bool numeric = spec.value.has_value();
    MatrixFactorization m;
    m.lambda = spec;
    m.f = poly_from_json(field(j, "f", "$"), "$.f", numeric);
    try {
        m.A = matrix_from_json(field(j, "A", "$"), "$.A", numeric);
        m.B = matrix_from_json(field(j, "B", "$"), "$.B", numeric);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    return m;
}

Json betti_to_json(const BettiTable& t) {
    Json entries = Json::array();
    for (const auto& [k, v] : t.entries()) entries.push_back(Json{{"i", k.first}, {"j", k.second}, {"beta", v}});
    return Json{{"entries", entries}};
}

BettiTable betti_from_json(const Json& j) {
    const Json& entries = field(j, "entries", "$");
    if (!entries.is_array()) fail("$.entries", "expected an array");
    BettiTable t;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const std::string p = "$.entries[" + std::to_string(k) + "]";
        const auto i = as_int(field(entries[k], "i", p), p + ".i");
        const auto jj = as_int(field(entries[k], "j", p), p + ".j");
        const auto beta = as_int(field(entries[k], "beta", p), p + ".beta");
        if (i != 0 && i != 1) fail(p + ".i", "must be 0 or 1");
        if (beta <= 0) fail(p + ".beta", "must be positive");
        if (t.get(static_cast<int>(i), jj) != 0) fail(p, "repeated entry");
        t.set(static_cast<int>(i), jj, beta);
    }
    return t;
}

Json cohom_to_json(const CohomTable& t, const RDPair& p, TubeTag tag) {
    Json rows = Json::array();
    for (const auto& row : t.rows) rows.push_back(Json::array({row[0], row[1]}));
    const std::string tube = tag == TubeTag::Rank1 ? "rank1" : tag == TubeTag::Rank2 ? "rank2" : "rank2O";
    return Json{{"rows", rows}, {"r", p.r}, {"d", p.d}, {"tube", tube}};
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ellmf
