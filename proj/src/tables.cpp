#include "ellmf/tables.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ellmf/error.hpp"

namespace ellmf {

// ---------------------------------------------------------------- cohomology

bool CohomTable::balanced() const {
    std::int64_t left = 0, right = 0;
    for (const auto& row : rows) {
        left += row[0];
        right += row[1];
    }
    return left == right;
}

CohomTable CohomTable::mirrored() const {
    CohomTable m;
    for (int k = 0; k < 4; ++k) m.rows[k] = {rows[k][1], rows[k][0]};
    return m;
}

std::string to_string(TubeTag t) {
    switch (t) {
        case TubeTag::Rank1: return "rank1";
        case TubeTag::Rank2: return "rank2";
        case TubeTag::Rank2SocleO: return "rank2O";
        case TubeTag::Rank2SocleOmega: return "rank2O-omega";
    }
    return "?";
}

namespace {

void require_reduced(const RDPair& p) {
    if (!in_fundamental_domain(p)) throw DomainError("not reduced");
}

// Region 1/3 tables with top-left entry x0 (the value of h0(F) or h1(F x w)):
// row A = (x0, d' - x0), row B = (d' - x0 + r', x0 + r') with d', r' the
// degree and rank after flipping sign for region 3.
CohomTable slope_table(const RDPair& p, std::int64_t x0) {
    CohomTable t;
    if (p.d > 0) {
        t.rows[0] = {x0, p.d - x0};
        t.rows[1] = {p.d - x0 + p.r, x0 + p.r};
    } else {
        const auto d = -p.d, r = -p.r;
        t.rows[2] = {x0, d - x0};
        t.rows[3] = {d - x0 + r, x0 + r};
    }
    return t;
}

}  // namespace

std::optional<CohomTable> cohom_rank_one(const RDPair& p) {
    require_reduced(p);
    if (std::gcd(p.r, p.d) % 2 != 0) return std::nullopt;
    const Region reg = region(p);
    if (reg == Region::R2) {
        CohomTable t;
        t.rows[1] = {p.r, p.r};
        return t;
    }
    const auto half = (reg == Region::R1 ? p.d : -p.d) / 2;
    return slope_table(p, half);
}

std::vector<CohomEntry> cohom_rank_two(const RDPair& p) {
    require_reduced(p);
    std::vector<CohomEntry> out;
    const Region reg = region(p);
    if (reg == Region::R2) {
        const auto r = p.r;
        CohomTable o;
        if (r % 2 != 0) {
            o.rows = {{{1, 0}, {r - 1, r + 1}, {1, 0}, {0, 0}}};
        } else {
            o.rows = {{{1, 0}, {r, r}, {0, 1}, {0, 0}}};
        }
        CohomTable generic;
        generic.rows[1] = {r, r};
        out.push_back({o, 1, TubeTag::Rank2SocleO});
        out.push_back({o.mirrored(), 1, TubeTag::Rank2SocleOmega});
        out.push_back({generic, 6, TubeTag::Rank2});
        return out;
    }
    const auto d = reg == Region::R1 ? p.d : -p.d;  // positive in both regions
    const bool r_even = p.r % 2 == 0;
    if (d % 2 != 0) {
        out.push_back({slope_table(p, (d + 1) / 2), 4, TubeTag::Rank2});
        out.push_back({slope_table(p, (d - 1) / 2), 4, TubeTag::Rank2});
    } else if (!r_even) {
        out.push_back({slope_table(p, d / 2 + 1), 1, TubeTag::Rank2});
        out.push_back({slope_table(p, d / 2 - 1), 1, TubeTag::Rank2});
        out.push_back({slope_table(p, d / 2), 6, TubeTag::Rank2});
    } else {
        out.push_back({slope_table(p, d / 2), 8, TubeTag::Rank2});
    }
    return out;
}

CohomTable cohom_via_euler(const K0Class& cl) {
    const RDPair p{rank(cl), degree(cl)};
    const Region reg = region(p);
    if (reg != Region::R1 && reg != Region::R3) throw DomainError("euler method inapplicable");
    if (classify_root(cl).type == RootType::NotRoot) throw DomainError("not a root class");
    const auto tw = tensor_omega(cl);
    const std::int64_t x_f = chi(cl);
    const std::int64_t x_fw = chi(tw);
    const std::int64_t x_fcw = chi(twist_by_c(tw));
    const std::int64_t x_fc = chi(twist_by_c(cl));
    CohomTable t;
    if (reg == Region::R1) {
        t.rows[0] = {x_f, x_fw};
        t.rows[1] = {x_fcw, x_fc};
    } else {
        t.rows[2] = {-x_fw, -x_f};
        t.rows[3] = {-x_fc, -x_fcw};
    }
    return t;
}

// ---------------------------------------------------------------- Betti tables

BettiTable::BettiTable(std::initializer_list<std::pair<const Key, std::int64_t>> init) {
    for (const auto& [k, v] : init) add(k.first, k.second, v);
}

std::int64_t BettiTable::get(int i, std::int64_t j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, std::int64_t j, std::int64_t count) {
    if (i != 0 && i != 1) throw DomainError("Betti index i must be 0 or 1");
    if (count < 0) throw DomainError("Betti numbers are nonnegative");
    if (count == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = count;
}

void BettiTable::add(int i, std::int64_t j, std::int64_t count) { set(i, j, get(i, j) + count); }

std::int64_t BettiTable::column_total(int i) const {
    std::int64_t s = 0;
    for (const auto& [k, v] : entries_)
        if (k.first == i) s += v;
    return s;
}

std::pair<std::int64_t, std::int64_t> BettiTable::support() const {
    if (entries_.empty()) return {0, -1};
    std::int64_t lo = entries_.begin()->first.second, hi = lo;
    for (const auto& [k, v] : entries_) {
        lo = std::min(lo, k.second);
        hi = std::max(hi, k.second);
    }
    return {lo, hi};
}

std::string BettiTable::standard_format() const {
    std::ostringstream os;
    os << "    0  1\n";
    if (entries_.empty()) return os.str();
    // row j holds beta_{0,j} and beta_{1,j+1}
    std::int64_t lo = 0, hi = 0;
    bool first = true;
    for (const auto& [k, v] : entries_) {
        const auto row = k.second - k.first;
        lo = first ? row : std::min(lo, row);
        hi = first ? row : std::max(hi, row);
        first = false;
    }
    for (auto j = lo; j <= hi; ++j) os << (j < 0 ? "" : " ") << j << ":  " << get(0, j) << "  " << get(1, j + 1) << '\n';
    return os.str();
}

std::string BettiTable::entry_list() const {
    std::ostringstream os;
    for (const auto& [k, v] : entries_) os << "beta_{" << k.first << ',' << k.second << "} = " << v << '\n';
    return os.str();
}

BettiTable betti_from_cohom(const CohomTable& t) {
    if (!t.balanced()) throw DomainError("unbalanced cohomology table");
    BettiTable b;
    for (int k = 0; k < 4; ++k) {
        if (t.rows[k][0] < 0 || t.rows[k][1] < 0) throw DomainError("negative cohomology dimension");
        b.add(0, k, t.rows[k][0]);
        b.add(1, k + 2, t.rows[k][1]);
    }
    return b;
}

BettiTable translate_betti(const BettiTable& t, std::int64_t m) {
    BettiTable out;
    for (const auto& [k, v] : t.entries()) out.set(k.first, k.second - m, v);
    return out;
}

BettiTable suspend_betti(const BettiTable& t) {
    BettiTable out;
    for (const auto& [k, v] : t.entries()) {
        if (k.first == 1)
            out.set(0, k.second - 4, v);
        else
            out.set(1, k.second, v);
    }
    return out;
}

BettiTable syzygy_betti(const BettiTable& t) {
    BettiTable out;
    for (const auto& [k, v] : t.entries()) {
        if (k.first == 1)
            out.set(0, k.second, v);
        else
            out.set(1, k.second + 4, v);
    }
    return out;
}

// ---------------------------------------------------------------- classification

std::string to_string(BettiType t) {
    switch (t) {
        case BettiType::FirstKindOddA: return "FirstKindOddA";
        case BettiType::FirstKindOddB: return "FirstKindOddB";
        case BettiType::FirstKindEvenA: return "FirstKindEvenA";
        case BettiType::FirstKindEvenB: return "FirstKindEvenB";
        case BettiType::TypeI: return "TypeI";
        case BettiType::TypeII: return "TypeII";
        case BettiType::TypeIII: return "TypeIII";
        case BettiType::TypeIV: return "TypeIV";
        case BettiType::TypeV: return "TypeV";
    }
    return "?";
}

namespace {
constexpr std::array kAllTypes{
    BettiType::FirstKindOddA, BettiType::FirstKindOddB, BettiType::FirstKindEvenA,
    BettiType::FirstKindEvenB, BettiType::TypeI,        BettiType::TypeII,
    BettiType::TypeIII,       BettiType::TypeIV,        BettiType::TypeV,
};
}  // namespace

std::optional<BettiType> betti_type_from_string(const std::string& s) {
    for (auto t : kAllTypes)
        if (to_string(t) == s) return t;
    return std::nullopt;
}

bool is_first_kind(BettiType t) {
    return t == BettiType::FirstKindOddA || t == BettiType::FirstKindOddB || t == BettiType::FirstKindEvenA ||
           t == BettiType::FirstKindEvenB;
}

bool BettiClass::valid() const {
    switch (type) {
        case BettiType::FirstKindOddA:
        case BettiType::FirstKindOddB: return r > 0 && r % 2 != 0;
        case BettiType::FirstKindEvenA:
        case BettiType::FirstKindEvenB: return r > 0 && r % 2 == 0;
        case BettiType::TypeI: return a >= 0 && b > 0;
        case BettiType::TypeII:
        case BettiType::TypeIII: return a >= 0 && b >= 0;
        case BettiType::TypeIV:
        case BettiType::TypeV: return a >= 0 && b >= 0 && (b - a) % 2 != 0;
    }
    return false;
}

std::string BettiClass::label() const {
    std::ostringstream os;
    os << to_string(type) << '(';
    if (is_first_kind(type))
        os << r;
    else
        os << a << ',' << b;
    os << ')';
    return os.str();
}

BettiTable template_table(const BettiClass& c) {
    const auto a = c.a, b = c.b, r = c.r;
    BettiTable t;
    auto put = [&](int i, std::int64_t j, std::int64_t v) { t.add(i, j, v); };
    switch (c.type) {
        case BettiType::FirstKindOddA:
            put(0, 0, 1), put(0, 1, r - 1), put(0, 2, 1), put(1, 3, r + 1);
            break;
        case BettiType::FirstKindOddB:
            put(0, 0, r + 1), put(1, 1, 1), put(1, 2, r - 1), put(1, 3, 1);
            break;
        case BettiType::FirstKindEvenA:
            put(0, 0, 1), put(0, 1, r), put(1, 3, r), put(1, 4, 1);
            break;
        case BettiType::FirstKindEvenB:
            put(0, 0, r), put(0, 1, 1), put(1, 1, 1), put(1, 2, r);
            break;
        case BettiType::TypeI:
            put(0, 0, a), put(0, 1, b), put(1, 2, a), put(1, 3, b);
            break;
        case BettiType::TypeII:
            put(0, 0, a + 1), put(0, 1, b), put(1, 2, a), put(1, 3, b + 1);
            break;
        case BettiType::TypeIII:
            put(0, 0, a), put(0, 1, b + 1), put(1, 2, a + 1), put(1, 3, b);
            break;
        case BettiType::TypeIV:
            put(0, 0, a + 2), put(0, 1, b), put(1, 2, a), put(1, 3, b + 2);
            break;
        case BettiType::TypeV:
            put(0, 0, a), put(0, 1, b + 2), put(1, 2, a + 2), put(1, 3, b);
            break;
    }
    return t;
}

namespace {

// Reads the parameters of `type` off a normalised table; the caller checks the
// full template afterwards.
BettiClass guess_parameters(BettiType type, const BettiTable& t) {
    BettiClass c;
    c.type = type;
    switch (type) {
        case BettiType::FirstKindOddA: c.r = t.get(1, 3) - 1; break;
        case BettiType::FirstKindOddB: c.r = t.get(0, 0) - 1; break;
        case BettiType::FirstKindEvenA: c.r = t.get(0, 1); break;
        case BettiType::FirstKindEvenB: c.r = t.get(0, 0); break;
        case BettiType::TypeI:
            c.a = t.get(0, 0), c.b = t.get(0, 1);
            break;
        case BettiType::TypeII:
        case BettiType::TypeIV:
            c.a = t.get(1, 2), c.b = t.get(0, 1);
            break;
        case BettiType::TypeIII:
        case BettiType::TypeV:
            c.a = t.get(0, 0), c.b = t.get(1, 3);
            break;
    }
    return c;
}

}  // namespace

BettiClass normalize_and_classify(const BettiTable& t) {
    if (t.empty()) throw DomainError("not an indecomposable table: empty");
    if (!t.balanced()) throw DomainError("not an indecomposable table: unbalanced");
    const auto [lo, hi] = t.support();
    std::vector<BettiClass> matches;
    for (auto m = lo - 4; m <= hi + 4; ++m) {
        const BettiTable shifted = translate_betti(t, m);
        for (auto type : kAllTypes) {
            BettiClass c = guess_parameters(type, shifted);
            if (!c.valid() || template_table(c) != shifted) continue;
            c.shift = m;
            matches.push_back(c);
        }
    }
    if (matches.empty()) throw DomainError("not an indecomposable table");
    if (matches.size() > 1) throw DomainError("ambiguous Betti table: " + matches[0].label() + " and " + matches[1].label());
    return matches.front();
}

RDPair rd_from_betti(const BettiTable& t) {
    if (!t.balanced()) throw DomainError("inconsistent table: unbalanced");
    // s[J] = sum over i of (-1)^i beta_{i,J} on the periodic unfolding, i.e.
    // the sum of beta_{0,j} - beta_{1,j} over j = J mod 4.
    std::array<std::int64_t, 4> s{0, 0, 0, 0};
    for (const auto& [k, v] : t.entries()) {
        const auto residue = ((k.second % 4) + 4) % 4;
        s[residue] += k.first == 0 ? v : -v;
    }
    const auto d = s[0] - s[2];
    const auto twice_r = (s[1] + s[2]) - (s[0] + s[3]);
    if (twice_r % 2 != 0) throw DomainError("inconsistent table");
    return {twice_r / 2, d};
}

std::string IndecCount::str() const {
    std::ostringstream os;
    if (kind == Kind::Finite)
        os << "finite(" << value << ')';
    else
        os << "family(level " << value << ", " << (base == Base::FullLine ? "X" : "X minus infinity") << ')';
    return os.str();
}

IndecCount indec_count(const BettiClass& c) {
    if (!c.valid()) throw DomainError("invalid Betti class " + c.label());
    switch (c.type) {
        case BettiType::FirstKindOddA:
        case BettiType::FirstKindOddB:
        case BettiType::FirstKindEvenA:
        case BettiType::FirstKindEvenB:
        case BettiType::TypeIV:
        case BettiType::TypeV: return IndecCount::finite(1);
        case BettiType::TypeII:
        case BettiType::TypeIII: return IndecCount::finite(4);
        case BettiType::TypeI: break;
    }
    const auto r = c.b - c.a;
    const auto d = 2 * c.a;
    if (r % 2 != 0) return IndecCount::finite(6);
    if (d != 0) return IndecCount::family(std::gcd(r, d) / 2, IndecCount::Base::FullLine);
    return IndecCount::family(r / 2, IndecCount::Base::LineMinusInfinity);
}

// ---------------------------------------------------------------- Hilbert series

std::int64_t LaurentPoly::at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : coeffs) s += c;
    return s;
}

std::string LaurentPoly::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs) {
        const auto mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << 't';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

HilbertData hilbert(const BettiTable& t) {
    HilbertData h;
    for (const auto& [k, v] : t.entries()) {
        auto& slot = h.numerator.coeffs[k.second];
        slot += k.first == 0 ? v : -v;
        if (slot == 0) h.numerator.coeffs.erase(k.second);
    }
    // N = (1 - t) P  <=>  P_j = sum_{k <= j} N_k, with the total sum zero.
    std::int64_t running = 0;
    if (!h.numerator.coeffs.empty()) {
        const auto lo = h.numerator.coeffs.begin()->first, hi = h.numerator.coeffs.rbegin()->first;
        for (auto e = lo; e <= hi; ++e) {
            if (auto it = h.numerator.coeffs.find(e); it != h.numerator.coeffs.end()) running += it->second;
            if (running != 0) h.p.coeffs[e] = running;
        }
    }
    if (running != 0) throw DomainError("not an MCM table: (1 - t) does not divide the numerator");
    h.e = h.p.at_one();
    h.mu = t.column_total(0);
    if (h.e <= 0) throw DomainError("not an MCM table: multiplicity is not positive");
    h.ulrich = h.e == h.mu;
    return h;
}

std::vector<BettiClass> betti_catalog(std::int64_t a_max, std::int64_t b_max, std::int64_t r_max) {
    std::vector<BettiClass> out;
    for (auto type : kAllTypes) {
        if (is_first_kind(type)) {
            for (std::int64_t r = 1; r <= r_max; ++r) {
                BettiClass c{type, 0, 0, r, 0};
                if (c.valid()) out.push_back(c);
            }
            continue;
        }
        for (std::int64_t a = 0; a <= a_max; ++a)
            for (std::int64_t b = 0; b <= b_max; ++b) {
                BettiClass c{type, a, b, 0, 0};
                if (c.valid()) out.push_back(c);
            }
    }
    return out;
}

}  // namespace ellmf
