#include "ellmf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ellmf/error.hpp"
#include "ellmf/k0lattice.hpp"
#include "ellmf/mf.hpp"
#include "ellmf/serialize.hpp"
#include "ellmf/shiftaction.hpp"
#include "ellmf/tables.hpp"
#include "ellmf/tubular.hpp"

namespace ellmf::cli {

namespace {

enum class Format { Text, Json, Csv };

// Raised by commands whose result is a negative answer rather than bad input.
struct Failed {
    std::string message;
};

std::int64_t parse_int(const std::string& s, const std::string& what) {
    const Rational q = parse_rational(s);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw ParseError(what + ": expected an integer, got " + s);
    return q.get_num().get_si();
}

std::string read_input(const std::string& file, std::istream& in) {
    std::ostringstream ss;
    if (file == "-") {
        ss << in.rdbuf();
    } else {
        std::ifstream f(file);
        if (!f) throw ParseError("cannot open " + file);
        ss << f.rdbuf();
    }
    return ss.str();
}

Json read_json(const std::string& file, std::istream& in) {
    try {
        return Json::parse(read_input(file, in));
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("$: malformed JSON: ") + e.what());
    }
}

void require_not_csv(Format f) {
    if (f == Format::Csv) throw ParseError("csv output is not available for this command");
}

std::string rd_str(const RDPair& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

Json class_json(const K0Class& c) { return Json::array({c.a0, c.a[0], c.a[1], c.a[2], c.a[3], c.n}); }

Json rd_json(const RDPair& p) { return Json{{"r", p.r}, {"d", p.d}}; }

std::string count_token(const IndecCount& c) {
    if (c.kind == IndecCount::Kind::Finite) return "finite:" + std::to_string(c.value);
    return "family:" + std::to_string(c.value) + (c.base == IndecCount::Base::FullLine ? ":X" : ":X-inf");
}

Json count_json(const IndecCount& c) {
    Json j{{"kind", c.kind == IndecCount::Kind::Finite ? "finite" : "family"}, {"value", c.value}};
    if (c.kind == IndecCount::Kind::Family)
        j["base"] = c.base == IndecCount::Base::FullLine ? "X" : "X-minus-infinity";
    return j;
}

// ---------------------------------------------------------------- commands

void cmd_roots(Format fmt, std::int64_t m_max, std::int64_t n_min, std::int64_t n_max, std::ostream& out) {
    if (m_max < 0 || n_min > n_max) throw ParseError("need m-max >= 0 and n-min <= n-max");
    if (m_max > 1000 || n_max - n_min > 2000) throw ParseError("range too large");
    const auto roots = enumerate_real_roots(m_max, n_min, n_max);
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& c : roots)
            arr.push_back(Json{{"class", class_json(c)}, {"r", rank(c)}, {"d", degree(c)}, {"chi", chi(c)}});
        out << dump_canonical(Json{{"roots", arr}});
        return;
    }
    if (fmt == Format::Csv) out << "a0,a1,a2,a3,a4,n,r,d,chi\n";
    for (const auto& c : roots) {
        if (fmt == Format::Csv)
            out << c.a0 << ',' << c.a[0] << ',' << c.a[1] << ',' << c.a[2] << ',' << c.a[3] << ',' << c.n << ','
                << rank(c) << ',' << degree(c) << ',' << chi(c) << '\n';
        else
            out << c << " r=" << rank(c) << " d=" << degree(c) << " chi=" << chi(c) << '\n';
    }
}

void cmd_class_info(Format fmt, const std::vector<std::string>& coords, std::ostream& out) {
    require_not_csv(fmt);
    if (coords.size() != 6) throw ParseError("class-info takes six integers a0 a1 a2 a3 a4 n");
    K0Class c;
    c.a0 = parse_int(coords[0], "a0");
    for (int i = 0; i < 4; ++i) c.a[i] = parse_int(coords[i + 1], "a" + std::to_string(i + 1));
    c.n = parse_int(coords[5], "n");
    const Invariants inv = invariants(c);
    const RootKind kind = classify_root(c);
    const RDPair p{inv.rank, inv.degree};
    std::optional<Reduction> red;
    if (!p.is_zero()) red = reduce_to_fundamental(p);
    if (fmt == Format::Json) {
        Json j{{"class", class_json(c)},
               {"rank", inv.rank},
               {"degree", inv.degree},
               {"chi", inv.chi},
               {"slope", inv.slope.str()},
               {"q", q_form(c)},
               {"root", to_string(kind.type)},
               {"sheaf_class", kind.is_sheaf_class},
               {"tensor_omega", class_json(tensor_omega(c))},
               {"region", to_string(region(p))}};
        j["reduction"] = red ? Json{{"image", rd_json(red->image)}, {"k", red->k}} : Json(nullptr);
        out << dump_canonical(j);
        return;
    }
    out << "class: " << c << '\n'
        << "rank: " << inv.rank << '\n'
        << "degree: " << inv.degree << '\n'
        << "chi: " << inv.chi << '\n'
        << "slope: " << inv.slope.str() << '\n'
        << "q: " << q_form(c) << '\n'
        << "root: " << to_string(kind.type) << '\n'
        << "sheaf_class: " << (kind.is_sheaf_class ? "yes" : "no") << '\n'
        << "tensor_omega: " << tensor_omega(c) << '\n'
        << "region: " << to_string(region(p)) << '\n';
    if (red) out << "reduction: " << rd_str(red->image) << " k=" << red->k << '\n';
}

void print_cohom(const CohomTable& t, std::ostream& out) {
    for (const auto& row : t.rows) out << "  " << row[0] << ' ' << row[1] << '\n';
}

void cmd_cohom(Format fmt, const std::string& rs, const std::string& ds, std::ostream& out) {
    require_not_csv(fmt);
    const RDPair p{parse_int(rs, "R"), parse_int(ds, "D")};
    const auto one = cohom_rank_one(p);
    const auto two = cohom_rank_two(p);
    if (fmt == Format::Json) {
        Json tables = Json::array();
        for (const auto& e : two)
            tables.push_back(Json{{"multiplicity", e.multiplicity}, {"cohom", cohom_to_json(e.table, p, e.tag)}});
        Json j{{"r", p.r}, {"d", p.d}, {"tables", tables}};
        j["rank_one"] = one ? cohom_to_json(*one, p, TubeTag::Rank1) : Json(nullptr);
        out << dump_canonical(j);
        return;
    }
    out << "(r,d) = " << rd_str(p) << '\n';
    if (one) {
        out << "rank one tube:\n";
        print_cohom(*one, out);
    } else {
        out << "rank one tube: none\n";
    }
    for (const auto& e : two) {
        out << "rank two tube, multiplicity " << e.multiplicity << ", " << to_string(e.tag) << ":\n";
        print_cohom(e.table, out);
    }
}

struct CatalogRow {
    BettiClass cls;
    RDPair rd;
    IndecCount count;
    HilbertData h;
};

CatalogRow catalog_row(const BettiClass& c) {
    const BettiTable t = template_table(c);
    return {c, rd_from_betti(t), indec_count(c), hilbert(t)};
}

void print_catalog(Format fmt, const std::vector<CatalogRow>& rows, const char* key, std::ostream& out) {
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& row : rows) {
            Json j{{"type", to_string(row.cls.type)},
                   {"label", row.cls.label()},
                   {"rd", rd_json(row.rd)},
                   {"count", count_json(row.count)},
                   {"e", row.h.e},
                   {"mu", row.h.mu},
                   {"ulrich", row.h.ulrich},
                   {"betti", betti_to_json(template_table(row.cls))}};
            if (is_first_kind(row.cls.type)) {
                j["r"] = row.cls.r;
            } else {
                j["a"] = row.cls.a;
                j["b"] = row.cls.b;
            }
            arr.push_back(std::move(j));
        }
        out << dump_canonical(Json{{key, arr}});
        return;
    }
    if (fmt == Format::Csv) out << "type,a,b,r,rank,degree,count,e,mu,ulrich\n";
    for (const auto& row : rows) {
        const auto& c = row.cls;
        if (fmt == Format::Csv) {
            out << to_string(c.type) << ',';
            if (is_first_kind(c.type))
                out << ",," << c.r;
            else
                out << c.a << ',' << c.b << ',';
            out << ',' << row.rd.r << ',' << row.rd.d << ',' << count_token(row.count) << ',' << row.h.e << ','
                << row.h.mu << ',' << (row.h.ulrich ? 1 : 0) << '\n';
        } else {
            out << c.label() << " (r,d)=" << rd_str(row.rd) << " count=" << row.count.str() << " e=" << row.h.e
                << " mu=" << row.h.mu << (row.h.ulrich ? " ulrich" : "") << '\n';
        }
    }
}

void check_bounds(std::int64_t a, std::int64_t b, std::int64_t r) {
    if (a < 0 || b < 0 || r < 0) throw ParseError("bounds must be non-negative");
    if (a > 500 || b > 500 || r > 1000) throw ParseError("bounds too large");
}

void cmd_betti_catalog(Format fmt, std::int64_t a, std::int64_t b, std::int64_t r, std::ostream& out) {
    check_bounds(a, b, r);
    std::vector<CatalogRow> rows;
    for (const auto& c : betti_catalog(a, b, r)) rows.push_back(catalog_row(c));
    print_catalog(fmt, rows, "classes", out);
}

void cmd_ulrich(Format fmt, std::int64_t a, std::int64_t b, std::int64_t r, std::ostream& out) {
    check_bounds(a, b, r);
    std::vector<CatalogRow> rows;
    for (const auto& c : betti_catalog(a, b, r)) {
        auto row = catalog_row(c);
        if (row.h.ulrich) rows.push_back(std::move(row));
    }
    print_catalog(fmt, rows, "ulrich", out);
}

void cmd_classify_betti(Format fmt, const std::string& file, std::istream& in, std::ostream& out) {
    require_not_csv(fmt);
    const BettiTable t = betti_from_json(read_json(file, in));
    BettiClass c;
    try {
        c = normalize_and_classify(t);
    } catch (const DomainError& e) {
        throw Failed{e.what()};
    }
    const RDPair rd = rd_from_betti(t);
    const IndecCount count = indec_count(c);
    const HilbertData h = hilbert(t);
    if (fmt == Format::Json) {
        out << dump_canonical(Json{{"label", c.label()},
                                   {"type", to_string(c.type)},
                                   {"shift", c.shift},
                                   {"rd", rd_json(rd)},
                                   {"count", count_json(count)},
                                   {"e", h.e},
                                   {"mu", h.mu},
                                   {"ulrich", h.ulrich}});
        return;
    }
    out << "class: " << c.label() << '\n'
        << "shift: " << c.shift << '\n'
        << "(r,d): " << rd_str(rd) << '\n'
        << "count: " << count.str() << '\n'
        << "hilbert numerator: " << h.numerator.str() << '\n'
        << "e: " << h.e << '\n'
        << "mu: " << h.mu << '\n'
        << "ulrich: " << (h.ulrich ? "yes" : "no") << '\n';
}

void cmd_reduce_rd(Format fmt, const std::string& rs, const std::string& ds, std::ostream& out) {
    require_not_csv(fmt);
    const RDPair p{parse_int(rs, "R"), parse_int(ds, "D")};
    const Reduction red = reduce_to_fundamental(p);
    if (fmt == Format::Json) {
        out << dump_canonical(Json{{"input", rd_json(p)},
                                   {"image", rd_json(red.image)},
                                   {"k", red.k},
                                   {"region", to_string(region(red.image))}});
        return;
    }
    out << rd_str(p) << " -> " << rd_str(red.image) << " k=" << red.k << " region=" << to_string(region(red.image))
        << '\n';
}

Json matrix2_json(const IntMatrix2& m) {
    return Json::array({Json::array({m[0][0], m[0][1]}), Json::array({m[1][0], m[1][1]})});
}

std::string matrix2_str(const IntMatrix2& m) {
    std::ostringstream os;
    os << "[[" << m[0][0] << ',' << m[0][1] << "],[" << m[1][0] << ',' << m[1][1] << "]]";
    return os.str();
}

void cmd_slope_word(Format fmt, const std::string& qs, std::ostream& out) {
    require_not_csv(fmt);
    const Rational q = parse_rational(qs);
    std::optional<MutationWord> w;
    if (q > 0) w = word_for_slope(q);
    const IntMatrix2 phi = phi_from_infinity(q);
    if (fmt == Format::Json) {
        Json j{{"slope", to_string(q)}, {"phi", matrix2_json(phi)}};
        j["word"] = w ? Json(w->str()) : Json(nullptr);
        j["word_matrix"] = w ? matrix2_json(w->matrix()) : Json(nullptr);
        out << dump_canonical(j);
        return;
    }
    out << "slope: " << to_string(q) << '\n';
    if (w) {
        out << "word: " << (w->empty() ? "(empty)" : w->str()) << '\n'
            << "word matrix: " << matrix2_str(w->matrix()) << '\n';
    } else {
        out << "word: none (slope is not positive)\n";
    }
    out << "phi: " << matrix2_str(phi) << '\n';
}

// ---------------------------------------------------------------- mf

Scalar parse_coordinate(const std::string& s, const LambdaSpec& lam) {
    if (s == "lambda") return lam.scalar();
    return Scalar(parse_rational(s));
}

void cmd_mf_build(const std::vector<std::string>& words, const std::string& lambda_opt, std::ostream& out) {
    if (words.empty()) throw ParseError("mf build needs a kind: kst, linear, cone or reduced");
    LambdaSpec lam;
    if (!lambda_opt.empty()) lam = LambdaSpec::numeric(parse_rational(lambda_opt));
    const std::string& kind = words[0];
    auto want = [&](std::size_t n) {
        if (words.size() != n + 1) throw ParseError("mf build " + kind + " takes " + std::to_string(n) + " arguments");
    };
    MatrixFactorization m;
    if (kind == "kst") {
        want(0);
        m = mf_kst(lam);
    } else if (kind == "linear") {
        want(1);
        const auto i = parse_int(words[1], "I");
        if (i < 1 || i > 4) throw ParseError("I must be in 1..4");
        m = mf_linear(static_cast<int>(i), lam);
    } else if (kind == "cone" || kind == "reduced") {
        want(2);
        const PointP1 p(parse_coordinate(words[1], lam), parse_coordinate(words[2], lam));
        m = kind == "cone" ? mf_cone(p, lam) : mf_Mp_reduced(p, lam);
    } else {
        throw ParseError("unknown factorization kind " + kind);
    }
    out << dump_canonical(mf_to_json(m));
}

void cmd_mf_verify(Format fmt, const std::string& file, std::istream& in, std::ostream& out) {
    require_not_csv(fmt);
    const MatrixFactorization m = mf_from_json(read_json(file, in));
    const VerifyResult v = verify_mf(m);
    if (fmt == Format::Json) {
        Json defects = Json::array();
        for (const auto& d : v.defects)
            defects.push_back(
                Json{{"where", d.where}, {"row", d.row}, {"col", d.col}, {"defect", poly_to_json(d.defect)}});
        out << dump_canonical(Json{{"ok", v.ok}, {"defects", defects}});
    } else {
        out << (v.ok ? "ok" : "FAILED") << '\n';
        for (const auto& d : v.defects)
            out << "  " << d.where << '(' << d.row << ',' << d.col << "): " << d.defect.str() << '\n';
    }
    if (!v.ok) throw Failed{};
}

MatrixFactorization verified(const std::string& file, std::istream& in) {
    MatrixFactorization m = mf_from_json(read_json(file, in));
    if (!verify_mf(m).ok) throw Failed{"input is not a matrix factorization"};
    return m;
}

void cmd_mf_reduce(const std::string& file, std::istream& in, std::ostream& out) {
    out << dump_canonical(mf_to_json(reduce_mf(verified(file, in))));
}

void cmd_mf_betti(Format fmt, const std::string& file, std::istream& in, std::ostream& out) {
    require_not_csv(fmt);
    const BettiTable t = betti_of_mf(verified(file, in));
    if (fmt == Format::Json)
        out << dump_canonical(betti_to_json(t));
    else
        out << t.standard_format();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations for MCM modules over XY(X-Y)(X-lambda Y)", "ellmf"};
    app.require_subcommand(1);
    std::string fmt_name = "text";
    app.add_option("--format", fmt_name, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::int64_t m_max = 1, n_min = -1, n_max = 1;
    auto* roots = app.add_subcommand("roots", "Real roots from the pattern table");
    roots->add_option("--m-max", m_max);
    roots->add_option("--n-min", n_min);
    roots->add_option("--n-max", n_max);

    std::vector<std::string> coords;
    auto* info = app.add_subcommand("class-info", "Invariants of a K0 class");
    info->add_option("coords", coords, "a0 a1 a2 a3 a4 n")->expected(6)->required();

    std::string rs, ds, qs, file = "-";
    auto* cohom = app.add_subcommand("cohom", "Cohomology tables of indecomposables of type (R, D)");
    cohom->add_option("R", rs)->required();
    cohom->add_option("D", ds)->required();

    std::int64_t a_max = 2, b_max = 2, r_max = 4;
    auto* catalog = app.add_subcommand("betti-catalog", "Betti tables of indecomposable MCM modules");
    auto* ulrich = app.add_subcommand("ulrich", "Classes with e = mu");
    for (auto* sub : {catalog, ulrich}) {
        sub->add_option("--a-max", a_max);
        sub->add_option("--b-max", b_max);
        sub->add_option("--r-max", r_max);
    }

    auto* classify = app.add_subcommand("classify-betti", "Classify a Betti table given as JSON");
    classify->add_option("FILE", file)->required();

    auto* reduce = app.add_subcommand("reduce-rd", "Move (R, D) into the fundamental domain");
    reduce->add_option("R", rs)->required();
    reduce->add_option("D", ds)->required();

    auto* slope = app.add_subcommand("slope-word", "Mutation word and matrix for a slope");
    slope->add_option("P/Q", qs)->required();

    auto* mf = app.add_subcommand("mf", "Matrix factorizations");
    mf->require_subcommand(1);
    std::vector<std::string> build_words;
    std::string lambda_opt;
    auto* build = mf->add_subcommand("build", "Build kst | linear I | cone P0 P1 | reduced P0 P1");
    build->add_option("spec", build_words)->required();
    build->add_option("--lambda", lambda_opt, "Numeric lambda (default symbolic)");
    auto* verify = mf->add_subcommand("verify", "Check AB = BA = f Id and homogeneity");
    auto* mreduce = mf->add_subcommand("reduce", "Remove trivial summands");
    auto* mbetti = mf->add_subcommand("betti", "Betti table of a minimal factorization");
    for (auto* sub : {verify, mreduce, mbetti}) sub->add_option("FILE", file)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    for (auto* sub : mf->get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kInvalid;
    }

    const Format fmt = fmt_name == "json" ? Format::Json : fmt_name == "csv" ? Format::Csv : Format::Text;
    try {
        if (*roots) {
            cmd_roots(fmt, m_max, n_min, n_max, out);
        } else if (*info) {
            cmd_class_info(fmt, coords, out);
        } else if (*cohom) {
            cmd_cohom(fmt, rs, ds, out);
        } else if (*catalog) {
            cmd_betti_catalog(fmt, a_max, b_max, r_max, out);
        } else if (*ulrich) {
            cmd_ulrich(fmt, a_max, b_max, r_max, out);
        } else if (*classify) {
            cmd_classify_betti(fmt, file, in, out);
        } else if (*reduce) {
            cmd_reduce_rd(fmt, rs, ds, out);
        } else if (*slope) {
            cmd_slope_word(fmt, qs, out);
        } else if (*build) {
            cmd_mf_build(build_words, lambda_opt, out);
        } else if (*verify) {
            cmd_mf_verify(fmt, file, in, out);
        } else if (*mreduce) {
            cmd_mf_reduce(file, in, out);
        } else if (*mbetti) {
            cmd_mf_betti(fmt, file, in, out);
        }
    } catch (const Failed& f) {
        if (!f.message.empty()) err << "failed: " << f.message << '\n';
        return kFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kOk;
}

}  // namespace ellmf::cli
