#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ellmf/cli.hpp"
#include "ellmf/error.hpp"
#include "ellmf/k0lattice.hpp"
#include "ellmf/mf.hpp"
#include "ellmf/serialize.hpp"
#include "ellmf/shiftaction.hpp"
#include "ellmf/tables.hpp"
#include "ellmf/tubular.hpp"

namespace py = pybind11;
using namespace ellmf;

namespace {

using Pair = std::pair<std::int64_t, std::int64_t>;

RDPair rd(const Pair& p) { return {p.first, p.second}; }
Pair pair(const RDPair& p) { return {p.r, p.d}; }

LambdaSpec lambda_spec(const std::optional<std::string>& value) {
    return value ? LambdaSpec::numeric(parse_rational(*value)) : LambdaSpec::symbolic();
}

PointP1 point(const std::string& p0, const std::string& p1, const LambdaSpec& lam) {
    auto coord = [&](const std::string& s) {
        return s == "lambda" ? lam.scalar() : Scalar(parse_rational(s));
    };
    return PointP1(coord(p0), coord(p1));
}

std::string to_json(const MatrixFactorization& m) { return dump_canonical(mf_to_json(m)); }
MatrixFactorization from_json(const std::string& text) { return mf_from_json(Json::parse(text)); }

BettiTable betti(const std::map<Pair, std::int64_t>& entries) {
    BettiTable t;
    for (const auto& [k, v] : entries) {
        if (k.first != 0 && k.first != 1) throw DomainError("homological index must be 0 or 1");
        t.set(static_cast<int>(k.first), k.second, v);
    }
    return t;
}

std::map<Pair, std::int64_t> betti_dict(const BettiTable& t) {
    std::map<Pair, std::int64_t> out;
    for (const auto& [k, v] : t.entries()) out[{k.first, k.second}] = v;
    return out;
}

py::dict class_dict(const BettiClass& c) {
    py::dict d;
    d["label"] = c.label();
    d["type"] = to_string(c.type);
    d["a"] = c.a;
    d["b"] = c.b;
    d["r"] = c.r;
    d["shift"] = c.shift;
    d["count"] = indec_count(c).str();
    return d;
}

using Rows = std::array<std::array<std::int64_t, 2>, 4>;

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "MCM modules over the D4 curve singularity and sheaves on P^1(2,2,2,2)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<K0Class>(m, "K0Class")
        .def(py::init([](std::int64_t a0, std::array<std::int64_t, 4> a, std::int64_t n) {
                 return K0Class{a0, a, n};
             }),
             py::arg("a0"), py::arg("a"), py::arg("n"))
        .def_readwrite("a0", &K0Class::a0)
        .def_readwrite("a", &K0Class::a)
        .def_readwrite("n", &K0Class::n)
        .def_property_readonly("rank", [](const K0Class& c) { return rank(c); })
        .def_property_readonly("degree", [](const K0Class& c) { return degree(c); })
        .def_property_readonly("chi", [](const K0Class& c) { return chi(c); })
        .def("tensor_omega", &tensor_omega)
        .def("twist_by_c", &twist_by_c)
        .def("q", &q_form)
        .def("root_type", [](const K0Class& c) { return to_string(classify_root(c).type); })
        .def("is_sheaf_class", [](const K0Class& c) { return classify_root(c).is_sheaf_class; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self == py::self)
        .def(-py::self)
        .def("__hash__", [](const K0Class& c) { return py::hash(py::make_tuple(c.a0, c.a[0], c.a[1], c.a[2], c.a[3], c.n)); })
        .def("__repr__", [](const K0Class& c) {
            std::ostringstream os;
            os << "K0Class" << c;
            return os.str();
        });

    m.def("structure_sheaf", &classes::structure_sheaf);
    m.def("skyscraper", &classes::skyscraper);
    m.def("simple", &classes::simple, py::arg("i"), py::arg("j"));
    m.def("euler_pairing", &euler_pairing);
    m.def("enumerate_real_roots", &enumerate_real_roots, py::arg("m_max"), py::arg("n_min"), py::arg("n_max"));

    m.def("region", [](const Pair& p) { return to_string(region(rd(p))); });
    m.def("shift_rd", [](const Pair& p, std::int64_t k) { return pair(shift_rd(rd(p), k)); });
    m.def("reduce_to_fundamental", [](const Pair& p) {
        const Reduction red = reduce_to_fundamental(rd(p));
        return std::make_pair(pair(red.image), red.k);
    });

    m.def("word_for_slope", [](const std::string& q) { return word_for_slope(parse_rational(q)).str(); });
    m.def("word_matrix", [](const std::string& w) { return MutationWord(w).matrix(); });
    m.def("phi_from_infinity", [](const std::string& q) { return phi_from_infinity(parse_rational(q)); });

    m.def("cohom_rank_one", [](const Pair& p) -> std::optional<Rows> {
        if (auto t = cohom_rank_one(rd(p))) return t->rows;
        return std::nullopt;
    });
    m.def("cohom_rank_two", [](const Pair& p) {
        py::list out;
        for (const auto& e : cohom_rank_two(rd(p))) {
            py::dict d;
            d["rows"] = e.table.rows;
            d["multiplicity"] = e.multiplicity;
            d["tube"] = to_string(e.tag);
            out.append(d);
        }
        return out;
    });
    m.def("cohom_via_euler", [](const K0Class& c) { return cohom_via_euler(c).rows; });

    m.def("classify_betti", [](const std::map<Pair, std::int64_t>& t) { return class_dict(normalize_and_classify(betti(t))); },
          "Classify a table given as {(i, j): beta_ij} with i in {0, 1}.");
    m.def("rd_from_betti", [](const std::map<Pair, std::int64_t>& t) { return pair(rd_from_betti(betti(t))); });
    m.def("betti_catalog", [](std::int64_t a_max, std::int64_t b_max, std::int64_t r_max) {
        py::list out;
        for (const auto& c : betti_catalog(a_max, b_max, r_max)) {
            py::dict d = class_dict(c);
            const HilbertData h = hilbert(template_table(c));
            d["table"] = betti_dict(template_table(c));
            d["e"] = h.e;
            d["mu"] = h.mu;
            d["ulrich"] = h.ulrich;
            out.append(d);
        }
        return out;
    });

    m.def("mf_kst", [](std::optional<std::string> lam) { return to_json(mf_kst(lambda_spec(lam))); },
          py::arg("lam") = py::none());
    m.def("mf_linear", [](int i, std::optional<std::string> lam) { return to_json(mf_linear(i, lambda_spec(lam))); },
          py::arg("i"), py::arg("lam") = py::none());
    m.def("mf_cone",
          [](const std::string& p0, const std::string& p1, std::optional<std::string> lam) {
              const LambdaSpec l = lambda_spec(lam);
              return to_json(mf_cone(point(p0, p1, l), l));
          },
          py::arg("p0"), py::arg("p1"), py::arg("lam") = py::none());
    m.def("mf_reduced",
          [](const std::string& p0, const std::string& p1, std::optional<std::string> lam) {
              const LambdaSpec l = lambda_spec(lam);
              return to_json(mf_Mp_reduced(point(p0, p1, l), l));
          },
          py::arg("p0"), py::arg("p1"), py::arg("lam") = py::none());
    m.def("mf_verify", [](const std::string& text) { return verify_mf(from_json(text)).ok; });
    m.def("mf_reduce", [](const std::string& text) { return to_json(reduce_mf(from_json(text))); });
    m.def("mf_betti", [](const std::string& text) { return betti_dict(betti_of_mf(from_json(text))); });

    m.def("run_cli",
          [](const std::vector<std::string>& args, const std::string& stdin_text) {
              std::istringstream in(stdin_text);
              std::ostringstream out, err;
              const int code = cli::run(args, in, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), py::arg("stdin") = "", "Run the command line tool in-process; returns (exit code, stdout, stderr).");
}
