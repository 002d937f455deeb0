// Python bindings. Polynomials cross the boundary as {exponent tuple: int};
// fillings and reports as JSON text, decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skylr/contretab.hpp"
#include "skylr/enumgen.hpp"
#include "skylr/error.hpp"
#include "skylr/io.hpp"
#include "skylr/lrrules.hpp"
#include "skylr/poly.hpp"
#include "skylr/shapes.hpp"
#include "skylr/words.hpp"

namespace py = pybind11;
using namespace skylr;

namespace {

py::object to_py_int(const Coeff& c) { return py::module_::import("builtins").attr("int")(c.str()); }

py::dict terms(const Polynomial& p) {
    py::dict out;
    for (const auto& [e, c] : p.sorted_terms()) out[py::tuple(py::cast(e))] = to_py_int(c);
    return out;
}

Polynomial generating(const std::string& kind, const std::vector<int>& shape, std::size_t n) {
    if (kind == "schur") return schur_poly(Partition(shape), n);
    if (kind == "atom") return atom_poly(WeakComposition(shape), n);
    if (kind == "char") return char_poly(WeakComposition(shape), n);
    if (kind == "qs") return qs_poly(Composition(shape), n);
    throw Error(ErrorCode::Parse, "unknown polynomial kind '" + kind + "'");
}

Rule rule_of(const std::string& name) {
    if (name == "atom") return Rule::Atom;
    if (name == "char") return Rule::Character;
    if (name == "qs") return Rule::QuasiSchur;
    throw Error(ErrorCode::Parse, "unknown rule '" + name + "'");
}

IdentityForm form_of(const std::string& name) {
    if (name == "derived") return IdentityForm::Derived;
    if (name == "literal") return IdentityForm::Literal;
    throw Error(ErrorCode::Parse, "unknown identity form '" + name + "'");
}

std::string fillings_json(const std::vector<Filling>& fs) {
    Json out = Json::array();
    for (const Filling& f : fs) out.push_back(to_json(f));
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_skylr, m) {
    m.doc() = "Skyline fillings and Littlewood-Richardson rules for atoms, characters and quasisymmetric Schur functions";

    py::register_exception<Error>(m, "SkylrError", PyExc_ValueError);

    m.def("poly_terms", [](const std::string& kind, const std::vector<int>& shape, std::size_t n) {
        return terms(generating(kind, shape, n));
    });
    m.def("poly_string", [](const std::string& kind, const std::vector<int>& shape, std::size_t n) {
        return to_string(generating(kind, shape, n));
    });

    m.def("count_lrs", [](const std::vector<int>& d, const std::vector<int>& g, const std::vector<int>& c) {
        return count_lrs(WeakComposition(d), WeakComposition(g), WeakComposition(c));
    });
    m.def("count_lrk", [](const std::vector<int>& d, const std::vector<int>& g, const std::vector<int>& c) {
        return count_lrk(WeakComposition(d), WeakComposition(g), WeakComposition(c));
    });
    m.def(
        "count_lrc",
        [](const std::vector<int>& b, const std::vector<int>& a, const std::vector<int>& c, std::size_t rows) {
            return count_lrc(Composition(b), Composition(a), WeakComposition(c), rows);
        },
        py::arg("beta"), py::arg("alpha"), py::arg("content"), py::arg("rows") = 0);
    m.def("lrc_representatives_json",
          [](const std::vector<int>& b, const std::vector<int>& a, const std::vector<int>& c) {
              return fillings_json(lrc_representatives(Composition(b), Composition(a), WeakComposition(c)));
          });
    m.def("enum_lrs_json", [](const std::vector<int>& d, const std::vector<int>& g, const std::vector<int>& c) {
        return fillings_json(enum_lrs(WeakComposition(d), WeakComposition(g), WeakComposition(c)));
    });

    m.def("coeff_a", [](const std::vector<int>& g, const std::vector<int>& lam, const std::vector<int>& d) {
        return coeff_a(WeakComposition(g), Partition(lam), WeakComposition(d));
    });
    m.def("coeff_b", [](const std::vector<int>& g, const std::vector<int>& lam, const std::vector<int>& d) {
        return coeff_b(WeakComposition(g), Partition(lam), WeakComposition(d));
    });
    m.def("coeff_qs", [](const std::vector<int>& a, const std::vector<int>& lam, const std::vector<int>& b) {
        return coeff_qs(Composition(a), Partition(lam), Composition(b));
    });
    m.def("coeff_classical", [](const std::vector<int>& mu, const std::vector<int>& lam, const std::vector<int>& nu) {
        return coeff_classical(Partition(mu), Partition(lam), Partition(nu));
    });

    m.def("verify_json", [](const std::string& rule, const std::vector<int>& shape, const std::vector<int>& lam,
                            std::size_t n) {
        ExpansionReport r;
        switch (rule_of(rule)) {
            case Rule::Atom: r = verify_atom_theorem(WeakComposition(shape), Partition(lam), n); break;
            case Rule::Character: r = verify_char_theorem(WeakComposition(shape), Partition(lam), n); break;
            case Rule::QuasiSchur: r = verify_qs_theorem(Composition(shape), Partition(lam), n); break;
        }
        return to_json(r).dump();
    });
    m.def(
        "sweep",
        [](const std::string& rule, std::size_t max_n, int max_size, int max_lambda) {
            std::size_t passed = 0, failed = 0;
            {
                py::gil_scoped_release release;
                for (const ExpansionReport& r : sweep(rule_of(rule), SweepBounds{max_n, max_size, max_lambda}))
                    r.pass() ? ++passed : ++failed;
            }
            return std::make_pair(passed, failed);
        },
        py::arg("rule"), py::arg("max_n") = 3, py::arg("max_size") = 3, py::arg("max_lambda") = 2);
    m.def(
        "consistency_sides",
        [](const std::vector<int>& d, const std::vector<int>& g, const std::vector<int>& lam, const std::string& form) {
            const ConsistencySides s =
                consistency_sides(WeakComposition(d), WeakComposition(g), Partition(lam), form_of(form));
            return py::make_tuple(to_py_int(s.character_side), to_py_int(s.atom_side));
        },
        py::arg("delta"), py::arg("gamma"), py::arg("lam"), py::arg("form") = "derived");

    m.def("render", [](const std::string& text) {
        const Json j = Json::parse(text);
        return j.contains("basement") ? render(filling_from_json(j)) : render(ct_from_json(j));
    });
    m.def("col_word", [](const std::string& text) { return col_word(filling_from_json(Json::parse(text))); });
    m.def("row_word", [](const std::string& text) { return row_word(filling_from_json(Json::parse(text))); });
    m.def("is_ssk", [](const std::string& text) { return is_ssk(filling_from_json(Json::parse(text))).ok; });

    m.def("rem_k", [](const std::vector<int>& s, int k) { return rem_k(WeakComposition(s), k).vec(); });
    m.def("bruhat_geq", [](const std::vector<int>& b, const std::vector<int>& a) {
        return comp_bruhat_geq(WeakComposition(b), WeakComposition(a));
    });
    m.def("is_contre_lattice", [](const std::vector<int>& w) { return is_contre_lattice(w); });
    m.def("is_regular_contre_lattice", [](const std::vector<int>& w) { return is_regular_contre_lattice(w); });
    m.def("parse_ints", [](const std::string& s) { return parse_ints(s); });
}
