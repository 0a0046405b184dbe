#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mcgfilt/acceptance.hpp"
#include "mcgfilt/cli.hpp"
#include "mcgfilt/deriv.hpp"
#include "mcgfilt/filtration.hpp"
#include "mcgfilt/heegaard.hpp"
#include "mcgfilt/io.hpp"
#include "mcgfilt/lie.hpp"
#include "mcgfilt/trees.hpp"
#include "mcgfilt/words.hpp"

namespace py = pybind11;
using namespace mcg;

namespace {

Endo endo_arg(const std::string& text) {
    return endo_from_json(json_from_text(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact integral computations in the Johnson and Lagrangian "
              "filtrations of surface mapping class groups.";

    m.def("witt", &witt_dimension, py::arg("n"), py::arg("k"));
    m.def(
        "lyndon_words",
        [](int n, int k) {
            std::vector<std::string> out;
            for (const SymWord& w : lyndon_words(n, k))
                out.push_back(symword_name(w));
            return out;
        },
        py::arg("n"), py::arg("k"));
    m.def(
        "dk_rank",
        [](int g, int k) { return (long long)dk_basis(g, k).size(); },
        py::arg("g"), py::arg("k"));
    m.def(
        "dk_basis_json",
        [](int g, int k) {
            Json arr = Json::array();
            for (const DerivationElement& d : dk_basis(g, k))
                arr.push_back(deriv_json(d));
            return arr.dump();
        },
        py::arg("g"), py::arg("k"));
    m.def(
        "eta_image",
        [](int g, int k) {
            std::vector<std::string> out;
            for (const Int& d : image_lattice(g, k)) out.push_back(d.get_str());
            return out;
        },
        py::arg("g"), py::arg("k"));

    m.def(
        "johnson",
        [](const std::string& endo, int k) {
            return deriv_json(johnson_hom(endo_arg(endo), k)).dump();
        },
        py::arg("endo_json"), py::arg("k"));
    m.def(
        "lagrangian",
        [](const std::string& endo, int k) {
            return deriv_json(lagrangian_hom(endo_arg(endo), k)).dump();
        },
        py::arg("endo_json"), py::arg("k"));
    m.def(
        "membership",
        [](const std::string& endo, int k, const std::string& filtration) {
            Endo h = endo_arg(endo);
            if (filtration != "J" && filtration != "L")
                throw std::invalid_argument("filtration must be J or L");
            MembershipReport rep = filtration == "J"
                                       ? johnson_membership(h, k)
                                       : lagrangian_membership(h, k);
            rep.endo = "<json>";
            return membership_json(rep).dump();
        },
        py::arg("endo_json"), py::arg("k"), py::arg("filtration"));
    m.def(
        "trace",
        [](const std::string& endo, int k) {
            return sympower_json(morita_trace(johnson_hom(endo_arg(endo), k)))
                .dump();
        },
        py::arg("endo_json"), py::arg("k"));
    m.def(
        "sp_matrix",
        [](const std::string& endo) {
            return matrix_json(sp_matrix(endo_arg(endo))).dump();
        },
        py::arg("endo_json"));

    m.def(
        "heegaard",
        [](const std::string& endo) {
            GroupPresentation p = heegaard_presentation(endo_arg(endo));
            HomologyReport rep = first_homology(p);
            Json relators = Json::array();
            for (const Word& w : p.relators) relators.push_back(word_to_text(w));
            Json divisors = Json::array();
            for (const Int& d : rep.divisors) divisors.push_back(int_json(d));
            return Json{{"relators", relators},
                        {"divisors", divisors},
                        {"homology_sphere", rep.homology_sphere}}
                .dump();
        },
        py::arg("endo_json"));

    m.def(
        "catalog_names",
        [](int g) {
            std::vector<std::string> out;
            for (const CatalogEntry& e : catalog(g)) out.push_back(e.name);
            return out;
        },
        py::arg("g"));
    m.def(
        "catalog_endo",
        [](int g, const std::string& name) {
            return endo_json(catalog_entry(catalog(g), name).endo).dump();
        },
        py::arg("g"), py::arg("name"));

    m.def(
        "eta_tree",
        [](const std::string& tree, int g) {
            return deriv_json(eta(tree_from_text(g, tree))).dump();
        },
        py::arg("tree"), py::arg("g"));
    m.def(
        "decompose",
        [](const std::string& tree, int g) {
            DecoratedTree t = tree_from_text(g, tree);
            TripodExpression e = full_decompose(t);
            Json tripods = Json::array();
            for (const DecoratedTree& trip : e.tripods)
                tripods.push_back(tree_to_text(trip));
            return Json{{"tree", tree_to_text(t)},
                        {"degree", t.degree()},
                        {"sign", e.sign},
                        {"tripods", tripods}}
                .dump();
        },
        py::arg("tree"), py::arg("g"));

    m.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::string out;
            int code = cli_run(args, out);
            return py::make_tuple(code, out);
        },
        py::arg("args"));
}
