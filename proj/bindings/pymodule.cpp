#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "parahoric/catalog.hpp"
#include "parahoric/error.hpp"
#include "parahoric/jsonio.hpp"
#include "parahoric/matrixmodels.hpp"
#include "parahoric/satake.hpp"
#include "parahoric/values.hpp"

namespace py = pybind11;

namespace {

using parahoric::jsonio::json;
namespace ph = parahoric;

// Specs travel as JSON text: either a catalog name or a serialized spec.
ph::satake::GroupSpec spec_from_text(const std::string& text) {
    if (!text.empty() && text[0] == '{')
        return ph::jsonio::spec_from_json(ph::jsonio::parse_text(text));
    return ph::catalog::catalog_lookup(text).spec;
}

std::string fold_op(const std::string& spec_text) {
    ph::satake::GroupSpec s = spec_from_text(spec_text);
    return ph::jsonio::folded_to_json(
               ph::folding::fold(s.quasisplit_dual.datum, s.quasisplit_dual.action.inertia))
        .dump();
}

std::string kottwitz_op(const std::string& spec_text) {
    ph::satake::SpecContext ctx(spec_from_text(spec_text));
    json j = {{"parameter_group", ph::jsonio::kottwitz_to_json(ctx.params)},
              {"kottwitz_group", ph::jsonio::kottwitz_to_json(ctx.kottwitz)},
              {"projection", ph::jsonio::matrix_to_json(ctx.proj)},
              {"kernel_generators", ph::jsonio::matrix_to_json(ctx.kernel_gens)}};
    return j.dump();
}

std::string transfer_op(const std::string& spec_text, const std::string& param) {
    ph::satake::SpecContext ctx(spec_from_text(spec_text));
    ph::satake::SupercuspidalSupport chi =
        ph::satake::make_support(ctx, ph::values::parse_formal_tuple(param));
    return ph::jsonio::parameter_to_json(ph::satake::transfer(ctx, chi)).dump();
}

std::string satake_op(const std::string& spec_text, const std::string& param) {
    ph::satake::SpecContext ctx(spec_from_text(spec_text));
    ph::satake::SatakeParameter s =
        ph::satake::make_parameter(ctx, ph::values::parse_formal_tuple(param));
    return ph::jsonio::parameter_to_json(s).dump();
}

std::string member_op(const std::string& spec_text, const std::string& param) {
    ph::satake::SpecContext ctx(spec_from_text(spec_text));
    ph::satake::SatakeParameter s =
        ph::satake::make_parameter(ctx, ph::values::parse_formal_tuple(param));
    json j = ph::jsonio::member_to_json(ph::satake::member_S_G(ctx, s));
    j["admissible_pair"] = ph::satake::admissible_pair_check(ctx, s);
    return j.dump();
}

std::string spec_of(const std::string& name) {
    return ph::jsonio::spec_to_json(ph::catalog::catalog_lookup(name).spec).dump();
}

std::string describe(const std::string& name) {
    return ph::catalog::catalog_lookup(name).description;
}

bool verify_nilpotent(std::size_t n, const std::string& lambda, std::size_t trials,
                      std::uint64_t seed) {
    return ph::matrixmodels::verify_nilpotent_lemma(n, ph::values::rat_parse(lambda), trials,
                                                    seed)
        .pass();
}

bool verify_fixed_group(std::size_t n, bool special) {
    return ph::matrixmodels::verify_fixed_group_facts(n, special, true).pass();
}

}  // namespace

PYBIND11_MODULE(_parahoric, m) {
    m.doc() = "exact folded root data, Kottwitz groups, and Satake parameters";

    py::register_exception<ph::parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ph::unknown_name_error>(m, "UnknownNameError", PyExc_KeyError);

    m.def("catalog_names", &ph::catalog::catalog_names, "names of the built-in specs");
    m.def("describe", &describe, py::arg("name"), "description of a catalog entry");
    m.def("spec_of", &spec_of, py::arg("name"), "catalog entry as JSON text");
    m.def("fold", &fold_op, py::arg("spec"), "folded root system as JSON text");
    m.def("kottwitz", &kottwitz_op, py::arg("spec"),
          "parameter and Kottwitz groups with the projection, as JSON text");
    m.def("transfer", &transfer_op, py::arg("spec"), py::arg("param"),
          "normalized transfer of a support character tuple, as JSON text");
    m.def("satake", &satake_op, py::arg("spec"), py::arg("param"),
          "parameter with its Weyl normal form, as JSON text");
    m.def("member", &member_op, py::arg("spec"), py::arg("param"),
          "transfer-image membership with witness or refutation, as JSON text");
    m.def("verify_nilpotent", &verify_nilpotent, py::arg("n"), py::arg("lambda_"),
          py::arg("trials") = 100, py::arg("seed") = 1,
          "randomized scaled-nilpotent conjugation check");
    m.def("verify_fixed_group", &verify_fixed_group, py::arg("n"), py::arg("special") = true,
          "Weyl lift closure and fixed-torus component count check");
}
