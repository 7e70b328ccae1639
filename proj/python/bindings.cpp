#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cosep/cohomology.hpp"
#include "cosep/cointegration.hpp"
#include "cosep/definition.hpp"
#include "cosep/error.hpp"
#include "cosep/report.hpp"

namespace py = pybind11;
using namespace cosep;

namespace {

CoringDefinition parse_coring(const std::string& text) {
    Definition d = parse_definition(text);
    if (!d.coring) throw Error(ErrorCode::ParseError, "not a coring definition");
    return *d.coring;
}

std::vector<std::string> bicomodule_names(const CoringDefinition& d) {
    std::vector<std::string> out;
    for (const auto& nb : d.bicomodules) out.push_back(nb.bicomodule.name);
    return out;
}

py::dict spaces(const CoringDefinition& d, const std::string& n, const std::string& m) {
    Bicomodule bn = find_bicomodule(d, n), bm = find_bicomodule(d, m);
    py::dict out;
    out["coder"] = coder_space(d.coring, bm).dim();
    out["inner_coder"] = inner_coder_space(d.coring, bm).dim();
    out["coint"] = coint_space(d.coring, bn, bm).dim();
    out["inner_coint"] = inner_coint_space(d.coring, bn, bm).dim();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact coseparability and cointegration computations";

    static py::exception<Error> cosep_error(mod, "CosepError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            std::string msg = std::string(error_code_name(e.code())) + ": " + e.what();
            py::set_error(cosep_error, msg.c_str());
        }
    });

    py::class_<CoringDefinition>(mod, "Coring")
        .def_static("parse", &parse_coring, py::arg("text"))
        .def_static("load", [](const std::string& path) {
            Definition d = load_definition(path);
            if (!d.coring) throw Error(ErrorCode::ParseError, path + " is not a coring definition");
            return *d.coring;
        }, py::arg("path"))
        .def_property_readonly("dim", [](const CoringDefinition& d) { return d.coring.dim(); })
        .def_property_readonly("field", [](const CoringDefinition& d) { return d.coring.field().describe(); })
        .def_property_readonly("labels", [](const CoringDefinition& d) { return d.labels; })
        .def_property_readonly("bicomodules", &bicomodule_names)
        .def("validate", [](const CoringDefinition& d) { return check_coring(d.coring).passed(); })
        .def("coseparable", [](const CoringDefinition& d) { return cosep_witness(d.coring).found(); })
        .def("spaces", &spaces, py::arg("n") = "regular", py::arg("m") = "regular")
        .def("ext_dims", [](const CoringDefinition& d, const std::string& n, const std::string& m, std::size_t max_degree,
                            std::size_t budget) {
            return ext_dims(d.coring, find_bicomodule(d, n), find_bicomodule(d, m), max_degree, budget);
        }, py::arg("n") = "regular", py::arg("m") = "regular", py::arg("max_degree") = kDefaultMaxDegree,
           py::arg("budget") = kDefaultBudget)
        .def("h_dims", [](const CoringDefinition& d, const std::string& n, const std::string& m, std::size_t max_degree,
                          std::size_t budget) {
            return h_dims(d.coring, find_bicomodule(d, n), find_bicomodule(d, m), max_degree, budget);
        }, py::arg("n") = "regular", py::arg("m") = "regular", py::arg("max_degree") = kDefaultMaxDegree,
           py::arg("budget") = kDefaultBudget)
        .def("relatively_injective", [](const CoringDefinition& d, const std::string& m) {
            return relative_injective(d.coring, find_bicomodule(d, m)).found();
        }, py::arg("m") = "regular");

    // Same commands as the CLI; returns (exit code, report as JSON text).
    mod.def("run", [](const std::string& command, const std::string& text, const std::string& n, const std::string& m,
                      std::size_t max_degree, std::size_t budget) {
        CommandRequest req{command, "<memory>", n, m, max_degree, budget};
        CommandResult r = run_command(req, text);
        return std::make_pair(static_cast<int>(r.exit), render(r.report, Format::Json));
    }, py::arg("command"), py::arg("text"), py::arg("n") = "regular", py::arg("m") = "regular",
       py::arg("max_degree") = kDefaultMaxDegree, py::arg("budget") = kDefaultBudget);

    mod.def("fnv1a64", [](const std::string& bytes) { return fnv1a64(bytes); });
    mod.attr("DEFAULT_MAX_DEGREE") = kDefaultMaxDegree;
    mod.attr("DEFAULT_BUDGET") = kDefaultBudget;
}
