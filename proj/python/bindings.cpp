#include <pybind11/pybind11.h>

#include "gridrig/errors.hpp"
#include "gridrig/io.hpp"
#include "gridrig/service.hpp"

namespace py = pybind11;
using namespace gridrig;

namespace {

// Documents cross the boundary as JSON text; the Python side parses them.
io::Json parse(const std::string& text) { return io::parse(text); }
std::string dump(const io::Json& j) { return io::dump(j); }

QuadNorm norm_arg(const std::string& spec) {
  if (spec == "linf" || spec == "l1") return service::norm_from_spec(spec);
  return io::norm_from_json(parse(spec), "");
}

}  // namespace

PYBIND11_MODULE(_gridrig, m) {
  m.doc() = "Exact rigidity analysis of reflection-symmetric frameworks in quadrilateral norms";

  static py::exception<SchemaError> schema_error(m, "SchemaError", PyExc_ValueError);
  static py::exception<IllPositioned> ill_positioned(m, "IllPositioned", PyExc_ValueError);
  static py::exception<Error> domain_error(m, "DomainError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SchemaError& e) {
      py::set_error(schema_error, (std::string(e.what()) + " at " + e.pointer()).c_str());
    } catch (const IllPositioned& e) {
      py::set_error(ill_positioned, e.what());
    } catch (const Error& e) {
      py::set_error(domain_error, e.what());
    }
  });

  m.def(
      "analyze",
      [](const std::string& framework, bool flexes) { return dump(service::analyze(parse(framework), flexes)); },
      py::arg("framework"), py::arg("flexes") = false);
  m.def(
      "sparsity",
      [](const std::string& quotient, const std::string& variant, bool loopless) {
        return dump(service::sparsity(parse(quotient), io::variant_from_string(variant), loopless));
      },
      py::arg("quotient"), py::arg("variant") = "221", py::arg("loopless") = false);
  m.def(
      "construct",
      [](const std::string& quotient, const std::string& mode) {
        return dump(service::construct(parse(quotient), io::mode_from_string(mode)));
      },
      py::arg("quotient"), py::arg("mode") = "sym");
  m.def(
      "realize",
      [](const std::string& doc, const std::string& mode, const std::string& norm, std::uint64_t seed) {
        return dump(service::realize(parse(doc), io::mode_from_string(mode), norm_arg(norm), seed));
      },
      py::arg("doc"), py::arg("mode") = "sym", py::arg("norm") = "linf", py::arg("seed") = 0);
  m.def(
      "crosscheck",
      [](std::size_t cases, std::size_t max_orbits, std::uint64_t seed, const std::string& norm) {
        return dump(service::crosscheck(cases, max_orbits, seed, norm_arg(norm)).first);
      },
      py::arg("cases"), py::arg("max_orbits") = 5, py::arg("seed") = 0, py::arg("norm") = "linf");
}
