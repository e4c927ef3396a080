// zipcox._core: the library operations, returning JSON text.  The Python
// package wraps these and decodes the JSON.

#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zipcox/cone.hpp"
#include "zipcox/datum_io.hpp"
#include "zipcox/errors.hpp"
#include "zipcox/report.hpp"
#include "zipcox/weyl.hpp"

namespace py = pybind11;
using namespace zipcox;

namespace {

RationalCone pick_cone(const std::string& which, const ZipDatum& z) {
  if (which == "eff")
    return eff_cone(z);
  if (which == "gs")
    return gs_cone(z);
  if (which == "pha")
    return pha_cone(z);
  if (which == "dominant")
    return dominant_cone(z.datum());
  fail_input("unknown cone '" + which + "'");
}

U3Case parse_case(const std::string& s) {
  if (s == "split")
    return U3Case::Split;
  if (s == "inert")
    return U3Case::Inert;
  fail_input("case must be split or inert");
}

Weight3 weight3(const std::vector<std::int64_t>& v) {
  if (v.size() != 3)
    fail_input("expected three integers, got " + std::to_string(v.size()));
  return {v[0], v[1], v[2]};
}

std::string describe(const std::string& text) { return describe_json(zip_from_file(parse_datum(text))).dump(); }

std::string strata(const std::string& text, const std::string& format) {
  ZipDatum z = zip_from_file(parse_datum(text));
  WeylGroup W(z.datum(), z.roots());
  StrataPoset P = strata_poset(z, W);
  if (format == "dot")
    return poset_dot(P);
  if (format != "json")
    fail_input("format must be json or dot");
  return poset_json(W, P).dump();
}

std::string cone(const std::string& text, const std::string& which, bool hilbert) {
  ZipDatum z = zip_from_file(parse_datum(text));
  RationalCone c = pick_cone(which, z);
  Json j = hilbert ? cone_json(c, hilbert_basis(c)) : cone_json(c);
  if (which == "pha") {
    Json imgs = Json::array();
    for (const auto& v : pha_generator_images(z))
      imgs.push_back(int_vector(v));
    j["generator_images"] = imgs;
  }
  return j.dump();
}

std::string hasse(const std::string& text, const std::vector<std::int64_t>& lambda, const std::string& oracle) {
  DatumFile f = parse_datum(text);
  ZipDatum z = zip_from_file(f);
  if (lambda.size() != z.rank())
    fail_input("lambda has length " + std::to_string(lambda.size()) + ", expected " + std::to_string(z.rank()));
  QVector l = QVector::from_ints(lambda);
  return hasse_json(l, hasse_verdict(z, l, make_oracle(oracle, f, z))).dump();
}

std::string u3_decompose(const std::vector<std::int64_t>& lambda, std::int64_t p, std::optional<std::int64_t> i) {
  Weight3 l = weight3(lambda);
  if (!i) {
    auto idx = qualifying_indices(l, p, 1);
    if (idx.empty())
      fail_input("no qualifying index: H^0 vanishes for this weight");
    i = idx.front();
  }
  return u3_decompose_json(l, p, *i, decompose_generators(l, p, *i)).dump();
}

std::string verify(const std::string& zcase, std::int64_t p, int degree, std::size_t trials, std::uint64_t seed,
                   const std::string& section) {
  auto s = parse_section(section);
  if (!s)
    fail_input("unknown section '" + section + "'");
  return equivariance_json(check_equivariance(*s, parse_case(zcase), p, degree, trials, seed)).dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zip data, strata, weight cones and Hasse invariants";

  static py::exception<ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
  static py::exception<DefectError> defect_error(m, "DefectError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e)
        std::rethrow_exception(e);
    } catch (const InputError& x) {
      PyErr_SetString(PyExc_ValueError, x.what());
    } catch (const ResourceError& x) {
      resource_error(x.what());
    } catch (const DefectError& x) {
      defect_error(x.what());
    }
  });

  m.def("describe", &describe, py::arg("datum"));
  m.def("strata", &strata, py::arg("datum"), py::arg("format") = "json");
  m.def("cone", &cone, py::arg("datum"), py::arg("which"), py::arg("hilbert") = false);
  m.def("hasse_check", &hasse, py::arg("datum"), py::arg("weight"), py::arg("oracle") = "auto");
  m.def(
      "u3_dim", [](const std::vector<std::int64_t>& l, std::int64_t p) { return u3_dim_json(weight3(l), p).dump(); },
      py::arg("weight"), py::arg("p"));
  m.def("u3_decompose", &u3_decompose, py::arg("weight"), py::arg("p"), py::arg("i") = std::nullopt);
  m.def(
      "czip_scan", [](std::int64_t p, std::int64_t box) { return czip_scan_json(czip_scan(p, box)).dump(); },
      py::arg("p"), py::arg("box"));
  m.def("verify_equivariance", &verify, py::arg("case"), py::arg("p"), py::arg("degree"), py::arg("trials"),
        py::arg("seed"), py::arg("section"));
}
