/*
   Copyright 2026 The utri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "utri/analysis.hpp"
#include "utri/cli.hpp"
#include "utri/io.hpp"
#include "utri/solver.hpp"

namespace py = pybind11;

namespace {

py::object to_python(const utri::Json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

utri::Json from_python(const py::object& obj) {
  const auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return utri::Json::parse(text);
}

utri::NcPolynomial poly(const std::string& text, std::size_t m, const std::string& field) {
  return utri::parse_polynomial(text, m, utri::Field::parse(field));
}

utri::SolveOptions options(std::uint64_t seed, std::size_t retries, double tol) {
  utri::SolveOptions o;
  o.seed = seed;
  o.retries = retries;
  o.tolerance = tol;
  return o;
}

}  // namespace

PYBIND11_MODULE(_utri, mod) {
  mod.doc() = "Noncommutative polynomials evaluated on upper triangular matrices";

  static py::exception<utri::Error> error(mod, "UtriError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const utri::Error& e) {
      error((std::string(utri::to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  mod.def(
      "order",
      [](const std::string& p, std::size_t m, const std::string& field, std::size_t max_n) {
        return to_python(utri::to_json(utri::order(poly(p, m, field), max_n)));
      },
      py::arg("poly"), py::arg("m") = 0, py::arg("field") = "Q", py::arg("max_n") = 0);

  mod.def(
      "classify",
      [](const std::string& p, std::size_t n, std::size_t m, const std::string& field, std::size_t max_n) {
        return to_python(utri::to_json(utri::classify(poly(p, m, field), n, max_n)));
      },
      py::arg("poly"), py::arg("n"), py::arg("m") = 0, py::arg("field") = "Q", py::arg("max_n") = 0);

  mod.def(
      "evaluate",
      [](const std::string& p, const py::object& matrices, std::size_t m, const std::string& field) {
        const utri::Field f = utri::Field::parse(field);
        const auto mats = utri::matrices_from_json(from_python(matrices), f);
        return to_python(utri::to_json(utri::evaluate<utri::FieldValue>(poly(p, m, field), mats)));
      },
      py::arg("poly"), py::arg("matrices"), py::arg("m") = 0, py::arg("field") = "Q");

  mod.def(
      "generic_evaluate",
      [](const std::string& p, std::size_t n, std::size_t m, const std::string& field) {
        return to_python(utri::to_json(utri::generic_evaluate(poly(p, m, field), n)));
      },
      py::arg("poly"), py::arg("n"), py::arg("m") = 0, py::arg("field") = "Q");

  mod.def(
      "coefficients",
      [](const std::string& p, std::size_t k, std::size_t m, const std::string& field) {
        utri::CoefficientTable table(poly(p, m, field));
        py::dict out;
        for (const auto& [tuple, c] : table.level(k)) out[py::tuple(py::cast(tuple))] = c.to_string();
        return out;
      },
      py::arg("poly"), py::arg("k"), py::arg("m") = 0, py::arg("field") = "Q");

  mod.def(
      "solve",
      [](const std::string& p, const py::object& target, std::size_t m, const std::string& field,
         std::uint64_t seed, std::size_t retries, double tol) {
        const utri::Field f = utri::Field::parse(field);
        const utri::FieldMatrix t = utri::field_matrix_from_json(from_python(target), f);
        return to_python(utri::to_json(utri::solve(poly(p, m, field), t.size(), t, options(seed, retries, tol))));
      },
      py::arg("poly"), py::arg("target"), py::arg("m") = 0, py::arg("field") = "Q", py::arg("seed") = 0,
      py::arg("retries") = 16, py::arg("tol") = 1e-9);

  mod.def(
      "hit_open_set",
      [](const std::string& p, std::size_t n, const std::string& f_text, std::size_t m, const std::string& field,
         std::uint64_t seed) {
        const utri::Field f = utri::Field::parse(field);
        const utri::CPolynomial g = utri::parse_cpolynomial(f_text, f);
        return to_python(utri::to_json(utri::hit_open_set(poly(p, m, field), n, g, options(seed, 16, 1e-9))));
      },
      py::arg("poly"), py::arg("n"), py::arg("f"), py::arg("m") = 0, py::arg("field") = "Q", py::arg("seed") = 0);

  mod.def(
      "verify",
      [](const std::string& p, const py::object& matrices, const py::object& target, std::size_t m,
         const std::string& field, double tol) {
        const utri::Field f = utri::Field::parse(field);
        const auto mats = utri::matrices_from_json(from_python(matrices), f);
        const utri::FieldMatrix t = utri::field_matrix_from_json(from_python(target), f);
        return to_python(utri::to_json(utri::verify(poly(p, m, field), mats, t, std::nullopt, tol)));
      },
      py::arg("poly"), py::arg("matrices"), py::arg("target"), py::arg("m") = 0, py::arg("field") = "Q",
      py::arg("tol") = 1e-9);

  mod.def(
      "sweep_plan",
      [](std::uint32_t r, std::uint32_t n, const std::vector<std::uint32_t>& tuple) {
        return to_python(utri::to_json(utri::build_sweep_plan(r, n, tuple)));
      },
      py::arg("r"), py::arg("n"), py::arg("leading_tuple"));

  mod.def(
      "oracle_enum",
      [](const std::string& p, std::size_t n, std::uint64_t q, std::size_t m) {
        return to_python(utri::to_json(utri::oracle_enum(poly(p, m, "Fp:" + std::to_string(q)), n)));
      },
      py::arg("poly"), py::arg("n"), py::arg("q"), py::arg("m") = 0);

  mod.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        std::vector<std::string> argv{"utri"};
        argv.insert(argv.end(), args.begin(), args.end());
        const int code = utri::run_cli(argv, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
