#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chatelet/api.hpp"
#include "chatelet/errors.hpp"

namespace py = pybind11;

namespace {

std::optional<long> opt_long(const py::object& o) {
  if (o.is_none()) return std::nullopt;
  return o.cast<long>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Chow groups of degree-0 zero-cycles on Chatelet surfaces over p-adic fields";

  py::register_exception<chatelet::Error>(m, "ChateletError");

  m.def(
      "classify_json",
      [](const std::string& field, const std::string& d, const std::string& e1,
         const std::string& e2) { return chatelet::api_classify(field, d, e1, e2).dump(); },
      py::arg("field"), py::arg("d"), py::arg("e1"), py::arg("e2"));

  m.def(
      "theta_json",
      [](const std::string& field, const std::string& d, const std::string& e1,
         const std::string& e2,
         const std::string& x) { return chatelet::api_theta(field, d, e1, e2, x).dump(); },
      py::arg("field"), py::arg("d"), py::arg("e1"), py::arg("e2"), py::arg("x"));

  m.def(
      "oracle_json",
      [](const std::string& field, const std::string& d, const std::string& e1,
         const std::string& e2, const py::object& depth) {
        return chatelet::api_oracle(field, d, e1, e2, opt_long(depth)).dump();
      },
      py::arg("field"), py::arg("d"), py::arg("e1"), py::arg("e2"),
      py::arg("depth") = py::none());

  m.def(
      "lemmas_json", [](long qmax) { return chatelet::api_lemmas(qmax).dump(); },
      py::arg("qmax") = 13);

  m.def(
      "restrict_json",
      [](const std::string& field, const std::string& d, const std::string& e1,
         const std::string& e2,
         const std::string& ext) { return chatelet::api_restrict(field, d, e1, e2, ext).dump(); },
      py::arg("field"), py::arg("d"), py::arg("e1"), py::arg("e2"), py::arg("ext"));

  m.def(
      "delpezzo_json",
      [](const std::string& field, const std::string& d, const std::string& a,
         const std::string& c) { return chatelet::api_delpezzo(field, d, a, c).dump(); },
      py::arg("field"), py::arg("d"), py::arg("a"), py::arg("c"));

  m.def(
      "verify_json",
      [](const py::object& matrix_json, long qmax, const py::object& depth) {
        std::optional<std::string> text;
        if (!matrix_json.is_none()) text = matrix_json.cast<std::string>();
        return chatelet::api_verify(text, qmax, opt_long(depth)).dump();
      },
      py::arg("matrix_json") = py::none(), py::arg("qmax") = 49, py::arg("depth") = py::none());

  m.def(
      "hilbert_symbol",
      [](const std::string& field, const std::string& x, const std::string& y) {
        chatelet::LocalField K = chatelet::LocalField::parse(field);
        return chatelet::hilbert_symbol(K.parse_element(x), K.parse_element(y));
      },
      py::arg("field"), py::arg("x"), py::arg("y"));

  m.def(
      "solve_norm_equation",
      [](const std::string& field, const std::string& d, const std::string& c) {
        chatelet::LocalField K = chatelet::LocalField::parse(field);
        auto [a, b] = chatelet::solve_norm_equation(K.parse_element(d), K.parse_element(c));
        return py::make_tuple(a.str(), b.str());
      },
      py::arg("field"), py::arg("d"), py::arg("c"));
}
