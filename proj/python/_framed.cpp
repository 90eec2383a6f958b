#include "framed/io.hpp"
#include "framed/orbit.hpp"
#include "framed/selftest.hpp"

#include <pybind11/pybind11.h>

#include <sstream>

namespace py = pybind11;
using namespace framed;

namespace {

std::vector<Vec2Q> parse_points(const std::string& text) {
  std::vector<Vec2Q> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) out.push_back(parse_vec2q(token));
  return out;
}

StructureConstantAlgebra algebra(const std::string& name_or_path) { return load_algebra(name_or_path).algebra; }

TwoAlgebra two_algebra(const std::string& name_or_path) {
  const auto spec = load_algebra(name_or_path);
  return spec.second ? TwoAlgebra{spec.algebra, *spec.second} : diagonal_two_algebra(spec.algebra);
}

}  // namespace

PYBIND11_MODULE(_framed, m) {
  m.doc() = "Exact braid, isogeny, lattice and Hochschild computations (JSON-encoded results)";
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("normal_form", [](const std::string& w) { return to_json(normal_form(parse_braid(w))).dump(); });
  m.def("phi", [](const std::string& w) { return to_json(phi(parse_braid(w))).dump(); });
  m.def("braid_equal", [](const std::string& x, const std::string& y) { return braid_equal(parse_braid(x), parse_braid(y)); });
  m.def("kernel_power", [](const std::string& w) -> py::object {
    const auto k = kernel_power(parse_braid(w));
    return k ? py::object(py::int_(*k)) : py::object(py::none());
  });
  m.def("lift_matrix", [](const std::string& mat) { return to_string(lift_matrix(parse_mat2z(mat))); });

  m.def("lift_word", [](const std::string& w) { return to_json(lift_word(parse_braid(w))).dump(); });
  m.def("eta_zeta", [](const std::string& a, const std::string& b) { return to_json(eta_zeta(parse_mat2z(a), parse_mat2z(b))).dump(); });
  m.def("cover_carry", [](const std::string& a, const std::string& b) { return cover_carry(parse_mat2z(a), parse_mat2z(b)); });
  m.def("cover_mul", [](const std::string& x, const std::string& y) {
    return to_json(cover_mul(parse_rational_cover(x), parse_rational_cover(y))).dump();
  });
  m.def("transpose_cover", [](const std::string& x) { return to_json(transpose_cover(parse_rational_cover(x))).dump(); });

  m.def("enumerate_sublattices", [](std::int64_t n) {
    Json j = Json::array();
    for (const auto& l : enumerate_sublattices(n)) j.push_back(to_json(l));
    return j.dump();
  });
  m.def("subgroup", [](const std::string& points) { return to_json(subgroup_from_generators(parse_points(points))).dump(); });
  m.def("kernel_subgroup", [](const std::string& mat) { return to_json(kernel_subgroup(parse_mat2z(mat))).dump(); });
  m.def("matrix_from_subgroup", [](const std::string& points) {
    return to_json(matrix_from_subgroup(subgroup_from_generators(parse_points(points)))).dump();
  });
  m.def("isogeny_act", [](const std::string& mat, const std::string& points) {
    return to_json(isogeny_act(parse_mat2z(mat), {subgroup_from_generators(parse_points(points))}).subgroup).dump();
  });

  m.def("sd_mul", [](const std::string& g, const std::string& h) { return format(sd_mul(parse_semidirect(g), parse_semidirect(h))); });
  m.def("sd_apply", [](const std::string& g, const std::string& q) {
    const Vec2Q v = parse_vec2q(q);
    return to_json(aff_apply(parse_semidirect(g), TorusPoint(v.x, v.y)).vec()).dump();
  });

  m.def("validate_algebra", [](const std::string& name) {
    const auto a = algebra(name);
    return to_json(validate_algebra(a), a.labels).dump();
  });
  m.def("hh_betti", [](const std::string& name, int n_max, bool normalized) { return to_json(hh_betti(algebra(name), n_max, normalized)).dump(); },
        py::arg("algebra"), py::arg("n_max"), py::arg("normalized") = true);
  m.def("hh0", [](const std::string& name) { return hh0_direct(algebra(name)); });
  m.def(
      "secondary_hh_betti",
      [](const std::string& name, int total_max, const std::string& order) {
        if (order != "mu1" && order != "mu2") throw DomainError("order must be mu1 or mu2");
        const auto o = order == "mu1" ? IterationOrder::FirstMu1 : IterationOrder::FirstMu2;
        return to_json(secondary_hh_betti(two_algebra(name), total_max, o)).dump();
      },
      py::arg("algebra"), py::arg("total_max"), py::arg("order") = "mu1");

  m.def("selftest", [](const std::string& suite, std::uint64_t seed) { return run_selftest(suite, seed).dump(); }, py::arg("suite") = "all",
        py::arg("seed") = 7);
}
