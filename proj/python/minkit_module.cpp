#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minkit/ellipsoid.hpp"
#include "minkit/json_io.hpp"
#include "minkit/ortho.hpp"
#include "minkit/reflect.hpp"
#include "minkit/spectral.hpp"
#include "minkit/symmetry.hpp"

namespace py = pybind11;
using namespace mink;

namespace {

// report structs cross the boundary as plain dicts via the JSON layer
py::object to_py(const json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_minkit, m) {
  m.doc() = "norm derivatives, generalized adjoints, normal forms, left "
            "reflections, ellipsoids, and symmetry groups of Minkowski spaces";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);

  py::class_<NormModel>(m, "NormModel")
      .def_static("lp", &NormModel::lp, py::arg("p"), py::arg("dim"))
      .def_static("quadratic", &NormModel::quadratic, py::arg("G"))
      .def_static("polytopal", &NormModel::polytopal, py::arg("vertices"))
      .def("norm", &NormModel::norm)
      .def("dual_norm", &NormModel::dual_norm)
      .def("dim", &NormModel::dim)
      .def("unit_sphere_samples", &NormModel::unit_sphere_samples, py::arg("m"),
           py::arg("seed") = 0)
      .def("classify",
           [](const NormModel& m) {
             auto c = m.classify();
             return py::make_tuple(c.smooth, c.strictly_convex);
           })
      .def("to_dict", [](const NormModel& m) { return to_py(to_json(m)); });

  py::class_<SipContext>(m, "SipContext")
      .def(py::init<NormModel, double, double>(), py::arg("model"),
           py::arg("fd_step") = 1e-5, py::arg("tol") = 1e-10)
      .def_readonly("model", &SipContext::model);

  m.def("rho_plus", &rho_plus);
  m.def("rho_minus", &rho_minus);
  m.def("sip", &sip);
  m.def("duality_map", &duality_map);
  m.def("riesz_representer", &riesz_representer);

  m.def("gen_adjoint_apply", &gen_adjoint_apply);

  auto opt_of = [](int samples, double tol, std::uint64_t seed) {
    SampleOptions o;
    o.samples = samples;
    o.tol = tol;
    o.seed = seed;
    return o;
  };
  auto bind_predicate = [&](const char* name,
                            PredicateReport (*fn)(const SipContext&, const Mat&,
                                                  const SampleOptions&)) {
    m.def(name,
          [fn, opt_of](const SipContext& ctx, const Mat& A, int samples, double tol,
                       std::uint64_t seed) {
            return to_py(to_json(fn(ctx, A, opt_of(samples, tol, seed))));
          },
          py::arg("ctx"), py::arg("A"), py::arg("samples") = 500, py::arg("tol") = 1e-6,
          py::arg("seed") = 0);
  };
  bind_predicate("is_self_adjoint", &is_self_adjoint);
  bind_predicate("is_adjoint_abelian", &is_adjoint_abelian);
  bind_predicate("is_isometry", &is_isometry);
  bind_predicate("iso_abelian_check", &iso_abelian_check);

  m.def("lp_sign_function", &lp_sign_function, py::arg("p"), py::arg("tan_phi"),
        py::arg("branch"));
  m.def("lp_rotation_scan",
        [](const std::vector<double>& ps, const std::vector<double>& ts) {
          return to_py(to_json(lp_rotation_scan(ps, ts)));
        });

  m.def("real_block_decomposition",
        [](const Mat& A, double tol) { return to_py(to_json(real_block_decomposition(A, tol))); },
        py::arg("A"), py::arg("tol") = 1e-9);
  m.def("isometry_normal_form",
        [](const SipContext& ctx, const Mat& U, double tol) {
          return to_py(to_json(isometry_normal_form(ctx, U, tol)));
        },
        py::arg("ctx"), py::arg("U"), py::arg("tol") = 1e-8);
  m.def("adjoint_abelian_normal_form",
        [](const SipContext& ctx, const Mat& A, double tol) {
          return to_py(to_json(adjoint_abelian_normal_form(ctx, A, tol)));
        },
        py::arg("ctx"), py::arg("A"), py::arg("tol") = 1e-8);

  m.def("birkhoff",
        [](const NormModel& model, const Vec& x, const Vec& y, double tol) {
          auto r = birkhoff(model, x, y, tol);
          return py::make_tuple(r.orthogonal, r.minimizer_t, r.margin);
        },
        py::arg("model"), py::arg("x"), py::arg("y"), py::arg("tol") = 1e-9);
  m.def("birkhoff_direction", &birkhoff_direction, py::arg("model2d"), py::arg("g"),
        py::arg("tol") = 1e-12);
  m.def("james", &james, py::arg("model"), py::arg("x"), py::arg("y"), py::arg("tol") = 1e-9);

  m.def("left_reflection",
        [](const NormModel& model2d, const Vec& point, const Vec& direction, double tol) {
          auto psi = left_reflection(model2d, LineSpec::line(point, direction), tol);
          return py::make_tuple(psi.L, psi.t);
        },
        py::arg("model2d"), py::arg("point"), py::arg("direction"), py::arg("tol") = 1e-9);
  m.def("classify_composition",
        [](const NormModel& model, const Mat& L, const Vec& t, double tol) {
          return to_string(classify_composition(model, AffineMap{L, t}, tol));
        },
        py::arg("model"), py::arg("L"), py::arg("t"), py::arg("tol") = 1e-7);
  m.def("euclidean_battery",
        [](const NormModel& model2d, int trials, double tol) {
          return to_py(to_json(euclidean_battery(model2d, trials, tol)));
        },
        py::arg("model2d"), py::arg("trials") = 24, py::arg("tol") = 1e-7);
  m.def("birkhoff_preservation_probe",
        [](const NormModel& model2d, int trials, double tol) {
          return to_py(to_json(birkhoff_preservation_probe(model2d, trials, tol)));
        },
        py::arg("model2d"), py::arg("trials") = 50, py::arg("tol") = 1e-7);

  py::class_<Ellipsoid>(m, "Ellipsoid")
      .def_readonly("center", &Ellipsoid::center)
      .def_readonly("S", &Ellipsoid::S)
      .def("gauge", &Ellipsoid::gauge);
  m.def("lowner", &lowner, py::arg("points"), py::arg("eps") = 1e-6);
  m.def("john", &john, py::arg("model"), py::arg("eps") = 1e-6);
  m.def("contact_points", &contact_points, py::arg("model"), py::arg("E"),
        py::arg("tol") = 1e-4, py::arg("samples") = 4096);
  m.def("remark_body_samples", &remark_body_samples, py::arg("n"), py::arg("eps"),
        py::arg("m"));
  m.def("polar_polytope_vertices", &polar_polytope_vertices, py::arg("V"),
        py::arg("tol") = 1e-9);

  m.def("polytopal_isometry_group",
        [](const std::vector<Vec>& V, double tol) {
          return to_py(to_json(polytopal_isometry_group(V, tol)));
        },
        py::arg("V"), py::arg("tol") = 1e-9);
  m.def("group_report",
        [](const NormModel& model, double tol) { return to_py(to_json(group_report(model, tol))); },
        py::arg("model"), py::arg("tol") = 1e-9);
  m.def("orbit_probe",
        [](const NormModel& model, const Vec& x, double tol) {
          auto g = polytopal_isometry_group(model.vertices(), tol);
          return orbit_probe(model, x, g);
        },
        py::arg("model"), py::arg("x"), py::arg("tol") = 1e-9);
}
