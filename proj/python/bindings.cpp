#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hcat/appendix.hpp"
#include "hcat/catenoid.hpp"
#include "hcat/cli.hpp"
#include "hcat/disjointness.hpp"
#include "hcat/errors.hpp"
#include "hcat/geometry.hpp"
#include "hcat/mesh.hpp"
#include "hcat/report.hpp"
#include "hcat/strips.hpp"

namespace py = pybind11;
using namespace hcat;

namespace {

Tolerances make_tol(double quad_tol, double root_tol) {
    Tolerances tol;
    tol.quad_abs = quad_tol;
    tol.root = root_tol;
    return tol;
}

HypPoint point(std::pair<double, double> p) { return {p.first, p.second}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rotational constant-mean-curvature catenoids in H^2 x R";
    m.attr("__version__") = kToolVersion;

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<CertificationFailure>(m, "CertificationFailure", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<CmcParams>(m, "CmcParams")
        .def(py::init<double, double>(), py::arg("H"), py::arg("d"))
        .def_property_readonly("H", &CmcParams::H)
        .def_property_readonly("d", &CmcParams::d)
        .def_property_readonly("necksize", &CmcParams::neck)
        .def_property_readonly("alpha", &CmcParams::alpha)
        .def_property_readonly("beta", &CmcParams::beta)
        .def_property_readonly("is_entire_graph", &CmcParams::is_entire_graph)
        .def("__repr__", [](const CmcParams& p) {
            std::ostringstream s;
            s.precision(17);
            s << "CmcParams(H=" << p.H() << ", d=" << p.d() << ")";
            return s.str();
        });

    // hyperbolic plane
    m.def("hyp_distance", [](std::pair<double, double> p, std::pair<double, double> q) {
        return hyp_distance(point(p), point(q));
    }, py::arg("p"), py::arg("q"), "Distance between polar points (rho, theta).");
    m.def("translate_along_geodesic", [](std::pair<double, double> p, double s) {
        const HypPoint r = translate_along_geodesic(point(p), s);
        return std::make_pair(r.rho(), r.theta());
    }, py::arg("p"), py::arg("s"));
    m.def("classify_circle_intersection",
          [](std::pair<double, double> c1, double r1, std::pair<double, double> c2, double r2, double tol) {
              return std::string(to_string(
                  classify_circle_intersection(HypCircle(point(c1), r1), HypCircle(point(c2), r2), tol)));
          },
          py::arg("center1"), py::arg("radius1"), py::arg("center2"), py::arg("radius2"),
          py::arg("tol") = kTangencyTolerance);

    // generating curve
    m.def("necksize", [](double H, double d) { return necksize(CmcParams(H, d)); }, py::arg("H"), py::arg("d"));
    m.def("integrand", [](double H, double d, double r) { return integrand(CmcParams(H, d), r); },
          py::arg("H"), py::arg("d"), py::arg("r"));
    m.def("lambda_", [](double H, double d, double rho, double quad_tol) {
        return lambda(CmcParams(H, d), rho, make_tol(quad_tol, 1e-10));
    }, py::arg("H"), py::arg("d"), py::arg("rho"), py::arg("quad_tol") = 1e-10);
    m.def("f_closed", [](double H, double d, double rho) { return f_closed(CmcParams(H, d), rho); },
          py::arg("H"), py::arg("d"), py::arg("rho"));
    m.def("g_residual", [](double H, double d, double rho) { return g_residual(CmcParams(H, d), rho); },
          py::arg("H"), py::arg("d"), py::arg("rho"));
    m.def("j_remainder", [](double H, double d, double rho, double quad_tol) {
        return j_remainder(CmcParams(H, d), rho, make_tol(quad_tol, 1e-10));
    }, py::arg("H"), py::arg("d"), py::arg("rho"), py::arg("quad_tol") = 1e-10);
    m.def("j_bound_witness", [](double H, double d) {
        const JBoundWitness w = j_bound_witness(CmcParams(H, d));
        py::dict out;
        out["alpha"] = w.alpha;
        out["beta"] = w.beta;
        out["omega"] = w.omega;
        out["bound"] = w.bound;
        return out;
    }, py::arg("H"), py::arg("d"));
    m.def("b_inverse", [](double H, double d, double t, double quad_tol, double root_tol) {
        return b_inverse(CmcParams(H, d), t, make_tol(quad_tol, root_tol));
    }, py::arg("H"), py::arg("d"), py::arg("t"), py::arg("quad_tol") = 1e-10, py::arg("root_tol") = 1e-10);
    m.def("profile", [](double H, double d, double rho_max, int n) {
        const ProfileCurve prof = profile(CmcParams(H, d), rho_max, n);
        py::array_t<double> rho(static_cast<py::ssize_t>(prof.size()));
        py::array_t<double> t(static_cast<py::ssize_t>(prof.size()));
        auto r = rho.mutable_unchecked<1>();
        auto h = t.mutable_unchecked<1>();
        for (std::size_t i = 0; i < prof.size(); ++i) {
            r(static_cast<py::ssize_t>(i)) = prof.samples()[i].rho;
            h(static_cast<py::ssize_t>(i)) = prof.samples()[i].t;
        }
        return py::make_tuple(rho, t);
    }, py::arg("H"), py::arg("d"), py::arg("rho_max"), py::arg("n"),
       "Samples (rho, t) of the generating curve from the neck to rho_max.");

    // disjointness
    m.def("d0_equation_lhs", &d0_equation_lhs, py::arg("H"), py::arg("d1"), py::arg("d0"));
    m.def("solve_d0", &solve_d0, py::arg("H"), py::arg("d1"));
    m.def("gap", [](double H, double d1, double d2, double t) { return gap(H, d1, d2, t); },
          py::arg("H"), py::arg("d1"), py::arg("d2"), py::arg("t"));
    m.def("separation_lower_bound", &separation_lower_bound, py::arg("H"), py::arg("d1"), py::arg("d2"));
    m.def("_certify_json", [](double H, double d1, double d2, double t_max, double grid_step, bool threshold) {
        CertifyOptions opts;
        opts.grid_step = grid_step;
        opts.d2_is_threshold = threshold;
        py::gil_scoped_release release;
        return dump(to_json(certify(H, d1, d2, t_max, opts)));
    }, py::arg("H"), py::arg("d1"), py::arg("d2"), py::arg("t_max"), py::arg("grid_step") = 0.05,
       py::arg("d2_is_threshold") = false);

    m.def("_strips_json", [](const std::string& cert_json, double t_max, double step, int d_points) {
        const DisjointnessCertificate cert = certificate_from_json(Json::parse(cert_json));
        py::gil_scoped_release release;
        const StripOffsets offsets = compute_offsets(cert);
        const auto t_grid = symmetric_grid(t_max, step);
        Json j;
        j["offsets"] = to_json(offsets);
        j["strip_claim"] = to_json(verify_strip_claim(cert, offsets, t_grid));
        j["c3_lemma"] = to_json(verify_c3_lemma(cert, t_grid));
        j["remark"] = to_json(remark_sweep(cert, offsets, interior_log_grid(cert.d1, cert.d2, d_points), t_grid));
        return dump(j);
    }, py::arg("certificate_json"), py::arg("t_max") = 50.0, py::arg("step") = 0.1, py::arg("d_points") = 20);

    m.def("_appendix_json", [](double H, double d) { return dump(to_json(verify_appendix_case(H, d))); },
          py::arg("H"), py::arg("d"));

    // meshes
    m.def("revolve", [](double H, double d, double rho_max, int n, std::size_t m_steps,
                        const std::string& mode, bool doubled) {
        RevolveOptions opts;
        opts.angular_steps = m_steps;
        opts.embedding = parse_embedding(mode);
        opts.doubled = doubled;
        const SurfaceMesh mesh = revolve(profile(CmcParams(H, d), rho_max, n), opts);
        py::array_t<double> verts({static_cast<py::ssize_t>(mesh.vertices.size()), py::ssize_t{3}});
        py::array_t<std::int64_t> faces({static_cast<py::ssize_t>(mesh.quads.size()), py::ssize_t{4}});
        auto v = verts.mutable_unchecked<2>();
        auto f = faces.mutable_unchecked<2>();
        for (py::ssize_t i = 0; i < v.shape(0); ++i) {
            const Vec3& p = mesh.vertices[static_cast<std::size_t>(i)];
            v(i, 0) = p.x;
            v(i, 1) = p.y;
            v(i, 2) = p.z;
        }
        for (py::ssize_t i = 0; i < f.shape(0); ++i) {
            for (py::ssize_t k = 0; k < 4; ++k) {
                f(i, k) = static_cast<std::int64_t>(mesh.quads[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
            }
        }
        return py::make_tuple(verts, faces);
    }, py::arg("H"), py::arg("d"), py::arg("rho_max"), py::arg("n"), py::arg("m"),
       py::arg("mode") = "poincare", py::arg("doubled") = true);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
