#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monoap/discrete.hpp"
#include "monoap/enumerator.hpp"
#include "monoap/errors.hpp"
#include "monoap/optimizer.hpp"

namespace py = pybind11;
using namespace monoap;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer wraps them in Fraction.
Point to_point(const std::vector<std::string>& v) {
  Point p;
  for (const auto& s : v) p.push_back(parse_rational(s));
  return p;
}

std::vector<std::string> to_strings(const Point& p) {
  std::vector<std::string> out;
  for (const auto& r : p) out.push_back(r.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<TieError> tie(m, "TieError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const TieError& e) {
      PyErr_SetObject(tie.ptr(), py::make_tuple(e.what(), e.i(), e.j(), e.k()).ptr());
    }
  });

  m.def("evaluate_f", [](const std::vector<std::string>& x) { return evaluate_f(Endpoints(to_point(x))).str(); });

  m.def("certify_point", [](const std::vector<std::string>& x) {
    const Endpoints e(to_point(x));
    PointCertificate pc;
    {
      py::gil_scoped_release release;
      pc = certify_point(e);
    }
    py::dict d;
    d["value"] = pc.value.str();
    d["gradient"] = to_strings(pc.gradient);
    d["critical"] = pc.is_critical;
    d["configuration"] = pc.configuration.serialize();
    return d;
  });

  m.def(
      "enumerate_configurations",
      [](int n, int workers, bool mirror) {
        EnumerationOptions opts;
        opts.workers = workers;
        opts.use_mirror_symmetry = mirror;
        std::vector<std::string> lines;
        {
          py::gil_scoped_release release;
          auto res = enumerate_configurations(n, opts);
          for (const auto& c : res.configs) lines.push_back(c.serialize());
        }
        return lines;
      },
      py::arg("n"), py::arg("workers") = 1, py::arg("mirror") = false);

  m.def(
      "minimize_report",
      [](int n_max, std::optional<std::string> cache_dir, int workers) {
        MinimizeOptions opts;
        opts.workers = workers;
        if (cache_dir) opts.config_cache_dir = *cache_dir;
        std::string text;
        {
          py::gil_scoped_release release;
          text = to_json(global_minimize(n_max, opts)).dump();
        }
        return text;
      },
      py::arg("n_max"), py::arg("cache_dir") = py::none(), py::arg("workers") = 1);

  m.def("count_ap3", &count_ap3);
  m.def("count_offby1", &count_offby1);
  m.def("counts", [](const std::string& coloring) {
    const auto a = count_all(DiscreteColoring::parse(coloring));
    py::dict d;
    d["N"] = a.N;
    d["ap3_total"] = a.ap3_total;
    d["m3"] = a.m3;
    d["offby1_total"] = a.offby1_total;
    d["m3_prime"] = a.m3_prime;
    return d;
  });
  m.def("fraction_mono", [](const std::string& c) { return fraction_mono(DiscreteColoring::parse(c)).str(); });
  m.def("bead_fraction", [](const std::string& c) { return bead_fraction(DiscreteColoring::parse(c)).str(); });
  m.def("discretize",
        [](const std::vector<std::string>& x, std::int64_t N) { return discretize(Endpoints(to_point(x)), N).str(); });
  m.def("circle_mono_fraction", [](const std::string& p) { return circle_mono_fraction(parse_rational(p)).str(); });
  m.def(
      "circle_monte_carlo",
      [](const std::string& arcs_json, std::uint64_t samples, std::uint64_t seed, int workers) {
        auto c = CircleColoring::from_json(nlohmann::json::parse(arcs_json));
        MonteCarloEstimate est;
        {
          py::gil_scoped_release release;
          est = circle_monte_carlo(c, samples, seed, workers);
        }
        py::dict d;
        d["samples"] = est.samples;
        d["hits"] = est.hits;
        d["estimate"] = est.estimate;
        d["standard_error"] = est.standard_error;
        return d;
      },
      py::arg("arcs_json"), py::arg("samples"), py::arg("seed") = 0, py::arg("workers") = 1);
}
