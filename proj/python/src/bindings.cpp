// Python module: every call takes a preset string or a JSON input document and returns JSON text.

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqsub/cli.hpp"
#include "eqsub/error.hpp"
#include "eqsub/input.hpp"
#include "eqsub/kp.hpp"
#include "eqsub/lattice.hpp"
#include "eqsub/report.hpp"

namespace py = pybind11;
using namespace eqsub;

namespace {

act::PointedActionData load(const std::string& source) {
  auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') {
    io::json doc;
    try {
      doc = io::json::parse(source);
    } catch (const io::json::exception& e) {
      throw Error(Errc::Parse, e.what());
    }
    return io::action_data_from_json(doc);
  }
  return io::parse_preset(source);
}

/// Valid data, normalized for the bismash construction.
act::PointedActionData load_valid(const std::string& source) {
  auto d = load(source);
  auto r = act::validate_action_data(d);
  if (!r.valid()) throw Error(Errc::NotValid, r.str());
  return act::normalize(d);
}

kp::Mode mode(const std::string& s) {
  if (s == "as-stated") return kp::Mode::AsStated;
  if (s == "main-theorem") return kp::Mode::MainTheorem;
  throw Error(Errc::Parse, "mode must be as-stated or main-theorem");
}

kp::ZetaReading reading(const std::string& s) {
  if (s == "exact-order") return kp::ZetaReading::ExactOrder;
  if (s == "mth-root") return kp::ZetaReading::MthRoot;
  throw Error(Errc::Parse, "zeta_reading must be exact-order or mth-root");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fusion subcategories of equivariantized pointed categories";
  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.attr("DEFAULT_SEED") = oracle::kDefaultSeed;

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"eqsub"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool; returns (exit code, stdout, stderr).");

  m.def(
      "validate",
      [](const std::string& source) {
        auto d = load(source);
        return io::validation_json(act::validate_action_data(d), d).dump();
      },
      py::arg("source"));

  m.def(
      "lattice", [](const std::string& source) { return lat::render(lat::build_lattice(load_valid(source)), lat::Format::Json); },
      py::arg("source"));

  m.def(
      "hopf",
      [](const std::string& source) {
        auto h = hopf::build_bismash(load_valid(source));
        return io::hopf_report_json(h, hopf::verify_hopf_axioms(h)).dump();
      },
      py::arg("source"));

  m.def(
      "oracle",
      [](const std::string& source, std::uint64_t seed) {
        auto ring = oracle::fusion_ring(hopf::build_bismash(load_valid(source)), seed);
        return io::oracle_json(ring, oracle::enumerate_based_subrings(ring)).dump();
      },
      py::arg("source"), py::arg("seed") = oracle::kDefaultSeed);

  m.def(
      "compare",
      [](const std::string& source, std::uint64_t seed) {
        auto d = load_valid(source);
        auto ring = oracle::fusion_ring(hopf::build_bismash(d), seed);
        return io::comparison_json(oracle::compare(oracle::enumerate_based_subrings(ring), lat::build_lattice(d))).dump();
      },
      py::arg("source"), py::arg("seed") = oracle::kDefaultSeed);

  m.def(
      "kp_classify",
      [](int n, const std::string& q, const std::string& m, const std::string& z) {
        return kp::kp_classify(n, exact::RatAngle::parse(q), mode(m), reading(z)).json().dump();
      },
      py::arg("n"), py::arg("q"), py::arg("mode") = "main-theorem", py::arg("zeta_reading") = "exact-order");

  m.def(
      "kp_compare",
      [](int n, const std::string& q, const std::string& z, std::uint64_t seed) {
        return kp::compare_kp_vs_general(n, exact::RatAngle::parse(q), reading(z), seed).json().dump();
      },
      py::arg("n"), py::arg("q"), py::arg("zeta_reading") = "exact-order", py::arg("seed") = oracle::kDefaultSeed);

  m.def("presets", &io::preset_catalog);
}
