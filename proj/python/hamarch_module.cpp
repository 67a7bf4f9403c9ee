#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamarch/cubic.hpp"
#include "hamarch/extrapolate.hpp"
#include "hamarch/kpz.hpp"
#include "hamarch/transfer.hpp"
#include "hamarch/updown.hpp"

namespace py = pybind11;
using namespace hamarch;

namespace {

// Exact integers cross the boundary as python ints (via decimal strings).
py::int_ to_py(const BigInt& v) {
  PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

EnsembleSpec spec_of(const std::string& name, bool cubic) {
  return spec_for({tag_from_name(name), !cubic});
}

CountSequence make_sequence(const std::string& ensemble, bool cubic, int start_n,
                            const std::vector<std::string>& counts) {
  CountSequence seq;
  seq.ensemble = {tag_from_name(ensemble), !cubic};
  seq.method = CountMethod::External;
  seq.tool_version = HAMARCH_VERSION;
  for (std::size_t i = 0; i < counts.size(); ++i)
    seq.entries.emplace_back(start_n + int(i), BigInt(counts[i]));
  seq.validate();
  return seq;
}

}  // namespace

PYBIND11_MODULE(hamarch, m) {
  m.doc() = "Exact enumeration and KPZ exponent analysis for Hamiltonian paths "
            "on planar (bi)cubic maps";
  m.attr("__version__") = HAMARCH_VERSION;

  m.def("catalan", [](int n) { return to_py(catalan(n)); }, py::arg("n"));

  m.def(
      "count_one_sided",
      [](const std::vector<int>& colors) {
        ColorSeq seq;
        for (int c : colors) seq.push_back(c ? Color::Black : Color::White);
        return to_py(count_one_sided(seq));
      },
      py::arg("colors"), "Number of one-sided noncrossing bicolored matchings (0/1 word).");

  m.def(
      "enumerate",
      [](const std::string& ensemble, int n, bool cubic, const std::string& method,
         int threads) {
        EnsembleSpec spec = spec_of(ensemble, cubic);
        UdOptions opts;
        opts.threads = threads;
        if (method == "transfer") return to_py(tm_enumerate(spec, n));
        if (method == "updown") return to_py(ud_enumerate(spec, n, opts));
        BigInt ud = ud_enumerate(spec, n, opts);
        if (spec.id.colored && spec.id.tag != EnsembleTag::V && spec.id.tag != EnsembleTag::U) {
          BigInt tm = tm_enumerate(spec, n);
          if (tm != ud) throw Error("engine mismatch at N=" + std::to_string(n));
        }
        return to_py(ud);
      },
      py::arg("ensemble"), py::arg("n"), py::arg("cubic") = false,
      py::arg("method") = "both", py::arg("threads") = 0,
      "Exact configuration count for one ensemble at size N.");

  m.def(
      "cubic_closed_form",
      [](const std::string& ensemble, int n) {
        return to_py(cubic_closed_form({tag_from_name(ensemble), false}, n));
      },
      py::arg("ensemble"), py::arg("n"));

  m.def("cubic_binomial_sum", [](int n) { return to_py(cubic_binomial_sum(n)); }, py::arg("n"));

  m.def(
      "estimate",
      [](const std::string& ensemble, int start_n, const std::vector<std::string>& counts,
         const std::string& quantity, int k_max, unsigned precision) {
        RealPrecisionGuard guard(precision);
        CountSequence seq = make_sequence(ensemble, false, start_n, counts);
        Quantity q = quantity == "mu2" ? Quantity::GrowthRateSquared : Quantity::Exponent;
        Estimate est = estimate(seq, q, k_max);
        py::dict out;
        out["value"] = std::stod(est.value.str(17));
        out["uncertainty"] = std::stod(est.uncertainty.str(8));
        out["stable_digits"] = est.stable_digits;
        out["value_str"] = est.value.str(std::streamsize(precision));
        return out;
      },
      py::arg("ensemble"), py::arg("start_n"), py::arg("counts"), py::arg("quantity") = "mu2",
      py::arg("k_max") = 7, py::arg("precision") = 64,
      "Accelerated limit estimate from a list of exact counts (decimal strings).");

  m.def(
      "predicted_betas",
      [](double alpha) {
        BetaPredictions b = predicted_betas(Real(0), Real(alpha));
        py::dict out;
        auto d = [](const Real& v) { return std::stod(v.str(17)); };
        out["beta_z"] = d(b.beta_z);
        out["beta_y"] = d(b.beta_y);
        out["beta_x"] = d(b.beta_x);
        out["beta_w"] = d(b.beta_w);
        out["beta_v"] = d(b.beta_v);
        out["beta_u"] = d(b.beta_u);
        out["gamma"] = d(b.gamma);
        return out;
      },
      py::arg("alpha") = 1.0, "The six exponent predictions at c = -1 for a given alpha.");

  m.def(
      "sle_duality",
      [](double n) {
        SleDuality s = sle_and_duality(Real(n));
        py::dict out;
        auto d = [](const Real& v) { return std::stod(v.str(17)); };
        out["kappa"] = d(s.kappa);
        out["g_tilde"] = d(s.g_tilde);
        out["g_prime"] = d(s.g_prime);
        out["n_prime"] = d(s.n_prime);
        out["alpha_ansatz"] = d(s.alpha_ansatz);
        out["gammaL_bicubic"] = d(s.gammaL_bicubic);
        return out;
      },
      py::arg("n"));

  m.def(
      "watermelon_delta",
      [](int l, double alpha) { return std::stod(watermelon_delta(l, Real(alpha)).str(17)); },
      py::arg("l"), py::arg("alpha") = 1.125);

  m.def(
      "gamma_string", [](double c) { return std::stod(gamma_string(Real(c)).str(17)); },
      py::arg("c"));
  m.def(
      "delta_dressed",
      [](double h, double c) { return std::stod(delta_dressed(Real(h), Real(c)).str(17)); },
      py::arg("h"), py::arg("c"));
}
