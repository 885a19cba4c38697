// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the main operations: spin algebra, Hamiltonian and
// Liouvillian assembly, propagation, spectra and exchange extraction.
// Matrices cross the boundary as numpy arrays via Eigen.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "optospin/commands.hpp"
#include "optospin/config.hpp"
#include "optospin/dynamics.hpp"
#include "optospin/exchange.hpp"
#include "optospin/expm.hpp"
#include "optospin/hamiltonian.hpp"
#include "optospin/lindblad.hpp"
#include "optospin/spectra.hpp"
#include "optospin/spin_system.hpp"

namespace py = pybind11;
using namespace optospin;

namespace {

Manifold manifold_from_string(const std::string& s) {
  if (s == "S0") return Manifold::S0;
  if (s == "S1") return Manifold::S1;
  if (s == "T1") return Manifold::T1;
  throw std::invalid_argument("manifold must be S0, S1 or T1");
}

Slot slot_from_string(const std::string& s) {
  if (s == "radical1") return Slot::Radical1;
  if (s == "radical2") return Slot::Radical2;
  if (s == "coupler") return Slot::Coupler;
  throw std::invalid_argument("slot must be radical1, radical2 or coupler");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "optically driven radical-pair / triplet-coupler spin dynamics";
  m.attr("__version__") = kVersion;
  m.attr("HILBERT_DIM") = CompositeBasis::kDim;

  py::register_exception<NumericalError>(m, "NumericalError");
  py::register_exception<ConfigError>(m, "ConfigError");

  // ---- units
  py::module_ units_mod = m.def_submodule("units", "energy-unit conversions (internal: rad/ns)");
  units_mod.attr("KELVIN_TO_RAD_PER_NS") = units::kKelvinToRadPerNs;
  units_mod.attr("MILLITESLA_TO_RAD_PER_NS") = units::kMilliTeslaToRadPerNs;
  units_mod.attr("MEGAHERTZ_TO_RAD_PER_NS") = units::kMegaHertzToRadPerNs;
  units_mod.attr("MU_B_OVER_HBAR_RAD_PER_NS_PER_MT") = units::kMuBOverHbarRadPerNsPerMT;
  units_mod.def("to_internal", [](double value, const std::string& unit) {
    return units::Energy{value, units::parse_unit(unit)}.internal();
  }, py::arg("value"), py::arg("unit"));

  // ---- spin core
  py::class_<SpinOps>(m, "SpinOps")
      .def_readonly("s", &SpinOps::s)
      .def_readonly("x", &SpinOps::x)
      .def_readonly("y", &SpinOps::y)
      .def_readonly("z", &SpinOps::z)
      .def("plus", &SpinOps::plus)
      .def("minus", &SpinOps::minus);
  m.def("spin_matrices", &spin_matrices, py::arg("s"));
  m.def("gell_mann_matrices", [] {
    return std::vector<Matrix>(gell_mann_matrices().begin(), gell_mann_matrices().end());
  });
  m.def("embed", [](const Matrix& op, const std::string& slot, const std::vector<std::string>& manifolds) {
    std::vector<Manifold> ms;
    for (const auto& s : manifolds) ms.push_back(manifold_from_string(s));
    return embed(op, slot_from_string(slot), ms);
  }, py::arg("op"), py::arg("slot"), py::arg("manifolds"));
  m.def("total_spin_ops", [] {
    const TotalSpinOps& t = total_spin_ops();
    return py::make_tuple(t.x, t.y, t.z);
  });

  py::class_<CoupledState>(m, "CoupledState")
      .def_readonly("s_total", &CoupledState::s_total)
      .def_readonly("sz_total", &CoupledState::sz_total)
      .def_readonly("intermediate", &CoupledState::intermediate)
      .def_readonly("amplitudes", &CoupledState::amplitudes)
      .def("label", &CoupledState::label);
  m.def("coupled_states", [](const std::string& manifold) {
    return coupled_states(manifold_from_string(manifold));
  }, py::arg("manifold"));
  m.def("basis_index", [](const std::string& manifold, int r1_twice_m, int r2_twice_m, int coupler_twice_m) {
    return CompositeBasis::instance().index_of(manifold_from_string(manifold), r1_twice_m, r2_twice_m,
                                               coupler_twice_m);
  }, py::arg("manifold"), py::arg("r1_twice_m"), py::arg("r2_twice_m"), py::arg("coupler_twice_m") = 0);
  m.def("clebsch_gordan", &clebsch_gordan);

  // ---- parameters
  py::class_<Orientation>(m, "Orientation")
      .def(py::init<>())
      .def(py::init([](double theta, double phi) { return Orientation{theta, phi}; }),
           py::arg("theta"), py::arg("phi"))
      .def_readwrite("theta", &Orientation::theta)
      .def_readwrite("phi", &Orientation::phi);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init<>())
      .def_readwrite("j0", &ModelParams::j0)
      .def_readwrite("j1", &ModelParams::j1)
      .def_readwrite("j2", &ModelParams::j2)
      .def_readwrite("j3", &ModelParams::j3)
      .def_readwrite("zfs_d", &ModelParams::zfs_d)
      .def_readwrite("zfs_e", &ModelParams::zfs_e)
      .def_readwrite("g_radical", &ModelParams::g_radical)
      .def_readwrite("g_coupler", &ModelParams::g_coupler)
      .def_readwrite("b_field_mT", &ModelParams::b_field_mT)
      .def_readwrite("drive", &ModelParams::drive)
      .def_readwrite("pulse_on", &ModelParams::pulse_on)
      .def_readwrite("pulse_off", &ModelParams::pulse_off);

  py::class_<RateParams>(m, "RateParams")
      .def(py::init<>())
      .def_readwrite("gamma_radical", &RateParams::gamma_radical)
      .def_readwrite("gamma_triplet", &RateParams::gamma_triplet)
      .def_readwrite("k_st", &RateParams::k_st)
      .def_readwrite("k_tg", &RateParams::k_tg)
      .def_readwrite("k_eg", &RateParams::k_eg);

  // ---- hamiltonian / lindblad
  m.def("h_ground", &h_ground, py::arg("params"), py::arg("orient"));
  m.def("h_triplet", &h_triplet, py::arg("params"), py::arg("orient"));
  m.def("h_total", &h_total, py::arg("params"), py::arg("orient"), py::arg("t"));

  py::class_<Liouvillian>(m, "Liouvillian")
      .def_readonly("matrix", &Liouvillian::matrix)
      .def_readonly("time", &Liouvillian::time)
      .def_readonly("drive_on", &Liouvillian::drive_on);
  m.def("build_liouvillian", &build_liouvillian, py::arg("params"), py::arg("rates"),
        py::arg("orient"), py::arg("t"));
  m.def("vectorize", &vectorize);
  m.def("devectorize", &devectorize);
  m.def("expm", &expm);

  // ---- dynamics
  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("states", &Trajectory::states);
  m.def("propagate", &propagate, py::arg("params"), py::arg("rates"), py::arg("orient"),
        py::arg("rho0"), py::arg("times"));
  m.def("evolve_to", &evolve_to, py::arg("params"), py::arg("rates"), py::arg("orient"),
        py::arg("rho0"), py::arg("t0"), py::arg("t1"));
  m.def("reduce_to_radicals", &reduce_to_radicals);
  m.def("initial_state_mixed_s0", &initial_state_mixed_s0);
  m.def("initial_state_thermal_s0", &initial_state_thermal_s0);
  m.def("coherence_trace", &coherence_trace, py::arg("traj"), py::arg("bra"), py::arg("ket"));
  m.def("population_trace", &population_trace, py::arg("traj"), py::arg("basis_index"));
  m.def("parse_t1_label", &parse_t1_label);
  m.def("tomography_snapshot", [](const Trajectory& traj, double t) {
    const Tomography tomo = tomography_snapshot(traj, t);
    return py::make_tuple(tomo.time, Matrix(tomo.rdm), Eigen::MatrixXd(tomo.magnitudes));
  }, py::arg("traj"), py::arg("t"));

  // ---- spectra
  py::class_<SpectrumGrid>(m, "SpectrumGrid")
      .def(py::init<>())
      .def_readwrite("omegas", &SpectrumGrid::omegas)
      .def_readwrite("b_field_mT", &SpectrumGrid::b_field_mT)
      .def_readwrite("time", &SpectrumGrid::time)
      .def_static("linspace", &SpectrumGrid::linspace);
  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("intensities", &Spectrum::intensities)
      .def_property_readonly("omegas", [](const Spectrum& s) { return s.grid.omegas; })
      .def_readonly("orientation_ms", &Spectrum::orientation_ms);
  py::class_<PowderOptions>(m, "PowderOptions")
      .def(py::init<>())
      .def_readwrite("n_theta", &PowderOptions::n_theta)
      .def_readwrite("n_phi", &PowderOptions::n_phi)
      .def_readwrite("sin_theta_weight", &PowderOptions::sin_theta_weight)
      .def_readwrite("workers", &PowderOptions::workers);

  m.def("mw_operator", &mw_operator, py::arg("orient"));
  m.def("resolvent_apply", &resolvent_apply, py::arg("liouvillian"), py::arg("omega"), py::arg("x"));
  m.def("spectrum_single", &spectrum_single, py::arg("rho_t"), py::arg("params"), py::arg("rates"),
        py::arg("orient"), py::arg("grid"));
  m.def("powder_average", &powder_average, py::arg("params"), py::arg("rates"), py::arg("rho0"),
        py::arg("grid"), py::arg("options"), py::call_guard<py::gil_scoped_release>());
  m.def("spectrum_scan_j1", &spectrum_scan_j1, py::arg("j1_values_radns"), py::arg("params"),
        py::arg("rates"), py::arg("rho0"), py::arg("grid"), py::arg("options"), py::arg("tie_j2") = true,
        py::call_guard<py::gil_scoped_release>());

  // ---- exchange
  py::class_<units::Energy>(m, "Energy")
      .def(py::init([](double value, const std::string& unit) {
        return units::Energy{value, units::parse_unit(unit)};
      }), py::arg("value"), py::arg("unit"))
      .def_readonly("value", &units::Energy::value)
      .def_property_readonly("unit", [](const units::Energy& e) { return units::unit_name(e.unit); })
      .def("internal", &units::Energy::internal)
      .def("in_unit", [](const units::Energy& e, const std::string& unit) {
        return e.in(units::parse_unit(unit));
      });

  py::class_<TaggedJ>(m, "TaggedJ")
      .def_readonly("value", &TaggedJ::value)
      .def_property_readonly("sign", [](const TaggedJ& j) { return coupling_name(j.sign); });
  py::class_<ExchangeResult>(m, "ExchangeResult")
      .def_property_readonly("j0", [](const ExchangeResult& r) {
        return r.j0 ? py::cast(*r.j0) : py::object(py::none());
      })
      .def_readonly("j1", &ExchangeResult::j1)
      .def_readonly("j2", &ExchangeResult::j2)
      .def_readonly("j3", &ExchangeResult::j3);

  m.def("j0_from_energies", &j0_from_energies, py::arg("e_triplet"), py::arg("e_bs"));
  m.def("j123_from_energies", [](const std::map<std::string, units::Energy>& entries) {
    EnergyTable t;
    for (const auto& [label, e] : entries) t.entries[parse_spin_config(label)] = e;
    return j123_from_energies(t);
  }, py::arg("entries"));
  m.def("j_symmetric", &j_symmetric, py::arg("ea"), py::arg("eb"), py::arg("ec"));
  m.def("parse_energy_tables_file", &parse_energy_tables_file, py::arg("path"));
}
