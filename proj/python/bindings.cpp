#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "catgate/circuit.hpp"
#include "catgate/errors.hpp"
#include "catgate/gates.hpp"
#include "catgate/noise.hpp"
#include "catgate/scenarios.hpp"
#include "catgate/selftest.hpp"
#include "catgate/squeeze.hpp"
#include "catgate/synth.hpp"

namespace py = pybind11;
using namespace catgate;

namespace {

PathSpec path_for(const std::string& gate, double total_time) { return gate_path(parse_gate_name(gate), total_time); }

py::dict path_dict(const PathSpec& s) {
    py::dict d;
    d["mu0"] = s.mu0;
    d["eta0"] = s.eta0;
    d["lambda"] = s.lambda_amp;
    d["total_time"] = s.total_time;
    d["theta"] = s.theta_target;
    return d;
}

py::dict schedule_dict(const PulseSchedule& s) {
    py::dict d;
    d["t"] = s.t;
    d["chi"] = s.chi;
    d["eps"] = s.eps;
    return d;
}

PulseSchedule schedule_from(const std::vector<double>& t, const std::vector<double>& chi,
                            const std::vector<Complex>& eps) {
    if (t.size() != chi.size() || t.size() != eps.size()) throw DimensionMismatchError("schedule columns differ in length");
    return {t, chi, eps};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kerr-cat geometric gate toolkit (compiled core)";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidSpaceError>(m, "InvalidSpaceError", base.ptr());
    py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<DegenerateFrameError>(m, "DegenerateFrameError", base.ptr());
    auto numeric = py::register_exception<NumericError>(m, "NumericError", base.ptr());
    py::register_exception<NoSolutionError>(m, "NoSolutionError", numeric.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

    py::class_<GateModel>(m, "GateModel")
        .def(py::init<>())
        .def_readwrite("kerr", &GateModel::kerr)
        .def_readwrite("alpha", &GateModel::alpha)
        .def_readwrite("xi", &GateModel::xi)
        .def_readwrite("total_time", &GateModel::total_time)
        .def_readwrite("dim", &GateModel::dim)
        .def_readwrite("steps", &GateModel::steps)
        .def_property_readonly("eps2", &GateModel::eps2)
        .def("validate", &GateModel::validate)
        .def("__repr__", [](const GateModel& g) {
            return "GateModel(kerr=" + std::to_string(g.kerr) + ", alpha=" + std::to_string(g.alpha) +
                   ", dim=" + std::to_string(g.dim) + ", steps=" + std::to_string(g.steps) + ")";
        });

    m.def("two_pi_mhz", &two_pi_mhz, py::arg("f_mhz"));

    m.def("solve_lambda", &solve_lambda, py::arg("mu0"), py::arg("theta"));
    m.def("geometric_phase",
          [](double mu0, double eta0, double lam, double total_time) {
              return phases(PathSpec{mu0, eta0, lam, total_time, 0.0}).geometric_plus;
          },
          py::arg("mu0"), py::arg("eta0"), py::arg("lam"), py::arg("total_time") = 1.0);
    m.def("gate_path", [](const std::string& gate, double t) { return path_dict(path_for(gate, t)); },
          py::arg("gate"), py::arg("total_time") = 1.0);
    m.def("ideal_unitary", [](const std::string& gate) { return Matrix(ideal_unitary(path_for(gate, 1.0))); },
          py::arg("gate"));
    m.def("effective_drive",
          [](const std::string& gate, const std::vector<double>& times, double total_time) {
              const EffectiveDrive d = sample_drive(path_for(gate, total_time), times);
              Eigen::MatrixX3d out(static_cast<Eigen::Index>(d.omega.size()), 3);
              for (std::size_t i = 0; i < d.omega.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = d.omega[i];
              return out;
          },
          py::arg("gate"), py::arg("times"), py::arg("total_time") = 1.0);

    m.def("synthesize",
          [](const std::string& gate, const GateModel& model, std::size_t steps) {
              return schedule_dict(single_qubit_controls(path_for(gate, model.total_time), model_frame(model), steps));
          },
          py::arg("gate"), py::arg("model") = GateModel{}, py::arg("steps") = 20000);
    m.def("write_schedule_csv",
          [](const std::filesystem::path& p, const std::vector<double>& t, const std::vector<double>& chi,
             const std::vector<Complex>& eps) { write_schedule_csv(p, schedule_from(t, chi, eps)); },
          py::arg("path"), py::arg("t"), py::arg("chi"), py::arg("eps"));
    m.def("read_schedule_csv", [](const std::filesystem::path& p) { return schedule_dict(read_schedule_csv(p)); },
          py::arg("path"));

    m.def("kerr_cat_gap",
          [](double kerr, double eps2, double xi, int dim) { return kerr_cat_gap(kerr, eps2, xi, FockSpace(dim)).gap; },
          py::arg("kerr"), py::arg("eps2"), py::arg("xi") = 0.0, py::arg("dim") = 30);

    m.def("simulate_gate",
          [](const std::string& gate, const GateModel& model) {
              IntegratorOptions io;
              io.keep_states = false;
              const GateRun r = simulate_single_gate(model, path_for(gate, model.total_time), io);
              py::gil_scoped_acquire g;
              py::dict d;
              d["fidelity"] = r.fidelity;
              d["block"] = Matrix(r.block);
              d["target"] = Matrix(r.target);
              d["gap_ratio"] = r.gap_ratio;
              d["superposition_fidelity_plus"] = superposition_fidelity(r.block, +1);
              d["superposition_fidelity_minus"] = superposition_fidelity(r.block, -1);
              return d;
          },
          py::arg("gate"), py::arg("model") = GateModel{}, py::call_guard<py::gil_scoped_release>());
    m.def("simulate_cnot",
          [](const GateModel& model) {
              IntegratorOptions io;
              io.keep_states = false;
              const CnotRun r = simulate_cnot(model, gate_path(GateName::Not, model.total_time), io);
              py::gil_scoped_acquire g;
              py::dict d;
              d["fidelity"] = r.fidelity;
              d["block"] = r.block;
              d["gap_ratio"] = r.gap_ratio;
              return d;
          },
          py::arg("model"), py::call_guard<py::gil_scoped_release>());
    m.def("simulate_decoherence",
          [](const std::string& gate, const GateModel& model, double kappa, double kappa_phi, int input_sign) {
              IntegratorOptions io;
              io.keep_states = false;
              const DecoherenceRun r =
                  simulate_decoherence(model, path_for(gate, model.total_time), kappa, kappa_phi, input_sign, io);
              py::gil_scoped_acquire g;
              py::dict d;
              d["fidelity"] = r.fidelity;
              d["subspace_population"] = r.subspace_population;
              return d;
          },
          py::arg("gate"), py::arg("model"), py::arg("kappa_per_us"), py::arg("kappa_phi_per_us"),
          py::arg("input_sign") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("noise_ensemble",
          [](const std::string& gate, const GateModel& model, const std::string& kind, double snr_db,
             std::size_t runs, std::uint64_t seed, unsigned threads) {
              NoiseConfig c;
              c.kind = parse_noise_kind(kind);
              c.snr_db = snr_db;
              c.seed = seed;
              const EnsembleStats s = monte_carlo(model, path_for(gate, model.total_time), c, runs, threads);
              py::gil_scoped_acquire g;
              std::vector<double> inf;
              for (const RunRecord& r : s.runs) inf.push_back(r.infidelity);
              py::dict d;
              d["infidelity"] = inf;
              d["mean"] = s.mean;
              d["failed"] = s.failed;
              return d;
          },
          py::arg("gate"), py::arg("model"), py::arg("kind"), py::arg("snr_db") = 10.0, py::arg("runs") = 50,
          py::arg("seed") = 1, py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("add_awgn", &add_awgn, py::arg("signal"), py::arg("snr_db"), py::arg("seed"));
    m.def("add_pink", &add_pink, py::arg("signal"), py::arg("snr_db"), py::arg("seed"));

    m.def("squeeze_time", [](double r, double eps2) { return SqueezeSpec{r, eps2}.duration(); }, py::arg("r"),
          py::arg("eps2"));
    m.def("squeeze_pipeline",
          [](const std::string& gate, const GateModel& model, double r, double eps2, double kappa, double kappa_phi,
             std::size_t squeeze_steps, int input_sign) {
              PipelineOptions o;
              o.squeeze_steps = squeeze_steps;
              o.input_sign = input_sign;
              const PipelineResult p = amplified_gate_pipeline(model, path_for(gate, model.total_time),
                                                               SqueezeSpec{r, eps2}, kappa, kappa_phi, o);
              py::gil_scoped_acquire g;
              py::dict d;
              d["fidelity"] = p.fidelity;
              d["final_photon_number"] = p.final_photon_number;
              d["times"] = p.times;
              d["photon_number"] = p.photon_number;
              return d;
          },
          py::arg("gate"), py::arg("model"), py::arg("r") = 1.2, py::arg("eps2") = two_pi_mhz(3.125),
          py::arg("kappa_per_us") = 0.05, py::arg("kappa_phi_per_us") = 0.05, py::arg("squeeze_steps") = 500,
          py::arg("input_sign") = 1, py::call_guard<py::gil_scoped_release>());

    m.def("circuit_map",
          [](double e_c, double e_j, double e_j_mod, int n_squids, double omega_p) {
              CircuitParams c;
              c.e_c = e_c;
              c.e_j = e_j;
              c.e_j_mod = e_j_mod;
              c.n_squids = n_squids;
              c.omega_p = omega_p;
              const EffectiveParams p = effective_params(c);
              py::dict d;
              d["omega_c"] = p.omega_c;
              d["kerr"] = p.kerr;
              d["eps2"] = p.eps2;
              d["chi"] = p.chi;
              d["alpha"] = p.alpha();
              return d;
          },
          py::arg("e_c"), py::arg("e_j"), py::arg("e_j_mod"), py::arg("n_squids") = 1, py::arg("omega_p") = 0.0);

    m.def("scenario_ids", &scenario_ids);
    m.def("_scenario_defaults", [](const std::string& id) { return scenario_defaults(id).dump(); });
    m.def("_run_scenario",
          [](const std::string& id, const std::string& params, const std::filesystem::path& out, unsigned threads) {
              const ScenarioResult r = run_scenario({id, nlohmann::json::parse(params), out}, {threads});
              return r.summary.dump();
          },
          py::arg("id"), py::arg("params"), py::arg("output_dir"), py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());

    m.def("property_suite", [] {
        std::vector<py::dict> out;
        for (const CheckResult& c : run_property_suite()) {
            py::dict d;
            d["name"] = c.name;
            d["value"] = c.value;
            d["tolerance"] = c.tolerance;
            d["pass"] = c.pass;
            out.push_back(d);
        }
        return out;
    });
}
