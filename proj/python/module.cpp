#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "multiport/channels.hpp"
#include "multiport/interferometer.hpp"
#include "multiport/io.hpp"
#include "multiport/protocol.hpp"
#include "multiport/random.hpp"
#include "multiport/suppression.hpp"
#include "multiport/symmetry.hpp"
#include "multiport/verify.hpp"

namespace py = pybind11;
using namespace multiport;

namespace {

std::vector<std::tuple<std::vector<std::tuple<int, int, int>>, cplx>> terms_as_tuples(
    const FockVector& v) {
  std::vector<std::tuple<std::vector<std::tuple<int, int, int>>, cplx>> out;
  for (const auto& [occ, amp] : v.terms()) {
    std::vector<std::tuple<int, int, int>> entries;
    for (const OccupationState::Entry& e : occ.entries())
      entries.emplace_back(e.mode, e.level, e.count);
    out.emplace_back(std::move(entries), amp);
  }
  return out;
}

OccupationState occ_from_tuples(const std::vector<std::tuple<int, int, int>>& entries) {
  std::vector<OccupationState::Entry> converted;
  converted.reserve(entries.size());
  for (const auto& [mode, level, count] : entries)
    converted.push_back(OccupationState::Entry{mode, level, count});
  return OccupationState(std::move(converted));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact few-boson Fourier-multiport interferometry and singlet distillation";

  py::class_<OccupationState>(m, "OccupationState")
      .def(py::init(&occ_from_tuples), py::arg("entries"))
      .def_static("vacuum", &OccupationState::vacuum)
      .def("total_particles", &OccupationState::total_particles)
      .def("count_at", &OccupationState::count_at, py::arg("mode"), py::arg("level"))
      .def("mode_count", &OccupationState::mode_count, py::arg("mode"))
      .def("mode_occupations", &OccupationState::mode_occupations, py::arg("modes"))
      .def("entries",
           [](const OccupationState& occ) {
             std::vector<std::tuple<int, int, int>> out;
             for (const OccupationState::Entry& e : occ.entries())
               out.emplace_back(e.mode, e.level, e.count);
             return out;
           })
      .def("__eq__", [](const OccupationState& a, const OccupationState& b) { return a == b; })
      .def("__hash__",
           [](const OccupationState& occ) { return py::hash(py::str(occ.str())); })
      .def("__repr__",
           [](const OccupationState& occ) { return "<OccupationState " + occ.str() + ">"; });

  py::class_<FockVector>(m, "FockVector")
      .def(py::init<int, int>(), py::arg("modes"), py::arg("levels"))
      .def_static("vacuum_state", &FockVector::vacuum_state, py::arg("modes"),
                  py::arg("levels"))
      .def_property_readonly("modes", &FockVector::modes)
      .def_property_readonly("levels", &FockVector::levels)
      .def_property_readonly("particles", &FockVector::particles)
      .def("is_zero", &FockVector::is_zero)
      .def("terms", &terms_as_tuples)
      .def("amplitude", &FockVector::amplitude, py::arg("occ"))
      .def("add_term", &FockVector::add_term, py::arg("occ"), py::arg("amplitude"))
      .def("norm", &FockVector::norm)
      .def("norm_sq", &FockVector::norm_sq)
      .def("normalized", &FockVector::normalized)
      .def("is_normalized", &FockVector::is_normalized, py::arg("tol") = kNormTolerance)
      .def("__add__", [](const FockVector& a, const FockVector& b) { return a + b; })
      .def("__sub__", [](const FockVector& a, const FockVector& b) { return a - b; })
      .def("__mul__", [](const FockVector& v, cplx factor) { return factor * v; })
      .def("__rmul__", [](const FockVector& v, cplx factor) { return factor * v; })
      .def("__repr__", [](const FockVector& v) { return "<FockVector " + v.str() + ">"; });

  m.def(
      "product_state",
      [](const std::vector<int>& levels, int modes, int level_count) {
        return product_state(levels, modes, level_count);
      },
      py::arg("levels"), py::arg("modes"), py::arg("level_count"));
  m.def("apply_creation", &apply_creation, py::arg("state"), py::arg("mode"), py::arg("level"));
  m.def("extend_space", &extend_space, py::arg("state"), py::arg("modes"), py::arg("levels"));
  m.def("inner_product", &inner_product, py::arg("a"), py::arg("b"));
  m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));

  py::class_<ModeUnitary>(m, "ModeUnitary")
      .def(py::init<Eigen::MatrixXcd, std::string>(), py::arg("matrix"), py::arg("label") = "")
      .def_property_readonly("dim", &ModeUnitary::dim)
      .def_property_readonly("matrix",
                             [](const ModeUnitary& u) -> Eigen::MatrixXcd { return u.matrix(); })
      .def_property_readonly("label", &ModeUnitary::label)
      .def("__repr__", [](const ModeUnitary& u) {
        return "<ModeUnitary dim=" + std::to_string(u.dim()) +
               (u.label().empty() ? "" : " " + u.label()) + ">";
      });

  m.def("identity_unitary", &identity_unitary, py::arg("n"));
  m.def("fourier_matrix", &fourier_matrix, py::arg("n"));
  m.def(
      "embed",
      [](const ModeUnitary& u, const std::vector<int>& modes, int total) {
        return embed(u, modes, total);
      },
      py::arg("unitary"), py::arg("modes"), py::arg("total_modes"));
  m.def(
      "phase_variant",
      [](const ModeUnitary& u, const std::vector<cplx>& d_in, const std::vector<cplx>& d_out) {
        return phase_variant(u, d_in, d_out);
      },
      py::arg("unitary"), py::arg("d_in"), py::arg("d_out"));
  m.def("compose", &compose, py::arg("second"), py::arg("first"));
  m.def("apply_mode_unitary", &apply_mode_unitary, py::arg("state"), py::arg("unitary"));
  m.def("is_unitary", &is_unitary, py::arg("matrix"), py::arg("tol") = kUnitarityTolerance);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def_property_readonly("images", &Permutation::images)
      .def("sign", &Permutation::sign)
      .def("inverse", &Permutation::inverse)
      .def("after", &Permutation::after, py::arg("other"))
      .def("__call__", [](const Permutation& p, int i) { return p(i); })
      .def("__len__", &Permutation::size);

  m.def("cyclic", &cyclic, py::arg("j"), py::arg("m"));
  m.def("permute_modes", &permute_modes, py::arg("state"), py::arg("permutation"));
  m.def("eigenspace_projector_apply", &eigenspace_projector_apply, py::arg("state"),
        py::arg("j"), py::arg("m"));
  m.def("cyclic_eigenspace_apply", &cyclic_eigenspace_apply, py::arg("state"), py::arg("mu"),
        py::arg("j"), py::arg("m"));
  m.def("antisymmetrizer_apply", &antisymmetrizer_apply, py::arg("state"), py::arg("n"));
  m.def("generalized_singlet", &generalized_singlet, py::arg("n"));
  m.def(
      "singlet_over_levels",
      [](int n, const std::vector<int>& levels, int d) {
        return singlet_over_levels(n, levels, d);
      },
      py::arg("n"), py::arg("levels"), py::arg("d"));

  m.def(
      "mode_assignment",
      [](const std::vector<int>& counts) { return mode_assignment(ModeOccupationList{counts}); },
      py::arg("occupations"));
  m.def("cyclic_eigenvalues",
        [](int n) { return cyclic_eigenvalues(n).values(); }, py::arg("n"));
  m.def(
      "suppression_predicate",
      [](const std::vector<cplx>& lambdas, double phi, const std::vector<int>& s) {
        return suppression_predicate(EigenvalueVector(lambdas), phi, ModeOccupationList{s});
      },
      py::arg("lambdas"), py::arg("phi"), py::arg("s"));
  m.def(
      "suppressed_for_class",
      [](const std::vector<cplx>& lambdas, cplx mu, const std::vector<int>& s) {
        return suppressed_for_class(EigenvalueVector(lambdas), mu, ModeOccupationList{s});
      },
      py::arg("lambdas"), py::arg("mu"), py::arg("s"));
  m.def(
      "permutation_eigenbasis",
      [](const Permutation& p) {
        PermutationEigenbasis basis = permutation_eigenbasis(p);
        return py::make_tuple(basis.eigenvectors, basis.lambdas.values());
      },
      py::arg("permutation"));
  m.def("antibunch_trace", &antibunch_trace, py::arg("ensemble"), py::arg("j"), py::arg("m"));
  m.def("antibunch_allowed", &antibunch_allowed, py::arg("ensemble"), py::arg("j"),
        py::arg("m"));
  m.def(
      "enumerate_occupations",
      [](int particles, int modes) {
        std::vector<std::vector<int>> out;
        for (const ModeOccupationList& s : enumerate_occupations(particles, modes))
          out.push_back(s.counts);
        return out;
      },
      py::arg("particles"), py::arg("modes"));
  m.def(
      "output_probability",
      [](const FockVector& v, const ModeUnitary& u, const std::vector<int>& s) {
        return output_probability(v, u, ModeOccupationList{s});
      },
      py::arg("state"), py::arg("unitary"), py::arg("s"));

  py::class_<Ensemble>(m, "Ensemble")
      .def(py::init<int, int>(), py::arg("modes"), py::arg("levels"))
      .def_property_readonly("modes", &Ensemble::modes)
      .def_property_readonly("levels", &Ensemble::levels)
      .def("add", &Ensemble::add, py::arg("weight"), py::arg("state"))
      .def("validate", &Ensemble::validate)
      .def("total_weight", &Ensemble::total_weight)
      .def("components",
           [](const Ensemble& ens) {
             std::vector<std::pair<double, FockVector>> out;
             for (const Ensemble::Component& c : ens.components())
               out.emplace_back(c.weight, c.state);
             return out;
           })
      .def("__len__", [](const Ensemble& ens) { return ens.components().size(); })
      .def("__repr__", [](const Ensemble& ens) {
        return "<Ensemble modes=" + std::to_string(ens.modes()) +
               " levels=" + std::to_string(ens.levels()) +
               " components=" + std::to_string(ens.components().size()) + ">";
      });

  m.def("pure", &pure, py::arg("state"));
  m.def("depolarize_mode", &depolarize_mode, py::arg("ensemble"), py::arg("mode"),
        py::arg("level_count"));
  m.def("fully_depolarized", &fully_depolarized, py::arg("n"));
  m.def(
      "apply_local_noise",
      [](const Ensemble& ens, const std::vector<Eigen::MatrixXcd>& per_mode) {
        return apply_local_noise(ens, per_mode);
      },
      py::arg("ensemble"), py::arg("per_mode_unitaries"));
  m.def(
      "apply_level_unitaries",
      [](const FockVector& v, const std::vector<Eigen::MatrixXcd>& per_mode) {
        return apply_level_unitaries(v, per_mode);
      },
      py::arg("state"), py::arg("per_mode_unitaries"));

  py::class_<StepStat>(m, "StepStat")
      .def_readonly("j", &StepStat::j)
      .def_readonly("probability", &StepStat::probability)
      .def("__repr__", [](const StepStat& s) {
        return "<StepStat j=" + std::to_string(s.j) + " p=" + std::to_string(s.probability) +
               ">";
      });

  py::class_<ProtocolReport>(m, "ProtocolReport")
      .def_readonly("n", &ProtocolReport::n)
      .def_readonly("steps", &ProtocolReport::steps)
      .def_readonly("success_probability", &ProtocolReport::success_probability)
      .def_readonly("fidelity_with_singlet", &ProtocolReport::fidelity_with_singlet)
      .def_readonly("output", &ProtocolReport::output)
      .def("to_json",
           [](const ProtocolReport& report) { return report_to_json(report).dump(2); })
      .def("__repr__", [](const ProtocolReport& r) {
        return "<ProtocolReport N=" + std::to_string(r.n) +
               " p_success=" + std::to_string(r.success_probability) + ">";
      });

  py::class_<CoincidenceResult>(m, "CoincidenceResult")
      .def_readonly("probability", &CoincidenceResult::probability)
      .def_readonly("conditional", &CoincidenceResult::conditional);

  m.def(
      "coincidence_project",
      [](const FockVector& v, const std::vector<int>& modes) {
        return coincidence_project(v, modes);
      },
      py::arg("state"), py::arg("modes"));
  m.def("protocol_step", &protocol_step, py::arg("state"), py::arg("j"), py::arg("m"));
  m.def(
      "run_protocol",
      [](const Ensemble& input, int n, int start_j, bool parallel,
         std::optional<std::uint64_t> phase_seed) {
        ProtocolOptions options;
        options.start_j = start_j;
        options.parallel = parallel;
        if (phase_seed) {
          std::uint64_t seed = *phase_seed;
          options.step_unitary = [seed](int j, int m) {
            Rng rng(seed + static_cast<std::uint64_t>(j));
            ModeUnitary variant = phase_variant(fourier_matrix(j), random_unit_phases(j, rng),
                                                random_unit_phases(j, rng));
            std::vector<int> front(static_cast<std::size_t>(j));
            std::iota(front.begin(), front.end(), 0);
            return embed(variant, front, m);
          };
        }
        return run_protocol(input, n, options);
      },
      py::arg("input"), py::arg("n"), py::arg("start_j") = 2, py::arg("parallel") = false,
      py::arg("phase_seed") = py::none());
  m.def("success_probability_oracle", &success_probability_oracle, py::arg("input"),
        py::arg("n"));

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed") = kDefaultSeed)
      .def("uniform", &Rng::uniform)
      .def("gaussian", &Rng::gaussian);
  m.def("random_unitary", &random_unitary, py::arg("n"), py::arg("rng"));
  m.def("random_one_per_mode_state", &random_one_per_mode_state, py::arg("n"), py::arg("d"),
        py::arg("rng"));

  m.def("state_to_json", [](const FockVector& v) { return state_to_json(v).dump(2); },
        py::arg("state"));
  m.def("state_from_json",
        [](const std::string& text) { return state_from_json(json::parse(text)); },
        py::arg("text"));
  m.def("ensemble_to_json", [](const Ensemble& e) { return ensemble_to_json(e).dump(2); },
        py::arg("ensemble"));
  m.def("ensemble_from_json",
        [](const std::string& text) { return ensemble_from_json(json::parse(text)); },
        py::arg("text"));
  m.def("unitary_to_json", [](const ModeUnitary& u) { return unitary_to_json(u).dump(2); },
        py::arg("unitary"));
  m.def("unitary_from_json",
        [](const std::string& text) { return unitary_from_json(json::parse(text)); },
        py::arg("text"));

  m.def(
      "verify",
      [](const std::string& level) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const CheckResult& r :
             run_verification(level == "full" ? VerifyLevel::full : VerifyLevel::quick))
          out.emplace_back(r.name, r.passed, r.detail);
        return out;
      },
      py::arg("level") = "quick");

  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
