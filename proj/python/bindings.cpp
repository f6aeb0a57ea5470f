#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "omegamod/dirichlet.hpp"
#include "omegamod/error.hpp"
#include "omegamod/error_terms.hpp"
#include "omegamod/hall.hpp"
#include "omegamod/race.hpp"
#include "omegamod/residue.hpp"
#include "omegamod/selftest.hpp"
#include "omegamod/sieve.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace omegamod;

namespace {

StreamOptions stream_options(std::uint64_t segment_size, unsigned workers) {
  return StreamOptions{segment_size, workers};
}

py::array_t<std::uint8_t> segment_values(const OmegaSegment& seg) {
  py::array_t<std::uint8_t> arr(static_cast<py::ssize_t>(seg.values.size()));
  std::copy(seg.values.begin(), seg.values.end(), arr.mutable_data());
  return arr;
}

}  // namespace

PYBIND11_MODULE(_omegamod, m) {
  m.doc() = "Residue-class distribution of Omega(n): sieve, transforms, "
            "error terms, Dirichlet-series checks and races.";

  py::register_exception<Error>(m, "OmegamodError", PyExc_ValueError);

  // sieve
  py::class_<PrimeTable>(m, "PrimeTable")
      .def_readonly("limit", &PrimeTable::limit)
      .def_readonly("primes", &PrimeTable::primes)
      .def("__len__", [](const PrimeTable& t) { return t.primes.size(); });

  py::class_<OmegaSegment>(m, "OmegaSegment")
      .def_readonly("lo", &OmegaSegment::lo)
      .def_readonly("hi", &OmegaSegment::hi)
      .def_property_readonly("values", &segment_values)
      .def("__len__", &OmegaSegment::size);

  m.def("primes_up_to", &primes_up_to, "limit"_a);
  m.def("omega_single", &omega_single, "n"_a,
        "Omega(n) by trial division.");
  m.def("omega_block", &omega_block, "lo"_a, "hi"_a, "table"_a,
        "Segmented sieve of Omega over [lo, hi).");
  m.def(
      "omega_prefix",
      [](std::uint64_t n_max, std::uint64_t segment_size, unsigned workers) {
        return omega_prefix(n_max, stream_options(segment_size, workers));
      },
      "n_max"_a, "segment_size"_a = kDefaultSegmentSize, "workers"_a = 1);

  // residue counts
  py::class_<RootTable>(m, "RootTable")
      .def(py::init<unsigned>(), "m"_a)
      .def_property_readonly("m", &RootTable::modulus)
      .def_property_readonly("powers", &RootTable::powers);

  py::class_<ResidueTally>(m, "ResidueTally")
      .def(py::init([](unsigned mod, std::uint64_t first) {
             return ResidueTally::empty(mod, first);
           }),
           "m"_a, "first"_a = 1)
      .def_readonly("m", &ResidueTally::m)
      .def_readonly("first", &ResidueTally::first)
      .def_readonly("x", &ResidueTally::x)
      .def_readonly("counts", &ResidueTally::counts)
      .def(py::self == py::self);

  py::class_<CharacterSumSet>(m, "CharacterSumSet")
      .def_readonly("m", &CharacterSumSet::m)
      .def_readonly("x", &CharacterSumSet::x)
      .def_readonly("sums", &CharacterSumSet::sums);

  m.def("lambda_value", &lambda_value, "omega"_a, "m"_a, "k"_a, "roots"_a);
  m.def("tally_segment", &tally_segment, "tally"_a, "segment"_a);
  m.def("merge", &merge, "a"_a, "b"_a);
  m.def("sums_from_counts", &sums_from_counts, "tally"_a, "roots"_a);
  m.def("counts_from_sums", &counts_from_sums, "sums"_a, "roots"_a);

  // hall bound
  py::class_<HallConstants>(m, "HallConstants")
      .def_readonly("m", &HallConstants::m)
      .def_readonly("perimeter", &HallConstants::perimeter)
      .def_readonly("c", &HallConstants::c)
      .def_readonly("a_exponent", &HallConstants::a_exponent);

  m.def("hull_perimeter", &hull_perimeter, "m"_a);
  m.def("hall_constants", &hall_constants, "m"_a);
  m.def("mertens_sum", &mertens_sum, "x"_a, "table"_a);
  m.def("hall_rhs", &hall_rhs, "m"_a, "k"_a, "x"_a, "table"_a);
  m.def("predicted_bound", &predicted_bound, "m"_a, "x"_a);

  // error terms
  py::class_<ErrorCheckpoint>(m, "ErrorCheckpoint")
      .def_readonly("m", &ErrorCheckpoint::m)
      .def_readonly("x", &ErrorCheckpoint::x)
      .def_readonly("scaled_residuals", &ErrorCheckpoint::scaled_residuals)
      .def("counts", &ErrorCheckpoint::counts);

  py::class_<CheckpointSeries>(m, "CheckpointSeries")
      .def_readonly("m", &CheckpointSeries::m)
      .def_readonly("checkpoints", &CheckpointSeries::checkpoints);

  py::class_<GrowthFit>(m, "GrowthFit")
      .def_readonly("index", &GrowthFit::index)
      .def_readonly("alpha_hat", &GrowthFit::alpha_hat)
      .def_readonly("points_used", &GrowthFit::points_used)
      .def_readonly("residual_rms", &GrowthFit::residual_rms);

  m.def("checkpoint", &checkpoint, "tally"_a);
  m.def("checkpoint_schedule", &checkpoint_schedule, "x_max"_a,
        "ratio"_a = kDefaultRatio);
  m.def(
      "record_series",
      [](unsigned mod, std::uint64_t x_max, double ratio, unsigned workers) {
        return record_series(mod, x_max, ratio, stream_options(kDefaultSegmentSize, workers));
      },
      "m"_a, "x_max"_a, "ratio"_a = kDefaultRatio, "workers"_a = 1);
  m.def("growth_exponent", &growth_exponent, "series"_a, "j"_a);
  m.def("character_growth_exponent", &character_growth_exponent, "series"_a,
        "k"_a, "roots"_a);

  // dirichlet
  py::class_<DirichletEvaluation>(m, "DirichletEvaluation")
      .def_readonly("m", &DirichletEvaluation::m)
      .def_readonly("k", &DirichletEvaluation::k)
      .def_readonly("s", &DirichletEvaluation::s)
      .def_property_readonly("method",
                             [](const DirichletEvaluation& e) {
                               return std::string(to_string(e.method));
                             })
      .def_readonly("cutoff", &DirichletEvaluation::cutoff)
      .def_readonly("value", &DirichletEvaluation::value);

  py::class_<GFactorEvaluation>(m, "GFactorEvaluation")
      .def_readonly("m", &GFactorEvaluation::m)
      .def_readonly("k", &GFactorEvaluation::k)
      .def_readonly("s", &GFactorEvaluation::s)
      .def_readonly("cutoff", &GFactorEvaluation::cutoff)
      .def_readonly("value", &GFactorEvaluation::value);

  py::class_<IdentityReport>(m, "IdentityReport")
      .def_readonly("name", &IdentityReport::name)
      .def_readonly("m", &IdentityReport::m)
      .def_readonly("s", &IdentityReport::s)
      .def_readonly("cutoff", &IdentityReport::cutoff)
      .def_readonly("lhs", &IdentityReport::lhs)
      .def_readonly("rhs", &IdentityReport::rhs)
      .def_readonly("deviation", &IdentityReport::deviation);

  m.def("zeta_ref", &zeta_ref, "s"_a, "terms"_a = kDefaultZetaTerms);
  m.def("truncated_L",
        py::overload_cast<unsigned, unsigned, Complex, std::uint64_t>(&truncated_L),
        "m"_a, "k"_a, "s"_a, "n_max"_a);
  m.def("euler_L", &euler_L, "m"_a, "k"_a, "s"_a, "p_max"_a, "table"_a);
  m.def("euler_G", &euler_G, "m"_a, "k"_a, "s"_a, "p_max"_a, "table"_a);
  m.def("check_identity_product", &check_identity_product, "m"_a, "s"_a,
        "p_max"_a, "table"_a, "zeta_terms"_a = kDefaultZetaTerms);
  m.def("check_g_product", &check_g_product, "m"_a, "s"_a, "p_max"_a,
        "table"_a, "zeta_terms"_a = kDefaultZetaTerms);
  m.def("check_lquo", py::overload_cast<Complex, std::uint64_t>(&check_lquo),
        "s"_a, "n_max"_a);

  // race
  py::class_<RaceEvent>(m, "RaceEvent")
      .def_readonly("x", &RaceEvent::x)
      .def_property_readonly("direction", [](const RaceEvent& e) {
        return std::string(to_string(e.direction));
      });

  py::class_<RaceSummary>(m, "RaceSummary")
      .def_readonly("m", &RaceSummary::m)
      .def_readonly("j", &RaceSummary::j)
      .def_readonly("jprime", &RaceSummary::jprime)
      .def_readonly("x_max", &RaceSummary::x_max)
      .def_readonly("events", &RaceSummary::events)
      .def_readonly("lead_pos", &RaceSummary::lead_pos)
      .def_readonly("lead_neg", &RaceSummary::lead_neg)
      .def_readonly("lead_tie", &RaceSummary::lead_tie)
      .def_readonly("final_delta", &RaceSummary::final_delta);

  m.def(
      "race_scan",
      [](unsigned mod, unsigned j, unsigned jprime, std::uint64_t x_max) {
        return race_scan(mod, j, jprime, x_max);
      },
      "m"_a, "j"_a, "jprime"_a, "x_max"_a);
  m.def(
      "all_pairs",
      [](unsigned mod, std::uint64_t x_max) { return all_pairs(mod, x_max); },
      "m"_a, "x_max"_a);

  // selftest
  py::class_<SelftestCheck>(m, "SelftestCheck")
      .def_readonly("name", &SelftestCheck::name)
      .def_readonly("passed", &SelftestCheck::passed)
      .def_readonly("detail", &SelftestCheck::detail);
  m.def(
      "run_selftest",
      [](bool inject_fault) {
        SelftestOptions opts;
        opts.inject_fault = inject_fault;
        return run_selftest(opts);
      },
      "inject_fault"_a = false);
}
