// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion number ...]   (no arguments runs all ten)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "manufactured.hpp"
#include "oracle.hpp"
#include "thermobar/equilibria.hpp"
#include "thermobar/evolution.hpp"
#include "thermobar/generator.hpp"
#include "thermobar/initial_data.hpp"
#include "thermobar/spectral.hpp"

using namespace thermobar;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double inf_norm(const Eigen::MatrixXd& A) { return A.cwiseAbs().rowwise().sum().maxCoeff(); }

ModelConfig random_config(std::mt19937_64& rng, HeatLaw law) {
  std::uniform_real_distribution<double> u(0.3, 2.5);
  ModelConfig c;
  c.L1 = u(rng);
  c.L2 = c.L1 + u(rng);
  c.L3 = c.L2 + u(rng);
  c.a = u(rng);
  c.b = u(rng);
  c.m = u(rng);
  c.k = u(rng);
  c.tau = u(rng);
  c.law = law;
  return c;
}

std::vector<ModelConfig> test_configs(HeatLaw law) {
  std::vector<ModelConfig> out{reference_config(law)};
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 4; ++i) out.push_back(random_config(rng, law));
  return out;
}

GeneratorSystem system_for(const ModelConfig& cfg, int n) {
  return assemble_generator(cfg, build_discretization(cfg, n, n, n));
}

const char* law_name(HeatLaw law) { return law == HeatLaw::Cattaneo ? "Cattaneo" : "Fourier"; }

constexpr HeatLaw kLaws[] = {HeatLaw::Cattaneo, HeatLaw::Fourier};

// 1. structure identity over random configurations and resolutions
void structure_identities(Outcome& o) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1);
  double worst = 0.0;
  int cases = 0;
  for (int c = 0; c < 12; ++c) {
    const HeatLaw law = kLaws[c % 2];
    const ModelConfig cfg = random_config(rng, law);
    for (int n : {4, 16, 64}) {
      const GeneratorSystem s = system_for(cfg, n);
      const Eigen::MatrixXd MA = s.M * s.A;
      const double r = (MA + MA.transpose() + 2.0 * s.Dq).cwiseAbs().maxCoeff() / MA.cwiseAbs().maxCoeff();
      worst = std::max(worst, r);
      ++cases;
    }
  }
  const double elapsed = seconds_since(t0);
  o.detail << cases << " cases, worst relative residual " << worst << ", " << elapsed << " s";
  o.require(worst <= 1e-12, "residual above 1e-12");
  o.require(elapsed < 10.0, "runtime above 10 s");
}

// 2. the kernel is Z and zero is a simple eigenvalue
void equilibria(Outcome& o) {
  const auto t0 = Clock::now();
  double worst_null = 0.0, worst_angle = 0.0;
  int worst_multiplicity_gap = 0, cases = 0;
  for (HeatLaw law : kLaws) {
    for (const ModelConfig& cfg : test_configs(law)) {
      const GeneratorSystem s = system_for(cfg, 16);
      const StateVector z = discrete_kernel(s);
      worst_null = std::max(worst_null, (s.A * z).cwiseAbs().maxCoeff() /
                                            (inf_norm(s.A) * z.cwiseAbs().maxCoeff()));
      const SpectrumReport r = compute_spectrum(s);
      worst_multiplicity_gap = std::max(worst_multiplicity_gap, std::abs(r.zero_multiplicity - 1));
      worst_angle = std::max(worst_angle, r.zero_vector_angle.value_or(std::numeric_limits<double>::infinity()));
      ++cases;
    }
  }
  const double elapsed = seconds_since(t0);
  o.detail << cases << " configs at n=16, max |AZ|/(|A||Z|) " << worst_null << ", max angle " << worst_angle
           << ", zero multiplicity off by " << worst_multiplicity_gap << ", " << elapsed << " s";
  o.require(worst_null <= 1e-12, "A Z not zero");
  o.require(worst_multiplicity_gap == 0, "zero eigenvalue not simple");
  o.require(worst_angle <= 1e-8, "eigenvector angle above 1e-8");
  o.require(elapsed < 30.0, "runtime above 30 s");
}

// 3. eigenvalues lie in the strip
void spectral_strip(Outcome& o) {
  const auto t0 = Clock::now();
  double worst = 0.0;  // largest violation in units of eps
  for (HeatLaw law : kLaws) {
    const GeneratorSystem s = system_for(reference_config(law), 16);
    const SpectrumReport r = compute_spectrum(s);
    const double eps = 1e-10 * r.scale;
    for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) {
      const double re = r.eigenvalues(i).real();
      worst = std::max(worst, re / eps);
      if (law == HeatLaw::Cattaneo) worst = std::max(worst, (-1.0 / s.config().tau - re) / eps);
    }
    o.detail << law_name(law) << " N=" << s.size() << " max Re " << r.eigenvalues.real().maxCoeff()
             << " min Re " << r.eigenvalues.real().minCoeff() << "; ";
  }
  const double elapsed = seconds_since(t0);
  o.detail << elapsed << " s";
  o.require(worst <= 1.0, "eigenvalue outside the strip");
  o.require(elapsed < 5.0, "runtime above 5 s");
}

// 4. no nonzero eigenvalue near the imaginary axis, and the gap is resolution independent
void imaginary_axis(Outcome& o) {
  for (HeatLaw law : kLaws) {
    double gaps[2] = {0.0, 0.0};
    int idx = 0;
    for (int n : {16, 32}) {
      const GeneratorSystem s = system_for(reference_config(law), n);
      const SpectrumReport r = compute_spectrum(s);
      double gap = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) {
        if (std::abs(r.eigenvalues(i)) > r.tol_zero) gap = std::min(gap, std::abs(r.eigenvalues(i).real()));
      }
      gaps[idx++] = gap;
      const double threshold = 1e-6 * r.scale;
      o.detail << law_name(law) << " n=" << n << " gap " << gap << " vs " << threshold << "; ";
      o.require(gap > threshold, std::string(law_name(law)) + " eigenvalue within 1e-6 scale at n=" + std::to_string(n));
    }
    const double change = std::abs(gaps[1] - gaps[0]) / gaps[0];
    o.detail << law_name(law) << " gap change " << change << "; ";
    o.require(change < 0.15, std::string(law_name(law)) + " gap changes by 15% or more");
  }
}

// 5. per-step energy ledger over a long Crank-Nicolson run
void energy_ledger(Outcome& o) {
  const auto t0 = Clock::now();
  for (HeatLaw law : kLaws) {
    const GeneratorSystem s = system_for(reference_config(law), 16);
    const StateVector u0 = make_initial_state(s.config(), s.disc, {presets::RandomSeeded{42, 1.0}, false});
    const Trajectory t = simulate(u0, s, 1e-2, 100.0);
    double worst = 0.0, rise = 0.0;
    for (std::size_t i = 1; i < t.times.size(); ++i) {
      worst = std::max(worst, t.ledger_residual[i]);
      rise = std::max(rise, t.energy_total[i] - t.energy_total[i - 1]);
    }
    o.detail << law_name(law) << " " << t.times.size() - 1 << " steps, worst ledger " << worst
             << ", largest rise " << rise << "; ";
    o.require(t.times.size() - 1 == 10000, "step count");
    o.require(worst <= 1e-11, std::string(law_name(law)) + " ledger residual");
    o.require(rise <= 0.0, std::string(law_name(law)) + " energy increased");
  }
  const double elapsed = seconds_since(t0);
  o.detail << elapsed << " s";
  o.require(elapsed < 60.0, "runtime above 60 s");
}

struct DecayCase {
  DecayReport report;
  double abscissa = 0.0;
};

DecayCase decay_case(const GeneratorSystem& s, const StateVector& u0, double t_max) {
  const DeflatedOperator d = deflate(s);
  const Eigen::VectorXcd ev = deflated_eigenvalues(d);
  const double abscissa = spectral_abscissa(d);
  Eigen::Index slowest = 0;
  ev.real().maxCoeff(&slowest);
  std::optional<double> period;
  if (std::abs(ev(slowest).imag()) > 0.0) period = 2.0 * std::numbers::pi / std::abs(ev(slowest).imag());
  const Trajectory t = simulate(u0, s, 1e-2, t_max);
  return {fit_decay(t, 0.5, 2.0 * std::abs(abscissa), period), abscissa};
}

// 6. fitted decay rate against twice the spectral abscissa
void exponential_decay(Outcome& o) {
  const auto t0 = Clock::now();
  for (HeatLaw law : kLaws) {
    const GeneratorSystem s = system_for(reference_config(law), 16);
    const StateVector u0 = make_initial_state(s.config(), s.disc, {presets::RandomSeeded{42, 1.0}, false});
    const DecayCase c = decay_case(s, u0, 200.0);
    o.detail << law_name(law) << " fitted " << c.report.fitted_rate << " reference " << *c.report.reference_rate
             << " gap " << *c.report.relative_gap << "; ";
    o.require(*c.report.relative_gap <= 0.10, std::string(law_name(law)) + " rate gap above 10%");
  }
  const double elapsed = seconds_since(t0);
  o.detail << elapsed << " s";
  o.require(elapsed < 120.0, "runtime above 2 min");
}

// 7. kernel/range equivalence and decay of well-prepared data
void kernel_range(Outcome& o) {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g;
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const HeatLaw law = kLaws[trial % 2];
    const GeneratorSystem s = system_for(reference_config(law), 8 + trial % 9);
    StateVector u(s.size());
    for (auto& x : u) x = g(rng);
    const EquivalenceReport r = check_equivalence(u, s);
    worst_ratio = std::max(worst_ratio, r.residual / r.tolerance);
  }
  o.detail << "100 random states, worst residual/tolerance " << worst_ratio << "; ";
  o.require(worst_ratio <= 1.0, "equivalence identity");

  for (HeatLaw law : kLaws) {
    const GeneratorSystem s = system_for(reference_config(law), 16);
    for (std::uint64_t seed : {42u, 43u, 44u}) {
      const StateVector u0 = make_initial_state(s.config(), s.disc, {presets::RandomSeeded{seed, 1.0}, true});
      const double gamma = project(u0, s).coeff;
      const Trajectory t = simulate(u0, s, 1e-2, 500.0);
      // rate from the first 200 time units, then the horizon it implies
      std::vector<double> head_t, head_e;
      for (std::size_t i = 0; i < t.times.size() && t.times[i] <= 200.0 + 1e-9; ++i) {
        head_t.push_back(t.times[i]);
        head_e.push_back(t.energy_total[i]);
      }
      const double omega = fit_decay(head_t, head_e, 0.5).fitted_rate;
      const double horizon = omega > 0.0 ? std::min(3.0 / omega * std::log(1e6), 500.0) : 500.0;
      const auto step = static_cast<std::size_t>(std::lround(horizon / 1e-2));
      const double ratio = t.energy_total[step] / t.energy_total[0];
      o.detail << law_name(law) << " seed " << seed << " gamma " << gamma << " omega_fit " << omega << " t_max "
               << horizon << " E(t_max)/E(0) " << ratio << "; ";
      o.require(std::abs(gamma) <= 1e-14, "gamma not zero");
      o.require(ratio <= 1e-6, std::string(law_name(law)) + " well-prepared energy above 1e-6");
    }
  }
}

// 8. bounded resolvent along the imaginary axis
void resolvent_bound(Outcome& o) {
  const auto t0 = Clock::now();
  for (HeatLaw law : kLaws) {
    double sups[2] = {0.0, 0.0};
    int idx = 0;
    for (int n : {16, 32}) {
      const GeneratorSystem s = system_for(reference_config(law), n);
      const ResolventSweep r = resolvent_sweep(deflate(s), 0.1, 200.0, 400, Spacing::Log, 4);
      sups[idx++] = r.sup_norm;
      o.detail << law_name(law) << " n=" << n << " sup " << r.sup_norm << " at l=" << r.l_at_sup
               << " top-decade spread " << r.top_decade_spread << "; ";
      o.require(std::isfinite(r.sup_norm) && r.l_at_sup < 200.0, "sup not at finite l");
      o.require(r.top_decade_spread <= 1.05, std::string(law_name(law)) + " top decade not a plateau at n=" + std::to_string(n));
    }
    const double change = std::abs(sups[1] - sups[0]) / sups[0];
    o.detail << law_name(law) << " sup change " << change << "; ";
    o.require(change < 0.15, std::string(law_name(law)) + " sup changes by 15% or more");
  }
  const double elapsed = seconds_since(t0);
  o.detail << elapsed << " s";
  o.require(elapsed < 180.0, "runtime above 3 min");
}

// 9. main eigensolver against the characteristic polynomial oracle
void oracle_equivalence(Outcome& o) {
  const auto t0 = Clock::now();
  for (HeatLaw law : kLaws) {
    const GeneratorSystem s = system_for(reference_config(law), 2);
    const SpectrumReport r = compute_spectrum(s);
    const std::vector<std::complex<double>> main(r.eigenvalues.data(), r.eigenvalues.data() + r.eigenvalues.size());
    const double dist = oracle::match_distance(main, oracle::eigenvalues(s.A));
    o.detail << law_name(law) << " N=" << s.size() << " worst distance " << dist << "; ";
    o.require(s.size() <= 20, "instance too large");
    o.require(dist <= 1e-8, std::string(law_name(law)) + " eigenvalue mismatch");
  }
  const double elapsed = seconds_since(t0);
  o.detail << elapsed << " s";
  o.require(elapsed < 5.0, "runtime above 5 s");
}

// 10. consistency order of the generator on a manufactured state
void consistency_order(Outcome& o) {
  ModelConfig other;
  other.L1 = 0.8;
  other.L2 = 2.0;
  other.L3 = 3.5;
  other.a = other.b = 1.7;
  other.m = 0.6;
  other.k = 1.3;
  other.tau = 0.5;
  for (HeatLaw law : kLaws) {
    for (ModelConfig cfg : {reference_config(law), other}) {
      cfg.law = law;
      const auto e1 = manufactured::consistency_errors(cfg, 16);
      const auto e2 = manufactured::consistency_errors(cfg, 32);
      const auto e3 = manufactured::consistency_errors(cfg, 64);
      const double interior = std::min(std::log2(e1.interior / e2.interior), std::log2(e2.interior / e3.interior));
      const double interface = std::min(std::log2(e1.interface / e2.interface), std::log2(e2.interface / e3.interface));
      o.detail << law_name(law) << " L3=" << cfg.L3 << " orders " << interior << " / " << interface << "; ";
      o.require(interior >= 1.9, "interior order below 1.9");
      o.require(interface >= 0.9, "interface order below 0.9");
    }
  }
}

struct Criterion {
  const char* title;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion> kCriteria = {
    {"structure identities", structure_identities},
    {"equilibria", equilibria},
    {"spectral strip", spectral_strip},
    {"imaginary-axis regularity", imaginary_axis},
    {"energy ledger", energy_ledger},
    {"exponential decay", exponential_decay},
    {"kernel/range equivalence", kernel_range},
    {"resolvent boundedness", resolvent_bound},
    {"oracle equivalence", oracle_equivalence},
    {"consistency order", consistency_order},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(kCriteria.size()); ++i) selected.push_back(i);
  }
  bool all = true;
  for (int id : selected) {
    if (id < 1 || id > static_cast<int>(kCriteria.size())) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    Outcome o;
    o.detail.precision(4);
    try {
      kCriteria[static_cast<std::size_t>(id - 1)].run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::printf("criterion %2d %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL",
                kCriteria[static_cast<std::size_t>(id - 1)].title, o.detail.str().c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
