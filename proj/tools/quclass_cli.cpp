// quclass: joint-measurability toolkit for MUB-driven qudit observables.
//
//   quclass basis    [n] [--builtin qubit|qutrit] [--gellmann] [--load FILE]
//   quclass certify  [basis] [--eta X]
//   quclass geometry [basis]
//   quclass dist     [basis] [--state PRESET | --state-file FILE] [--eta X]
//   quclass charfun  [basis] [--state ...] [--grid K]
//   quclass sample   [basis] [--state ...] [--eta X] [--shots N]
//
// Every command writes into --out (default ./quclass-out) and records its
// configuration in manifest.json. Exit codes: 0 ok, 2 usage or domain error,
// 3 validation failure or anomaly, 4 invalid distribution, 5 I/O or format.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quclass/charfun.hpp"
#include "quclass/error.hpp"
#include "quclass/geometry.hpp"
#include "quclass/io.hpp"
#include "quclass/mub.hpp"
#include "quclass/operator_basis.hpp"
#include "quclass/povm.hpp"
#include "quclass/sampler.hpp"
#include "quclass/states.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace quclass;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kAnomaly = 3;
constexpr int kInvalidDistribution = 4;
constexpr int kFormat = 5;

struct Config {
  std::string command;
  int n = 0;
  std::string builtin;
  bool gellmann = false;
  std::string load;
  std::string out = "quclass-out";
  std::uint64_t seed = 0;
  std::optional<double> eta;
  std::string state = "maximally-mixed";
  std::string state_file;
  std::size_t grid = 50;
  std::uint64_t shots = 100000;
  std::vector<std::string> tol_overrides;
  Tolerances tol;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double num(double x) { return io::round15(x); }

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

void apply_tolerances(Config& c) {
  for (const auto& kv : c.tol_overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects name=value, got " + kv);
    const std::string name = kv.substr(0, eq);
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
    } catch (const std::exception&) {
      throw UsageError("bad tolerance value in " + kv);
    }
    if (!(v > 0.0)) throw UsageError("tolerances must be positive: " + kv);
    auto& t = c.tol;
    if (name == "hermitian") t.hermitian = v;
    else if (name == "jacobi_offdiag") t.jacobi_offdiag = v;
    else if (name == "jacobi_max_sweeps") t.jacobi_max_sweeps = static_cast<int>(v);
    else if (name == "psd") t.psd = v;
    else if (name == "distribution") t.distribution = v;
    else if (name == "sample_clip") t.sample_clip = v;
    else if (name == "basis_pass") t.basis_pass = v;
    else if (name == "boundary") t.boundary = v;
    else if (name == "dedup") t.dedup = v;
    else if (name == "rank") t.rank = v;
    else if (name == "lp") t.lp = v;
    else throw UsageError("unknown tolerance " + name);
  }
}

json tolerances_json(const Tolerances& t) {
  return {{"hermitian", t.hermitian},   {"jacobi_offdiag", t.jacobi_offdiag},
          {"jacobi_max_sweeps", t.jacobi_max_sweeps},
          {"psd", t.psd},               {"distribution", t.distribution},
          {"sample_clip", t.sample_clip}, {"basis_pass", t.basis_pass},
          {"boundary", t.boundary},     {"dedup", t.dedup},
          {"rank", t.rank},             {"lp", t.lp}};
}

class Run {
 public:
  explicit Run(const Config& c) : cfg_(c) { std::filesystem::create_directories(cfg_.out); }

  void write(const std::string& name, const std::string& text) {
    io::write_file((std::filesystem::path(cfg_.out) / name).string(), text);
    files_.push_back(name);
  }
  void write_json(const std::string& name, const json& j) { write(name, j.dump(2) + "\n"); }

  void manifest(const std::string& basis_label, int exit_code) {
    json cfg{{"n", cfg_.n},
             {"builtin", cfg_.builtin},
             {"gellmann", cfg_.gellmann},
             {"load", cfg_.load},
             {"seed", cfg_.seed},
             {"eta", cfg_.eta ? json(num(*cfg_.eta)) : json(nullptr)},
             {"state", cfg_.state},
             {"state_file", cfg_.state_file},
             {"grid", cfg_.grid},
             {"shots", cfg_.shots}};
    json m{{"tool", "quclass"},
           {"version", "0.1.0"},
           {"command", cfg_.command},
           {"basis", basis_label},
           {"config", std::move(cfg)},
           {"tolerances", tolerances_json(cfg_.tol)},
           {"files", files_},
           {"exit_code", exit_code}};
    io::write_file((std::filesystem::path(cfg_.out) / "manifest.json").string(), m.dump(2) + "\n");
  }

 private:
  const Config& cfg_;
  std::vector<std::string> files_;
};

basis::OperatorBasis select_basis(const Config& c, json* mub_report = nullptr) {
  if (!c.load.empty()) {
    const std::string text = io::read_file(c.load);
    if (text.find("\"bases\"") != std::string::npos) {
      const auto fam = io::mub_from_json(text);
      const auto rep = mub::unbiasedness_report(fam, c.tol.basis_pass);
      if (mub_report)
        *mub_report = {{"n", rep.n},
                       {"basis_count", rep.basis_count},
                       {"max_intra_deviation", num(rep.max_intra_deviation)},
                       {"max_cross_deviation", num(rep.max_cross_deviation)},
                       {"pass", rep.pass}};
      auto b = basis::from_mubs(fam, basis::default_spectra(fam.n));
      b.label = "loaded-mub-n" + std::to_string(fam.n);
      return b;
    }
    return io::basis_from_json(text, "loaded");
  }
  if (c.gellmann) {
    if (c.n != 0 && c.n != 3) throw UsageError("--gellmann is only defined for n = 3");
    return basis::gell_mann_basis();
  }
  std::string builtin = c.builtin;
  if (builtin.empty()) {
    if (c.n == 0 || c.n == 3) builtin = "qutrit";
    else if (c.n == 2) builtin = "qubit";
  }
  if (builtin == "qutrit") {
    if (c.n != 0 && c.n != 3) throw UsageError("--builtin qutrit needs n = 3");
    return basis::qutrit_builtin();
  }
  if (builtin == "qubit") {
    if (c.n != 0 && c.n != 2) throw UsageError("--builtin qubit needs n = 2");
    return basis::pauli_basis();
  }
  if (!builtin.empty()) throw UsageError("unknown builtin " + builtin);
  mub::PrimePower pp;
  try {
    pp = mub::prime_power_decompose(c.n);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPrimePower) throw;
    throw Error(ErrorCode::NotPrimePower, "n = " + std::to_string(c.n) +
                                              " is not a prime power; no MUB construction is known. "
                                              "Supply a candidate family with --load FILE");
  }
  return basis::from_mubs(mub::build_mubs(pp), basis::default_spectra(c.n));
}

struct State {
  std::string description;
  std::optional<CMat> rho;                  // absent for Bloch files
  std::optional<states::BlochVector> theta; // always set
};

State select_state(const Config& c, const basis::OperatorBasis& b) {
  const auto n = static_cast<std::size_t>(b.n);
  State s;
  if (!c.state_file.empty()) {
    const auto f = io::state_from_json(io::read_file(c.state_file));
    s.description = "file:" + c.state_file;
    if (f.kind == io::StateFile::Kind::Density) {
      if (f.mat.dim() != n) throw Error(ErrorCode::FormatError, "state dimension does not match the basis");
      const states::DensityMatrix rho(f.mat, c.tol);
      s.rho = rho.mat();
      s.theta = states::bloch_from_density(rho, b);
    } else {
      if (f.theta.theta.size() != b.size()) throw Error(ErrorCode::FormatError, "theta length does not match the basis");
      s.theta = f.theta;
    }
    return s;
  }
  s.description = c.state;
  CMat rho;
  if (c.state == "maximally-mixed") {
    rho = states::DensityMatrix::maximally_mixed(n).mat();
  } else if (c.state == "mixed") {
    rho = states::random_state(n, states::StateKind::Mixed, c.seed).mat();
  } else if (c.state == "pure" || c.state == "random") {
    rho = states::random_state(n, states::StateKind::Pure, c.seed).mat();
  } else if (c.state.rfind("vertex:", 0) == 0) {
    std::size_t m = 0, k = 0;
    char tail = 0;
    if (std::sscanf(c.state.c_str(), "vertex:%zu:%zu%c", &m, &k, &tail) != 2 || m >= b.family_count() || k >= n)
      throw UsageError("--state vertex:m:k needs a family m < " + std::to_string(b.family_count()) +
                       " and outcome k < " + std::to_string(n));
    rho = states::DensityMatrix::pure(b.eigenvectors[m].column(k)).mat();
  } else {
    throw UsageError("unknown state preset " + c.state);
  }
  s.rho = rho;
  s.theta = states::bloch_from_density(rho, b);
  return s;
}

double resolve_eta(const Config& c, const basis::OperatorBasis& b) {
  if (c.eta) {
    if (!(*c.eta >= 0.0 && *c.eta <= 1.0)) throw UsageError("--eta must lie in [0, 1]");
    return *c.eta;
  }
  return povm::critical_eta(b, false, c.tol).analytic;
}

json validation_json(const basis::ValidationReport& v) {
  return {{"hermiticity", num(v.hermiticity)}, {"trace", num(v.trace)},
          {"orthonormality", num(v.orthonormality)}, {"commutation", num(v.commutation)},
          {"unbiasedness", num(v.unbiasedness)}, {"eigentable", num(v.eigentable)},
          {"complete", v.complete}, {"pass", v.pass}};
}

int cmd_basis(const Config& c, Run& run, std::string& label) {
  json mub_report;
  const auto b = select_basis(c, &mub_report);
  label = b.label;
  const auto v = basis::validate(b, c.tol.basis_pass);
  run.write("basis.json", io::basis_to_json(b) + "\n");
  json rep{{"basis", b.label}, {"n", b.n}, {"operators", b.size()}, {"families", b.family_count()},
           {"validation", validation_json(v)}};
  if (!mub_report.is_null()) rep["mub_candidate"] = mub_report;
  run.write_json("validation.json", rep);
  std::printf("%s: n=%d, %zu operators in %zu families, validation %s\n", b.label.c_str(), b.n, b.size(),
              b.family_count(), v.pass ? "PASS" : "FAIL");
  return v.pass ? kOk : kAnomaly;
}

int cmd_certify(const Config& c, Run& run, std::string& label) {
  const auto b = select_basis(c);
  label = b.label;
  const auto ce = povm::critical_eta(b, true, c.tol);
  json rep{{"basis", b.label},
           {"eta_star_analytic", num(ce.analytic)},
           {"eta_star_bisection", num(ce.bisection)},
           {"worst_face_eigenvalue", num(ce.worst_face_eigenvalue)},
           {"worst_outcome", povm::outcome_label(b, ce.worst_outcome)},
           {"inverse_sqrt_n2_minus_1", num(1.0 / std::sqrt(double(b.n) * b.n - 1.0))}};
  std::printf("eta* = %.10f (bisection %.10f), worst face eigenvalue %.10f at %s\n", ce.analytic, ce.bisection,
              ce.worst_face_eigenvalue, povm::outcome_label(b, ce.worst_outcome).c_str());
  int code = kOk;
  if (std::abs(ce.analytic - ce.bisection) > 1e-9) code = kAnomaly;
  if (c.eta) {
    if (!(*c.eta >= 0.0 && *c.eta <= 1.0)) throw UsageError("--eta must lie in [0, 1]");
    const auto g = povm::global_povm(b, *c.eta, c.tol);
    rep["eta"] = num(*c.eta);
    rep["min_eigenvalue"] = num(g.min_eigenvalue);
    rep["min_eigenvalue_outcome"] = povm::outcome_label(b, g.argmin);
    rep["completeness_defect"] = num(povm::completeness_defect(g));
    rep["jointly_measurable"] = g.psd;
    std::printf("eta = %.10f: min eigenvalue %.3e, %s\n", *c.eta, g.min_eigenvalue,
                g.psd ? "jointly measurable" : "NOT jointly measurable");
  }
  run.write_json("certify.json", rep);
  return code;
}

int cmd_geometry(const Config& c, Run& run, std::string& label) {
  const auto b = select_basis(c);
  label = b.label;
  const auto h = geometry::h_polytope(b, c.tol);
  const auto v = geometry::mub_vertices(b);
  const auto tan = geometry::centroid_tangency(h, v, c.tol);
  const auto edges = geometry::edge_adjacency(v, h, c.tol);
  const double r = geometry::insphere_radius(h);

  json verts = json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < v.vertices.size(); ++i) {
    verts.push_back(numbers(v.vertices[i]));
    std::vector<std::string> row{std::to_string(i / static_cast<std::size_t>(b.n)),
                                 std::to_string(i % static_cast<std::size_t>(b.n))};
    for (double x : v.vertices[i]) row.push_back(io::format_number(x));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> header{"family", "outcome"};
  for (std::size_t i = 0; i < b.size(); ++i) header.push_back("theta" + std::to_string(i + 1));
  run.write("vertices.csv", io::csv(header, rows));

  json normals = json::array();
  for (const auto& w : h.normals) normals.push_back(numbers(w));
  json norms = json::array();
  for (double x : tan.centroid_norms) norms.push_back(std::isnan(x) ? json(nullptr) : json(num(x)));
  json pairs = json::array();
  for (const auto& [i, j] : edges.pairs) pairs.push_back({i, j});

  json rep{{"basis", b.label},
           {"dimension", h.dimension},
           {"faces", h.normals.size()},
           {"mub_vertices", v.vertices.size()},
           {"insphere_radius", num(r)},
           {"edges", edges.edges},
           {"orthogonal_vertex_pairs", edges.orthogonal_pairs},
           {"centroid_tangency",
            {{"pass", tan.pass},
             {"faces_without_vertices", tan.faces_without_vertices},
             {"max_norm_deviation", num(tan.max_norm_deviation)},
             {"max_direction_defect", num(tan.max_direction_defect)},
             {"max_plane_residual", num(tan.max_plane_residual)}}}};
  std::printf("%zu faces, %zu MUB vertices, %zu edges (%zu orthogonal vertex pairs), insphere %.10f, tangency %s\n",
              h.normals.size(), v.vertices.size(), edges.edges, edges.orthogonal_pairs, r,
              tan.pass ? "PASS" : "FAIL");
  if (h.dimension <= 14) {
    const auto en = geometry::enumerate_vertices(h, c.tol);
    const auto cmp = geometry::compare_vertex_sets(v, en.polytope);
    rep["enumeration"] = {{"vertices", en.count},
                          {"coarse_vertices", en.coarse_count},
                          {"peak_rays", en.peak_rays},
                          {"equals_mub_vertices", cmp.same_set}};
    std::printf("vertex enumeration: %zu vertices, %s the MUB vertex set\n", en.count,
                cmp.same_set ? "equal to" : "different from");
  }
  rep["vertices"] = std::move(verts);
  rep["edge_pairs"] = std::move(pairs);
  rep["centroid_norms"] = std::move(norms);
  rep["normals"] = std::move(normals);
  run.write_json("geometry.json", rep);
  return tan.pass ? kOk : kAnomaly;
}

povm::JointDistribution distribution(const Config& c, const basis::OperatorBasis& b, const State& s, double eta) {
  if (s.rho) return povm::joint_distribution(*s.rho, povm::global_povm(b, eta, c.tol), c.tol);
  return povm::joint_distribution(*s.theta, b, eta, c.tol);
}

int cmd_dist(const Config& c, Run& run, std::string& label) {
  const auto b = select_basis(c);
  label = b.label;
  const auto s = select_state(c, b);
  const double eta = resolve_eta(c, b);
  const auto d = distribution(c, b, s, eta);

  std::vector<std::string> header, row;
  double total = 0.0;
  for (std::size_t l = 0; l < d.p.size(); ++l) {
    header.push_back(povm::outcome_label(b, l));
    row.push_back(io::format_number(d.p[l]));
    total += d.p[l];
  }
  run.write("distribution.csv", io::csv(header, {row}));
  json marg = json::array();
  for (std::size_t m = 0; m < b.family_count(); ++m) marg.push_back(numbers(povm::family_marginal(b, d, m)));
  run.write_json("distribution.json", {{"basis", b.label},
                                       {"state", s.description},
                                       {"eta", num(eta)},
                                       {"outcomes", d.p.size()},
                                       {"sum", num(total)},
                                       {"min_p", num(d.min_p)},
                                       {"valid", d.valid},
                                       {"family_marginals", std::move(marg)}});
  std::printf("%zu outcomes at eta = %.10f, sum %.15g, min p %.3e%s\n", d.p.size(), eta, total, d.min_p,
              d.valid ? "" : " (signed: not a probability distribution)");
  return d.valid ? kOk : kInvalidDistribution;
}

int cmd_charfun(const Config& c, Run& run, std::string& label) {
  const auto b = select_basis(c);
  label = b.label;
  const auto s = select_state(c, b);
  if (!s.rho) throw UsageError("charfun needs a density matrix, not a Bloch vector");
  const auto grid = charfun::random_grid(b, c.grid, c.seed);
  const auto p = povm::joint_distribution(*s.theta, b, 1.0, c.tol);

  std::vector<std::string> header;
  for (std::size_t i = 0; i < b.size(); ++i) header.push_back("t" + std::to_string(i + 1));
  for (const char* h : {"re_mh", "im_mh", "re_classical", "im_classical"}) header.emplace_back(h);
  std::vector<std::vector<std::string>> rows;
  double worst = 0.0;
  std::size_t argmax = 0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const cplx q = charfun::mh_charfun(*s.rho, b, grid[g]);
    const cplx k = charfun::classical_charfun(p, b, grid[g]);
    if (std::abs(q - k) > worst) {
      worst = std::abs(q - k);
      argmax = g;
    }
    std::vector<std::string> row;
    for (double x : grid[g].t) row.push_back(io::format_number(x));
    for (double x : {q.real(), q.imag(), k.real(), k.imag()}) row.push_back(io::format_number(x));
    rows.push_back(std::move(row));
  }
  run.write("charfun.csv", io::csv(header, rows));
  run.write_json("charfun.json", {{"basis", b.label},
                                  {"state", s.description},
                                  {"grid_points", grid.size()},
                                  {"max_deviation", num(worst)},
                                  {"argmax", argmax},
                                  {"coincide", worst < 1e-9},
                                  {"min_p_at_eta_1", num(p.min_p)}});
  std::printf("max |phi_MH - phi_classical| = %.3e over %zu points\n", worst, grid.size());
  return kOk;
}

int cmd_sample(const Config& c, Run& run, std::string& label) {
  const auto b = select_basis(c);
  label = b.label;
  const auto s = select_state(c, b);
  const double eta = resolve_eta(c, b);
  const auto d = distribution(c, b, s, eta);
  const auto counts = sampler::sample(d, c.shots, c.seed, c.tol);
  const auto fit = sampler::goodness_of_fit(counts, d.p);

  std::vector<std::vector<std::string>> rows;
  for (std::size_t l = 0; l < d.p.size(); ++l) {
    const double f = static_cast<double>(counts.counts[l]) / static_cast<double>(counts.total);
    rows.push_back({povm::outcome_label(b, l), io::format_number(d.p[l]), io::format_number(f),
                    io::format_number(f - d.p[l])});
  }
  run.write("sample.csv", io::csv({"outcome", "p", "frequency", "deviation"}, rows));
  json marg = json::array();
  for (std::size_t m = 0; m < b.family_count(); ++m) {
    const auto emp = sampler::empirical_marginal(b, counts, m);
    const auto ana = povm::family_marginal(b, d, m);
    marg.push_back({{"family", m}, {"tv", num(sampler::total_variation(emp, ana))}});
  }
  run.write_json("sample.json", {{"basis", b.label},
                                 {"state", s.description},
                                 {"eta", num(eta)},
                                 {"shots", counts.total},
                                 {"seed", counts.seed},
                                 {"chi2", num(fit.chi2)},
                                 {"dof", fit.dof},
                                 {"chi2_quantile_999", num(fit.quantile999)},
                                 {"chi2_ok", fit.chi2_ok},
                                 {"tv", num(fit.tv)},
                                 {"family_marginals", std::move(marg)}});
  std::printf("%llu shots: chi2 %.3f (dof %zu, 99.9%% point %.3f), tv %.5f\n",
              static_cast<unsigned long long>(counts.total), fit.chi2, fit.dof, fit.quantile999, fit.tv);
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimePower:
    case ErrorCode::InvalidArgument:
    case ErrorCode::EtaOutOfRange:
    case ErrorCode::DimensionMismatch:
      return kUsage;
    case ErrorCode::InvalidDistribution:
      return kInvalidDistribution;
    case ErrorCode::FormatError:
      return kFormat;
    default:
      return kAnomaly;
  }
}

void add_common(CLI::App* sub, Config& c, bool with_state) {
  sub->add_option("n", c.n, "Dimension (prime power; 2 and 3 select the builtin bases)")->check(CLI::Range(2, 16));
  sub->add_option("--builtin", c.builtin, "Builtin basis")->check(CLI::IsMember({"qubit", "qutrit"}));
  sub->add_flag("--gellmann", c.gellmann, "Use the scaled Gell-Mann basis (n = 3)");
  sub->add_option("--load", c.load, "Operator basis or MUB family JSON");
  sub->add_option("--out", c.out, "Output directory");
  sub->add_option("--seed", c.seed, "Seed for every random choice");
  sub->add_option("--tol", c.tol_overrides, "Tolerance override name=value (repeatable)");
  if (with_state) {
    sub->add_option("--state", c.state, "maximally-mixed | mixed | pure | random | vertex:m:k");
    sub->add_option("--state-file", c.state_file, "State JSON (density or bloch)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quclass: joint measurability of MUB-driven qudit observables"};
  app.require_subcommand(1);
  Config c;

  auto* basis = app.add_subcommand("basis", "Build and validate an operator basis");
  add_common(basis, c, false);
  auto* certify = app.add_subcommand("certify", "Critical unsharpness and POVM positivity");
  add_common(certify, c, false);
  certify->add_option("--eta", c.eta, "Check the global POVM at this eta");
  auto* geom = app.add_subcommand("geometry", "Classicality polytope report");
  add_common(geom, c, false);
  auto* dist = app.add_subcommand("dist", "Joint outcome distribution");
  add_common(dist, c, true);
  dist->add_option("--eta", c.eta, "Unsharpness (default: critical value)");
  auto* cf = app.add_subcommand("charfun", "Characteristic functions on a random grid");
  add_common(cf, c, true);
  cf->add_option("--grid", c.grid, "Grid points")->check(CLI::Range(1, 100000));
  auto* smp = app.add_subcommand("sample", "Monte-Carlo joint measurement");
  add_common(smp, c, true);
  smp->add_option("--eta", c.eta, "Unsharpness (default: critical value)");
  smp->add_option("--shots", c.shots, "Number of shots")->check(CLI::Range(1, 1000000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  std::map<CLI::App*, int (*)(const Config&, Run&, std::string&)> commands{
      {basis, cmd_basis}, {certify, cmd_certify}, {geom, cmd_geometry},
      {dist, cmd_dist},   {cf, cmd_charfun},      {smp, cmd_sample}};
  CLI::App* chosen = app.get_subcommands().front();
  c.command = chosen->get_name();

  std::string label;
  int rc = kOk;
  try {
    apply_tolerances(c);
    Run run(c);
    try {
      rc = commands.at(chosen)(c, run, label);
    } catch (const Error& e) {
      rc = exit_code_for(e.code());
      std::cerr << "error: " << e.what() << "\n";
    } catch (const UsageError& e) {
      rc = kUsage;
      std::cerr << "usage error: " << e.what() << "\n";
    }
    run.manifest(label, rc);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFormat;
  }
  return rc;
}
