// ejq: spectra, entropy, divergences, regret games and polygon state spaces
// on the simple Euclidean Jordan algebras, one subcommand per quantity.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ejq/channels.hpp"
#include "ejq/harness.hpp"
#include "ejq/info.hpp"
#include "ejq/io.hpp"
#include "ejq/polygon.hpp"
#include "ejq/regret.hpp"

namespace {

using namespace ejq;
using io::format_real;
using io::Report;
using io::ReportFormat;

struct Options {
  std::string format = "table";
  std::optional<std::uint64_t> seed;
};

ReportFormat report_format(const Options& o) { return io::format_from_name(o.format); }

std::uint64_t require_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("EJQ_SEED")) return std::strtoull(env, nullptr, 10);
  throw CLI::ValidationError("--seed", "randomized subcommands require --seed (or EJQ_SEED)");
}

void print_value(const Options& o, const std::string& name, const std::string& value) {
  switch (report_format(o)) {
    case ReportFormat::Table:
      std::cout << value << "\n";
      break;
    case ReportFormat::Csv:
      std::cout << name << "\r\n" << value << "\r\n";
      break;
    case ReportFormat::Json:
      std::cout << "{\n  \"" << name << "\": \"" << value << "\"\n}\n";
      break;
  }
}

std::string spectrum_string(const std::vector<poly::Rat>& spec) {
  std::string out;
  for (size_t i = 0; i < spec.size(); ++i) {
    if (i) out += ", ";
    out += poly::rational_string(spec[i]);
  }
  return out;
}

std::string point_string(const poly::Point& p) {
  return "(" + poly::rational_string(p.x) + ", " + poly::rational_string(p.y) + ")";
}

int cmd_spectrum(const Options& o, const std::string& path) {
  const Element e = io::element_from_json_text(io::read_file(path));
  const SpectralDecomposition dec = eigendecompose(e);
  Report rep;
  rep.title = "spectrum";
  rep.metadata = {{"algebra", e.algebra().name()},
                  {"trace", format_real(trace(e))},
                  {"norm", format_real(norm(e))}};
  rep.columns = {"eigenvalue", "multiplicity", "idempotent_trace"};
  for (int i = 0; i < dec.distinct(); ++i)
    rep.rows.push_back({format_real(dec.eigenvalues[i]), std::to_string(dec.multiplicities[i]),
                        format_real(trace(dec.idempotents[i]))});
  std::cout << rep.render(report_format(o));
  return 0;
}

int cmd_entropy(const Options& o, const std::string& path) {
  const Element e = io::element_from_json_text(io::read_file(path));
  print_value(o, "entropy", format_real(entropy(e)));
  return 0;
}

int cmd_div(const Options& o, const std::string& p_path, const std::string& q_path,
            std::optional<double> alpha) {
  const Element p = io::element_from_json_text(io::read_file(p_path));
  const Element q = io::element_from_json_text(io::read_file(q_path));
  if (alpha) {
    const DivergenceValue d = renyi_sandwiched(make_state(p), make_state(q), *alpha);
    print_value(o, "renyi_divergence", io::format_value(d));
  } else {
    const DivergenceValue d = divergence(p, q);
    print_value(o, "divergence", io::format_value(d));
  }
  return 0;
}

int cmd_capacity(const Options& o, const std::string& path, double tol, long max_iters) {
  const io::StateList list = io::states_from_json_text(io::read_file(path));
  const CapacityResult res = capacity(list.states, tol, max_iters);
  Report rep;
  rep.title = "capacity";
  rep.metadata = {{"algebra", list.algebra.name()},
                  {"capacity", format_real(res.value)},
                  {"gap", format_real(res.gap)},
                  {"iterations", std::to_string(res.iterations)},
                  {"barycenter_entropy", format_real(entropy(res.barycenter))}};
  rep.columns = {"state", "prior", "divergence_to_barycenter"};
  for (size_t i = 0; i < list.states.size(); ++i) {
    const DivergenceValue d = divergence(list.states[i].element(), res.barycenter);
    rep.rows.push_back(
        {std::to_string(i), format_real(res.prior.weights[i]), io::format_value(d)});
  }
  std::cout << rep.render(report_format(o));
  return 0;
}

RegretGame prediction_game(const io::StateList& list, int net) {
  // actions: log-score predictions of barycentric mixtures of the states;
  // singular mixtures score minus infinity against some state, so they are
  // dominated and dropped
  const size_t n = list.states.size();
  std::vector<AffineAction> actions;
  std::vector<int> counts(n, 0);
  std::function<void(size_t, int)> rec = [&](size_t idx, int left) {
    if (idx + 1 == n) {
      counts[idx] = left;
      std::vector<std::pair<double, Element>> terms;
      for (size_t i = 0; i < n; ++i)
        terms.emplace_back(static_cast<double>(counts[i]) / net, list.states[i].element());
      Element mix = linear_combine(terms);
      if (min_eigenvalue(mix) < 1e-9) return;
      actions.push_back({apply_function(mix, [](double v) { return std::log(v); }), 0.0});
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[idx] = c;
      rec(idx + 1, left - c);
    }
  };
  rec(0, net);
  if (actions.empty())
    throw std::invalid_argument("all net predictions are singular; no playable action");
  return make_game(list.states, std::move(actions));
}

int cmd_minimax(const Options& o, const std::string& path, const std::string& fixture, int net,
                double tol) {
  RegretGame game;
  std::string source;
  if (!fixture.empty()) {
    if (fixture != "interval") throw CLI::ValidationError("--fixture", "unknown fixture " + fixture);
    game = interval_fixture_game();
    source = "interval fixture";
  } else {
    if (path.empty()) throw CLI::ValidationError("minimax", "need a state list file or --fixture");
    game = prediction_game(io::states_from_json_text(io::read_file(path)), net);
    source = path;
  }
  const MinimaxResult res = minimax_regret(game, tol);
  Report rep;
  rep.title = "minimax regret";
  rep.metadata = {{"game", source},
                  {"states", std::to_string(game.states.size())},
                  {"actions", std::to_string(game.actions.size())},
                  {"value", format_real(res.value)},
                  {"gap", format_real(res.gap)},
                  {"iterations", std::to_string(res.iterations)}};
  rep.columns = {"side", "weight"};
  for (size_t i = 0; i < game.states.size(); ++i)
    rep.rows.push_back({"state " + std::to_string(i), format_real(res.prior.weights[i])});
  // only the leading action weights are interesting for large nets
  std::vector<std::pair<double, size_t>> byweight;
  for (size_t j = 0; j < res.action_weights.size(); ++j)
    byweight.emplace_back(-res.action_weights[j], j);
  std::sort(byweight.begin(), byweight.end());
  const size_t top = std::min<size_t>(byweight.size(), 8);
  for (size_t k = 0; k < top; ++k)
    rep.rows.push_back(
        {"action " + std::to_string(byweight[k].second), format_real(-byweight[k].first)});
  std::cout << rep.render(report_format(o));
  return 0;
}

int cmd_square(const Options& o, const std::string& point_text, int max_terms) {
  const auto comma = point_text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--point", "expected x,y with rational coordinates");
  const poly::Point p{poly::parse_rational(point_text.substr(0, comma)),
                      poly::parse_rational(point_text.substr(comma + 1))};
  const poly::PolygonSpace sq = poly::unit_square();
  const auto maxima = poly::maximal_spectra(sq, p, max_terms);
  const auto decs = poly::all_decompositions(sq, p, max_terms);
  Report rep;
  rep.title = "unit square decompositions";
  rep.metadata.emplace_back("point", point_string(p));
  std::string spec_line;
  for (size_t i = 0; i < maxima.size(); ++i) {
    if (i) spec_line += " | ";
    spec_line += spectrum_string(maxima[i]);
  }
  rep.metadata.emplace_back("spectrum", spec_line);
  rep.metadata.emplace_back("decompositions", std::to_string(decs.size()));
  rep.columns = {"decomposition", "vertices", "weights", "spectrum", "entropy"};
  for (size_t i = 0; i < decs.size(); ++i) {
    std::string verts, weights;
    for (size_t k = 0; k < decs[i].parts.size(); ++k) {
      if (k) {
        verts += " ";
        weights += " ";
      }
      verts += point_string(sq.vertices[decs[i].parts[k].first]);
      weights += poly::rational_string(decs[i].parts[k].second);
    }
    rep.rows.push_back({std::to_string(i), verts, weights, spectrum_string(decs[i].spectrum()),
                        format_real(decs[i].entropy())});
  }
  std::cout << rep.render(report_format(o));
  return 0;
}

int cmd_probe_polygon(const Options& o, const std::string& path, int grid, int max_terms) {
  poly::PolygonSpace space =
      path.empty() ? poly::unit_square() : io::polygon_from_json_text(io::read_file(path));
  const auto samples = poly::grid_samples(space, grid);
  const poly::ProbeReport probe = poly::spectrality_probe(space, samples, max_terms);
  Report rep;
  rep.title = "polygon spectrality probe";
  rep.metadata = {
      {"polygon", path.empty() ? "unit square" : path},
      {"note", "orthogonal decompositions only; non-orthogonal decompositions are not enumerated"},
      {"grid", std::to_string(grid)},
      {"samples", std::to_string(samples.size())},
      {"max_terms", std::to_string(max_terms)},
      {"spectral", probe.space_spectral ? "yes" : "no"},
      {"caratheodory_3_terms_all", probe.caratheodory_all ? "yes" : "no"},
  };
  if (probe.witness >= 0) {
    const auto& w = probe.points[probe.witness];
    rep.metadata.emplace_back("witness", point_string(w.point));
    rep.columns = {"witness_spectrum", "entropy"};
    std::vector<std::pair<double, std::string>> lines;
    for (const auto& s : w.spectra) {
      double h = 0.0;
      for (const auto& r : s) {
        const double x = r.convert_to<double>();
        if (x > 0) h -= x * std::log(x);
      }
      lines.emplace_back(h, spectrum_string(s));
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [h, s] : lines) rep.rows.push_back({s, format_real(h)});
  }
  std::cout << rep.render(report_format(o));
  return 0;
}

int check_exit(const Options& o, Report rep, bool pass, const std::string& worst) {
  rep.metadata.emplace_back("result", pass ? "PASS" : "FAIL");
  if (!pass && !worst.empty()) rep.metadata.emplace_back("worst_trial", worst);
  std::cout << rep.render(report_format(o));
  return pass ? 0 : 1;
}

int cmd_check_dpi(const Options& o, long trials, int depth) {
  const std::uint64_t seed = require_seed(o);
  Report rep;
  rep.title = "data processing inequality sweep";
  rep.metadata = {{"seed", std::to_string(seed)},
                  {"trials_per_family", std::to_string(trials)},
                  {"depth", std::to_string(depth)},
                  {"tolerance", "-1e-8"}};
  rep.columns = {"algebra", "trials", "binding", "inf_slack", "nonbinding", "min_slack", "status"};
  bool pass = true;
  std::string worst;
  auto run_family = [&](const AlgebraDescriptor& alg, bool assert_family) {
    const harness::DpiStats s = harness::dpi_sweep(alg, seed, trials, depth);
    const bool ok = s.pass();
    rep.rows.push_back({alg.name(), std::to_string(s.trials), std::to_string(s.binding),
                        std::to_string(s.infinite_slack), std::to_string(s.nonbinding),
                        format_real(s.min_slack),
                        assert_family ? (ok ? "PASS" : "FAIL") : "REPORT"});
    if (assert_family && !ok) {
      pass = false;
      worst = "algebra=" + alg.name() + " seed=" + std::to_string(seed + s.worst_trial) +
              " slack=" + format_real(s.min_slack);
    }
  };
  for (const auto& alg : harness::special_algebras()) run_family(alg, true);
  run_family(AlgebraDescriptor::albert(), false);
  return check_exit(o, std::move(rep), pass, worst);
}

int cmd_check_concavity(const Options& o, long pairs) {
  const std::uint64_t seed = require_seed(o);
  Report rep;
  rep.title = "entropy concavity sweep";
  rep.metadata = {{"seed", std::to_string(seed)},
                  {"pairs_per_algebra", std::to_string(pairs)},
                  {"tolerance", "-1e-9"}};
  rep.columns = {"space", "pairs", "min_slack", "status"};
  bool pass = true;
  std::string worst;
  for (const auto& alg : harness::standard_algebras()) {
    const harness::ConcavityStats s = harness::concavity_sweep(alg, seed, pairs);
    const bool ok = s.pass();
    rep.rows.push_back(
        {alg.name(), std::to_string(s.pairs), format_real(s.min_slack), ok ? "PASS" : "FAIL"});
    if (!ok) {
      pass = false;
      worst = "algebra=" + alg.name() + " seed=" + std::to_string(seed + s.worst_trial) +
              " slack=" + format_real(s.min_slack);
    }
  }
  // the square is the counterexample: concavity must fail there
  const poly::PolygonSpace sq = poly::unit_square();
  const double h_center = poly::polygon_entropy(sq, {poly::Rat(1, 2), poly::Rat(1, 2)}).value;
  const double h_a = poly::polygon_entropy(sq, {poly::Rat(1, 2), poly::Rat(1, 4)}).value;
  const double h_b = poly::polygon_entropy(sq, {poly::Rat(1, 2), poly::Rat(3, 4)}).value;
  const bool violated = h_center < 0.5 * (h_a + h_b) - 1e-9;
  rep.rows.push_back({"unit square (counterexample)", "1",
                      format_real(h_center - 0.5 * (h_a + h_b)), violated ? "PASS" : "FAIL"});
  if (!violated) {
    pass = false;
    worst = "square concavity violation not reproduced";
  }
  return check_exit(o, std::move(rep), pass, worst);
}

int cmd_check_derivative(const Options& o, long trials) {
  const std::uint64_t seed = require_seed(o);
  Report rep;
  rep.title = "trace derivative check (f = -x ln x, central differences)";
  rep.metadata = {{"seed", std::to_string(seed)},
                  {"trials_per_algebra", std::to_string(trials)},
                  {"tolerance_first", "1e-7"},
                  {"tolerance_second", "1e-5"}};
  rep.columns = {"algebra", "trials", "worst_first_rel", "worst_second_rel", "status"};
  bool pass = true;
  std::string worst;
  for (const auto& alg : harness::standard_algebras()) {
    const harness::DerivativeStats s = harness::derivative_sweep(alg, seed, trials);
    const bool ok = s.pass();
    rep.rows.push_back({alg.name(), std::to_string(s.trials), format_real(s.worst_first),
                        format_real(s.worst_second), ok ? "PASS" : "FAIL"});
    if (!ok) {
      pass = false;
      worst = "algebra=" + alg.name() + " seed=" + std::to_string(seed + s.worst_trial);
    }
  }
  return check_exit(o, std::move(rep), pass, worst);
}

int cmd_check_locality(const Options& o, long pairs) {
  const std::uint64_t seed = require_seed(o);
  Report rep;
  rep.title = "locality of the information divergence";
  rep.metadata = {{"seed", std::to_string(seed)},
                  {"pairs_per_algebra", std::to_string(pairs)},
                  {"t_grid", "0.1..0.9"},
                  {"tolerance", "1e-8"}};
  rep.columns = {"algebra", "pairs", "worst_deviation", "status"};
  bool pass = true;
  std::string worst;
  const AlgebraDescriptor algebras[] = {
      AlgebraDescriptor::spin(3), AlgebraDescriptor::herm(Ring::C, 3),
      AlgebraDescriptor::herm(Ring::H, 2), AlgebraDescriptor::albert()};
  for (const auto& alg : algebras) {
    const harness::LocalityStats s = harness::locality_sweep(alg, seed, pairs);
    const bool ok = s.pass();
    rep.rows.push_back({alg.name(), std::to_string(s.pairs), format_real(s.worst_deviation),
                        ok ? "PASS" : "FAIL"});
    if (!ok) {
      pass = false;
      worst = "algebra=" + alg.name() + " seed=" + std::to_string(seed + s.worst_trial) +
              " deviation=" + format_real(s.worst_deviation);
    }
  }
  return check_exit(o, std::move(rep), pass, worst);
}

int cmd_check_bregman(const Options& o, long trials) {
  const std::uint64_t seed = require_seed(o);
  Report rep;
  rep.title = "bregman identity check";
  rep.metadata = {{"seed", std::to_string(seed)}};
  rep.columns = {"case", "value", "expected", "status"};
  bool pass = true;
  std::string worst;

  // interval fixture: the identity is violated by exactly 2/3
  const RegretGame g = interval_fixture_game();
  const PriorVector prior = make_prior({1.0 / 3.0, 2.0 / 3.0});
  const std::vector<StateElement> rhos = {interval_state(0.0), interval_state(1.0)};
  const Element sigma = interval_state(0.5).element();
  const Element bar = add(scale(1.0 / 3.0, rhos[0].element()), scale(2.0 / 3.0, rhos[1].element()));
  double lhs = 0.0, mid = 0.0;
  for (size_t i = 0; i < rhos.size(); ++i) {
    lhs += prior.weights[i] * regret_state(g, rhos[i].element(), sigma);
    mid += prior.weights[i] * regret_state(g, rhos[i].element(), bar);
  }
  const double last = regret_state(g, bar, sigma);
  const double residual = bregman_identity_residual(g, prior, rhos, sigma);
  auto expect = [&](const std::string& name, double got, double want) {
    const bool ok = got == want;
    rep.rows.push_back({name, format_real(got), format_real(want), ok ? "PASS" : "FAIL"});
    if (!ok) {
      pass = false;
      worst = "fixture case " + name;
    }
  };
  expect("interval lhs sum t_i D(sigma_i, sigma)", lhs, 0.0);
  expect("interval sum t_i D(sigma_i, barycenter)", mid, 2.0 / 3.0);
  expect("interval D(barycenter, sigma)", last, 0.0);
  expect("interval identity residual", residual, 2.0 / 3.0);

  // differentiable F: identity holds to 1e-8
  const auto c2 = AlgebraDescriptor::herm(Ring::C, 2);
  auto f_value = [](const Element& x) { return -entropy(x); };
  auto f_grad = [](const Element& x) {
    return apply_function(x, [](double v) { return std::log(v) + 1.0; });
  };
  double worst_res = 0.0;
  long worst_trial = -1;
  for (long t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
    std::vector<StateElement> rs = {random_state(c2, rng), random_state(c2, rng),
                                    random_state(c2, rng)};
    const auto w = random_simplex(3, rng);
    const StateElement s = random_state(c2, rng);
    const double r = bregman_identity_residual(f_value, f_grad, make_prior(w), rs, s.element());
    if (r > worst_res) {
      worst_res = r;
      worst_trial = t;
    }
  }
  const bool diff_ok = worst_res < 1e-8;
  rep.rows.push_back({"information divergence residual (max over " + std::to_string(trials) +
                          " trials)",
                      format_real(worst_res), "< 1e-8", diff_ok ? "PASS" : "FAIL"});
  if (!diff_ok) {
    pass = false;
    worst = "differentiable case seed=" + std::to_string(seed + worst_trial) +
            " residual=" + format_real(worst_res);
  }
  return check_exit(o, std::move(rep), pass, worst);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum information quantities on Euclidean Jordan algebras"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--format", opts.format, "output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "seed for randomized subcommands");

  std::string element_path, p_path, q_path, states_path, polygon_path, point_text, fixture;
  std::optional<double> alpha;
  double alpha_value = 0.0;
  double tol = 1e-8;
  double game_tol = 1e-4;
  long max_iters = 200000;
  long trials = 1000;
  long pairs = 500;
  long loc_pairs = 50;
  long deriv_trials = 100;
  long breg_trials = 20;
  int depth = 3;
  int net = 10;
  int grid = 50;
  int max_terms = 4;

  auto* c_spec = app.add_subcommand("spectrum", "spectral decomposition of an element file");
  c_spec->add_option("file", element_path, "element JSON file")->required();

  auto* c_ent = app.add_subcommand("entropy", "entropy of a positive element");
  c_ent->add_option("file", element_path, "element JSON file")->required();

  auto* c_div =
      app.add_subcommand("div", "information divergence D(P||Q), or sandwiched Renyi with --alpha");
  c_div->add_option("P", p_path, "element JSON file")->required();
  c_div->add_option("Q", q_path, "element JSON file")->required();
  auto* alpha_opt = c_div->add_option("--alpha", alpha_value, "Renyi order (> 0, != 1)");

  auto* c_cap = app.add_subcommand("capacity", "Blahut-Arimoto capacity of a state list");
  c_cap->add_option("file", states_path, "state list JSON file")->required();
  c_cap->add_option("--tol", tol, "duality gap target");
  c_cap->add_option("--max-iters", max_iters, "iteration cap");

  auto* c_mini = app.add_subcommand("minimax", "minimax regret of a prediction game or fixture");
  c_mini->add_option("file", states_path, "state list JSON file");
  c_mini->add_option("--fixture", fixture, "built-in game: interval");
  c_mini->add_option("--net", net, "barycentric net resolution for prediction actions");
  c_mini->add_option("--tol", game_tol, "duality gap target");

  auto* c_square = app.add_subcommand("square", "orthogonal decompositions in the unit square");
  c_square->add_option("--point", point_text, "rational point x,y")->required();
  c_square->add_option("--max-terms", max_terms, "clique size cap");

  auto* c_probe = app.add_subcommand("probe-polygon", "spectrality probe over a sample grid");
  c_probe->add_option("file", polygon_path, "polygon JSON file (default: unit square)");
  c_probe->add_option("--grid", grid, "grid resolution n (samples at i/n)");
  c_probe->add_option("--max-terms", max_terms, "clique size cap");

  auto* c_check = app.add_subcommand("check", "numerical verification sweeps");
  c_check->require_subcommand(1);
  auto* k_dpi = c_check->add_subcommand("dpi", "data processing inequality sweep");
  k_dpi->add_option("--trials", trials, "trials per algebra family");
  k_dpi->add_option("--depth", depth, "channel composition depth");
  auto* k_conc =
      c_check->add_subcommand("concavity", "entropy concavity sweep plus square counterexample");
  k_conc->add_option("--pairs", pairs, "positive pairs per algebra");
  auto* k_deriv =
      c_check->add_subcommand("derivative", "trace derivative formulas vs central differences");
  k_deriv->add_option("--trials", deriv_trials, "trials per algebra");
  auto* k_loc = c_check->add_subcommand("locality", "divergence locality on orthogonal mixtures");
  k_loc->add_option("--pairs", loc_pairs, "orthogonal pairs per algebra");
  auto* k_breg = c_check->add_subcommand(
      "bregman-identity", "interval fixture violation and differentiable identity");
  k_breg->add_option("--trials", breg_trials, "random differentiable trials");

  for (CLI::App* sc : {c_spec, c_ent, c_div, c_cap, c_mini, c_square, c_probe, c_check, k_dpi,
                       k_conc, k_deriv, k_loc, k_breg})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (seed_opt->count() > 0) opts.seed = seed_value;
  if (alpha_opt->count() > 0) alpha = alpha_value;

  try {
    if (c_spec->parsed()) return cmd_spectrum(opts, element_path);
    if (c_ent->parsed()) return cmd_entropy(opts, element_path);
    if (c_div->parsed()) return cmd_div(opts, p_path, q_path, alpha);
    if (c_cap->parsed()) return cmd_capacity(opts, states_path, tol, max_iters);
    if (c_mini->parsed()) return cmd_minimax(opts, states_path, fixture, net, game_tol);
    if (c_square->parsed()) return cmd_square(opts, point_text, max_terms);
    if (c_probe->parsed()) return cmd_probe_polygon(opts, polygon_path, grid, max_terms);
    if (c_check->parsed()) {
      if (k_dpi->parsed()) return cmd_check_dpi(opts, trials, depth);
      if (k_conc->parsed()) return cmd_check_concavity(opts, pairs);
      if (k_deriv->parsed()) return cmd_check_derivative(opts, deriv_trials);
      if (k_loc->parsed()) return cmd_check_locality(opts, loc_pairs);
      if (k_breg->parsed()) return cmd_check_bregman(opts, breg_trials);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
