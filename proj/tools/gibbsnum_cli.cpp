// Command-line front end: exact cylinder measures, digit expansions, Gibbs
// diagnostics, stochastic-matrix limits and the golden-ratio convolutions.
// Output is deterministic for a fixed argument list and seed; exact values
// print as rationals / quadratic literals unless --float is also given.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gibbsnum/baser.hpp"
#include "gibbsnum/gibbs.hpp"
#include "gibbsnum/golden.hpp"
#include "gibbsnum/numeration.hpp"
#include "gibbsnum/specio.hpp"
#include "gibbsnum/stochlimit.hpp"

using nlohmann::json;
using namespace gibbsnum;

namespace {

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  for (char c : text) {
    if (c == ' ' || c == ',') continue;
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in word: " + text);
    out.push_back(c - '0');
  }
  return out;
}

std::string word_to_string(const std::vector<int>& w) {
  std::string s;
  for (int d : w) s += static_cast<char>('0' + d);
  return s;
}

QuadraticNumber parse_quad_or_fail(const std::string& text) {
  auto q = QuadraticNumber::parse(text);
  if (!q) throw std::invalid_argument("bad exact literal: " + text);
  return *q;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- expand --

struct ExpandOptions {
  std::string system = "parry";
  std::string x_text;
  int digits = 16;
  long r = 2;
  bool encode3_flag = false;
  bool as_float = false;
};

int run_expand(const ExpandOptions& opt) {
  json out;
  out["system"] = opt.system;
  out["x"] = opt.x_text;
  std::vector<int> digits;
  if (opt.system == "base-r") {
    auto x = parse_rational(opt.x_text);
    if (!x) throw std::invalid_argument("bad rational literal: " + opt.x_text);
    digits = base_r_expand(*x, opt.r, opt.digits);
    out["r"] = opt.r;
    out["reconstruction_error_bound"] =
        rational_to_string(pow_rational(Rational(1, opt.r), opt.digits));
    out["admissible"] = true;
  } else {
    QuadraticNumber x = parse_quad_or_fail(opt.x_text);
    QuadraticNumber bound;
    if (opt.system == "parry") {
      digits = parry_expand(x, opt.digits);
      bound = parry_tail_bound(opt.digits);
    } else if (opt.system == "neg-beta") {
      digits = neg_beta_expand(x, opt.digits);
      bound = neg_beta_tail_bound(opt.digits);
    } else {
      throw std::invalid_argument("unknown system: " + opt.system);
    }
    out["reconstruction_error_bound"] = bound.to_string();
    if (opt.as_float) out["reconstruction_error_bound_float"] = bound.to_double();
    out["admissible"] = is_admissible(digits).admissible;
  }
  out["digits"] = digits;
  if (opt.encode3_flag) {
    if (opt.system == "base-r")
      throw std::invalid_argument("--encode3 needs a binary expansion system");
    auto encoded = encode3(digits);
    out["encode3"]["code"] = encoded.code;
    out["encode3"]["suffix"] = encoded.suffix;
  }
  emit(out);
  return 0;
}

// --------------------------------------------------------------- measure --

struct SpecOptions {
  std::string name = "mu4";
  int r = 2;
  std::string p_text;
  std::string P_text;
  std::string pi_text;
  std::string file;
};

MatrixMeasureSpec resolve_spec(const SpecOptions& opt) {
  if (opt.name == "mu3") return mu3_spec(opt.r);
  if (opt.name == "mu4") return mu4_spec();
  if (opt.name == "bernoulli") {
    if (opt.p_text.empty()) throw std::invalid_argument("bernoulli needs --p");
    return bernoulli_spec(parse_rational_list(opt.p_text));
  }
  if (opt.name == "markov") {
    if (opt.P_text.empty() || opt.pi_text.empty())
      throw std::invalid_argument("markov needs --P and --pi");
    return markov_spec(parse_rational_matrix(opt.P_text),
                       parse_rational_list(opt.pi_text));
  }
  if (opt.name == "baser") {
    if (opt.p_text.empty()) throw std::invalid_argument("baser needs --p");
    return matrices_from_p(BaseRParams{opt.r, parse_rational_list(opt.p_text)});
  }
  if (opt.name == "file") {
    if (opt.file.empty()) throw std::invalid_argument("spec file path missing");
    return load_spec_file(opt.file);
  }
  throw std::invalid_argument("unknown spec: " + opt.name);
}

struct MeasureOptions {
  SpecOptions spec;
  std::string word_text;
  int all_depth = 0;
  std::string out_csv;
  bool as_float = false;
};

int run_measure(const MeasureOptions& opt) {
  MatrixMeasureSpec spec = resolve_spec(opt.spec);
  ValidationReport report = validate(spec);
  json out;
  out["spec"] = opt.spec.name;
  out["alphabet"] = spec.alphabet_size();
  out["valid"] = report.ok();
  if (!report.ok()) out["validation_failures"] = report.failures;
  if (!opt.word_text.empty() || opt.all_depth == 0) {
    std::vector<int> word = parse_word(opt.word_text);
    Rational value = cylinder_measure(spec, word);
    out["word"] = word_to_string(word);
    out["value"] = rational_to_string(value);
    if (opt.as_float) out["value_float"] = rational_to_double(value);
  }
  if (opt.all_depth > 0) {
    if (opt.out_csv.empty())
      throw std::invalid_argument("--all-depth needs --out for the CSV dump");
    std::ofstream csv(opt.out_csv);
    if (!csv) throw std::runtime_error("cannot open " + opt.out_csv);
    csv << "word,value\n";
    std::vector<std::vector<int>> stack = {{}};
    while (!stack.empty()) {
      std::vector<int> w = stack.back();
      stack.pop_back();
      csv << word_to_string(w) << "," << rational_to_string(cylinder_measure(spec, w))
          << "\n";
      if (static_cast<int>(w.size()) < opt.all_depth)
        for (int a = spec.alphabet_size() - 1; a >= 0; --a) {
          w.push_back(a);
          stack.push_back(w);
          w.pop_back();
        }
    }
    out["csv"] = opt.out_csv;
    out["all_depth"] = opt.all_depth;
  }
  emit(out);
  return 0;
}

// ------------------------------------------------------------ gibbs-scan --

struct ScanOptions {
  SpecOptions spec;
  int nmax = 30;
  int random_probes = 4;
  uint64_t seed = 1;
  std::string out_csv;
};

int run_gibbs_scan(const ScanOptions& opt) {
  MatrixMeasureSpec spec = resolve_spec(opt.spec);
  std::vector<Probe> probes =
      default_probes(spec.alphabet_size(), opt.random_probes, opt.nmax + 1, opt.seed);
  PotentialTrace trace = convergence_report(spec, probes, opt.nmax);
  json out;
  out["spec"] = opt.spec.name;
  out["nmax"] = opt.nmax;
  out["seed"] = opt.seed;
  out["overall_sup_increment"] = trace.overall_sup;
  for (size_t p = 0; p < probes.size(); ++p) {
    json jp;
    jp["name"] = probes[p].name;
    jp["sup_increment"] = trace.sup_increment[p];
    jp["phi_at_nmax"] = trace.phi[p].back();
    jp["normalization_residual_at_nmax"] = trace.normalization_residual[p].back();
    out["probes"].push_back(jp);
  }
  if (spec.dim == 2) {
    ContinuityResult cont = potential_continuity(spec);
    out["potential_continuity"]["continuous"] = cont.continuous;
    out["potential_continuity"]["condition"] = cont.which;
  }
  if (!opt.out_csv.empty()) {
    std::ofstream csv(opt.out_csv);
    if (!csv) throw std::runtime_error("cannot open " + opt.out_csv);
    csv << "probe,n,phi_n\n";
    csv.precision(17);
    for (size_t p = 0; p < probes.size(); ++p)
      for (int n = 1; n <= opt.nmax; ++n)
        csv << probes[p].name << "," << n << "," << trace.phi[p][n - 1] << "\n";
    out["csv"] = opt.out_csv;
  }
  emit(out);
  return 0;
}

// ------------------------------------------------------------- stoch-sim --

struct StochOptions {
  std::string beta_text;
  int r = 2;
  std::string weights_text;
  std::string family_file;
  std::string word_text;
  size_t samples = 100000;
  int depth = 40;
  uint64_t seed = 1;
  int bins = 0;
  std::string out_csv;
};

RowStochasticFamily resolve_family(const StochOptions& opt) {
  if (!opt.family_file.empty()) {
    std::ifstream in(opt.family_file);
    if (!in) throw std::runtime_error("cannot open " + opt.family_file);
    json j;
    in >> j;
    RowStochasticFamily family;
    for (const auto& t : j.at("x"))
      family.x.push_back(parse_quad_or_fail(t.get<std::string>()));
    for (const auto& t : j.at("y"))
      family.y.push_back(parse_quad_or_fail(t.get<std::string>()));
    for (const auto& t : j.at("weights")) {
      auto w = parse_rational(t.get<std::string>());
      if (!w) throw std::invalid_argument("bad weight");
      family.weights.push_back(*w);
    }
    family.validate();
    return family;
  }
  if (opt.beta_text.empty()) throw std::invalid_argument("need --beta or --family");
  RowStochasticFamily family =
      convolution_family(parse_quad_or_fail(opt.beta_text), opt.r);
  if (!opt.weights_text.empty()) {
    family.weights = parse_rational_list(opt.weights_text);
    family.validate();
  }
  return family;
}

int run_stoch_sim(const StochOptions& opt) {
  RowStochasticFamily family = resolve_family(opt);
  json out;
  for (int k = 0; k < family.size(); ++k) {
    json jm;
    jm["x"] = family.x[k].to_string();
    jm["y"] = family.y[k].to_string();
    jm["weight"] = rational_to_string(family.weights[k]);
    out["family"].push_back(jm);
  }
  ClassifyCertificate cert = classify(family);
  out["classification"]["kind"] = cert.kind == LimitLawKind::Discrete
                                      ? "Discrete"
                                      : cert.kind == LimitLawKind::SingularContinuous
                                            ? "SingularContinuous"
                                            : "Unknown";
  if (cert.noninvertible_index)
    out["classification"]["noninvertible_index"] = *cert.noninvertible_index;
  if (cert.kind != LimitLawKind::Discrete) {
    out["classification"]["product_value"] = cert.product_value;
    for (const auto& f : cert.factors)
      out["classification"]["factors"].push_back(f.to_string());
  }

  if (!opt.word_text.empty()) {
    std::vector<int> word = parse_word(opt.word_text);
    BackwardProduct bp = backward_product(family, word);
    out["backward_product"]["word"] = word_to_string(word);
    out["backward_product"]["x_n"] = bp.x.to_string();
    out["backward_product"]["y_n"] = bp.y.to_string();
    out["backward_product"]["det"] = bp.det.to_string();
  }

  LambdaSample sample = sample_lambda(family, opt.samples, opt.depth, opt.seed);
  out["samples"] = sample.values.size();
  out["depth"] = opt.depth;
  out["seed"] = opt.seed;
  out["truncation_bound"] = sample.truncation_bound;
  if (opt.bins > 0) {
    bool invertible = true;
    for (int k = 0; k < family.size(); ++k)
      if (family.det(k).is_zero()) invertible = false;
    if (invertible)
      out["selfsim_residual"] = selfsim_residual(family, sample.values, opt.bins);
  }
  if (!opt.out_csv.empty()) {
    std::ofstream csv(opt.out_csv);
    if (!csv) throw std::runtime_error("cannot open " + opt.out_csv);
    csv << "sample_value,truncation_bound\n";
    csv.precision(17);
    for (double v : sample.values) csv << v << "," << sample.truncation_bound << "\n";
    out["csv"] = opt.out_csv;
  }
  emit(out);
  return 0;
}

// ----------------------------------------------------------------- baser --

struct BaserOptions {
  int r = 2;
  std::string p_text;
  std::string word_text;
  size_t mc_samples = 0;
  int depth = 30;
  int selfsim_bins = 0;
  uint64_t seed = 1;
  bool as_float = false;
};

int run_baser(const BaserOptions& opt) {
  BaseRParams params{opt.r, parse_rational_list(opt.p_text)};
  MatrixMeasureSpec spec = matrices_from_p(params);
  json out;
  out["r"] = opt.r;
  out["spec"] = spec_to_json(spec);
  std::vector<int> word = parse_word(opt.word_text);
  Rational exact = cylinder_measure(spec, word);
  out["word"] = word_to_string(word);
  out["matrix_value"] = rational_to_string(exact);
  if (opt.as_float) out["matrix_value_float"] = rational_to_double(exact);
  if (opt.mc_samples > 0) {
    BaseRSampler sampler = BaseRSampler::draw(params, opt.mc_samples, opt.depth, opt.seed);
    McEstimate mc = sampler.frac_cylinder_mass(word);
    out["mc_estimate"] = mc.estimate;
    out["mc_sigma"] = mc.sigma;
    out["band_mass"] = mc.band_mass;
    out["seed"] = opt.seed;
    if (opt.selfsim_bins > 0)
      out["selfsim_residual"] = selfsim_residual_mu(params, sampler, opt.selfsim_bins);
  }
  emit(out);
  return 0;
}

// ---------------------------------------------------------------- golden --

struct GoldenOptions {
  std::string p_text = "1/2";
  std::string q_text = "1/2";
  std::string target = "mustar";
  std::string word_text;
  std::string code_text;
  size_t mc_samples = 0;
  int depth = 40;
  int phi_nmax = 0;
  std::string lemma_blocks;
  std::string alpha_text;
  uint64_t seed = 1;
  std::string out_csv;
  bool as_float = false;
};

int run_golden(const GoldenOptions& opt) {
  auto p = parse_rational(opt.p_text), q = parse_rational(opt.q_text);
  if (!p || !q) throw std::invalid_argument("bad --p/--q");
  GoldenParams params{*p, *q};
  params.validate();
  GoldenTarget target = opt.target == "mu" ? GoldenTarget::Mu : GoldenTarget::MuStar;
  json out;
  out["p"] = rational_to_string(params.p);
  out["q"] = rational_to_string(params.q);
  out["target"] = opt.target;
  out["regime"] = params.p >= params.q ? "p>=q" : "p<q (reflected regime)";

  if (opt.code_text.empty() || !opt.word_text.empty() || opt.mc_samples > 0) {
    std::vector<int> word = parse_word(opt.word_text);
    CylinderVector vec = target == GoldenTarget::Mu
                             ? mu_cylinder_vector(params, word)
                             : mustar_cylinder_vector(params, word);
    out["word"] = word_to_string(word);
    out["vector"] = json::array();
    for (const auto& v : vec.v) out["vector"].push_back(rational_to_string(v));
    if (opt.as_float) {
      out["vector_float"] = json::array();
      for (const auto& v : vec.v) out["vector_float"].push_back(rational_to_double(v));
    }
    out["derived_from_additivity"] = vec.derived_from_additivity;
    if (opt.mc_samples > 0) {
      GoldenSampler sampler =
          GoldenSampler::draw(params, target, opt.mc_samples, opt.depth, opt.seed);
      out["mc"] = json::array();
      for (int row = 0; row < 3; ++row) {
        GoldenSetSpec set{target, word, row};
        McEstimate mc = sampler.set_mass(golden_set_interval(set));
        json jm;
        jm["row"] = row;
        jm["estimate"] = mc.estimate;
        jm["sigma"] = mc.sigma;
        jm["band_mass"] = mc.band_mass;
        out["mc"].push_back(jm);
      }
      out["seed"] = opt.seed;
    }
  }

  if (!opt.code_text.empty()) {
    std::vector<int> code = parse_word(opt.code_text);
    out["code"] = word_to_string(code);
    TailClassification zd = classify_ternary_tail(code);
    out["tail_class"]["case"] =
        zd.kind == TailCase::ZeroTwoBlocks   ? "blocks-ending-in-2"
        : zd.kind == TailCase::AllZeros      ? "all-zeros"
        : zd.kind == TailCase::RankOnePattern ? "rank-one-pattern"
                                              : "undetermined";
    out["tail_class"]["decided"] = zd.decided;
    out["tail_class"]["N"] = zd.N;
    out["tail_class"]["n"] = zd.n;
    if (opt.phi_nmax > 0) {
      std::vector<int> padded;
      for (int i = 0; i < opt.phi_nmax; ++i)
        padded.push_back(code[static_cast<size_t>(i) % code.size()]);
      std::vector<double> phis = phi_sequence_golden(params, padded, opt.phi_nmax);
      out["phi_at_nmax"] = phis.back();
      double sup = 0.0;
      for (size_t i = 0; i + 1 < phis.size(); ++i)
        sup = std::max(sup, std::fabs(phis[i + 1] - phis[i]));
      out["sup_phi_increment"] = sup;
      if (!opt.out_csv.empty()) {
        std::ofstream csv(opt.out_csv);
        if (!csv) throw std::runtime_error("cannot open " + opt.out_csv);
        csv << "n,phi_n\n";
        csv.precision(17);
        for (size_t i = 0; i < phis.size(); ++i) csv << i + 1 << "," << phis[i] << "\n";
        out["csv"] = opt.out_csv;
      }
    } else {
      out["phi_n"] = phi_n_golden(params, code);
    }
  }

  if (!opt.lemma_blocks.empty()) {
    Rational alpha = params.alpha();
    if (!opt.alpha_text.empty()) {
      auto a = parse_rational(opt.alpha_text);
      if (!a) throw std::invalid_argument("bad --alpha");
      alpha = *a;
    }
    std::vector<long> blocks;
    for (const Rational& b : parse_rational_list(opt.lemma_blocks))
      blocks.push_back(mpz_class(b.get_num()).get_si());
    DeltaBoundsReport report = delta_bounds_check(blocks, alpha);
    out["lemma"]["alpha"] = rational_to_string(alpha);
    out["lemma"]["all_hold"] = report.all_hold;
    out["lemma"]["deltas_nonincreasing"] = report.deltas_nonincreasing;
    for (const auto& e : report.entries) {
      json je;
      je["k"] = e.k;
      je["delta"] = rational_to_string(e.delta);
      je["i"] = e.holds_i;
      je["ii"] = e.holds_ii;
      je["iii"] = e.holds_iii;
      je["corollary"] = e.holds_corollary;
      out["lemma"]["entries"].push_back(je);
    }
  }
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cylinder measures, numeration systems and weak-Gibbs diagnostics"};
  app.require_subcommand(1);

  ExpandOptions expand_opt;
  auto* expand = app.add_subcommand("expand", "digit expansions");
  expand->add_option("--system", expand_opt.system, "base-r | parry | neg-beta");
  expand->add_option("--x", expand_opt.x_text, "exact input")->required();
  expand->add_option("--digits", expand_opt.digits, "digit count");
  expand->add_option("--r", expand_opt.r, "integral base for base-r");
  expand->add_flag("--encode3", expand_opt.encode3_flag, "apply the ternary recoding");
  expand->add_flag("--float", expand_opt.as_float, "also print float renderings");

  MeasureOptions measure_opt;
  auto* measure = app.add_subcommand("measure", "exact cylinder masses");
  measure->add_option("--spec", measure_opt.spec.name, "mu3|mu4|bernoulli|markov|baser|file");
  measure->add_option("--r", measure_opt.spec.r, "alphabet parameter");
  measure->add_option("--p", measure_opt.spec.p_text, "weights (comma separated)");
  measure->add_option("--P", measure_opt.spec.P_text, "markov rows 'a,b;c,d'");
  measure->add_option("--pi", measure_opt.spec.pi_text, "markov initial law");
  measure->add_option("--file", measure_opt.spec.file, "spec JSON file");
  measure->add_option("--word", measure_opt.word_text, "cylinder word, e.g. 0110");
  measure->add_option("--all-depth", measure_opt.all_depth, "dump all cylinders to CSV");
  measure->add_option("--out", measure_opt.out_csv, "CSV path");
  measure->add_flag("--float", measure_opt.as_float, "also print float renderings");

  ScanOptions scan_opt;
  auto* scan = app.add_subcommand("gibbs-scan", "potential convergence report");
  scan->add_option("--spec", scan_opt.spec.name, "mu3|mu4|bernoulli|markov|baser|file");
  scan->add_option("--r", scan_opt.spec.r, "alphabet parameter");
  scan->add_option("--p", scan_opt.spec.p_text, "weights");
  scan->add_option("--P", scan_opt.spec.P_text, "markov rows");
  scan->add_option("--pi", scan_opt.spec.pi_text, "markov initial law");
  scan->add_option("--file", scan_opt.spec.file, "spec JSON file");
  scan->add_option("--nmax", scan_opt.nmax, "maximal prefix length");
  scan->add_option("--random-probes", scan_opt.random_probes, "seeded random probes");
  scan->add_option("--seed", scan_opt.seed, "probe seed");
  scan->add_option("--out", scan_opt.out_csv, "CSV path for (probe,n,phi_n)");

  StochOptions stoch_opt;
  auto* stoch = app.add_subcommand("stoch-sim", "backward products of stochastic matrices");
  stoch->add_option("--beta", stoch_opt.beta_text, "base for the convolution family");
  stoch->add_option("--r", stoch_opt.r, "family size");
  stoch->add_option("--p", stoch_opt.weights_text, "sampling weights");
  stoch->add_option("--family", stoch_opt.family_file, "family JSON file");
  stoch->add_option("--word", stoch_opt.word_text, "exact backward product of a word");
  stoch->add_option("--samples", stoch_opt.samples, "Monte Carlo draws");
  stoch->add_option("--depth", stoch_opt.depth, "truncation depth");
  stoch->add_option("--seed", stoch_opt.seed, "sampler seed");
  stoch->add_option("--bins", stoch_opt.bins, "selfsimilarity residual bins");
  stoch->add_option("--out", stoch_opt.out_csv, "CSV path for samples");

  BaserOptions baser_opt;
  auto* baser = app.add_subcommand("baser", "base-r Bernoulli convolution measures");
  baser->add_option("--r", baser_opt.r, "integral base");
  baser->add_option("--p", baser_opt.p_text, "2r-1 weights")->required();
  baser->add_option("--word", baser_opt.word_text, "base-r cylinder word");
  baser->add_option("--mc-samples", baser_opt.mc_samples, "Monte Carlo draws");
  baser->add_option("--depth", baser_opt.depth, "truncation depth");
  baser->add_option("--selfsim-bins", baser_opt.selfsim_bins, "residual bins");
  baser->add_option("--seed", baser_opt.seed, "sampler seed");
  baser->add_flag("--float", baser_opt.as_float, "also print float renderings");

  GoldenOptions golden_opt;
  auto* golden = app.add_subcommand("golden", "golden-ratio Bernoulli convolutions");
  golden->add_option("--p", golden_opt.p_text, "digit-0 weight");
  golden->add_option("--q", golden_opt.q_text, "digit-1 weight");
  golden->add_option("--target", golden_opt.target, "mu | mustar");
  golden->add_option("--word", golden_opt.word_text, "admissible binary word");
  golden->add_option("--code", golden_opt.code_text, "ternary code word");
  golden->add_option("--mc-samples", golden_opt.mc_samples, "Monte Carlo draws");
  golden->add_option("--depth", golden_opt.depth, "truncation depth");
  golden->add_option("--phi-nmax", golden_opt.phi_nmax, "phi_n sequence length");
  golden->add_option("--lemma-check", golden_opt.lemma_blocks, "blocks a0,a1,...");
  golden->add_option("--alpha", golden_opt.alpha_text, "override alpha for the lemma");
  golden->add_option("--seed", golden_opt.seed, "sampler seed");
  golden->add_option("--out", golden_opt.out_csv, "CSV path for phi_n");
  golden->add_flag("--float", golden_opt.as_float, "also print float renderings");

  CLI11_PARSE(app, argc, argv);

  try {
    if (expand->parsed()) return run_expand(expand_opt);
    if (measure->parsed()) return run_measure(measure_opt);
    if (scan->parsed()) return run_gibbs_scan(scan_opt);
    if (stoch->parsed()) return run_stoch_sim(stoch_opt);
    if (baser->parsed()) return run_baser(baser_opt);
    if (golden->parsed()) return run_golden(golden_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
