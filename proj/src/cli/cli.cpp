#include "spiro/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "spiro/analytics.hpp"
#include "spiro/chain.hpp"
#include "spiro/error.hpp"
#include "spiro/indices.hpp"
#include "spiro/montecarlo.hpp"
#include "spiro/rng.hpp"
#include "spiro/stats.hpp"

namespace spiro::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kCliSumTolerance = 1e-9;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string index;
  std::optional<double> a;
  std::optional<std::size_t> n;
  std::optional<double> p_ortho;
  std::optional<double> p_meta;
  std::optional<double> p_para;
  std::uint64_t seed = 0;
  std::size_t reps = 5000;
  std::size_t bins = 40;
  std::optional<std::string> links;
  std::string out;
  std::string format;
  // simulate
  bool standardize = false;
  std::string samples_out;
  std::string histogram_out;
  unsigned workers = 0;
  // analyze
  bool exhaustive = false;
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

LinkProbabilities resolve_probabilities(const RunConfig& c) {
  const bool any_rest = c.p_meta.has_value() || c.p_para.has_value();
  if (!any_rest) {
    if (!c.p_ortho) return LinkProbabilities::uniform();
    if (!(*c.p_ortho >= 0.0 && *c.p_ortho <= 1.0)) {
      throw UsageError("--p-ortho must lie in [0, 1]");
    }
    return LinkProbabilities::from_ortho(*c.p_ortho);
  }
  if (!c.p_ortho || !c.p_meta || !c.p_para) {
    throw UsageError(
        "--p-ortho, --p-meta and --p-para must be given together (or --p-ortho alone)");
  }
  const std::array<std::pair<const char*, double>, 3> flags{
      {{"--p-ortho", *c.p_ortho}, {"--p-meta", *c.p_meta}, {"--p-para", *c.p_para}}};
  for (const auto& [flag, p] : flags) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError(std::string(flag) + " must lie in [0, 1]");
  }
  const double total = *c.p_ortho + *c.p_meta + *c.p_para;
  if (std::abs(total - 1.0) > kCliSumTolerance) {
    throw UsageError("--p-ortho, --p-meta and --p-para must sum to 1 (got " + num(total) + ")");
  }
  return {*c.p_ortho / total, *c.p_meta / total, *c.p_para / total};
}

IndexSpec resolve_index(const RunConfig& c) {
  if (c.index.empty()) throw UsageError("--index is required");
  const auto names = registry_names();
  if (std::find(names.begin(), names.end(), c.index) == names.end()) {
    throw UsageError("--index: unknown index '" + c.index + "'");
  }
  if (registry_needs_exponent(c.index) && !c.a) {
    throw UsageError("--a is required for --index " + c.index);
  }
  if (!registry_needs_exponent(c.index) && c.a) {
    throw UsageError("--a applies only to variable-first-zagreb and variable-sum-connectivity");
  }
  return registry_lookup(c.index, c.a);
}

std::size_t require_n(const RunConfig& c, std::size_t min_n = 2) {
  if (!c.n) throw UsageError("--n is required");
  if (*c.n < min_n) throw UsageError("--n must be at least " + std::to_string(min_n));
  return *c.n;
}

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("SPIRO_MAX_ENUM_N")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) return static_cast<std::size_t>(v);
    throw UsageError("SPIRO_MAX_ENUM_N must be an integer >= 2");
  }
  return kDefaultEnumerationCap;
}

void put_probabilities(json& j, const LinkProbabilities& p) {
  j["p_ortho"] = p.ortho();
  j["p_meta"] = p.meta();
  j["p_para"] = p.para();
}

void put_index(json& j, const RunConfig& c) {
  j["index"] = c.index;
  if (c.a) j["a"] = *c.a;
}

class Output {
 public:
  Output(const RunConfig& c, std::ostream& fallback) {
    if (!c.out.empty()) {
      file_ = std::make_unique<std::ofstream>(c.out);
      if (!*file_) throw UsageError("--out: cannot open '" + c.out + "' for writing");
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void write_json(const RunConfig& c, std::ostream& out, const json& j) {
  Output o(c, out);
  o.stream() << j.dump(2) << '\n';
}

std::string want_format(const RunConfig& c, std::string fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
  return f;
}

json profile_json(const EdgeProfile& p) {
  return json{{"m22", p.m22}, {"m24", p.m24}, {"m44", p.m44}};
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  const std::size_t n = require_n(c);
  const LinkProbabilities probs = resolve_probabilities(c);
  const SpiroChain chain = generate(n, probs, c.seed);
  json j;
  j["n"] = chain.hexagons();
  j["links"] = links_to_string(chain.links());
  j["vertices"] = chain.graph().vertex_count();
  json edges = json::array();
  for (const Edge& e : chain.graph().edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["edge_profile"] = profile_json(edge_profile(chain.graph()));
  put_probabilities(j, probs);
  j["rng"] = rng::kAlgorithmId;
  j["seed"] = c.seed;
  write_json(c, out, j);
  return kSuccess;
}

int cmd_compute(const RunConfig& c, std::ostream& out) {
  const IndexSpec spec = resolve_index(c);
  if (c.links.has_value() == c.n.has_value()) {
    throw UsageError("exactly one of --links or --n must be given");
  }
  SpiroChain chain;
  if (c.links) {
    try {
      chain = replay(parse_links(*c.links));
    } catch (const InvalidLinks& e) {
      throw UsageError(std::string("--links: ") + e.what());
    }
  } else {
    chain = generate(require_n(c), resolve_probabilities(c), c.seed);
  }
  json j;
  put_index(j, c);
  j["n"] = chain.hexagons();
  j["value"] = evaluate(spec, chain.graph());
  j["m44"] = edge_profile(chain.graph()).m44;
  if (!c.links) {
    j["links"] = links_to_string(chain.links());
    j["seed"] = c.seed;
  }
  write_json(c, out, j);
  return kSuccess;
}

int cmd_analyze(const RunConfig& c, std::ostream& out) {
  const IndexSpec spec = resolve_index(c);
  const std::size_t n = require_n(c);
  const LinkProbabilities probs = resolve_probabilities(c);
  const ChainCoefficients k = coefficients(spec, probs);
  json j;
  put_index(j, c);
  j["n"] = n;
  put_probabilities(j, probs);
  j["ti2"] = k.ti2;
  j["alpha"] = {k.alpha[0], k.alpha[1], k.alpha[2]};
  j["alpha_bar"] = k.alpha_bar;
  j["beta"] = k.beta;
  j["A"] = k.A;
  j["B"] = k.B;
  j["C"] = k.C;
  j["mean"] = expected_value(k, n);
  j["variance"] = variance(k, n);
  j["deterministic"] = k.deterministic;
  if (c.exhaustive) {
    const LinkSequenceSpace space = enumerate_all(n, probs, enumeration_cap());
    double mean = 0.0;
    for (const WeightedLinks& w : space) mean += w.weight * evaluate(spec, replay(w.links).graph());
    double var = 0.0;
    for (const WeightedLinks& w : space) {
      const double d = evaluate(spec, replay(w.links).graph()) - mean;
      var += w.weight * d * d;
    }
    j["enumerated"] = json{{"sequences", space.size()}, {"mean", mean}, {"variance", var}};
  }
  write_json(c, out, j);
  return kSuccess;
}

int cmd_distribution(const RunConfig& c, std::ostream& out) {
  const IndexSpec spec = resolve_index(c);
  const std::size_t n = require_n(c);
  const LinkProbabilities probs = resolve_probabilities(c);
  const DiscreteDistribution d = exact_distribution(spec, n, probs);
  const auto k_of = [&](std::size_t i) -> std::optional<std::uint64_t> {
    if (d.ortho_count.empty()) return std::nullopt;
    return d.ortho_count[i];
  };
  if (want_format(c, "csv") == "csv") {
    Output o(c, out);
    o.stream() << "k,value,probability\n";
    for (std::size_t i = 0; i < d.support.size(); ++i) {
      const auto k = k_of(i);
      o.stream() << (k ? std::to_string(*k) : std::string()) << ',' << num(d.support[i]) << ','
                 << num(d.pmf[i]) << '\n';
    }
    return kSuccess;
  }
  json j;
  put_index(j, c);
  j["n"] = n;
  put_probabilities(j, probs);
  json atoms = json::array();
  for (std::size_t i = 0; i < d.support.size(); ++i) {
    const auto k = k_of(i);
    atoms.push_back({{"k", k ? json(*k) : json(nullptr)},
                     {"value", d.support[i]},
                     {"probability", d.pmf[i]}});
  }
  j["atoms"] = std::move(atoms);
  write_json(c, out, j);
  return kSuccess;
}

void write_histogram_csv(std::ostream& os, const HistogramData& h) {
  os << "bin_left,bin_right,count,density\n";
  for (std::size_t i = 0; i < h.bins(); ++i) {
    os << num(h.edges[i]) << ',' << num(h.edges[i + 1]) << ',' << h.counts[i] << ','
       << num(h.density(i)) << '\n';
  }
}

json summary_json(const SampleSummary& s) {
  return json{{"count", s.count},       {"mean", s.mean},
              {"variance", s.variance}, {"skewness", s.skewness},
              {"excess_kurtosis", s.excess_kurtosis},
              {"min", s.min},           {"max", s.max}};
}

int cmd_simulate(const RunConfig& c, std::ostream& out) {
  const IndexSpec spec = resolve_index(c);
  const std::size_t n = require_n(c);
  const LinkProbabilities probs = resolve_probabilities(c);
  if (c.reps < 1) throw UsageError("--reps must be at least 1");
  if (c.bins < 1) throw UsageError("--bins must be at least 1");
  const std::string format = want_format(c, "json");

  SimulationOptions options;
  options.workers = c.workers;
  const ChainCoefficients k = coefficients(spec, probs);
  if (c.standardize && !(variance(k, n) > 0.0)) {
    throw DegenerateVariance("--standardize: index '" + c.index +
                             "' has zero variance at n = " + std::to_string(n));
  }
  SimulationResult sim = simulate(spec, n, probs, c.reps, c.seed, options);
  const SampleSummary raw_summary = sim.summary;
  if (c.standardize) {
    for (double& v : sim.values) v = standardize(v, k, n);
  }
  const HistogramData hist = histogram(sim.values, c.bins, HistogramNormalization::Density);

  if (!c.samples_out.empty()) {
    std::ofstream f(c.samples_out);
    if (!f) throw UsageError("--samples-out: cannot open '" + c.samples_out + "'");
    for (double v : sim.values) f << num(v) << '\n';
  }
  if (!c.histogram_out.empty()) {
    std::ofstream f(c.histogram_out);
    if (!f) throw UsageError("--histogram-out: cannot open '" + c.histogram_out + "'");
    write_histogram_csv(f, hist);
  }
  if (format == "csv") {
    Output o(c, out);
    write_histogram_csv(o.stream(), hist);
    return kSuccess;
  }

  json j;
  put_index(j, c);
  j["n"] = n;
  put_probabilities(j, probs);
  j["reps"] = c.reps;
  j["seed"] = c.seed;
  j["rng"] = rng::kAlgorithmId;
  j["analytic"] = json{{"mean", expected_value(k, n)}, {"variance", variance(k, n)}};
  j["summary"] = summary_json(raw_summary);
  j["standardized"] = c.standardize;
  if (c.standardize) {
    if (c.reps >= kMinNormalitySample) {
      const NormalityReport r = normality_check(sim.values);
      j["normality"] = json{{"count", r.count},
                            {"ks_statistic", r.ks_statistic},
                            {"mean", r.mean},
                            {"variance", r.variance},
                            {"skewness", r.skewness},
                            {"excess_kurtosis", r.excess_kurtosis},
                            {"ks_pass", r.ks_pass},
                            {"mean_pass", r.mean_pass},
                            {"variance_pass", r.variance_pass},
                            {"skewness_pass", r.skewness_pass},
                            {"all_pass", r.all_pass()}};
    } else {
      j["normality"] = nullptr;
    }
  }
  write_json(c, out, j);
  return kSuccess;
}

int cmd_compare(const RunConfig& c, std::ostream& out) {
  const std::size_t n = require_n(c);
  const LinkProbabilities probs = resolve_probabilities(c);
  const ExpectationOrdering r = compare_expectations(n, probs);
  const auto& names = ExpectationOrdering::kNames;
  if (want_format(c, "json") == "csv") {
    Output o(c, out);
    o.stream() << "index,expected\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
      o.stream() << names[i] << ',' << num(r.expected[i]) << '\n';
    }
    return kSuccess;
  }
  json j;
  j["n"] = n;
  put_probabilities(j, probs);
  json expected = json::object();
  for (std::size_t i = 0; i < names.size(); ++i) expected[names[i]] = r.expected[i];
  j["expected"] = std::move(expected);
  json orderings = json::array();
  for (std::size_t i = 0; i < r.holds.size(); ++i) {
    orderings.push_back({{"lhs", names[i]}, {"rhs", names[i + 1]}, {"holds", r.holds[i]}});
  }
  j["orderings"] = std::move(orderings);
  j["all_hold"] = r.all_hold();
  write_json(c, out, j);
  return kSuccess;
}

void add_common(CLI::App* sub, RunConfig& c, bool with_index) {
  if (with_index) {
    sub->add_option("--index", c.index, "Topological index name");
    sub->add_option("--a", c.a, "Exponent for variable-* indices");
  }
  sub->add_option("--n", c.n, "Number of hexagons");
  sub->add_option("--p-ortho", c.p_ortho, "Probability of an ortho link (p_1)");
  sub->add_option("--p-meta", c.p_meta, "Probability of a meta link");
  sub->add_option("--p-para", c.p_para, "Probability of a para link");
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
  sub->add_option("--format", c.format, "json or csv");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random spiro chains: degree-based topological indices, exact laws, simulation",
               "spiro"};
  app.require_subcommand(1);
  RunConfig c;

  auto* gen = app.add_subcommand("generate", "Grow one random spiro chain and print it as JSON");
  add_common(gen, c, false);
  gen->add_option("--seed", c.seed, "RNG seed");

  auto* compute = app.add_subcommand("compute", "Evaluate an index on one chain");
  add_common(compute, c, true);
  compute->add_option("--links", c.links, "Link sequence over {O,M,P}");
  compute->add_option("--seed", c.seed, "RNG seed (with --n)");

  auto* analyze = app.add_subcommand("analyze", "Closed-form coefficients, mean and variance");
  add_common(analyze, c, true);
  analyze->add_flag("--exhaustive", c.exhaustive,
                    "Also enumerate every link sequence (n <= SPIRO_MAX_ENUM_N, default 12)");

  auto* dist = app.add_subcommand("distribution", "Exact distribution of the index");
  add_common(dist, c, true);

  auto* sim = app.add_subcommand("simulate", "Monte Carlo replications of the index");
  add_common(sim, c, true);
  sim->add_option("--seed", c.seed, "Master RNG seed");
  sim->add_option("--reps", c.reps, "Number of replications");
  sim->add_option("--bins", c.bins, "Histogram bins");
  sim->add_flag("--standardize", c.standardize,
                "Standardize with the closed-form mean and variance and test normality");
  sim->add_option("--samples-out", c.samples_out, "Write one value per line to this file");
  sim->add_option("--histogram-out", c.histogram_out, "Write the histogram CSV to this file");
  sim->add_option("--workers", c.workers, "Worker threads (0 = all cores)");

  auto* cmp = app.add_subcommand("compare", "Expected Randic, Nirmala, Sombor, M1, M2 and their order");
  add_common(cmp, c, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (gen->parsed()) return cmd_generate(c, out);
    if (compute->parsed()) return cmd_compute(c, out);
    if (analyze->parsed()) return cmd_analyze(c, out);
    if (dist->parsed()) return cmd_distribution(c, out);
    if (sim->parsed()) return cmd_simulate(c, out);
    if (cmp->parsed()) return cmd_compare(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::DegenerateVariance: return kDegenerate;
      case ErrorCode::InvalidN:
      case ErrorCode::InvalidProbabilities:
      case ErrorCode::InvalidLinks:
      case ErrorCode::UnknownIndex:
      case ErrorCode::MissingExponent:
      case ErrorCode::NTooLarge:
      case ErrorCode::UndefinedBase:
        return kValidation;
      default: return kInternal;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

}  // namespace spiro::cli
