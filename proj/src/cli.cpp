#include "ellschub/cli.hpp"

#include "ellschub/expr_json.hpp"
#include "ellschub/schubert.hpp"
#include "ellschub/weight.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace ellschub {

using nlohmann::json;

namespace {

constexpr int kMaxTypeAN = 7;
constexpr int kMaxTypeCRank = 4;

struct RunSpec {
  std::string command;
  std::string family;
  int rank = 0;
  int n = 0;
  std::string blocks;
  std::string parabolic;
  bool parabolic_given = false;
  std::string q = "0.1";
  int truncation = 40;
  double tolerance = 1e-9;
  int samples = 20;
  std::uint64_t seed = 0;
  std::string format = "human";
  std::string out_file;

  std::string method = "recursion";
  std::string suite;
  std::string expr_file;
  std::string point_file;
  bool breakdown = false;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError(std::string(what) + " list is empty");
  return out;
}

Complex parse_q(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ConfigError("bad --q '" + text + "' (expected re or re,im)");
  }
}

EvalConfig eval_config(const RunSpec& spec) {
  EvalConfig cfg;
  cfg.q = parse_q(spec.q);
  cfg.truncation = spec.truncation;
  cfg.tolerance = spec.tolerance;
  cfg.validate();
  if (spec.samples < 1) throw ConfigError("--samples must be positive");
  return cfg;
}

std::vector<int> parse_parabolic(const std::string& text) {
  if (text.empty() || text == "none") return {};
  auto levi = parse_int_list(text, "parabolic");
  std::sort(levi.begin(), levi.end());
  return levi;
}

ParabolicSetup build_setup(const RunSpec& spec) {
  Family family = Family::A;
  if (!spec.family.empty()) family = parse_family(spec.family);
  if (!spec.blocks.empty() && family != Family::A) throw ConfigError("--blocks is only valid with family A");

  if (family == Family::C) {
    if (spec.n != 0) throw ConfigError("--n is only valid with family A; use --rank");
    if (spec.rank < 2 || spec.rank > kMaxTypeCRank)
      throw ConfigError("family C needs 2 <= --rank <= " + std::to_string(kMaxTypeCRank));
    auto group = std::make_shared<const WeylGroup>(RootSystem::build(Family::C, spec.rank));
    return ParabolicSetup(group, parse_parabolic(spec.parabolic));
  }

  int n = spec.n;
  if (spec.rank != 0) {
    if (n != 0 && n != spec.rank + 1) throw ConfigError("--n and --rank disagree (type A_{n-1})");
    n = spec.rank + 1;
  }
  if (!spec.blocks.empty()) {
    const auto k = parse_int_list(spec.blocks, "blocks");
    int total = 0;
    for (int x : k) {
      if (x < 1) throw ConfigError("block sizes must be positive");
      total += x;
    }
    if (n != 0 && n != total) throw ConfigError("block sizes do not sum to n");
    if (total < 2 || total > kMaxTypeAN) throw ConfigError("type A needs 2 <= n <= " + std::to_string(kMaxTypeAN));
    auto setup = ParabolicSetup::type_a_blocks(k);
    if (spec.parabolic_given && parse_parabolic(spec.parabolic) != setup.levi())
      throw ConfigError("--parabolic does not match the Levi of --blocks");
    return setup;
  }
  if (n == 0) throw ConfigError("type A needs --n, --rank or --blocks");
  if (n < 2 || n > kMaxTypeAN) throw ConfigError("type A needs 2 <= n <= " + std::to_string(kMaxTypeAN));
  auto group = std::make_shared<const WeylGroup>(RootSystem::build(Family::A, n - 1));
  return ParabolicSetup(group, parse_parabolic(spec.parabolic));
}

std::string element_label(const ParabolicSetup& setup, const WeylElement& w) {
  if (setup.root_system().family() == Family::A) return one_line(w);
  return format_word(w.word());
}

json config_json(const RunSpec& spec, const EvalConfig& cfg) {
  return {{"q", {cfg.q.real(), cfg.q.imag()}},
          {"truncation", cfg.truncation},
          {"tolerance", cfg.tolerance},
          {"samples", spec.samples}};
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real() << (z.imag() < 0 || std::signbit(z.imag()) ? " - " : " + ")
     << std::abs(z.imag()) << "i";
  return os.str();
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// ---------------------------------------------------------------------------
// table

void render_table(const ClassTable& table, const std::string& format, std::ostream& os) {
  const auto& setup = table.setup();
  const auto& reps = setup.min_coset_reps();
  std::vector<std::string> labels;
  for (auto idx : reps) labels.push_back(element_label(setup, setup.group()[idx]));
  const std::size_t n = reps.size();

  if (format == "json") {
    json entries = json::array();
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v)
        entries.push_back({{"w", labels[w]}, {"v", labels[v]}, {"expr", to_json(table.at_position(w, v))}});
    json doc = {{"setup", setup.label()},
                {"provenance", to_string(table.provenance())},
                {"labels", labels},
                {"entries", entries}};
    os << doc.dump(2) << "\n";
  } else if (format == "csv") {
    os << "w,v,expr\n";
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v)
        os << labels[w] << ',' << labels[v] << ',' << csv_field(to_string(table.at_position(w, v))) << "\n";
  } else if (format == "latex") {
    os << "\\begin{tabular}{l|" << std::string(n, 'c') << "}\n";
    for (std::size_t v = 0; v < n; ++v) os << " & $" << labels[v] << "$";
    os << " \\\\\n\\hline\n";
    for (std::size_t w = 0; w < n; ++w) {
      os << "$E(X_{" << labels[w] << "})$";
      for (std::size_t v = 0; v < n; ++v) os << " & $" << to_latex(table.at_position(w, v)) << "$";
      os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
  } else {
    os << setup.label() << " (" << to_string(table.provenance()) << ")\n";
    for (std::size_t w = 0; w < n; ++w) {
      os << "E(X_" << labels[w] << "):\n";
      for (std::size_t v = 0; v < n; ++v) os << "  " << labels[v] << ": " << to_string(table.at_position(w, v)) << "\n";
    }
  }
}

int cmd_table(const RunSpec& spec, std::ostream& os) {
  eval_config(spec);
  const auto setup = build_setup(spec);
  if (spec.method == "localization") {
    render_table(localization_table(setup), spec.format, os);
  } else {
    render_table(recursion_table(setup), spec.format, os);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct CaseResult {
  std::string key;
  bool passed = false;
  double deviation = 0.0;
  int samples = 0;
  std::string note;
};

using CaseFn = std::function<CaseResult(std::uint64_t seed)>;

std::vector<CaseResult> run_cases(const std::vector<CaseFn>& cases, std::uint64_t seed) {
  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        results[i] = cases[i](seed + i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(cases.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

CaseResult from_comparison(std::string key, const NumericComparison& c) {
  CaseResult r;
  r.key = std::move(key);
  r.passed = c.equal;
  r.deviation = c.max_deviation;
  r.samples = c.samples;
  if (c.redraws) r.note = std::to_string(c.redraws) + " redraws";
  return r;
}

CaseResult exact_case(std::string key, bool passed, std::string note = {}) {
  CaseResult r;
  r.key = std::move(key);
  r.passed = passed;
  r.note = std::move(note);
  return r;
}

std::vector<int> weight_blocks(const RunSpec& spec) {
  const auto setup = build_setup(spec);
  if (setup.root_system().family() != Family::A) throw ConfigError("weight-function suites need family A");
  const auto k = setup.block_sizes();
  int n = 0;
  for (int x : k) n += x;
  if (n > kMaxWeightFunctionN)
    throw ConfigError("weight-function suites are limited to n <= " + std::to_string(kMaxWeightFunctionN));
  return k;
}

std::string pair_key(const std::string& a, const std::string& b) { return a + " | " + b; }

struct SuiteData {
  std::string label;
  std::vector<CaseFn> cases;
  std::vector<std::shared_ptr<const void>> keep_alive;
};

SuiteData suite_tables(const RunSpec& spec, const EvalConfig& cfg, const std::string& suite) {
  SuiteData data;
  auto setup = std::make_shared<const ParabolicSetup>(build_setup(spec));
  data.label = setup->label();
  data.keep_alive.push_back(setup);
  const auto& reps = setup->min_coset_reps();
  const auto& group = setup->group();
  const int samples = spec.samples;
  auto label = [setup](std::size_t pos) {
    return element_label(*setup, setup->group()[setup->min_coset_reps()[pos]]);
  };

  if (suite == "positivity") {
    const bool borel = setup->levi().empty();
    for (auto idx : reps) {
      const auto& w = group[idx];
      for (const auto& cover : covers_in_WP(*setup, w)) {
        const WeylElement* wp = &w;
        const WeylElement* vp = &group[cover.v];
        data.cases.push_back([setup, wp, vp, borel](std::uint64_t) {
          const int m = multiplicity_m(*setup, *wp, *vp);
          const bool ok = m >= 1 && (!borel || m == 1);
          return exact_case(pair_key(element_label(*setup, *wp), element_label(*setup, *vp)), ok,
                            "m = " + std::to_string(m));
        });
      }
    }
    return data;
  }

  auto rec = std::make_shared<const ClassTable>(recursion_table(*setup));
  data.keep_alive.push_back(rec);
  const std::size_t n = reps.size();

  if (suite == "two-method") {
    auto loc = std::make_shared<const ClassTable>(localization_table(*setup));
    data.keep_alive.push_back(loc);
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v)
        data.cases.push_back([=, &cfg](std::uint64_t seed) {
          return from_comparison(pair_key(label(w), label(v)),
                                 numeric_equal(rec->at_position(w, v), loc->at_position(w, v), cfg, samples, seed));
        });
  } else if (suite == "pushforward") {
    auto borel = std::make_shared<const ClassTable>(shifted_borel_table(*setup));
    data.keep_alive.push_back(borel);
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v)
        data.cases.push_back([=, &cfg](std::uint64_t seed) {
          const auto& g = setup->group();
          return from_comparison(pair_key(label(w), label(v)),
                                 pushforward_check(*rec, *borel, g[reps[w]], g[reps[v]], cfg, samples, seed));
        });
  } else if (suite == "transformation") {
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v)
        data.cases.push_back([=](std::uint64_t) {
          const auto& g = setup->group();
          bool ok = transformation_check(rec->at_position(w, v));
          std::size_t summands = 0;
          for (const auto& s : localization_summands(*setup, g[reps[w]], g[reps[v]])) {
            ok = ok && transformation_check(s.value);
            ++summands;
          }
          // all summands of one localization sum share a single form
          ok = ok && transformation_check(class_localization(*setup, g[reps[w]], g[reps[v]]));
          return exact_case(pair_key(label(w), label(v)), ok, std::to_string(summands) + " summands");
        });
  } else if (suite == "normalization") {
    auto loc = std::make_shared<const ClassTable>(localization_table(*setup));
    data.keep_alive.push_back(loc);
    for (std::size_t w = 0; w < n; ++w)
      data.cases.push_back([=](std::uint64_t) {
        const auto& el = setup->group()[reps[w]];
        return exact_case(label(w), normalization_check(*rec, el) && normalization_check(*loc, el));
      });
  } else if (suite == "triangularity") {
    auto loc = std::make_shared<const ClassTable>(localization_table(*setup));
    data.keep_alive.push_back(loc);
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v) {
        if (group.bruhat_leq(group[reps[v]], group[reps[w]])) continue;
        data.cases.push_back([=](std::uint64_t) {
          return exact_case(pair_key(label(w), label(v)),
                            rec->at_position(w, v).is_zero() && loc->at_position(w, v).is_zero());
        });
      }
  }
  return data;
}

SuiteData suite_weights(const RunSpec& spec, const EvalConfig& cfg, const std::string& suite) {
  SuiteData data;
  const auto k = weight_blocks(spec);
  data.label = "A blocks " + spec.blocks;
  if (spec.blocks.empty()) data.label = ParabolicSetup::type_a_blocks(k).label();
  auto parts = std::make_shared<const std::vector<BlockPartition>>(all_partitions(k));
  data.keep_alive.push_back(parts);
  const int samples = spec.samples;

  if (suite == "weightfn") {
    auto table = std::make_shared<const TypeATable>(k);
    auto weights = std::make_shared<std::vector<Expr>>();
    for (const auto& I : *parts) weights->push_back(weight_function(I));
    data.keep_alive.push_back(table);
    data.keep_alive.push_back(weights);
    for (std::size_t a = 0; a < parts->size(); ++a)
      for (std::size_t b = 0; b < parts->size(); ++b)
        data.cases.push_back([=, &cfg](std::uint64_t seed) {
          const auto& I = (*parts)[a];
          const auto& J = (*parts)[b];
          return from_comparison(pair_key(I.to_string(), J.to_string()),
                                 main_theorem_check((*weights)[a], I, J, *table, cfg, samples, seed));
        });
  } else if (suite == "rmatrix") {
    for (std::size_t a = 0; a < parts->size(); ++a) {
      const auto& I = (*parts)[a];
      for (int i = 1; i < I.n(); ++i) {
        if (I.block_of(i) >= I.block_of(i + 1)) continue;
        data.cases.push_back([=, &cfg](std::uint64_t seed) {
          const auto& P = (*parts)[a];
          return from_comparison(P.to_string() + " i=" + std::to_string(i), rmatrix_check(P, i, cfg, samples, seed));
        });
      }
    }
  } else if (suite == "initial") {
    const auto I0 = initial_partition(k);
    auto w0 = std::make_shared<const Expr>(weight_function(I0));
    data.keep_alive.push_back(w0);
    for (std::size_t b = 0; b < parts->size(); ++b)
      data.cases.push_back([=, &cfg](std::uint64_t seed) {
        const auto& J = (*parts)[b];
        const Expr expected = J == I0 ? euler_factor(I0) * normalization_constant(k) : Expr::zero();
        return from_comparison(pair_key(I0.to_string(), J.to_string()),
                               numeric_equal(restrict(*w0, J), expected, cfg, samples, seed));
      });
  }
  return data;
}

void add_identity_cases(const std::vector<int>& k, SuiteData& data) {
  auto parts = std::make_shared<const std::vector<BlockPartition>>(all_partitions(k));
  data.keep_alive.push_back(parts);
  for (std::size_t a = 0; a < parts->size(); ++a)
    data.cases.push_back([parts, a](std::uint64_t) {
      const auto& I = (*parts)[a];
      bool ok = true;
      std::string note;
      for (int i = 1; i <= I.n(); ++i) {
        const int c = combinatorial_constant(I, i);
        if (c != -1) {
          ok = false;
          note += "i=" + std::to_string(i) + " gives " + std::to_string(c) + " ";
        }
      }
      return exact_case(I.to_string(), ok, note);
    });
}

void compositions(int n, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int x = 1; x <= n; ++x) {
    prefix.push_back(x);
    compositions(n - x, prefix, out);
    prefix.pop_back();
  }
}

SuiteData suite_identity(const RunSpec& spec) {
  SuiteData data;
  if (!spec.blocks.empty() || spec.parabolic_given) {
    const auto setup = build_setup(spec);
    if (setup.root_system().family() != Family::A) throw ConfigError("identity suite needs family A");
    data.label = setup.label();
    add_identity_cases(setup.block_sizes(), data);
    return data;
  }
  const int max_n = spec.n != 0 ? spec.n : kMaxTypeAN;
  if (max_n < 1 || max_n > kMaxTypeAN) throw ConfigError("identity suite needs 1 <= n <= " + std::to_string(kMaxTypeAN));
  const int min_n = spec.n != 0 ? spec.n : 1;
  data.label = "A all compositions, n " + std::to_string(min_n) + ".." + std::to_string(max_n);
  for (int n = min_n; n <= max_n; ++n) {
    std::vector<std::vector<int>> ks;
    std::vector<int> prefix;
    compositions(n, prefix, ks);
    for (const auto& k : ks) add_identity_cases(k, data);
  }
  return data;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"two-method", "pushforward", "weightfn",      "rmatrix",
                                                 "initial",    "transformation", "normalization", "triangularity",
                                                 "positivity", "identity"};
  return names;
}

int cmd_verify(const RunSpec& spec, std::ostream& os) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), spec.suite) == names.end())
    throw ConfigError("unknown suite '" + spec.suite + "'");
  if (spec.format == "latex") throw ConfigError("verify supports human, csv and json output");
  const EvalConfig cfg = eval_config(spec);

  SuiteData data;
  if (spec.suite == "weightfn" || spec.suite == "rmatrix" || spec.suite == "initial") {
    data = suite_weights(spec, cfg, spec.suite);
  } else if (spec.suite == "identity") {
    data = suite_identity(spec);
  } else {
    data = suite_tables(spec, cfg, spec.suite);
  }
  const auto results = run_cases(data.cases, spec.seed);

  int failures = 0;
  double max_dev = 0.0;
  for (const auto& r : results) {
    if (!r.passed) ++failures;
    max_dev = std::max(max_dev, r.deviation);
  }

  if (spec.format == "json") {
    json details = json::array();
    for (const auto& r : results) {
      json d = {{"case", r.key}, {"passed", r.passed}, {"deviation", r.deviation}};
      if (r.samples) d["samples"] = r.samples;
      if (!r.note.empty()) d["note"] = r.note;
      details.push_back(d);
    }
    json report = {{"suite", spec.suite},
                   {"setup", data.label},
                   {"cases", results.size()},
                   {"failures", failures},
                   {"max_deviation", max_dev},
                   {"seed", spec.seed},
                   {"config", config_json(spec, cfg)},
                   {"details", details}};
    os << report.dump(2) << "\n";
  } else if (spec.format == "csv") {
    os << "case,passed,deviation,note\n";
    for (const auto& r : results)
      os << csv_field(r.key) << ',' << (r.passed ? "true" : "false") << ',' << std::setprecision(6) << r.deviation
         << ',' << csv_field(r.note) << "\n";
  } else {
    os << "suite " << spec.suite << " on " << data.label << ": " << results.size() << " cases, " << failures
       << " failures, max deviation " << std::setprecision(3) << max_dev << "\n";
    for (const auto& r : results) {
      os << (r.passed ? "  ok   " : "  FAIL ") << r.key;
      if (r.samples) os << "  dev " << std::setprecision(3) << r.deviation;
      if (!r.note.empty()) os << "  (" << r.note << ")";
      os << "\n";
    }
  }
  return failures == 0 ? kExitOk : kExitFailures;
}

// ---------------------------------------------------------------------------
// eval

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

int cmd_eval(const RunSpec& spec, std::ostream& os) {
  const EvalConfig cfg = eval_config(spec);
  const Expr e = expr_from_json(read_json_file(spec.expr_file));
  const PointAssignment pt =
      spec.point_file.empty() ? default_point(variables(e), spec.seed) : point_from_json(read_json_file(spec.point_file));
  const Evaluation ev = eval_detailed(e, pt, cfg);

  if (spec.format == "json") {
    json doc = {{"value", {ev.value.real(), ev.value.imag()}}, {"magnitude", ev.magnitude}, {"point", to_json(pt)}};
    if (spec.breakdown) {
      json terms = json::array();
      for (const auto& t : e.terms()) {
        json fs = json::array();
        Complex v(boost::rational_cast<double>(t.coeff), 0.0);
        for (const auto& f : t.factors) {
          const Complex fv = eval_factor(f, pt, cfg);
          v *= fv;
          fs.push_back({{"factor", f.to_string()}, {"value", {fv.real(), fv.imag()}}});
        }
        terms.push_back({{"coeff", format_rational(t.coeff)}, {"value", {v.real(), v.imag()}}, {"factors", fs}});
      }
      doc["terms"] = terms;
    }
    os << doc.dump(2) << "\n";
    return kExitOk;
  }
  if (spec.format != "human") throw ConfigError("eval supports human and json output");

  os << "value = " << format_complex(ev.value) << "\n";
  if (spec.breakdown) {
    std::size_t idx = 0;
    for (const auto& t : e.terms()) {
      Complex v(boost::rational_cast<double>(t.coeff), 0.0);
      os << "term " << ++idx << " (coeff " << format_rational(t.coeff) << ")\n";
      for (const auto& f : t.factors) {
        const Complex fv = eval_factor(f, pt, cfg);
        v *= fv;
        os << "  " << f.to_string() << " = " << format_complex(fv) << "\n";
      }
      os << "  term value = " << format_complex(v) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic classes of Schubert varieties: tables, checks and evaluation", "ellschub"};
  app.require_subcommand(1);
  app.fallthrough();
  RunSpec spec;

  app.add_option("--family", spec.family, "Root system family: A or C");
  app.add_option("--rank", spec.rank, "Rank of the root system");
  app.add_option("--n", spec.n, "Type A: n for SL_n");
  app.add_option("--blocks", spec.blocks, "Type A block sizes, e.g. 2,2");
  app.add_option("--parabolic", spec.parabolic, "Simple root indices of the Levi, e.g. 1,3, or none");
  app.add_option("--q", spec.q, "Nome q as re or re,im")->capture_default_str();
  app.add_option("--trunc", spec.truncation, "Number of q-product factors")->capture_default_str();
  app.add_option("--tol", spec.tolerance, "Relative tolerance")->capture_default_str();
  app.add_option("--samples", spec.samples, "Random points per numeric case")->capture_default_str();
  app.add_option("--seed", spec.seed, "Base random seed")->capture_default_str();
  app.add_option("--format", spec.format, "Output format")
      ->check(CLI::IsMember({"human", "latex", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", spec.out_file, "Write output to FILE");

  auto* table = app.add_subcommand("table", "Print the restriction table E(X_w)_v");
  table->add_option("--method", spec.method, "recursion or localization")
      ->check(CLI::IsMember({"recursion", "localization"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", spec.suite, "Suite name")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a JSON expression at a point");
  eval->add_option("--expr", spec.expr_file, "Expression file")->required();
  eval->add_option("--point", spec.point_file, "Point file (default: seeded random point)");
  eval->add_flag("--breakdown", spec.breakdown, "Print per-factor values");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  spec.parabolic_given = app.count("--parabolic") > 0;

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (table->parsed()) {
      status = cmd_table(spec, buffer);
    } else if (verify->parsed()) {
      status = cmd_verify(spec, buffer);
    } else {
      status = cmd_eval(spec, buffer);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "error: pole at " << e.where() << ": " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }

  if (spec.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(spec.out_file);
    if (!file) {
      err << "error: cannot write '" << spec.out_file << "'\n";
      return kExitRuntime;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace ellschub
