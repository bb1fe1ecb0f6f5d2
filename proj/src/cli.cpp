#include "sniep/cli.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sniep/classify.hpp"
#include "sniep/error.hpp"
#include "sniep/format.hpp"
#include "sniep/guo.hpp"
#include "sniep/pattern_b.hpp"
#include "sniep/sampler.hpp"
#include "sniep/spectrum.hpp"
#include "sniep/verify.hpp"

namespace sniep {

namespace {

using nlohmann::json;

constexpr double kDefaultTolerance = 1e-8;

struct Options {
  std::string spectrum;
  std::string format;
  bool verify = false;
  double tol = kDefaultTolerance;
  std::string out_path;
  int index = 0;
  std::string sign;
  double magnitude = 0.0;
  int grid = 0;
  std::vector<double> t_values;
  unsigned threads = 1;
  std::string matrix_path;
};

// Bad input detected after CLI11 has accepted the arguments.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Where results go: the caller's stream, or the --out file.
class Destination {
 public:
  Destination(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open output file '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

SortedSpectrum read_spectrum(const std::string& text) {
  return sort_descending(parse_spectrum(text));
}

std::string join_values(const Values& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_number(values[i]);
  }
  return out;
}

std::string_view basis(Certificate c) {
  switch (c) {
    case Certificate::PatternA: return "explicit A-pattern matrix";
    case Certificate::PatternB: return "explicit B-pattern matrix with parameter g";
    case Certificate::DirectSumKnownRegion:
      return "direct sum of [lambda3] and a realizable 4-element list (decision only)";
    case Certificate::Suleimanova:
      return "Suleimanova condition: a single positive eigenvalue and nonnegative trace "
             "(decision only)";
    case Certificate::TwoPositiveCharacterization:
      return "characterization of lists with exactly two positive eigenvalues (decision only)";
    case Certificate::TraceZeroCharacterization:
      return "characterization of trace-zero lists (decision only)";
    case Certificate::GuoClosure:
      return "closure of realizable lists under Guo perturbations (no explicit matrix)";
  }
  return "";
}

void write_decision_text(std::ostream& os, const RealizabilityDecision& d) {
  os << "verdict: " << to_string(d.verdict()) << '\n';
  if (d.certificate()) {
    os << "certificate: " << to_string(*d.certificate()) << '\n';
    os << "basis: " << basis(*d.certificate()) << '\n';
  }
  if (d.reason()) os << "reason: " << to_string(*d.reason()) << '\n';
  if (d.parameter()) os << "g: " << format_number(*d.parameter()) << '\n';
  const DecisionDetails& details = d.details();
  os << "e1: " << format_number(details.e1) << '\n'
     << "r: " << format_number(details.r) << '\n'
     << "u: " << format_number(details.u) << '\n'
     << "mn_sum: " << format_number(details.mn_sum) << '\n';
}

void write_report_text(std::ostream& os, const VerificationReport& report) {
  os << "verification: " << (report.pass ? "pass" : "FAIL")
     << " (max deviation " << format_number(report.max_deviation) << ", tolerance "
     << format_number(report.tolerance) << ")\n"
     << "eigenvalues: " << join_values(report.eigenvalues) << '\n';
}

void warn_if_near_boundary(const RealizabilityDecision& d, std::ostream& err) {
  if (d.near_antipodal_boundary()) {
    err << "warning: lambda5 is within 1e-12 relative of -lambda1; the verdict depends on "
           "exact equality there\n";
  }
}

int run_check(const Options& o, std::ostream& out, std::ostream& err) {
  const SortedSpectrum s = read_spectrum(o.spectrum);
  const RealizabilityDecision d = classify(s);
  warn_if_near_boundary(d, err);

  std::optional<VerificationReport> report;
  if (o.verify) {
    if (auto m = construct_certificate(s, d)) report = verify_spectrum(*m, s, o.tol);
  }

  Destination dest(o.out_path, out);
  if (o.format == "json") {
    json doc = to_json(d);
    if (report) doc["verification"] = to_json(*report);
    dest.get() << doc.dump(2) << '\n';
  } else {
    write_decision_text(dest.get(), d);
    if (report) write_report_text(dest.get(), *report);
  }

  if (report && !report->pass) return kExitVerifyFailed;
  return d.verdict() == Verdict::Unknown ? kExitUnknown : kExitOk;
}

int run_realize(const Options& o, std::ostream& out, std::ostream& err) {
  const SortedSpectrum s = read_spectrum(o.spectrum);
  const RealizabilityDecision d = classify(s);
  warn_if_near_boundary(d, err);
  const std::optional<SymMatrix5> m = construct_certificate(s, d);
  std::optional<VerificationReport> report;
  if (m) report = verify_spectrum(*m, s, o.tol);
  if (!m && d.verdict() == Verdict::Realizable) {
    err << "note: certificate " << to_string(*d.certificate())
        << " carries no explicit matrix\n";
  }

  Destination dest(o.out_path, out);
  if (o.format == "json") {
    json doc{{"decision", to_json(d)}};
    if (m) doc["matrix"] = to_json(*m);
    if (report) doc["verification"] = to_json(*report);
    dest.get() << doc.dump(2) << '\n';
  } else {
    write_decision_text(dest.get(), d);
    if (m) dest.get() << "matrix:\n" << format_matrix_text(*m);
    if (report) write_report_text(dest.get(), *report);
  }

  if (report && !report->pass) return kExitVerifyFailed;
  return d.verdict() == Verdict::Unknown ? kExitUnknown : kExitOk;
}

int run_qroots(const Options& o, std::ostream& out) {
  const SortedSpectrum s = read_spectrum(o.spectrum);
  const Cubic q = pattern_b_cubic(s);
  const std::vector<double> roots = cubic_real_roots(q);
  const std::optional<double> g = find_pattern_b_parameter(s);
  const double upper = elem_syms(s).e1 / 2.0;

  // The selected parameter may sit on a range endpoint rather than on the
  // computed root itself, so mark the nearest root.
  std::optional<std::size_t> marked;
  if (g) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (std::abs(roots[i] - *g) < best) {
        best = std::abs(roots[i] - *g);
        marked = i;
      }
    }
  }

  Destination dest(o.out_path, out);
  if (o.format == "json") {
    json doc{{"coefficients", {q.c3, q.c2, q.c1, q.c0}},
             {"roots", roots},
             {"range", {0.0, upper}},
             {"g", g ? json(*g) : json(nullptr)}};
    dest.get() << doc.dump(2) << '\n';
    return kExitOk;
  }
  std::ostream& os = dest.get();
  os << "coefficients: " << format_number(q.c3) << ' ' << format_number(q.c2) << ' '
     << format_number(q.c1) << ' ' << format_number(q.c0) << '\n'
     << "range: [0, " << format_number(upper) << "]\n";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    os << "root: " << format_number(roots[i]);
    if (marked && *marked == i) os << "  <- largest root in range";
    os << '\n';
  }
  os << "g: " << (g ? format_number(*g) : std::string("none")) << '\n';
  return kExitOk;
}

int run_perturb(const Options& o, std::ostream& out, std::ostream& err) {
  const SortedSpectrum s = read_spectrum(o.spectrum);
  std::optional<Perturbation> p;
  try {
    p.emplace(o.index, o.sign == "plus" ? Shift::Plus : Shift::Minus, o.magnitude);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const PerturbedDecision pd = decide_perturbed(s, *p);
  warn_if_near_boundary(pd.decision, err);
  std::optional<VerificationReport> report;
  if (o.verify && pd.matrix) report = verify_spectrum(*pd.matrix, pd.perturbed, o.tol);

  Destination dest(o.out_path, out);
  if (o.format == "json") {
    json doc = to_json(pd);
    if (report) doc["verification"] = to_json(*report);
    dest.get() << doc.dump(2) << '\n';
  } else {
    std::ostream& os = dest.get();
    os << "rule: " << to_string(pd.rule) << '\n'
       << "perturbed: " << join_values(pd.perturbed.values()) << '\n';
    write_decision_text(os, pd.decision);
    if (pd.matrix) os << "matrix:\n" << format_matrix_text(*pd.matrix);
    if (report) write_report_text(os, *report);
  }

  if (report && !report->pass) return kExitVerifyFailed;
  return pd.decision.verdict() == Verdict::Unknown ? kExitUnknown : kExitOk;
}

int run_sample(const Options& o, std::ostream& out, std::ostream& err) {
  // Collect the rows first so that an empty grid leaves no partial file.
  std::vector<std::string> rows;
  std::size_t checked = 0;
  std::size_t failed = 0;
  try {
    sample_region(
        o.grid, o.t_values,
        [&](const RegionSample& sample) {
          rows.push_back(to_csv_row(sample));
          if (!o.verify) return;
          if (auto m = construct_certificate(sample.spectrum, sample.decision)) {
            ++checked;
            if (!verify_spectrum(*m, sample.spectrum, o.tol).pass) {
              ++failed;
              err << "verification failed: " << join_values(sample.spectrum.values()) << '\n';
            }
          }
        },
        o.threads);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  Destination dest(o.out_path, out);
  std::ostream& os = dest.get();
  os << csv_header() << '\n';
  for (const std::string& row : rows) os << row << '\n';
  if (o.verify) err << "verified " << checked << " matrices, " << failed << " failed\n";
  return failed > 0 ? kExitVerifyFailed : kExitOk;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read matrix file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_verify(const Options& o, std::ostream& out) {
  const SortedSpectrum target = read_spectrum(o.spectrum);
  SymMatrix5 m;
  try {
    m = parse_matrix(read_file(o.matrix_path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const VerificationReport report = verify_spectrum(m, target, o.tol);

  Destination dest(o.out_path, out);
  if (o.format == "json") {
    dest.get() << to_json(report).dump(2) << '\n';
  } else {
    write_report_text(dest.get(), report);
  }
  return report.pass ? kExitOk : kExitVerifyFailed;
}

CLI::App* add_spectrum_command(CLI::App& app, const std::string& name,
                               const std::string& description, Options& o) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->add_option("--spectrum", o.spectrum, "Five comma-separated eigenvalues, e.g. 3,1,0,-1,-2")
      ->required();
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("text");
  sub->add_option("--out", o.out_path, "Write results to FILE instead of stdout");
  return sub;
}

void add_tolerance(CLI::App* sub, Options& o) {
  sub->add_option("--tol", o.tol, "Relative eigenvalue tolerance")
      ->check(CLI::PositiveNumber)
      ->default_val(kDefaultTolerance);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Realizability of 5-element spectra by symmetric nonnegative matrices", "sniep"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  CLI::App* check = add_spectrum_command(app, "check", "Classify a spectrum", o);
  check->add_flag("--verify", o.verify, "Build and verify the pattern matrix, if any");
  add_tolerance(check, o);

  CLI::App* realize =
      add_spectrum_command(app, "realize", "Print a realizing matrix and its verification", o);
  add_tolerance(realize, o);

  CLI::App* qroots =
      add_spectrum_command(app, "qroots", "Real roots of the B-pattern cubic", o);

  CLI::App* perturb =
      add_spectrum_command(app, "perturb", "Decide a Guo-perturbed spectrum", o);
  perturb->add_option("--i", o.index, "Perturbed position, 2..5 in descending order")
      ->required()
      ->check(CLI::Range(2, 5));
  perturb->add_option("--sign", o.sign, "Direction of the shift at position i")
      ->required()
      ->check(CLI::IsMember({"plus", "minus"}));
  perturb->add_option("--s", o.magnitude, "Shift magnitude")->required()->check(CLI::PositiveNumber);
  perturb->add_flag("--verify", o.verify, "Verify the attached matrix, if any");
  add_tolerance(perturb, o);

  CLI::App* sample = app.add_subcommand("sample", "Classify a grid of normalized spectra as CSV");
  sample->add_option("--grid", o.grid, "Points per axis")->required()->check(CLI::Range(2, 100000));
  sample->add_option("--t", o.t_values, "Trace values in [0, 1); repeatable")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  sample->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv"}))
      ->default_val("csv");
  sample->add_option("--out", o.out_path, "Write the CSV to FILE instead of stdout");
  sample->add_option("--threads", o.threads, "Worker threads")->default_val(1u)->check(
      CLI::Range(1u, 256u));
  sample->add_flag("--verify", o.verify, "Verify every pattern certificate");
  add_tolerance(sample, o);

  CLI::App* verify =
      add_spectrum_command(app, "verify", "Check a matrix file against a target spectrum", o);
  verify->add_option("--matrix", o.matrix_path, "Matrix file: 5x5 text or JSON")->required();
  add_tolerance(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(o, out, err);
    if (realize->parsed()) return run_realize(o, out, err);
    if (qroots->parsed()) return run_qroots(o, out);
    if (perturb->parsed()) return run_perturb(o, out, err);
    if (sample->parsed()) return run_sample(o, out, err);
    if (verify->parsed()) return run_verify(o, out);
  } catch (const InvalidSpectrum& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EmptyGrid& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sniep
