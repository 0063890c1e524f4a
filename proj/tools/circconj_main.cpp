// Command-line front end: continued fractions, conjugacy decisions, orbit
// samples and end-to-end witness verification.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "circconj/io/json_io.hpp"

using namespace circconj;
using io::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInvalid = 2, kUndecided = 3 };

struct Globals {
  long precision_bits = 256;
  double delta = 1e-4;
  std::uint64_t seed = 2024;
  std::string out;

  Precision precision() const {
    Precision p = Precision::with_bits(precision_bits);
    p.delta = delta;
    p.validate();
    return p;
  }
};

void emit(const Globals& g, const json& j) {
  std::string text = j.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw DomainError("cannot write " + g.out);
  f << text;
}

Surd parse_surd_text(const std::string& text) {
  i64 a = 0, b = 0, c = 1, d = 1;
  bool seen[4] = {false, false, false, false};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("expected key=value in --surd, got \"" + item + "\"");
    std::string key = item.substr(0, eq);
    i64 value;
    try {
      std::size_t used = 0;
      value = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("not an integer in --surd: \"" + item + "\"");
    }
    int slot = key == "a" ? 0 : key == "b" ? 1 : key == "c" ? 2 : key == "d" ? 3 : -1;
    if (slot < 0) throw DomainError("unknown key \"" + key + "\" in --surd (expected a, b, c, d)");
    seen[slot] = true;
    (slot == 0 ? a : slot == 1 ? b : slot == 2 ? c : d) = value;
  }
  if (!seen[0] || !seen[1] || !seen[2] || !seen[3]) throw DomainError("--surd needs all of a, b, c, d");
  return Surd(a, b, c, d);
}

int run_cf(const Globals& g, const Surd& x) {
  if (x.is_rational()) throw DomainError("the surd " + x.to_string() + " is rational");
  json out{{"surd", io::surd_to_json(x)}, {"value", x.to_double()}, {"cf", io::cf_to_json(cf_expand(x))}};
  auto t = stabilizer_generator(x);
  out["stabilizer_generator"] = t ? io::matrix_to_json(*t) : json(nullptr);
  emit(g, out);
  return kOk;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::conjugate:
      return kOk;
    case Verdict::not_conjugate:
      return kNegative;
    case Verdict::undecided_nonquadratic:
      return kUndecided;
  }
  return kInvalid;
}

int run_decide(const Globals& g, const CircleGroupDescriptor& d1, const CircleGroupDescriptor& d2, bool oracle) {
  Decision r = oracle ? decide_oracle(d1, d2) : decide(d1, d2);
  json out = io::decision_to_json(r);
  out["method"] = oracle ? "oracle" : "layered";
  emit(g, out);
  return verdict_exit(r.verdict);
}

CirclePoint parse_t0(const std::string& text, const CircleGroupDescriptor& d, mpfr_prec_t bits) {
  auto slash = text.find('/');
  CirclePoint t;
  try {
    if (slash != std::string::npos) {
      t = LiftPoint::rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)), bits);
    } else {
      double v = std::stod(text);
      double kv = v * d.k;
      if (kv == std::floor(kv)) return LiftPoint::rational(static_cast<i64>(kv), d.k, bits).frac();
      t = LiftPoint::approx(Real::from_double(v, bits));
    }
  } catch (const std::invalid_argument&) {
    throw DomainError("cannot parse t0 \"" + text + "\"");
  }
  return t.frac();
}

std::string svg_scatter(const std::vector<double>& ts, const std::vector<double>& marked) {
  const double c = 210, r = 180;
  std::ostringstream s;
  s.precision(6);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"420\" height=\"420\" viewBox=\"0 0 420 420\">\n";
  s << "<rect width=\"420\" height=\"420\" fill=\"white\"/>\n";
  s << "<circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << r << "\" fill=\"none\" stroke=\"#999\"/>\n";
  for (double t : ts) {
    double a = 2 * std::numbers::pi * t;
    s << "<circle cx=\"" << c + r * std::cos(a) << "\" cy=\"" << c - r * std::sin(a)
      << "\" r=\"1.2\" fill=\"#1f5fbf\" fill-opacity=\"0.5\"/>\n";
  }
  for (double t : marked) {
    double a = 2 * std::numbers::pi * t;
    double x = c + r * std::cos(a), y = c - r * std::sin(a);
    s << "<path d=\"M" << x - 6 << ' ' << y - 6 << " L" << x + 6 << ' ' << y + 6 << " M" << x - 6 << ' ' << y + 6
      << " L" << x + 6 << ' ' << y - 6 << "\" stroke=\"#c0392b\" stroke-width=\"2\" class=\"marked\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

struct OrbitJob {
  CircleGroupDescriptor d;
  std::string t0;
  std::size_t n = 10000;
  std::string csv = "orbit.csv";
  std::string svg;
};

int run_orbit(const Globals& g, const OrbitJob& job) {
  Precision p = g.precision();
  CirclePoint t0 = parse_t0(job.t0, job.d, static_cast<mpfr_prec_t>(p.working_bits));
  OrbitSample sample = orbit_sample(job.d, t0, job.n, g.seed, p);
  std::vector<double> ts;
  for (const auto& pt : sample.points) ts.push_back(pt.x.to_double());
  {
    std::ofstream f(job.csv);
    if (!f) throw DomainError("cannot write " + job.csv);
    f << "index,t\n";
    char buf[64];
    for (std::size_t i = 0; i < ts.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, ts[i]);
      f << buf;
    }
  }
  std::vector<double> marked;
  json finite = json::array();
  for (const auto& m : finite_orbit(job.d, p)) {
    marked.push_back(m.x.to_double());
    finite.push_back({{"num", m.exact->a()}, {"den", m.exact->c()}});
  }
  if (!job.svg.empty()) {
    std::ofstream f(job.svg);
    if (!f) throw DomainError("cannot write " + job.svg);
    f << svg_scatter(ts, marked);
  }
  json out{{"descriptor", io::descriptor_to_json(job.d)},
           {"t0", ts.front()},
           {"n_samples", job.n},
           {"seed", g.seed},
           {"precision", io::precision_to_json(p)},
           {"max_gap", sample.max_gap},
           {"finite_orbit", std::move(finite)},
           {"csv", job.csv}};
  if (!job.svg.empty()) out["svg"] = job.svg;
  emit(g, out);
  return kOk;
}

struct VerifyJob {
  CircleGroupDescriptor d1, d2;
  int grid = 200;
  double tol = 1e-6;
  bool corrupt = false;
};

int run_verify(const Globals& g, const VerifyJob& job) {
  Precision p = g.precision();
  Decision r = decide(job.d1, job.d2);
  json out{{"decision", io::decision_to_json(r)}, {"seed", g.seed}, {"corrupted_witness", job.corrupt}};
  if (r.verdict != Verdict::conjugate) {
    out["report"] = nullptr;
    emit(g, out);
    return kUndecided;
  }
  ConjugacyWitness wit = job.corrupt ? corrupt_witness(*r.witness, job.d1.k) : *r.witness;
  Expr psi = witness_to_homeo_unchecked(job.d1, job.d2, wit);
  VerifyReport rep = verify_conjugation(psi, job.d1, job.d2, wit, job.grid, job.tol, p);
  out["report"] = io::report_to_json(rep);
  emit(g, out);
  return rep.passed ? kOk : kNegative;
}

int run_eval(const Globals& g, const Expr& e, const std::vector<double>& at, bool circle) {
  Precision p = g.precision();
  Evaluator ev(p);
  json values = json::array();
  for (double x : at) {
    Real v = circle ? ev.circle(e, LiftPoint::approx(Real::from_double(x, ev.bits())).frac()).x
                    : ev.line(e, Real::from_double(x, ev.bits()));
    values.push_back({{"x", x}, {"value", v.to_double()}, {"digits", v.to_string(40)}, {"error_bound", p.eval_tolerance}});
  }
  emit(g, {{"domain", circle ? "circle" : "line"}, {"precision", io::precision_to_json(p)}, {"values", values}});
  return kOk;
}

// A job file: {"command": ..., command fields, optional "precision", "seed", "out"}.
int run_job(Globals g, const std::string& path) {
  json j = io::read_file(path);
  if (!j.is_object() || !j.contains("command") || !j.at("command").is_string())
    throw DomainError("job file needs a string \"command\"");
  const std::string cmd = j.at("command").get<std::string>();
  auto common = [&](json& body) {
    if (body.contains("precision")) {
      Precision p = io::precision_from_json(body.at("precision"));
      g.precision_bits = p.working_bits;
      g.delta = p.delta;
    }
    if (body.contains("seed")) {
      if (!body.at("seed").is_number_unsigned()) throw DomainError("job: seed must be a non-negative integer");
      g.seed = body.at("seed").get<std::uint64_t>();
    }
    if (body.contains("out")) g.out = body.at("out").get<std::string>();
  };
  common(j);
  auto text = [&](const char* key) {
    if (!j.at(key).is_string()) throw DomainError(std::string("job: ") + key + " must be a string");
    return j.at(key).get<std::string>();
  };
  if (cmd == "cf") {
    io::check_fields(j, {"command", "surd", "precision", "seed", "out"}, {"surd"}, "cf job");
    return run_cf(g, io::surd_from_json(j.at("surd")));
  }
  if (cmd == "decide") {
    io::check_fields(j, {"command", "d1", "d2", "oracle", "precision", "seed", "out"}, {"d1", "d2"}, "decide job");
    bool oracle = j.contains("oracle") && j.at("oracle").get<bool>();
    return run_decide(g, io::descriptor_from_json(j.at("d1")), io::descriptor_from_json(j.at("d2")), oracle);
  }
  if (cmd == "orbit") {
    io::check_fields(j, {"command", "descriptor", "t0", "n", "csv", "svg", "precision", "seed", "out"},
                     {"descriptor", "t0"}, "orbit job");
    OrbitJob job;
    job.d = io::descriptor_from_json(j.at("descriptor"));
    job.t0 = j.at("t0").is_string() ? text("t0") : j.at("t0").dump();
    if (j.contains("n")) job.n = j.at("n").get<std::size_t>();
    if (j.contains("csv")) job.csv = text("csv");
    if (j.contains("svg")) job.svg = text("svg");
    return run_orbit(g, job);
  }
  if (cmd == "verify") {
    io::check_fields(j, {"command", "d1", "d2", "grid", "tol", "corrupt_witness", "precision", "seed", "out"},
                     {"d1", "d2"}, "verify job");
    VerifyJob job;
    job.d1 = io::descriptor_from_json(j.at("d1"));
    job.d2 = io::descriptor_from_json(j.at("d2"));
    if (j.contains("grid")) job.grid = j.at("grid").get<int>();
    if (j.contains("tol")) job.tol = j.at("tol").get<double>();
    if (j.contains("corrupt_witness")) job.corrupt = j.at("corrupt_witness").get<bool>();
    return run_verify(g, job);
  }
  throw DomainError("unknown job command \"" + cmd + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circle groups with a finite orbit: construction, conjugacy decisions and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--precision-bits", g.precision_bits, "MPFR working precision in bits")->check(CLI::Range(64L, 1L << 20));
  app.add_option("--delta", g.delta, "distance kept from breakpoints and marked points");
  app.add_option("--seed", g.seed, "seed for pseudo-random sampling");
  app.add_option("--out", g.out, "write the JSON result here instead of stdout");

  std::string surd_text;
  auto* cf = app.add_subcommand("cf", "continued fraction and stabilizer generator of a surd (a + b sqrt d) / c");
  cf->add_option("--surd", surd_text, "a=..,b=..,c=..,d=..")->required();

  std::string d1_path, d2_path;
  bool oracle = false;
  auto* dec = app.add_subcommand("decide", "decide topological conjugacy of two circle groups");
  dec->add_option("d1", d1_path, "first descriptor JSON")->required();
  dec->add_option("d2", d2_path, "second descriptor JSON")->required();
  dec->add_flag("--oracle", oracle, "use the brute-force oracle (n <= 4, k <= 12)");

  std::string desc_path, t0_text;
  OrbitJob orbit_job;
  auto* orb = app.add_subcommand("orbit", "sample an orbit and report its largest circular gap");
  orb->add_option("descriptor", desc_path, "descriptor JSON")->required();
  orb->add_option("--t0", t0_text, "start point in [0, 1), decimal or p/q")->required();
  orb->add_option("-n,--samples", orbit_job.n, "number of sampled group elements");
  orb->add_option("--csv", orbit_job.csv, "CSV output path");
  orb->add_option("--svg", orbit_job.svg, "optional SVG scatter path");

  VerifyJob verify_job;
  auto* ver = app.add_subcommand("verify", "decide, assemble the conjugating map and check it numerically");
  ver->add_option("d1", d1_path, "first descriptor JSON")->required();
  ver->add_option("d2", d2_path, "second descriptor JSON")->required();
  ver->add_option("--grid", verify_job.grid, "number of circle grid points")->check(CLI::PositiveNumber);
  ver->add_option("--tol", verify_job.tol, "maximum allowed deviation");
  ver->add_flag("--corrupt-witness", verify_job.corrupt, "test mode: shift the twist h by e1 before assembling");

  std::string expr_path;
  std::vector<double> at;
  bool on_circle = false;
  auto* evl = app.add_subcommand("eval", "evaluate an expression JSON at points");
  evl->add_option("expr", expr_path, "expression JSON")->required();
  evl->add_option("--at", at, "evaluation points")->required();
  evl->add_flag("--circle", on_circle, "treat the points as circle points in [0, 1)");

  std::string job_path;
  auto* job = app.add_subcommand("job", "run a command described by a JSON job file");
  job->add_option("file", job_path, "job JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*cf) return run_cf(g, parse_surd_text(surd_text));
    if (*dec)
      return run_decide(g, io::descriptor_from_json(io::read_file(d1_path)),
                        io::descriptor_from_json(io::read_file(d2_path)), oracle);
    if (*orb) {
      orbit_job.d = io::descriptor_from_json(io::read_file(desc_path));
      orbit_job.t0 = t0_text;
      return run_orbit(g, orbit_job);
    }
    if (*ver) {
      verify_job.d1 = io::descriptor_from_json(io::read_file(d1_path));
      verify_job.d2 = io::descriptor_from_json(io::read_file(d2_path));
      return run_verify(g, verify_job);
    }
    if (*evl) return run_eval(g, io::expr_from_json(io::read_file(expr_path)), at, on_circle);
    if (*job) return run_job(g, job_path);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
