// Command-line front end: every pipeline stage with deterministic,
// machine-readable output.
#include "CLI11.hpp"
#include "json.hpp"

#include "halphen/deltaseries.hpp"
#include "halphen/pct.hpp"
#include "halphen/qes.hpp"
#include "halphen/verify.hpp"
#include "halphen/weierstrass.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using halphen::domain_error;
using halphen::structural_error;
using halphen::exactmath::Rational;
using halphen::exactmath::Scalar;
using halphen::exactmath::to_double;
using json = nlohmann::ordered_json;

int log_level() {
  const char* env = std::getenv("HALPHEN_LOG");
  if (!env) return 0;
  std::string v(env);
  if (v == "debug") return 2;
  if (v == "info") return 1;
  return 0;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[halphen] " << msg << "\n";
}

// Locale-independent shortest round-trip rendering.
std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json rational_json(const Rational& q) {
  json j;
  j["exact"] = true;
  j["num"] = halphen::exactmath::num_string(q);
  j["den"] = halphen::exactmath::den_string(q);
  return j;
}

json double_json(double v) {
  json j;
  j["exact"] = false;
  j["value"] = v;
  return j;
}

json scalar_json(const Scalar& s) {
  if (s.exact()) {
    if (s.im_q() == 0) return rational_json(s.re_q());
    json j;
    j["exact"] = true;
    j["re"] = rational_json(s.re_q());
    j["im"] = rational_json(s.im_q());
    return j;
  }
  if (s.im() == 0.0) return double_json(s.re());
  json j;
  j["exact"] = false;
  j["re"] = s.re();
  j["im"] = s.im();
  return j;
}

// Complex-valued slots (roots, accessory values, coefficients) always carry
// explicit re/im parts.
json complex_json(const Scalar& s) {
  json j;
  j["exact"] = s.exact();
  if (s.exact()) {
    j["re"] = rational_json(s.re_q());
    j["im"] = rational_json(s.im_q());
  } else {
    j["re"] = s.re();
    j["im"] = s.im();
  }
  return j;
}

json findings_json(const halphen::report::Report& rep) {
  json arr = json::array();
  for (const auto& f : rep.items()) {
    json item;
    item["location"] = f.location;
    item["paper"] = f.paper;
    item["derived"] = f.derived;
    if (!f.note.empty()) item["note"] = f.note;
    arr.push_back(item);
  }
  return arr;
}

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw domain_error("cannot open output path: " + path);
      out << text;
      if (!text.empty() && text.back() != '\n') out << "\n";
    }
  }
  void emit_json(const json& j) const { emit(j.dump(2)); }
};

Rational parse_rational_arg(const std::string& text, const std::string& name) {
  auto q = halphen::exactmath::parse_rational(text);
  if (!q) throw CLI::ValidationError(name, "expected a rational ('p/q' or finite decimal), got '" + text + "'");
  return *q;
}

std::string scalar_cell(const Scalar& s) {
  if (s.exact() && s.im_q() == 0) return halphen::exactmath::to_string(s.re_q());
  if (s.im() == 0.0) return fmt_double(s.re());
  return fmt_double(s.re()) + (s.im() < 0 ? "-" : "+") + fmt_double(std::abs(s.im())) + "i";
}

// ---------------------------------------------------------------- roots ----

int cmd_roots(const Rational& g2, const Rational& g3, const Output& out) {
  halphen::weierstrass::EllipticInvariants inv{g2, g3};
  auto roots = halphen::weierstrass::roots_from_invariants(inv);
  if (out.format == "json") {
    json j;
    j["g2"] = rational_json(g2);
    j["g3"] = rational_json(g3);
    j["discriminant"] = rational_json(inv.discriminant());
    j["all_real"] = inv.all_real_roots();
    j["ordering"] = "descending-real";
    j["roots"] = json::array();
    for (const auto& e : roots.e) j["roots"].push_back(complex_json(e));
    out.emit_json(j);
  } else if (out.format == "csv") {
    std::ostringstream os;
    os << "s,re,im,exact\n";
    for (int s = 0; s < 3; ++s)
      os << (s + 1) << "," << fmt_double(roots.e[s].re()) << "," << fmt_double(roots.e[s].im())
         << "," << (roots.e[s].exact() ? 1 : 0) << "\n";
    out.emit(os.str());
  } else {
    std::ostringstream os;
    os << "roots of 4r^3 - (" << halphen::exactmath::to_string(g2) << ") r - ("
       << halphen::exactmath::to_string(g3) << "), descending:\n";
    for (const auto& e : roots.e) os << "  " << scalar_cell(e) << "\n";
    os << "discriminant = " << halphen::exactmath::to_string(inv.discriminant()) << "\n";
    out.emit(os.str());
  }
  return 0;
}

// ------------------------------------------------------------- spectrum ----

int cmd_spectrum(int n, const Rational& g2, const Rational& g3, const Output& out) {
  auto result = halphen::qes::solve_qes(n, g2, g3);
  Rational j = Rational(n) / 2;
  halphen::weierstrass::EllipticInvariants inv{g2, g3};

  json eta_json;
  json expo_json;
  std::string eta_note;
  try {
    auto eta = halphen::qes::gauge_exponents(j, inv);
    eta_json = json::array();
    expo_json = json::array();
    for (const auto& e : eta) {
      eta_json.push_back(scalar_json(e));
      Scalar shifted = e - Scalar::from_rational(j / 2);
      expo_json.push_back(scalar_json(shifted));
    }
  } catch (const domain_error& e) {
    eta_json = nullptr;
    expo_json = nullptr;
    eta_note = e.what();
  }

  if (out.format == "json") {
    json jroot;
    jroot["n"] = n;
    jroot["g2"] = rational_json(g2);
    jroot["g3"] = rational_json(g3);
    jroot["b_values"] = json::array();
    for (const auto& sol : result.solutions) jroot["b_values"].push_back(complex_json(sol.B));
    jroot["solutions"] = json::array();
    for (const auto& sol : result.solutions) {
      json s;
      s["b"] = complex_json(sol.B);
      s["coeffs"] = json::array();
      for (const auto& a : sol.coeffs) s["coeffs"].push_back(complex_json(a));
      s["residual_norm"] = double_json(sol.residual_norm);
      s["eta"] = eta_json;
      s["exponents"] = expo_json;
      if (!eta_note.empty()) s["eta_note"] = eta_note;
      jroot["solutions"].push_back(s);
    }
    jroot["discrepancies"] = findings_json(result.findings);
    out.emit_json(jroot);
  } else if (out.format == "csv") {
    std::ostringstream os;
    os << "index,b_re,b_im,b_exact,residual_norm\n";
    int i = 0;
    for (const auto& sol : result.solutions)
      os << i++ << "," << fmt_double(sol.B.re()) << "," << fmt_double(sol.B.im()) << ","
         << (sol.B.exact() ? 1 : 0) << "," << fmt_double(sol.residual_norm) << "\n";
    out.emit(os.str());
  } else {
    std::ostringstream os;
    os << "accessory spectrum, n = " << n << ":\n";
    for (const auto& sol : result.solutions) {
      os << "  B = " << scalar_cell(sol.B) << "   coeffs:";
      for (const auto& a : sol.coeffs) os << " " << scalar_cell(a);
      os << "   residual " << fmt_double(sol.residual_norm) << "\n";
    }
    os << "discrepancies: " << result.findings.size() << "\n";
    for (const auto& f : result.findings.items())
      os << "  [" << f.location << "] paper: " << f.paper << " | derived: " << f.derived << "\n";
    out.emit(os.str());
  }
  return 0;
}

// ------------------------------------------------------------ potential ----

int cmd_potential(int n, const Rational& g2, const Rational& g3, const Rational& B,
                  double rmin, double rmax, int samples, const Output& out) {
  Rational j = Rational(n) / 2;
  auto op = halphen::algebra::canonical_operator(j, g2, g3, B);
  halphen::weierstrass::EllipticInvariants inv{g2, g3};
  struct Row {
    double r, w, vg, vp;
  };
  std::vector<Row> rows;
  for (int i = 0; i < samples; ++i) {
    double r = (samples == 1) ? rmin : rmin + (rmax - rmin) * i / (samples - 1);
    Row row;
    row.r = r;
    row.w = halphen::weierstrass::r_to_w(r, inv);
    row.vg = halphen::qes::schrodinger_potential(op, r);
    row.vp = halphen::qes::potential_paper(j, g2, g3, B, r);
    rows.push_back(row);
  }
  if (out.format == "json") {
    json jr;
    jr["n"] = n;
    jr["g2"] = rational_json(g2);
    jr["g3"] = rational_json(g3);
    jr["b"] = rational_json(B);
    jr["rows"] = json::array();
    for (const auto& row : rows) {
      json item;
      item["r"] = double_json(row.r);
      item["w"] = double_json(row.w);
      item["v_general"] = double_json(row.vg);
      item["v_paper"] = double_json(row.vp);
      item["diff"] = double_json(row.vg - row.vp);
      jr["rows"].push_back(item);
    }
    out.emit_json(jr);
  } else {
    std::ostringstream os;
    os << "r,w,v_general,v_paper,diff\n";
    for (const auto& row : rows)
      os << fmt_double(row.r) << "," << fmt_double(row.w) << "," << fmt_double(row.vg) << ","
         << fmt_double(row.vp) << "," << fmt_double(row.vg - row.vp) << "\n";
    out.emit(os.str());
  }
  return 0;
}

// ---------------------------------------------------------------- exact ----

int cmd_exact(const Rational& g2, const Rational& g3, const Rational& B, int nu, int gamma,
              int m, const std::string& branch, const std::string& grid, double rmin,
              double rmax, int samples, const Output& out) {
  halphen::weierstrass::EllipticInvariants inv{g2, g3};
  halphen::pct::Branch br =
      (branch == "plus") ? halphen::pct::Branch::plus : halphen::pct::Branch::minus;
  halphen::pct::PCTParams params(nu, gamma, m, B, br, inv);
  auto ks = halphen::pct::k_pm(B, g2, g3);
  const Scalar& k = (br == halphen::pct::Branch::plus) ? ks.k_plus : ks.k_minus;

  struct Row {
    double r, w, R, residual;
  };
  std::vector<Row> rows;
  for (int i = 0; i < samples; ++i) {
    double r;
    if (grid == "log") {
      double t = (samples == 1) ? 0.0 : static_cast<double>(i) / (samples - 1);
      r = rmin * std::pow(rmax / rmin, t);
    } else {
      r = (samples == 1) ? rmin : rmin + (rmax - rmin) * i / (samples - 1);
    }
    Row row;
    row.r = r;
    row.w = std::exp(k.re() * r);
    row.R = halphen::pct::exact_wavefunction(params, r);
    row.residual = halphen::pct::wavefunction_residual(params, r);
    rows.push_back(row);
  }
  if (out.format == "json") {
    json jr;
    jr["g2"] = rational_json(g2);
    jr["g3"] = rational_json(g3);
    jr["b"] = rational_json(B);
    jr["nu"] = nu;
    jr["gamma"] = gamma;
    jr["m"] = m;
    jr["branch"] = branch;
    jr["k"] = scalar_json(k);
    jr["rows"] = json::array();
    for (const auto& row : rows) {
      json item;
      item["r"] = double_json(row.r);
      item["w_plus"] = double_json(row.w);
      item["R"] = double_json(row.R);
      item["residual"] = double_json(row.residual);
      jr["rows"].push_back(item);
    }
    halphen::report::Report findings = halphen::pct::exact_operator_findings(g2, g3, B);
    findings.merge(halphen::pct::wavefunction_display_findings());
    jr["discrepancies"] = findings_json(findings);
    out.emit_json(jr);
  } else {
    std::ostringstream os;
    os << "r,w_plus,R,residual\n";
    for (const auto& row : rows)
      os << fmt_double(row.r) << "," << fmt_double(row.w) << "," << fmt_double(row.R) << ","
         << fmt_double(row.residual) << "\n";
    out.emit(os.str());
  }
  return 0;
}

// ----------------------------------------------------------------- dist ----

int cmd_dist(int s, const Rational& q, const Rational& K2, int kmax, const Output& out) {
  auto exp = halphen::dseries::assemble_distribution(s, q, K2, kmax);
  auto fourier = halphen::dseries::verify_fourier_condition(exp);
  auto findings = halphen::dseries::closed_form_findings(exp);

  if (out.format == "json") {
    json jr;
    jr["s"] = s;
    jr["n"] = exp.n;
    jr["q"] = rational_json(q);
    jr["k2"] = rational_json(K2);
    jr["kmax"] = kmax;
    jr["per_m"] = json::array();
    for (const auto& chain : exp.per_m) {
      json jc;
      jc["m"] = chain.m;
      jc["p"] = chain.p;
      jc["weight"] = rational_json(chain.weight);
      if (chain.disc_defined) {
        jc["disc"] = rational_json(chain.disc);
        jc["disc_negative"] = chain.disc_negative;
      }
      jc["coeffs"] = json::array();
      for (int k = 0; k <= exp.K; ++k) {
        const auto& f = chain.a[static_cast<std::size_t>(k)];
        json item;
        item["k"] = k;
        if (f.c1 == 0) {
          item["a"] = rational_json(f.c0);
        } else {
          json form;
          form["exact"] = false;
          form["value"] = chain.coeff_value(k);
          form["c0"] = rational_json(f.c0);
          form["c1"] = rational_json(f.c1);
          item["a"] = form;
        }
        jc["coeffs"].push_back(item);
      }
      jr["per_m"].push_back(jc);
    }
    jr["assembled"] = json::array();
    for (double v : exp.assembled) jr["assembled"].push_back(double_json(v));
    json jf;
    jf["all_interior_exact_zero"] = fourier.all_interior_exact_zero;
    jf["max_interior_magnitude"] = double_json(fourier.max_interior_magnitude);
    jf["boundary_orders"] = json::array();
    for (const auto& b : fourier.boundary) {
      json item;
      item["m"] = b.m;
      item["sigma_order"] = b.sigma_order;
      item["magnitude"] = double_json(b.magnitude);
      jf["boundary_orders"].push_back(item);
    }
    jr["fourier"] = jf;
    jr["discrepancies"] = findings_json(findings);
    out.emit_json(jr);
  } else if (out.format == "csv") {
    std::ostringstream os;
    os << "k,m,a_num,a_den,value\n";
    for (const auto& chain : exp.per_m)
      for (int k = 0; k <= exp.K; ++k) {
        const auto& f = chain.a[static_cast<std::size_t>(k)];
        os << k << "," << chain.m << ",";
        if (f.c1 == 0)
          os << halphen::exactmath::num_string(f.c0) << ","
             << halphen::exactmath::den_string(f.c0);
        else
          os << ",";
        os << "," << fmt_double(chain.coeff_value(k)) << "\n";
      }
    out.emit(os.str());
  } else {
    std::ostringstream os;
    os << "delta-series coefficients, s = " << s << " (n = " << exp.n << "):\n";
    for (const auto& chain : exp.per_m) {
      os << " m = " << chain.m << " (p = " << chain.p << "):\n";
      for (int k = 0; k <= exp.K; ++k) {
        const auto& f = chain.a[static_cast<std::size_t>(k)];
        os << "  a_" << k << " = ";
        if (f.c1 == 0)
          os << halphen::exactmath::to_string(f.c0);
        else
          os << halphen::exactmath::to_string(f.c0) << " + ("
             << halphen::exactmath::to_string(f.c1) << ")*sqrt("
             << halphen::exactmath::to_string(chain.disc) << ")  ~ "
             << fmt_double(chain.coeff_value(k));
        os << "\n";
      }
    }
    os << "interior fourier residuals "
       << (fourier.all_interior_exact_zero ? "all exactly zero" : "NONZERO") << "\n";
    out.emit(os.str());
  }
  return 0;
}

// --------------------------------------------------------------- verify ----

int cmd_verify(const std::string& suite, std::uint64_t seed, const Output& out) {
  auto result = halphen::verifier::run_verify(suite, seed);
  if (out.format == "table") {
    std::ostringstream os;
    for (const auto& s : result.suites) {
      os << s.name << ": " << s.passed << " passed, " << s.failed << " failed\n";
      for (const auto& f : s.failures) os << "    FAIL " << f << "\n";
    }
    os << "discrepancy findings: " << result.findings.size() << "\n";
    for (const auto& f : result.findings.items())
      os << "  [" << f.location << "]\n    paper:   " << f.paper
         << "\n    derived: " << f.derived << "\n";
    os << (result.ok() ? "VERIFY OK" : "VERIFY FAILED") << "\n";
    out.emit(os.str());
  } else {
    json jr;
    jr["suite"] = suite;
    jr["seed"] = seed;
    jr["suites"] = json::array();
    for (const auto& s : result.suites) {
      json js;
      js["name"] = s.name;
      js["passed"] = s.passed;
      js["failed"] = s.failed;
      js["failures"] = s.failures;
      jr["suites"].push_back(js);
    }
    jr["discrepancies"] = findings_json(result.findings);
    jr["ok"] = result.ok();
    out.emit_json(jr);
  }
  return result.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radial Brioschi-Halphen operator toolkit"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", out.path, "write output to a file instead of stdout");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized suites");

  std::string g2_s = "1", g3_s = "0", b_s = "0", q_s = "0", k2_s = "1/2";

  auto* roots = app.add_subcommand("roots", "Weierstrass cubic roots from (g2, g3)");
  roots->add_option("--g2", g2_s, "invariant g2 (rational)")->required();
  roots->add_option("--g3", g3_s, "invariant g3 (rational)")->required();

  auto* spectrum = app.add_subcommand("spectrum", "accessory-parameter spectrum at n = 2j");
  int n = 0;
  spectrum->add_option("--n", n, "subspace degree n (n+1 states)")->required();
  spectrum->add_option("--g2", g2_s)->required();
  spectrum->add_option("--g3", g3_s)->required();

  auto* potential = app.add_subcommand("potential", "Schroedinger potential along an r grid");
  double rmin = 0.6, rmax = 5.0;
  int samples = 10;
  potential->add_option("--n", n)->required();
  potential->add_option("--g2", g2_s)->required();
  potential->add_option("--g3", g3_s)->required();
  potential->add_option("--b", b_s, "accessory parameter B (rational)");
  potential->add_option("--r-min", rmin);
  potential->add_option("--r-max", rmax);
  potential->add_option("--samples", samples);

  auto* exact = app.add_subcommand("exact", "spin-1/2 branch wave function along an r grid");
  int nu = 2, gamma = 1, m = 0;
  std::string branch = "minus", grid = "linear";
  exact->add_option("--g2", g2_s)->required();
  exact->add_option("--g3", g3_s)->required();
  exact->add_option("--b", b_s, "accessory parameter B (rational)");
  exact->add_option("--nu", nu);
  exact->add_option("--gamma", gamma);
  exact->add_option("--m", m, "polynomial order");
  exact->add_option("--branch", branch)->check(CLI::IsMember({"plus", "minus"}));
  exact->add_option("--grid", grid)->check(CLI::IsMember({"linear", "log"}));
  exact->add_option("--r-min", rmin);
  exact->add_option("--r-max", rmax);
  exact->add_option("--samples", samples);

  auto* dist = app.add_subcommand("dist", "delta-series coefficients and Fourier closure");
  int s_param = 1, kmax = 12;
  dist->add_option("--s", s_param, "n = -2s")->required();
  dist->add_option("--q", q_s, "transform parameter q (rational)");
  dist->add_option("--k2", k2_s, "weighting K2 in (0,1) (rational)");
  dist->add_option("--kmax", kmax, "truncation order K");

  auto* verify = app.add_subcommand("verify", "run the module invariant suites");
  std::string suite = "all";
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "exactmath", "weierstrass", "algebraization", "qes",
                             "exact", "dist"}));

  // Global flags remain valid after the subcommand name.
  for (CLI::App* sub : {roots, spectrum, potential, exact, dist, verify}) sub->fallthrough();

  // Default formats: tabular payloads for the grid commands, json elsewhere.
  bool format_given = false;
  app.callback([&]() { format_given = app.count("--format") > 0; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!format_given && (potential->parsed() || exact->parsed())) out.format = "csv";
    if (!format_given && dist->parsed()) out.format = "table";

    if (roots->parsed()) {
      log_info("roots");
      return cmd_roots(parse_rational_arg(g2_s, "--g2"), parse_rational_arg(g3_s, "--g3"), out);
    }
    if (spectrum->parsed()) {
      log_info("spectrum n=" + std::to_string(n));
      if (n < 0) throw domain_error("spectrum: n must be >= 0");
      return cmd_spectrum(n, parse_rational_arg(g2_s, "--g2"), parse_rational_arg(g3_s, "--g3"),
                          out);
    }
    if (potential->parsed()) {
      log_info("potential n=" + std::to_string(n));
      if (n < 0) throw domain_error("potential: n must be >= 0");
      if (samples < 1) throw domain_error("potential: samples must be >= 1");
      return cmd_potential(n, parse_rational_arg(g2_s, "--g2"),
                           parse_rational_arg(g3_s, "--g3"), parse_rational_arg(b_s, "--b"),
                           rmin, rmax, samples, out);
    }
    if (exact->parsed()) {
      log_info("exact branch=" + branch);
      return cmd_exact(parse_rational_arg(g2_s, "--g2"), parse_rational_arg(g3_s, "--g3"),
                       parse_rational_arg(b_s, "--b"), nu, gamma, m, branch, grid, rmin, rmax,
                       samples, out);
    }
    if (dist->parsed()) {
      log_info("dist s=" + std::to_string(s_param));
      return cmd_dist(s_param, parse_rational_arg(q_s, "--q"), parse_rational_arg(k2_s, "--k2"),
                      kmax, out);
    }
    if (verify->parsed()) {
      log_info("verify suite=" + suite + " seed=" + std::to_string(seed));
      return cmd_verify(suite, seed, out);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const structural_error& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
