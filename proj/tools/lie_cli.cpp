// lie: command-line front end for the Lie algebra workbench.
//
// Subcommands: catalog, export, verify, irrep, lorentz, transform.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "lie/json_io.hpp"
#include "lie/verify.hpp"

namespace {

double tolerance_from_env() {
  if (const char* env = std::getenv("LIE_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end && *end == '\0' && v > 0) return v;
    throw lie::Error(std::string("LIE_TOL is not a positive number: '") + env + "'");
  }
  return 1e-12;
}

std::array<double, 3> parse_triple(const std::string& s, const std::string& flag) {
  std::array<double, 3> out{0, 0, 0};
  std::stringstream ss(s);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 3) throw lie::Error(flag + ": expected three comma-separated numbers");
    char* end = nullptr;
    out[size_t(k++)] = std::strtod(item.c_str(), &end);
    if (!end || *end != '\0') throw lie::Error(flag + ": bad number '" + item + "'");
  }
  if (k != 3) throw lie::Error(flag + ": expected three comma-separated numbers");
  return out;
}

std::array<double, 4> parse_quad(const std::string& s, const std::string& flag) {
  std::array<double, 4> out{0, 0, 0, 0};
  std::stringstream ss(s);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 4) throw lie::Error(flag + ": expected four comma-separated numbers");
    char* end = nullptr;
    out[size_t(k++)] = std::strtod(item.c_str(), &end);
    if (!end || *end != '\0') throw lie::Error(flag + ": bad number '" + item + "'");
  }
  if (k != 4) throw lie::Error(flag + ": expected four comma-separated numbers");
  return out;
}

void write_output(const lie::Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw lie::Error("cannot open output file '" + out_path + "'");
  f << j.dump(2) << "\n";
}

void print_report(const lie::CheckReport& r, const std::string& suite) {
  std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << (r.exact ? "exact " : "float ") << suite
            << "/" << r.check << "  " << r.subject << " — " << r.context;
  if (!r.exact) std::cout << " (residual " << r.residual << ")";
  if (!r.details.empty()) std::cout << " [" << r.details << "]";
  std::cout << "\n";
}

struct MutationSpec {
  std::string key;
  int i = 0, j = 0, k = 0;
};

MutationSpec parse_mutation(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw lie::Error("--mutate: expected KEY:i,j,k, got '" + s + "'");
  MutationSpec m;
  m.key = s.substr(0, colon);
  std::stringstream ss(s.substr(colon + 1));
  std::string item;
  int vals[3], n = 0;
  while (std::getline(ss, item, ',')) {
    if (n >= 3) throw lie::Error("--mutate: expected KEY:i,j,k");
    vals[n++] = std::stoi(item);
  }
  if (n != 3) throw lie::Error("--mutate: expected KEY:i,j,k");
  m.i = vals[0];
  m.j = vals[1];
  m.k = vals[2];
  return m;
}

int cmd_catalog(bool as_json) {
  lie::Json arr = lie::Json::array();
  for (const auto& key : lie::catalog_keys()) {
    lie::CatalogEntry e = lie::catalog_get(key);
    if (as_json) {
      lie::Json j;
      j["key"] = e.key;
      j["dim"] = e.algebra.dim;
      j["field"] = lie::field_name(e.algebra.field);
      j["provenance"] = e.provenance;
      arr.push_back(std::move(j));
    } else {
      std::cout << e.key << "  dim " << e.algebra.dim << " over "
                << lie::field_name(e.algebra.field) << "  — " << e.provenance << "\n";
    }
  }
  if (as_json) std::cout << arr.dump(2) << "\n";
  return 0;
}

int cmd_export(const std::string& key, const std::string& out_path) {
  write_output(lie::algebra_to_json(lie::catalog_get(key).algebra), out_path);
  return 0;
}

int cmd_verify(const std::string& suite, bool as_json, const std::string& mutate) {
  lie::AlgebraFetch fetch = lie::default_fetch();
  if (!mutate.empty()) {
    MutationSpec m = parse_mutation(mutate);
    fetch = [m](const std::string& key) {
      lie::LieAlgebra g = lie::catalog_get(key).algebra;
      if (key == m.key) {
        if (m.i < 0 || m.i >= g.dim || m.j < 0 || m.j >= g.dim || m.k < 0 || m.k >= g.dim)
          throw lie::Error("--mutate: index out of range for " + key);
        g.c.at(m.i, m.j, m.k) += lie::ExactScalar{1};
      }
      return g;
    };
  }
  auto suites = lie::run_suites(suite, fetch, tolerance_from_env());
  bool all_pass = true;
  lie::Json arr = lie::Json::array();
  for (const auto& s : suites) {
    for (const auto& r : s.reports) {
      if (!r.pass) all_pass = false;
      if (as_json) {
        lie::Json j = lie::report_to_json(r);
        j["suite"] = s.suite;
        arr.push_back(std::move(j));
      } else {
        print_report(r, s.suite);
      }
    }
  }
  if (as_json)
    std::cout << arr.dump(2) << "\n";
  else
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  return all_pass ? 0 : 1;
}

int cmd_irrep(const std::string& j1s, const std::string& j2s, const std::string& out_path) {
  lie::IrrepLabel label{lie::HalfInt::parse(j1s), lie::HalfInt::parse(j2s)};
  lie::ExactRep rep = lie::lorentz_irrep(label);
  lie::IrrepInfo info = lie::irrep_info(label);

  std::cout << "representation " << label.str() << ", dimension (2j1+1)(2j2+1) = "
            << label.dimension() << "\n";
  if (!info.name.empty())
    std::cout << "name: " << info.name << " — " << info.particle << "\n";
  for (size_t g = 0; g < rep.rho.size(); ++g) {
    std::cout << "rho(" << rep.algebra.basis_labels[g] << ") =\n";
    for (int r = 0; r < rep.dim; ++r) {
      std::cout << "  [";
      for (int c = 0; c < rep.dim; ++c)
        std::cout << (c ? ", " : "") << rep.rho[g](r, c).str();
      std::cout << "]\n";
    }
  }
  lie::Json j = lie::rep_to_json(rep);
  if (!info.name.empty()) {
    j["name"] = info.name;
    j["particle"] = info.particle;
  }
  write_output(j, out_path);
  return 0;
}

int cmd_lorentz(const std::string& theta_s, const std::string& gamma_s, const std::string& rep_s,
                const std::string& out_path) {
  double tol = tolerance_from_env();
  lie::LorentzParams p;
  p.theta = parse_triple(theta_s, "--theta");
  p.gamma = parse_triple(gamma_s, "--gamma");

  lie::Json j;
  j["theta"] = p.theta;
  j["gamma"] = p.gamma;
  j["rep"] = rep_s;
  if (rep_s == "fundamental") {
    lie::NumericRep fund =
        lie::to_numeric(lie::fundamental_rep(lie::catalog_get("so13").algebra));
    lie::CMat d = lie::lorentz_element(p, fund, tol);
    lie::CMat eta = lie::minkowski_metric();
    j["matrix"] = lie::cmat_to_json(d);
    j["metric_residual"] = (d.transpose() * eta * d - eta).max_abs();
    j["det"] = lie::cplx_str(d.det());
    j["d00"] = d(0, 0).real();
  } else if (rep_s == "dirac") {
    j["matrix"] = lie::cmat_to_json(lie::lambda_dirac(p, tol));
  } else {
    auto comma = rep_s.find(',');
    if (comma == std::string::npos)
      throw lie::Error("--rep: expected fundamental, dirac or j1,j2 (e.g. 1/2,0)");
    lie::IrrepLabel label{lie::HalfInt::parse(rep_s.substr(0, comma)),
                          lie::HalfInt::parse(rep_s.substr(comma + 1))};
    j["matrix"] = lie::cmat_to_json(
        lie::lorentz_element(p, lie::lorentz_irrep_symmetric(label), tol));
  }
  write_output(j, out_path);
  return 0;
}

int cmd_transform(const std::string& field_path, const std::string& theta_s,
                  const std::string& gamma_s, const std::string& a_s,
                  const std::string& out_path, bool serial) {
  std::ifstream in(field_path);
  if (!in) throw lie::Error("cannot open field file '" + field_path + "'");
  lie::Json fj = lie::Json::parse(in, nullptr, true);
  lie::SampledField f = lie::field_from_json(fj);

  lie::LorentzParams p;
  p.theta = parse_triple(theta_s, "--theta");
  p.gamma = parse_triple(gamma_s, "--gamma");
  std::array<double, 4> a = parse_quad(a_s, "--a");

  lie::SampledField g = lie::transform_field(
      f, p, a, serial ? lie::Execution::Serial : lie::Execution::Parallel,
      tolerance_from_env());
  write_output(lie::field_to_json(g), out_path);

  double frac = lie::uncovered_fraction(g);
  long long total = g.grid.points();
  std::cout << "out-of-domain pullbacks: " << frac << " (" << (long long)(frac * total + 0.5)
            << "/" << total << " points)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite-dimensional Lie algebras: complexification, "
               "real forms and Lorentz representations"};
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalog", "list the built-in algebras");
  bool cat_json = false;
  cat->add_flag("--json", cat_json, "machine-readable listing");

  auto* exp = app.add_subcommand("export", "emit one catalog algebra as JSON");
  std::string exp_key, exp_out;
  exp->add_option("--key", exp_key, "catalog key")->required();
  exp->add_option("--out", exp_out, "output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "run verification suites");
  std::string ver_suite = "all", ver_mutate;
  bool ver_json = false;
  ver->add_option("suite", ver_suite,
                  "all, catalog, theorem1, corollary, hom, so13, so4, casimir or lambda");
  ver->add_flag("--json", ver_json, "emit the report array as JSON");
  ver->add_option("--mutate", ver_mutate,
                  "KEY:i,j,k — perturb one structure constant before checking");

  auto* irr = app.add_subcommand("irrep", "build a (j1, j2) representation");
  std::string irr_j1, irr_j2, irr_out;
  irr->add_option("--j1", irr_j1, "half-integer, e.g. 1/2")->required();
  irr->add_option("--j2", irr_j2, "half-integer, e.g. 0")->required();
  irr->add_option("--out", irr_out, "write Representation JSON here");

  auto* lor = app.add_subcommand("lorentz", "evaluate a group element D(Lambda)");
  std::string lor_theta = "0,0,0", lor_gamma = "0,0,0", lor_rep = "fundamental", lor_out;
  lor->add_option("--theta", lor_theta, "rotation parameters a,b,c");
  lor->add_option("--gamma", lor_gamma, "boost rapidities a,b,c");
  lor->add_option("--rep", lor_rep, "fundamental, dirac or j1,j2");
  lor->add_option("--out", lor_out, "output file (default stdout)");

  auto* tra = app.add_subcommand("transform", "apply a Poincare transformation to a field");
  std::string tra_field, tra_theta = "0,0,0", tra_gamma = "0,0,0", tra_a = "0,0,0,0", tra_out;
  bool tra_serial = false;
  tra->add_option("--field", tra_field, "input field JSON")->required();
  tra->add_option("--theta", tra_theta, "rotation parameters a,b,c");
  tra->add_option("--gamma", tra_gamma, "boost rapidities a,b,c");
  tra->add_option("--a", tra_a, "translation t,x,y,z");
  tra->add_option("--out", tra_out, "output field JSON")->required();
  tra->add_flag("--serial", tra_serial, "disable the parallel kernel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cat) return cmd_catalog(cat_json);
    if (*exp) return cmd_export(exp_key, exp_out);
    if (*ver) return cmd_verify(ver_suite, ver_json, ver_mutate);
    if (*irr) return cmd_irrep(irr_j1, irr_j2, irr_out);
    if (*lor) return cmd_lorentz(lor_theta, lor_gamma, lor_rep, lor_out);
    if (*tra) return cmd_transform(tra_field, tra_theta, tra_gamma, tra_a, tra_out, tra_serial);
  } catch (const lie::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lie::Json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
