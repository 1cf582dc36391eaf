// Command-line front end: branching multiplicities, Corwin-Greenleaf values,
// exact-vs-oracle verification, sweep tables and theorem checks.
//
// Exit codes: 0 success, 1 usage or parse error, 2 internal invariant
// violation, 3 theorem violation detected by check-theorems.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cgmult/cg_exact.hpp"
#include "cgmult/json_io.hpp"
#include "cgmult/oracle.hpp"

using nlohmann::json;
using namespace cgm;

namespace {

struct RunConfig {
  std::string pair_spec;
  std::string lambda_str;
  std::string nu_str;
  std::string max_str = "2";
  std::string spin = "both";
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 12345;
  int samples = 200;
  double tol_eig = 1e-9;
  bool serial = false;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw std::runtime_error("cannot open " + cfg.out_path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

// RFC-style CSV quoting: quote fields containing commas or quotes.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::vector<SpinClass> spin_classes(const std::string& spin) {
  if (spin == "int") return {SpinClass::Integer};
  if (spin == "half") return {SpinClass::Half};
  if (spin == "both") return {SpinClass::Integer, SpinClass::Half};
  throw CLI::ValidationError("--spin must be int, half or both");
}

OracleConfig oracle_config(const RunConfig& cfg) {
  OracleConfig oc;
  oc.seed = cfg.seed;
  oc.samples = cfg.samples;
  oc.tol_eig = cfg.tol_eig;
  oc.validate();
  return oc;
}

struct ParsedInstance {
  GroupPair pair;
  Weight lambda;
  Weight nu;
};

ParsedInstance parse_instance(const RunConfig& cfg) {
  GroupPair pair = GroupPair::parse(cfg.pair_spec);
  Weight lambda = Weight::parse(cfg.lambda_str, pair.K);
  Weight nu = Weight::parse(cfg.nu_str, pair.H);
  if (!is_dominant(lambda))
    throw std::invalid_argument("lambda is not dominant: " + cfg.lambda_str);
  if (!is_dominant(nu))
    throw std::invalid_argument("nu is not dominant: " + cfg.nu_str);
  return {pair, lambda, nu};
}

int cmd_branch(const RunConfig& cfg) {
  auto inst = parse_instance(cfg);
  int m = branch_multiplicity(inst.pair, inst.lambda, inst.nu);
  if (cfg.format == "json") {
    emit(cfg, json{{"pair", inst.pair.str()},
                   {"lambda", inst.lambda.str()},
                   {"nu", inst.nu.str()},
                   {"m", m}}
                  .dump(2));
  } else {
    emit(cfg, std::to_string(m));
  }
  return 0;
}

int cmd_cg(const RunConfig& cfg) {
  auto inst = parse_instance(cfg);
  auto [value, cert] = cg_multiplicity(inst.nu, inst.lambda, inst.pair);
  std::vector<std::string> sums;
  for (const auto& g : cert.groups) sums.push_back(g.sigma.str());

  if (cfg.format == "json") {
    json j{{"pair", inst.pair.str()},
           {"lambda", inst.lambda.str()},
           {"nu", inst.nu.str()},
           {"value", to_json(value)},
           {"sums", sums},
           {"certificate", to_json(cert)}};
    emit(cfg, j.dump(2));
    return 0;
  }
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "value,sums,pfaffian\n"
       << csv_field(value.str()) << ",";
    std::string joined;
    for (size_t i = 0; i < sums.size(); ++i) joined += (i ? "," : "") + sums[i];
    os << csv_field(joined) << ","
       << (cert.pfaffian_constraint == 0
               ? "none"
               : (cert.pfaffian_constraint > 0 ? "+1" : "-1"));
    emit(cfg, os.str());
    return 0;
  }
  std::ostringstream os;
  os << value.str() << "\n";
  os << "group sums:";
  for (const auto& s : sums) os << " " << s;
  os << "\n";
  if (cert.pfaffian_constraint != 0)
    os << "pfaffian constraint: " << (cert.pfaffian_constraint > 0 ? "+1" : "-1")
       << "\n";
  for (const auto& t : cert.trace) os << t << "\n";
  if (value.kind == CGValue::Kind::Undetermined)
    os << "lower bound " << value.lower_bound
       << "; run `verify` for an oracle orbit-count estimate\n";
  emit(cfg, os.str());
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  auto inst = parse_instance(cfg);
  OracleConfig oc = oracle_config(cfg);
  auto [value, cert] = cg_multiplicity(inst.nu, inst.lambda, inst.pair);
  auto witnesses = find_witnesses(inst.nu, inst.lambda, inst.pair, oc);

  int clusters = 0;
  bool connectivity = false;
  if (!witnesses.empty()) {
    auto est = estimate_orbit_count(witnesses, cert, inst.nu, inst.pair, oc);
    clusters = est.clusters;
    connectivity = est.connectivity_confirmed;
  }

  bool agree = false;
  switch (value.kind) {
    case CGValue::Kind::Zero: agree = witnesses.empty(); break;
    case CGValue::Kind::One: agree = !witnesses.empty() && clusters == 1; break;
    case CGValue::Kind::Finite:
      agree = !witnesses.empty() && clusters == value.count;
      break;
    case CGValue::Kind::Undetermined:
      agree = !witnesses.empty() && clusters >= value.lower_bound;
      break;
    case CGValue::Kind::Infinite: agree = !witnesses.empty(); break;
  }

  if (cfg.format == "json") {
    json j{{"pair", inst.pair.str()},
           {"lambda", inst.lambda.str()},
           {"nu", inst.nu.str()},
           {"exact", to_json(value)},
           {"witnesses", static_cast<int>(witnesses.size())},
           {"clusters", clusters},
           {"connectivity_confirmed", connectivity},
           {"agree", agree},
           {"seed", oc.seed}};
    emit(cfg, j.dump(2));
    return 0;
  }
  std::ostringstream os;
  os << "exact: " << value.str() << ", oracle witnesses: ";
  if (witnesses.empty())
    os << "0";
  else
    os << witnesses.size() << " found, clusters: " << clusters;
  os << ", " << (agree ? "AGREE" : "DISAGREE");
  emit(cfg, os.str());
  return 0;
}

int cmd_table(const RunConfig& cfg) {
  GroupPair pair = GroupPair::parse(cfg.pair_spec);
  Weight nu = Weight::parse(cfg.nu_str, pair.H);
  if (!is_dominant(nu))
    throw std::invalid_argument("nu is not dominant: " + cfg.nu_str);
  HalfInt max = HalfInt::parse(cfg.max_str);
  SpinClass cls = cfg.spin == "half"
                      ? SpinClass::Half
                      : (cfg.spin == "int" ? SpinClass::Integer : nu.spin_class());

  auto lambdas = enumerate_weights(pair.K, max, cls);
  struct Row { std::string lambda; int m; std::string n; };
  std::vector<Row> rows;
  for (const auto& lam : lambdas) {
    int m = branch_multiplicity(pair, lam, nu);
    auto [value, cert] = cg_multiplicity(nu, lam, pair);
    rows.push_back({lam.str(), m, value.str()});
  }

  if (cfg.format == "json") {
    json jrows = json::array();
    for (const auto& r : rows) jrows.push_back({r.lambda, r.m, r.n});
    emit(cfg, json{{"header", {"lambda", "m", "n"}}, {"rows", jrows}}.dump(2));
    return 0;
  }
  std::ostringstream os;
  os << "lambda,m,n\n";
  for (const auto& r : rows)
    os << csv_field(r.lambda) << "," << r.m << "," << r.n << "\n";
  emit(cfg, os.str());
  return 0;
}

int cmd_check_theorems(const RunConfig& cfg) {
  GroupPair pair = GroupPair::parse(cfg.pair_spec);
  HalfInt max = HalfInt::parse(cfg.max_str);
  OracleConfig oc = oracle_config(cfg);
  TheoremReport rep =
      check_theorems(pair, max, spin_classes(cfg.spin), oc, !cfg.serial);
  if (cfg.format == "json")
    emit(cfg, to_json(rep).dump(2));
  else
    emit(cfg, report_to_text(rep));
  return rep.has_violations() ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Branching multiplicities and Corwin-Greenleaf orbit counts for "
      "SO(n) x R^n, with an independent numerical oracle. Thread count for "
      "parallel sweeps follows OMP_NUM_THREADS."};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool needs_weights) {
    sub->add_option("--pair", cfg.pair_spec, "group pair, e.g. so5/so4")
        ->required();
    if (needs_weights) {
      sub->add_option("--lambda", cfg.lambda_str, "weight of the larger group, e.g. 3,2 or 3/2,1/2")
          ->required();
      sub->add_option("--nu", cfg.nu_str, "weight of the smaller group")->required();
    }
    sub->add_option("--format", cfg.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
  };
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "oracle RNG seed");
    sub->add_option("--samples", cfg.samples, "oracle sample count");
    sub->add_option("--tol-eig", cfg.tol_eig, "spectral matching tolerance");
  };

  CLI::App* branch = app.add_subcommand("branch", "branching multiplicity m");
  add_common(branch, true);

  CLI::App* cg = app.add_subcommand("cg", "Corwin-Greenleaf value n with certificate");
  add_common(cg, true);

  CLI::App* verify = app.add_subcommand("verify", "compare exact value against the oracle");
  add_common(verify, true);
  add_oracle(verify);

  CLI::App* table = app.add_subcommand("table", "sweep lambda and tabulate (lambda, m, n)");
  add_common(table, false);
  table->add_option("--nu", cfg.nu_str, "fixed weight of the smaller group")->required();
  table->add_option("--max", cfg.max_str, "largest lambda entry");
  table->add_option("--spin", cfg.spin, "int or half; default follows nu");

  CLI::App* check = app.add_subcommand("check-theorems", "sweep and verify the theorem suite");
  add_common(check, false);
  add_oracle(check);
  check->add_option("--max", cfg.max_str, "largest weight entry");
  check->add_option("--spin", cfg.spin, "int, half or both")
      ->check(CLI::IsMember({"int", "half", "both"}));
  check->add_flag("--serial", cfg.serial, "use the serial reference kernel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // 0 covers --help
  }

  try {
    if (branch->parsed()) return cmd_branch(cfg);
    if (cg->parsed()) return cmd_cg(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (table->parsed()) return cmd_table(cfg);
    if (check->parsed()) return cmd_check_theorems(cfg);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
