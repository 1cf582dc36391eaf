#include "cgmult/json_io.hpp"

#include <nlohmann/json.hpp>
#include <iomanip>
#include <sstream>

namespace cgm {

using nlohmann::json;

json to_json(const CGValue& v) {
  json j;
  switch (v.kind) {
    case CGValue::Kind::Zero: j["kind"] = "Zero"; break;
    case CGValue::Kind::One: j["kind"] = "One"; break;
    case CGValue::Kind::Finite:
      j["kind"] = "Finite";
      j["count"] = v.count;
      break;
    case CGValue::Kind::Infinite: j["kind"] = "Infinite"; break;
    case CGValue::Kind::Undetermined:
      j["kind"] = "Undetermined";
      j["lower_bound"] = v.lower_bound;
      break;
  }
  return j;
}

json to_json(const CGCertificate& cert) {
  json groups = json::array();
  for (const auto& g : cert.groups) {
    groups.push_back({{"q", g.q.str()},
                      {"svar_count", g.svar_count},
                      {"coord_dim", g.coord_dim},
                      {"structural_zero", g.structural_zero},
                      {"coords", g.coords},
                      {"sigma", g.sigma.str()},
                      {"stabilizer", g.stabilizer},
                      {"transitive_certified", g.transitive_certified},
                      {"orbit_factor", g.orbit_factor}});
  }
  json pf;
  if (cert.pfaffian_constraint == 0)
    pf = "none";
  else
    pf = cert.pfaffian_constraint > 0 ? "+1" : "-1";
  return {{"groups", groups},
          {"spin_compatible", cert.spin_compatible},
          {"match_polynomial_ok", cert.match_polynomial_ok},
          {"feasible", cert.feasible},
          {"pfaffian_constraint", pf},
          {"value", to_json(cert.orbit_count)},
          {"trace", cert.trace}};
}

json to_json(const CaseRecord& rec) {
  return {{"nu", rec.nu},
          {"lambda", rec.lambda},
          {"spin_class", rec.spin_class},
          {"m", rec.m},
          {"n", to_json(rec.n_exact)},
          {"sums", rec.sums},
          {"strongly_dominant", rec.strongly_dominant},
          {"oracle_feasible", rec.oracle_feasible},
          {"witness_count", rec.witness_count},
          {"orbit_estimate", rec.orbit_estimate},
          {"connectivity_confirmed", rec.connectivity_confirmed},
          {"theorem_a_violation", rec.theorem_a_violation},
          {"theorem_b_violation", rec.theorem_b_violation},
          {"theorem5_case", rec.theorem5_case},
          {"note", rec.note}};
}

json to_json(const TheoremReport& report) {
  json cases = json::array();
  for (const auto& rec : report.cases) cases.push_back(to_json(rec));
  return {{"pair", report.pair},
          {"max_entry", report.max_entry},
          {"spin_classes", report.spin_classes},
          {"seed", report.seed},
          {"cases", cases},
          {"summary",
           {{"total", report.cases.size()},
            {"theorem_a_violations", report.theorem_a_violations},
            {"theorem_b_violations", report.theorem_b_violations},
            {"theorem5_cases", report.theorem5_cases}}},
          {"discrepancies", report.discrepancies}};
}

std::string report_to_text(const TheoremReport& report) {
  std::ostringstream os;
  os << "pair " << report.pair << "  max " << report.max_entry << "  seed "
     << report.seed << "\n";
  os << std::left << std::setw(14) << "nu" << std::setw(14) << "lambda"
     << std::setw(6) << "class" << std::setw(3) << "m" << std::setw(22) << "n"
     << std::setw(10) << "witnesses" << "note\n";
  for (const auto& rec : report.cases) {
    os << std::left << std::setw(14) << rec.nu << std::setw(14) << rec.lambda
       << std::setw(6) << rec.spin_class << std::setw(3) << rec.m
       << std::setw(22) << rec.n_exact.str() << std::setw(10)
       << rec.witness_count << rec.note << "\n";
  }
  os << "cases " << report.cases.size() << ", A-violations "
     << report.theorem_a_violations << ", B-violations "
     << report.theorem_b_violations << ", theorem5 cases "
     << report.theorem5_cases << "\n";
  for (const auto& d : report.discrepancies) os << "  " << d << "\n";
  return os.str();
}

json matrix_to_json(const Mat& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cgm
