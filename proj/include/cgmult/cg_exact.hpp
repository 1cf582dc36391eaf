#pragma once

#include <string>
#include <vector>

#include "cgmult/branching.hpp"
#include "cgmult/poly.hpp"
#include "cgmult/rational.hpp"
#include "cgmult/weights.hpp"

namespace cgm {

/// Corwin-Greenleaf count n(O^G, O^K).
struct CGValue {
  enum class Kind { Zero, One, Finite, Infinite, Undetermined };
  Kind kind = Kind::Zero;
  int count = 0;        // Finite only, >= 2
  int lower_bound = 0;  // Undetermined only

  static CGValue zero() { return {Kind::Zero, 0, 0}; }
  static CGValue one() { return {Kind::One, 0, 0}; }
  static CGValue finite(int k) { return {Kind::Finite, k, 0}; }
  static CGValue undetermined(int lb) { return {Kind::Undetermined, 0, lb}; }

  bool nonzero_certain() const { return kind != Kind::Zero; }
  std::string str() const;
  friend bool operator==(const CGValue& a, const CGValue& b) {
    return a.kind == b.kind && a.count == b.count && a.lower_bound == b.lower_bound;
  }
};

/// One block of the solution-set / stabilizer decomposition: the coordinates
/// of W_u whose nu-values share the squared value q.
struct OrbitGroup {
  Rational q;                // shared squared nu-value (0 for structural zero)
  int svar_count = 0;        // how many s-variables the group absorbs
  int coord_dim = 0;         // real coordinates of W_u in this block
  bool structural_zero = false;
  std::vector<int> coords;   // 0-based indices into the y-vector
  Rational sigma;            // solved group sum
  std::string stabilizer;    // e.g. "U(2)", "SO(3)", "SO(1)"
  bool transitive_certified = false;
  int orbit_factor = 1;      // orbits contributed when certified
};

/// Full reasoning record for one (nu, lambda) instance.
struct CGCertificate {
  std::vector<OrbitGroup> groups;
  bool spin_compatible = false;
  bool match_polynomial_ok = false;
  bool feasible = false;
  int pfaffian_constraint = 0;  // 0 none, +1/-1 required Pf sign (EvenK)
  CGValue orbit_count;
  std::vector<std::string> trace;  // human-readable decision trace
};

/// Groups the squared nu-values, solves the characteristic-polynomial match
/// against prod(t - lambda_k^2) for the group sums sigma_g, and records
/// feasibility (sigma_g >= 0 and exact polynomial identity).
CGCertificate solve_group_sums(const Weight& nu, const Weight& lambda,
                               const GroupPair& pair);

/// The Corwin-Greenleaf value with its certificate: Zero when infeasible,
/// One/Finite when every stabilizer factor is certified transitive on its
/// sphere, Undetermined(lower bound) otherwise.
std::pair<CGValue, CGCertificate> cg_multiplicity(const Weight& nu,
                                                  const Weight& lambda,
                                                  const GroupPair& pair);

/// Branching-rule route to "n != 0" (Theorem A makes the two routes agree;
/// the agreement is a tested property, not assumed here).
bool cg_nonzero(const Weight& nu, const Weight& lambda, const GroupPair& pair);

}  // namespace cgm
