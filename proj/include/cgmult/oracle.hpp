#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cgmult/cg_exact.hpp"
#include "cgmult/liegeom.hpp"

namespace cgm {

struct OracleConfig {
  double tol_eig = 1e-9;
  double tol_orth = 1e-12;
  double cluster_tol = 1e-6;  // on invariant vectors, coarser than tol_eig
  int samples = 200;
  std::uint64_t seed = 12345;

  void validate() const {
    if (tol_eig <= 0 || tol_orth <= 0 || cluster_tol <= 0)
      throw std::invalid_argument("OracleConfig: tolerances must be positive");
    if (samples < 1) throw std::invalid_argument("OracleConfig: samples >= 1");
  }
};

/// Haar-distributed element of SO(n) (orthonormalized Gaussian sample with
/// determinant correction).
Mat random_so(int n, std::mt19937_64& rng);

/// True iff spectral_data(S) matches spectral_data(build_U(lambda)) within
/// tol_eig, including the Pfaffian sign for even n with nonvanishing spectrum.
bool orbit_membership(const Mat& S, const Weight& lambda, const OracleConfig& cfg);

/// Solutions y of U_nu + W(y) in O^K_lambda, built by distributing the solved
/// group sums over each group's coordinates in randomized ways; every
/// returned witness passes orbit_membership. Empty when infeasible.
std::vector<Vec> find_witnesses(const Weight& nu, const Weight& lambda,
                                const GroupPair& pair, const OracleConfig& cfg);

struct OrbitCountEstimate {
  int clusters = 0;
  int witnesses = 0;
  bool connectivity_confirmed = false;  // every in-cluster pair joined by a
                                        // verified stabilizer element
  std::string note;
};

/// Clusters witnesses by their stabilizer-invariant coordinates and confirms
/// in-cluster connectivity with explicitly constructed stabilizer elements.
OrbitCountEstimate estimate_orbit_count(const std::vector<Vec>& witnesses,
                                        const CGCertificate& cert,
                                        const Weight& nu, const GroupPair& pair,
                                        const OracleConfig& cfg);

struct CaseRecord {
  std::string nu, lambda;
  std::string spin_class;
  int m = 0;
  CGValue n_exact;
  std::vector<std::string> sums;
  bool strongly_dominant = false;
  bool oracle_feasible = false;
  int witness_count = 0;
  int orbit_estimate = 0;  // 0 when not computed
  bool connectivity_confirmed = false;
  bool theorem_a_violation = false;
  bool theorem_b_violation = false;
  bool theorem5_case = false;
  std::string note;
};

struct TheoremReport {
  std::string pair;
  std::string max_entry;
  std::vector<std::string> spin_classes;
  std::uint64_t seed = 0;
  std::vector<CaseRecord> cases;
  int theorem_a_violations = 0;
  int theorem_b_violations = 0;
  int theorem5_cases = 0;
  std::vector<std::string> discrepancies;

  bool has_violations() const {
    return theorem_a_violations > 0 || theorem_b_violations > 0;
  }
};

/// Sweeps all dominant (nu, lambda) of the pair with entries <= max_entry in
/// the given spin classes, recording branch multiplicity, exact CG value,
/// oracle feasibility and (for Undetermined / Theorem-5-type cases) the orbit
/// count estimate. `parallel` selects the OpenMP kernel; the serial kernel is
/// the reference and both produce identical reports under a fixed seed.
TheoremReport check_theorems(const GroupPair& pair, HalfInt max_entry,
                             const std::vector<SpinClass>& classes,
                             const OracleConfig& cfg, bool parallel = true,
                             HalfInt desk_limit = HalfInt(9));

}  // namespace cgm
