#pragma once

#include <string>
#include <vector>

#include "cgmult/weights.hpp"

namespace cgm {

/// Successive pair (K, H) = (SO(n), SO(n-1)), n >= 3.
struct GroupPair {
  GroupSpec K;
  GroupSpec H;

  enum class Kind {
    OddK,   // K = SO(2d+1), H = SO(2d)
    EvenK,  // K = SO(2d+2), H = SO(2d+1)
  };

  explicit GroupPair(int n_K) : K(n_K), H(n_K - 1) {
    if (n_K < 3) throw std::invalid_argument("GroupPair: need SO(n) with n >= 3");
  }

  Kind kind() const { return K.even() ? Kind::EvenK : Kind::OddK; }
  /// d in the pair's normal form: K = SO(2d+1) or SO(2d+2).
  int d() const { return H.rank(); }

  std::string str() const { return K.str() + "/" + H.str(); }

  /// Parses "so5/so4"; the two parts must be successive.
  static GroupPair parse(const std::string& s);
};

/// Whether all entries of a and b differ by integers (same spin class).
bool spin_compatible(const Weight& a, const Weight& b);

/// Multiplicity of sigma_nu in tau_lambda restricted to H: 1 iff the weights
/// are spin-compatible and interlace, else 0 (the pair is multiplicity-free).
int branch_multiplicity(const GroupPair& pair, const Weight& lambda, const Weight& nu);

/// All nu of H with branch_multiplicity(pair, lambda, nu) = 1, lexicographic.
std::vector<Weight> restriction_decomposition(const GroupPair& pair,
                                              const Weight& lambda);

}  // namespace cgm
