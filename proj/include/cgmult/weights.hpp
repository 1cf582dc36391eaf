#pragma once

#include <string>
#include <vector>

#include "cgmult/halfint.hpp"

namespace cgm {

/// The special orthogonal group SO(n), n >= 2, with rank d = floor(n/2).
struct GroupSpec {
  int n = 2;

  explicit GroupSpec(int n_) : n(n_) {
    if (n < 2) throw std::invalid_argument("GroupSpec: n must be >= 2");
  }
  int rank() const { return n / 2; }
  bool even() const { return n % 2 == 0; }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.n == b.n; }

  std::string str() const { return "so" + std::to_string(n); }
};

/// Integer-weight vs half-integer-weight lattice coset.
enum class SpinClass { Integer, Half };

/// Highest weight of SO(n): rank-many half-integers, all in one spin class.
struct Weight {
  std::vector<HalfInt> entries;
  GroupSpec group;

  Weight(std::vector<HalfInt> e, GroupSpec g);

  int rank() const { return static_cast<int>(entries.size()); }
  SpinClass spin_class() const {
    return entries.empty() || entries[0].is_integer() ? SpinClass::Integer
                                                      : SpinClass::Half;
  }
  bool is_zero() const;

  /// Comma-separated half-integer literals, e.g. "3,2,1/2"; bit-exact
  /// round-trip with parse().
  std::string str() const;
  static Weight parse(const std::string& s, GroupSpec g);

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.group == b.group && a.entries == b.entries;
  }
};

/// Weak dominance chain: l1 >= ... >= l_{d-1} >= |l_d| (even n) or
/// l1 >= ... >= l_d >= 0 (odd n).
bool is_dominant(const Weight& w);

/// Strict version of the chain above. For SO(2) the chain is empty and every
/// weight counts as strongly dominant.
bool is_strongly_dominant(const Weight& w);

/// All dominant weights of the group in the given spin class with
/// |entry| <= max_entry, lexicographically ordered.
std::vector<Weight> enumerate_weights(GroupSpec group, HalfInt max_entry,
                                      SpinClass spin_class);

}  // namespace cgm
