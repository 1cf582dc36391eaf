#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "cgmult/cg_exact.hpp"
#include "cgmult/liegeom.hpp"

using namespace cgm;

namespace {

Weight W(std::vector<int> twice, int n) {
  std::vector<HalfInt> e;
  for (int t : twice) e.emplace_back(t);
  return Weight(std::move(e), GroupSpec(n));
}

Rational sum_sq(const Weight& w) {
  Rational s(0);
  for (const auto& x : w.entries) s += x.square();
  return s;
}

Rational sigma_total(const CGCertificate& c) {
  Rational s(0);
  for (const auto& g : c.groups) s += g.sigma;
  return s;
}

Poly lambda_target(const Weight& lambda) {
  std::vector<Rational> r;
  for (const auto& l : lambda.entries) r.push_back(l.square());
  return Poly::from_roots(r);
}

}  // namespace

TEST_CASE("distinct spectra, odd K") {
  GroupPair p(5);

  auto [v1, c1] = cg_multiplicity(W({4, 2}, 4), W({6, 4}, 5), p);
  REQUIRE(c1.groups.size() == 2);
  CHECK(c1.groups[0].q == Rational(4));
  CHECK(c1.groups[0].sigma == Rational(0));
  CHECK(c1.groups[1].q == Rational(1));
  CHECK(c1.groups[1].sigma == Rational(8));
  CHECK(c1.feasible);
  CHECK(c1.pfaffian_constraint == 0);
  CHECK(v1 == CGValue::one());

  // One negative group sum kills feasibility.
  auto [v2, c2] = cg_multiplicity(W({4, 2}, 4), W({8, 6}, 5), p);
  CHECK(c2.match_polynomial_ok);
  CHECK(c2.groups[0].sigma == Rational(-20));
  CHECK_FALSE(c2.feasible);
  CHECK(v2 == CGValue::zero());

  // Doubling all entries scales every group sum by 4.
  auto [v3, c3] = cg_multiplicity(W({8, 4}, 4), W({12, 8}, 5), p);
  CHECK(v3 == CGValue::one());
  CHECK(c3.groups[0].sigma == Rational(0));
  CHECK(c3.groups[1].sigma == Rational(32));
}

TEST_CASE("repeated nu-value groups") {
  GroupPair p(5);
  struct { int ta, tb; Rational sigma; } cases[] = {
      {2, 4, Rational(3)},       // (1,1) vs (2,1)
      {1, 3, Rational(2)},       // (1/2,1/2) vs (3/2,1/2)
      {4, 10, Rational(21)},     // (2,2) vs (5,2)
  };
  for (const auto& c : cases) {
    auto [v, cert] =
        cg_multiplicity(W({c.ta, c.ta}, 4), W({c.tb, c.ta}, 5), p);
    REQUIRE(cert.groups.size() == 1);
    CHECK(cert.groups[0].svar_count == 2);
    CHECK(cert.groups[0].sigma == c.sigma);
    CHECK(cert.groups[0].stabilizer == "U(2)");
    CHECK_FALSE(cert.groups[0].transitive_certified);
    CHECK(cert.feasible);
    // U(2) acting on S^3 is outside the certified list, so the exact layer
    // only reports a lower bound here.
    CHECK(v == CGValue::undetermined(1));
  }
}

TEST_CASE("zero nu-entries, odd K") {
  GroupPair p(5);
  auto [v, c] = cg_multiplicity(W({4, 0}, 4), W({6, 2}, 5), p);
  REQUIRE(c.groups.size() == 2);
  CHECK(c.groups[0].sigma == Rational(15, 4));
  CHECK(c.groups[1].structural_zero);
  CHECK(c.groups[1].sigma == Rational(9, 4));
  CHECK(c.groups[1].stabilizer == "SO(2)");
  CHECK(v == CGValue::one());

  // Two zero entries give an SO(4) block, which is not certified.
  GroupPair p7(7);
  auto [v2, c2] = cg_multiplicity(W({2, 0, 0}, 6), W({4, 2, 0}, 7), p7);
  REQUIRE(c2.groups.size() == 2);
  CHECK(c2.groups[0].sigma == Rational(0));
  CHECK(c2.groups[1].stabilizer == "SO(4)");
  CHECK(c2.groups[1].sigma == Rational(4));
  CHECK(v2 == CGValue::undetermined(1));
}

TEST_CASE("even K: lone coordinate and Pfaffian sign") {
  GroupPair p(6);

  auto [v1, c1] = cg_multiplicity(W({4, 2}, 5), W({6, 4, 2}, 6), p);
  REQUIRE(c1.groups.size() == 3);
  CHECK(c1.groups[0].sigma == Rational(0));
  CHECK(c1.groups[1].sigma == Rational(0));
  CHECK(c1.groups[2].coord_dim == 1);
  CHECK(c1.groups[2].sigma == Rational(9));
  CHECK(c1.pfaffian_constraint == 1);
  CHECK(v1 == CGValue::one());

  // Flipping the sign of the last lambda-entry flips the required Pfaffian
  // sign but nothing else.
  auto [v2, c2] = cg_multiplicity(W({4, 2}, 5), W({6, 4, -2}, 6), p);
  CHECK(c2.pfaffian_constraint == -1);
  CHECK(c2.groups[2].sigma == Rational(9));
  CHECK(v2 == CGValue::one());

  // A vanishing lambda-entry drops the Pfaffian constraint; here the lone
  // sum is zero, so the value is still pinned down.
  auto [v3, c3] = cg_multiplicity(W({4, 2}, 5), W({6, 4, 0}, 6), p);
  CHECK(c3.pfaffian_constraint == 0);
  CHECK(c3.groups[0].sigma == Rational(0));
  CHECK(c3.groups[1].sigma == Rational(8));
  CHECK(c3.groups[2].sigma == Rational(0));
  CHECK(v3 == CGValue::one());
}

TEST_CASE("even K: zero nu-group absorbs the lone coordinate") {
  GroupPair p(6);
  auto [v, c] = cg_multiplicity(W({2, 0}, 5), W({4, 2, 0}, 6), p);
  REQUIRE(c.groups.size() == 2);
  CHECK(c.groups[1].structural_zero);
  CHECK(c.groups[1].coord_dim == 3);
  CHECK(c.groups[1].stabilizer == "SO(3)");
  // total mass is fixed by the trace identity even when the split inside the
  // merged block is not
  CHECK(sigma_total(c) == sum_sq(W({4, 2, 0}, 6)) - sum_sq(W({2, 0}, 5)));
  CHECK(c.feasible);
  CHECK(v.kind == CGValue::Kind::Undetermined);
}

TEST_CASE("trivial and small cases") {
  GroupPair p3(3);
  CHECK(cg_multiplicity(W({0}, 2), W({0}, 3), p3).first == CGValue::one());
  CHECK(cg_multiplicity(W({0}, 2), W({2}, 3), p3).first == CGValue::one());
  CHECK(cg_multiplicity(W({2}, 2), W({2}, 3), p3).first == CGValue::one());
  CHECK(cg_multiplicity(W({2}, 2), W({4}, 3), p3).first == CGValue::one());
  CHECK(cg_multiplicity(W({4}, 2), W({2}, 3), p3).first == CGValue::zero());

  GroupPair p4(4);
  CHECK(cg_multiplicity(W({0}, 3), W({0, 0}, 4), p4).first == CGValue::one());
  CHECK(cg_multiplicity(W({2}, 3), W({2, 2}, 4), p4).first == CGValue::one());
  CHECK(cg_multiplicity(W({2}, 3), W({2, -2}, 4), p4).first == CGValue::one());
}

TEST_CASE("spin mismatch is infeasible even when the polynomial matches") {
  GroupPair p3(3);
  Weight nu = W({0}, 2);
  Weight lam({HalfInt(1)}, GroupSpec(3));  // entry 1/2
  CGCertificate c = solve_group_sums(nu, lam, p3);
  CHECK(c.match_polynomial_ok);
  CHECK(c.groups[0].sigma == Rational(1, 4));
  CHECK_FALSE(c.spin_compatible);
  CHECK_FALSE(c.feasible);
  CHECK(cg_multiplicity(nu, lam, p3).first == CGValue::zero());
}

TEST_CASE("input validation") {
  GroupPair p(5);
  CHECK_THROWS(solve_group_sums(W({2, 4}, 4), W({6, 4}, 5), p));  // non-dominant
  CHECK_THROWS(solve_group_sums(W({4, 2}, 4), W({4, 6}, 5), p));
  CHECK_THROWS(solve_group_sums(W({4, 2}, 5), W({6, 4}, 5), p));  // wrong groups
  CHECK_THROWS(solve_group_sums(W({4, 2}, 4), W({6, 4}, 4), p));
}

TEST_CASE("sweep: interlacing, trace identity, polynomial reconstruction") {
  for (int nK : {3, 4, 5, 6, 7}) {
    GroupPair pair(nK);
    HalfInt cap(nK >= 6 ? 4 : 6);
    for (SpinClass sc : {SpinClass::Integer, SpinClass::Half}) {
      auto nus = enumerate_weights(pair.H, cap, sc);
      auto lams = enumerate_weights(pair.K, cap, sc);
      for (const auto& nu : nus) {
        for (const auto& lam : lams) {
          auto [v, cert] = cg_multiplicity(nu, lam, pair);
          int m = branch_multiplicity(pair, lam, nu);
          CHECK(m >= 0);
          CHECK(m <= 1);
          // interlacing and group-sum feasibility select the same pairs
          CHECK(cert.feasible == (m == 1));
          CHECK(cert.feasible == cg_nonzero(nu, lam, pair));
          CHECK((v.kind != CGValue::Kind::Zero) == cert.feasible);
          if (v.kind == CGValue::Kind::Undetermined) CHECK(v.lower_bound >= 1);
          if (v.kind == CGValue::Kind::Finite) CHECK(v.count >= 2);

          if (!cert.match_polynomial_ok) continue;
          CHECK(sigma_total(cert) == sum_sq(lam) - sum_sq(nu));
          for (const auto& g : cert.groups)
            CHECK(int(g.coords.size()) == g.coord_dim);

          // With one s-variable per group, the group sums are the s_j of the
          // reduced characteristic polynomial; substituting them back must
          // reproduce prod_k (t - lambda_k^2).
          bool simple = std::all_of(
              cert.groups.begin(), cert.groups.end(),
              [](const OrbitGroup& g) { return g.svar_count == 1; });
          if (!simple) continue;
          const int d = pair.d();
          std::vector<Rational> s(cert.groups.size(), Rational(0));
          for (const auto& g : cert.groups) {
            if (g.coord_dim == 1) {
              s[size_t(d)] = g.sigma;
            } else {
              int j = g.coords[0] / 2;
              s[size_t(j)] = g.sigma;
            }
          }
          CHECK(char_poly_reduced(nu, s, pair) == lambda_target(lam));
        }
      }
    }
  }
}
