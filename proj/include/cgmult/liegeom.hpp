#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cgmult/branching.hpp"
#include "cgmult/poly.hpp"
#include "cgmult/rational.hpp"
#include "cgmult/weights.hpp"

namespace cgm {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Dense matrix over the exact rationals (small sizes only).
using RatMat = std::vector<std::vector<Rational>>;

/// Element (U, u) of g* = k* + (R^n)*.
struct Functional {
  Mat U;
  Vec u;
};

/// Element (A, a) of G = SO(n) x| R^n.
struct GroupElement {
  Mat A;
  Vec a;
};

/// Canonical SO(n)-conjugation invariants of a skew-symmetric matrix:
/// eigenvalues +-i*mu_k with mu sorted descending, the zero multiplicity,
/// and (even n) the Pfaffian sign.
struct SpectralData {
  std::vector<double> mus;  // positive values, descending, with multiplicity
  int zero_multiplicity = 0;
  int pfaffian_sign = 0;  // 0 for odd n or singular matrices
};

bool is_skew(const Mat& S, double tol = 1e-12);
void require_skew(const Mat& S, double tol = 1e-12);

/// Block-diagonal lambda_j * J, J = [[0,1],[-1,0]], embedded in ambient_n
/// dimensions, zeros elsewhere.
Mat build_U(const Weight& weight, int ambient_n);
RatMat build_U_exact(const Weight& weight, int ambient_n);

/// The unique skew W with (1/2)tr(W V^t) = b^t V a for all skew V,
/// i.e. W = b a^t - a b^t.
Mat w_ab(const Vec& a, const Vec& b);

/// Element of W_u for u = r*e_n: last row (y_1..y_{n-1}, 0), last column its
/// negation, zeros elsewhere. n = y.size() + 1.
Mat w_u_coords(double r, const Vec& y);

/// Ad*((A,a))(U,u) = (A U A^t + W_{a,Au}, Au).
Functional coadjoint_apply(const GroupElement& g, const Functional& f);

/// Floating backend. Zero threshold: |mu| < tol_rel * (1 + spectral radius).
SpectralData spectral_data(const Mat& S, double tol_rel = 1e-9);

/// Pfaffian by recursive first-row expansion (desk scale, n <= 8 or so).
/// Convention Pf(J) = +1, so Pf(build_U(lambda, 2d)) = prod lambda_j.
double pfaffian(const Mat& S);
Rational pfaffian_exact(const RatMat& S);

/// Reduced characteristic polynomial in t = x^2 of U_nu + W(y), given the
/// per-pair squared sums s_j = y_{2j-1}^2 + y_{2j}^2.
///
/// OddK (K = SO(2d+1)):  s has d entries and
///   P(t) = prod_i (t - nu_i^2) - sum_j s_j prod_{i != j} (t - nu_i^2),
/// with det(U_nu + W - ixI) = i(-1)^{d+1} x P(x^2).
///
/// EvenK (K = SO(2d+2)): s has d+1 entries, the last one being y_{2d+1}^2, and
///   P(t) = (t - s_{d+1}) prod_i (t - nu_i^2)
///          - t * sum_{j<=d} s_j prod_{i != j} (t - nu_i^2),
/// with det(U_nu + W - ixI) = (-1)^{d+1} P(x^2).
Poly char_poly_reduced(const Weight& nu, const std::vector<Rational>& s,
                       const GroupPair& pair);

}  // namespace cgm
