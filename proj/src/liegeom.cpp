#include "cgmult/liegeom.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace cgm {

bool is_skew(const Mat& S, double tol) {
  if (S.rows() != S.cols()) return false;
  return (S + S.transpose()).cwiseAbs().maxCoeff() <= tol * (1.0 + S.cwiseAbs().maxCoeff());
}

void require_skew(const Mat& S, double tol) {
  if (!is_skew(S, tol)) throw std::invalid_argument("matrix is not skew-symmetric");
}

Mat build_U(const Weight& weight, int ambient_n) {
  const int d = weight.rank();
  if (ambient_n < 2 * d)
    throw std::invalid_argument("build_U: ambient dimension too small");
  Mat U = Mat::Zero(ambient_n, ambient_n);
  for (int j = 0; j < d; ++j) {
    double v = weight.entries[j].to_double();
    U(2 * j, 2 * j + 1) = v;
    U(2 * j + 1, 2 * j) = -v;
  }
  return U;
}

RatMat build_U_exact(const Weight& weight, int ambient_n) {
  const int d = weight.rank();
  if (ambient_n < 2 * d)
    throw std::invalid_argument("build_U_exact: ambient dimension too small");
  RatMat U(ambient_n, std::vector<Rational>(ambient_n, Rational(0)));
  for (int j = 0; j < d; ++j) {
    Rational v = weight.entries[j].to_rational();
    U[2 * j][2 * j + 1] = v;
    U[2 * j + 1][2 * j] = -v;
  }
  return U;
}

Mat w_ab(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("w_ab: vectors of unequal length");
  return b * a.transpose() - a * b.transpose();
}

Mat w_u_coords(double r, const Vec& y) {
  if (!(r > 0)) throw std::invalid_argument("w_u_coords: require r > 0");
  const int n = static_cast<int>(y.size()) + 1;
  Mat W = Mat::Zero(n, n);
  for (int j = 0; j < n - 1; ++j) {
    W(n - 1, j) = y(j);
    W(j, n - 1) = -y(j);
  }
  return W;
}

Functional coadjoint_apply(const GroupElement& g, const Functional& f) {
  if (g.A.rows() != f.U.rows() || g.a.size() != f.u.size() || g.A.rows() != g.a.size())
    throw std::invalid_argument("coadjoint_apply: dimension mismatch");
  Vec Au = g.A * f.u;
  return {g.A * f.U * g.A.transpose() + w_ab(g.a, Au), Au};
}

SpectralData spectral_data(const Mat& S, double tol_rel) {
  require_skew(S);
  const int n = static_cast<int>(S.rows());
  // iS is Hermitian with real eigenvalues a_k; eigenvalues of S are -i a_k.
  Eigen::MatrixXcd H = std::complex<double>(0, 1) * S.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues();
  double radius = ev.cwiseAbs().maxCoeff();
  double thresh = tol_rel * (1.0 + radius);

  SpectralData out;
  for (int k = 0; k < n; ++k) {
    double a = ev(k);
    if (std::abs(a) < thresh)
      ++out.zero_multiplicity;
    else if (a > 0)
      out.mus.push_back(a);
  }
  std::sort(out.mus.begin(), out.mus.end(), std::greater<double>());
  if (n % 2 == 0 && out.zero_multiplicity == 0) {
    double pf = pfaffian(S);
    out.pfaffian_sign = pf > 0 ? 1 : -1;
  }
  return out;
}

namespace {

// Recursive expansion of the Pfaffian along the first active row.
template <typename T, typename At>
T pfaffian_rec(std::vector<int>& idx, const At& at) {
  const int m = static_cast<int>(idx.size());
  if (m == 0) return T(1);
  T acc(0);
  int i = idx[0];
  int sgn = 1;
  for (int k = 1; k < m; ++k) {
    int j = idx[k];
    std::vector<int> rest;
    rest.reserve(m - 2);
    for (int l = 1; l < m; ++l)
      if (l != k) rest.push_back(idx[l]);
    T term = at(i, j) * pfaffian_rec<T>(rest, at);
    acc = (sgn > 0) ? acc + term : acc - term;
    sgn = -sgn;
  }
  return acc;
}

}  // namespace

double pfaffian(const Mat& S) {
  require_skew(S);
  const int n = static_cast<int>(S.rows());
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return pfaffian_rec<double>(idx, [&](int i, int j) { return S(i, j); });
}

Rational pfaffian_exact(const RatMat& S) {
  const int n = static_cast<int>(S.size());
  if (n % 2 != 0) throw std::invalid_argument("pfaffian_exact: odd dimension");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (S[i][j] != -S[j][i])
        throw std::invalid_argument("pfaffian_exact: matrix is not skew");
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return pfaffian_rec<Rational>(idx, [&](int i, int j) { return S[i][j]; });
}

Poly char_poly_reduced(const Weight& nu, const std::vector<Rational>& s,
                       const GroupPair& pair) {
  const int d = pair.d();
  if (nu.rank() != pair.H.rank())
    throw std::invalid_argument("char_poly_reduced: nu does not belong to H");
  const size_t want = pair.kind() == GroupPair::Kind::OddK ? size_t(d) : size_t(d + 1);
  if (s.size() != want)
    throw std::invalid_argument("char_poly_reduced: wrong number of s entries");

  std::vector<Rational> nu_sq;
  nu_sq.reserve(d);
  for (int j = 0; j < d; ++j) nu_sq.push_back(nu.entries[j].square());

  Poly base = Poly::from_roots(nu_sq);
  Poly sum;  // sum_j s_j prod_{i != j} (t - nu_i^2)
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> others;
    for (int i = 0; i < d; ++i)
      if (i != j) others.push_back(nu_sq[i]);
    sum = sum + s[size_t(j)] * Poly::from_roots(others);
  }

  if (pair.kind() == GroupPair::Kind::OddK) return base - sum;
  return Poly::x_minus(s.back()) * base - Poly({Rational(0), Rational(1)}) * sum;
}

}  // namespace cgm
