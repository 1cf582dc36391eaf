#include "cgmult/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cgm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Vec gaussian_vec(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = N(rng);
  return v;
}

}  // namespace

Mat random_so(int n, std::mt19937_64& rng) {
  Mat G(n, n);
  std::normal_distribution<double> N(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = N(rng);
  Eigen::HouseholderQR<Mat> qr(G);
  Mat Q = qr.householderQ();
  Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (R(j, j) < 0) Q.col(j) = -Q.col(j);
  if (Q.determinant() < 0) Q.col(0) = -Q.col(0);
  return Q;
}

bool orbit_membership(const Mat& S, const Weight& lambda, const OracleConfig& cfg) {
  const int n = static_cast<int>(S.rows());
  if (n != lambda.group.n)
    throw std::invalid_argument("orbit_membership: dimension mismatch");
  SpectralData got = spectral_data(S, cfg.tol_eig);
  SpectralData want = spectral_data(build_U(lambda, n), cfg.tol_eig);
  if (got.zero_multiplicity != want.zero_multiplicity) return false;
  if (got.mus.size() != want.mus.size()) return false;
  double scale = 1.0;
  for (double m : want.mus) scale = std::max(scale, m);
  for (size_t k = 0; k < got.mus.size(); ++k)
    if (std::abs(got.mus[k] - want.mus[k]) > cfg.tol_eig * scale) return false;
  if (n % 2 == 0 && want.zero_multiplicity == 0 &&
      got.pfaffian_sign != want.pfaffian_sign)
    return false;
  return true;
}

namespace {

// Sample a uniform point of the sphere of squared radius sigma inside the
// group's coordinate block. A one-dimensional block is just a sign choice.
void fill_group(Vec& y, const OrbitGroup& g, std::mt19937_64& rng) {
  double sigma = g.sigma.to_double();
  if (sigma <= 0) {
    for (int c : g.coords) y(c) = 0.0;
    return;
  }
  double radius = std::sqrt(sigma);
  if (g.coord_dim == 1) {
    std::bernoulli_distribution B(0.5);
    y(g.coords[0]) = B(rng) ? radius : -radius;
    return;
  }
  Vec v = gaussian_vec(g.coord_dim, rng);
  double norm = v.norm();
  if (norm < 1e-300) { v.setZero(); v(0) = 1.0; norm = 1.0; }
  for (int k = 0; k < g.coord_dim; ++k) y(g.coords[size_t(k)]) = radius * v(k) / norm;
}

}  // namespace

std::vector<Vec> find_witnesses(const Weight& nu, const Weight& lambda,
                                const GroupPair& pair, const OracleConfig& cfg) {
  cfg.validate();
  CGCertificate cert = solve_group_sums(nu, lambda, pair);
  if (!cert.feasible) return {};

  const int nK = pair.K.n;
  const int nH = pair.H.n;
  Mat U = build_U(nu, nK);
  std::mt19937_64 rng(splitmix64(cfg.seed));

  auto undetermined = [&]() {
    auto [value, full] = cg_multiplicity(nu, lambda, pair);
    return value.kind == CGValue::Kind::Undetermined;
  }();
  const int total = cfg.samples * (undetermined ? 2 : 1);

  std::vector<Vec> witnesses;
  for (int i = 0; i < total; ++i) {
    Vec y = Vec::Zero(nH);
    for (const auto& g : cert.groups) fill_group(y, g, rng);
    // random refinement: perturb, then project each block back to its sphere
    if (undetermined && i % 2 == 1) {
      Vec noise = 0.1 * gaussian_vec(nH, rng);
      y += noise;
      for (const auto& g : cert.groups) {
        double sigma = g.sigma.to_double();
        double nrm2 = 0;
        for (int c : g.coords) nrm2 += y(c) * y(c);
        double f = (sigma <= 0 || nrm2 <= 0) ? 0.0 : std::sqrt(sigma / nrm2);
        for (int c : g.coords) y(c) *= f;
      }
    }
    Mat S = U + w_u_coords(1.0, y);
    if (orbit_membership(S, lambda, cfg)) witnesses.push_back(std::move(y));
  }
  return witnesses;
}

namespace {

// Rotation in SO(z) mapping unit vector a to unit vector b.
Mat rotation_between(const Vec& a, const Vec& b) {
  const int z = static_cast<int>(a.size());
  double dot = a.dot(b);
  if (dot > -1.0 + 1e-12) {
    Vec s = a + b;
    return Mat::Identity(z, z) - (s * s.transpose()) / (1.0 + dot) +
           2.0 * b * a.transpose();
  }
  // antipodal: go through an orthogonal intermediate direction
  Vec c = Vec::Zero(z);
  int k = 0;
  for (int i = 1; i < z; ++i)
    if (std::abs(a(i)) < std::abs(a(k))) k = i;
  c(k) = 1.0;
  c -= a.dot(c) * a;
  c.normalize();
  return rotation_between(c, b) * rotation_between(a, c);
}

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Unitary T with T a = b, for ||a|| = ||b||, via two complex Householders.
CMat unitary_between(const CVec& a, const CVec& b) {
  const int m = static_cast<int>(a.size());
  auto householder_to_e1 = [m](const CVec& x, std::complex<double>& gamma) {
    std::complex<double> phi =
        std::abs(x(0)) > 1e-300 ? x(0) / std::abs(x(0)) : std::complex<double>(1, 0);
    gamma = -phi * x.norm();
    CVec w = x - gamma * CVec::Unit(m, 0);
    double wn2 = w.squaredNorm();
    if (wn2 < 1e-300) return CMat(CMat::Identity(m, m));
    return CMat(CMat::Identity(m, m) - (2.0 / wn2) * (w * w.adjoint()));
  };
  std::complex<double> ga, gb;
  CMat Ha = householder_to_e1(a, ga);
  CMat Hb = householder_to_e1(b, gb);
  CMat D = CMat::Identity(m, m);
  D(0, 0) = gb / ga;
  return Hb * D * Ha;  // Hb is an involution: Hb (gb e1) = b
}

// Real 2m x 2m form of a complex m x m matrix under the complex structure
// z_j = x_{2j} - i * s_j * x_{2j+1}, s_j = sign of the j-th block value.
Mat realify(const CMat& T, const std::vector<int>& signs) {
  const int m = static_cast<int>(signs.size());
  Mat R(2 * m, 2 * m);
  for (int k = 0; k < m; ++k) {
    for (int re = 0; re < 2; ++re) {
      std::complex<double> zk = re == 0 ? std::complex<double>(1, 0)
                                        : std::complex<double>(0, -double(signs[k]));
      CVec w = T.col(k) * zk;
      for (int j = 0; j < m; ++j) {
        R(2 * j, 2 * k + re) = w(j).real();
        R(2 * j + 1, 2 * k + re) = -signs[size_t(j)] * w(j).imag();
      }
    }
  }
  return R;
}

// Builds an element of the stabilizer of U_nu inside H mapping y-vector
// `from` to `to` (blockwise), or nothing if verification fails.
std::optional<Mat> stabilizer_map(const CGCertificate& cert, const Weight& nu,
                                  const GroupPair& pair, const Vec& from,
                                  const Vec& to, const OracleConfig& cfg) {
  const int nH = pair.H.n;
  Mat A = Mat::Identity(nH, nH);
  for (const auto& g : cert.groups) {
    const int dim = g.coord_dim;
    Vec va(dim), vb(dim);
    for (int k = 0; k < dim; ++k) {
      va(k) = from(g.coords[size_t(k)]);
      vb(k) = to(g.coords[size_t(k)]);
    }
    double na = va.norm(), nb = vb.norm();
    if (std::abs(na - nb) > cfg.cluster_tol * (1.0 + na)) return std::nullopt;
    if (na < cfg.cluster_tol) continue;  // both essentially zero: identity
    Mat R;
    if (g.structural_zero) {
      if (dim == 1) {
        if (va(0) * vb(0) < 0) return std::nullopt;  // SO(1) cannot flip a sign
        continue;
      }
      R = rotation_between(va / na, vb / nb);
    } else {
      std::vector<int> signs;
      for (size_t k = 0; k < g.coords.size(); k += 2)
        signs.push_back(nu.entries[size_t(g.coords[k] / 2)] > HalfInt(0) ? 1 : -1);
      const int m = static_cast<int>(signs.size());
      CVec za(m), zb(m);
      for (int j = 0; j < m; ++j) {
        za(j) = std::complex<double>(va(2 * j), -signs[size_t(j)] * va(2 * j + 1));
        zb(j) = std::complex<double>(vb(2 * j), -signs[size_t(j)] * vb(2 * j + 1));
      }
      R = realify(unitary_between(za, zb), signs);
    }
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) A(g.coords[size_t(r)], g.coords[size_t(c)]) = R(r, c);
  }

  // verify: orthogonal, stabilizes U_nu, maps from to to
  Mat UH = build_U(nu, nH);
  double ortho = (A.transpose() * A - Mat::Identity(nH, nH)).cwiseAbs().maxCoeff();
  double stab = (A * UH * A.transpose() - UH).cwiseAbs().maxCoeff();
  double map = (A * from - to).cwiseAbs().maxCoeff();
  double scale = 1.0 + UH.cwiseAbs().maxCoeff() + from.cwiseAbs().maxCoeff();
  if (ortho > 1e-9 || stab > 1e-9 * scale || map > cfg.cluster_tol * scale)
    return std::nullopt;
  return A;
}

std::vector<double> invariant_coords(const Vec& y, const CGCertificate& cert) {
  std::vector<double> inv;
  for (const auto& g : cert.groups) {
    if (g.coord_dim == 1) {
      inv.push_back(y(g.coords[0]));  // signed: SO(1) has no way to flip it
    } else {
      double nrm2 = 0;
      for (int c : g.coords) nrm2 += y(c) * y(c);
      inv.push_back(nrm2);
    }
  }
  return inv;
}

}  // namespace

OrbitCountEstimate estimate_orbit_count(const std::vector<Vec>& witnesses,
                                        const CGCertificate& cert,
                                        const Weight& nu, const GroupPair& pair,
                                        const OracleConfig& cfg) {
  if (witnesses.empty())
    throw std::invalid_argument("estimate_orbit_count: no witnesses");

  const int N = static_cast<int>(witnesses.size());
  std::vector<std::vector<double>> inv(N);
  for (int i = 0; i < N; ++i) inv[size_t(i)] = invariant_coords(witnesses[size_t(i)], cert);

  // union-find clustering on the invariant vectors
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
    return x;
  };
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      double dist = 0;
      for (size_t k = 0; k < inv[size_t(i)].size(); ++k)
        dist = std::max(dist, std::abs(inv[size_t(i)][k] - inv[size_t(j)][k]));
      if (dist < cfg.cluster_tol) parent[size_t(find(j))] = find(i);
    }

  std::vector<int> reps;
  for (int i = 0; i < N; ++i)
    if (find(i) == i) reps.push_back(i);

  // connectivity: join every member to its cluster representative with an
  // explicitly constructed, verified stabilizer element
  bool confirmed = true;
  for (int i = 0; i < N; ++i) {
    int r = find(i);
    if (r == i) continue;
    if (!stabilizer_map(cert, nu, pair, witnesses[size_t(i)], witnesses[size_t(r)], cfg))
      confirmed = false;
  }

  OrbitCountEstimate est;
  est.clusters = static_cast<int>(reps.size());
  est.witnesses = N;
  est.connectivity_confirmed = confirmed;
  est.note = confirmed ? "all in-cluster pairs joined by verified stabilizer elements"
                       : "some in-cluster pairs could not be joined; count is a lower-confidence estimate";
  return est;
}

TheoremReport check_theorems(const GroupPair& pair, HalfInt max_entry,
                             const std::vector<SpinClass>& classes,
                             const OracleConfig& cfg, bool parallel,
                             HalfInt desk_limit) {
  cfg.validate();
  if (max_entry > desk_limit)
    throw std::invalid_argument(
        "check_theorems: max entry " + max_entry.str() +
        " exceeds the desk-scale bound " + desk_limit.str());

  struct Case {
    Weight nu;
    Weight lambda;
    SpinClass cls;
  };
  std::vector<Case> todo;
  for (SpinClass cls : classes) {
    auto nus = enumerate_weights(pair.H, max_entry, cls);
    auto lambdas = enumerate_weights(pair.K, max_entry, cls);
    for (const auto& nu : nus)
      for (const auto& lambda : lambdas) todo.push_back({nu, lambda, cls});
  }

  TheoremReport report;
  report.pair = pair.str();
  report.max_entry = max_entry.str();
  for (SpinClass cls : classes)
    report.spin_classes.push_back(cls == SpinClass::Integer ? "int" : "half");
  report.seed = cfg.seed;
  report.cases.resize(todo.size());

  const int N = static_cast<int>(todo.size());
  auto run_case = [&](int i) {
    const Case& c = todo[size_t(i)];
    CaseRecord rec;
    rec.nu = c.nu.str();
    rec.lambda = c.lambda.str();
    rec.spin_class = c.cls == SpinClass::Integer ? "int" : "half";
    rec.m = branch_multiplicity(pair, c.lambda, c.nu);
    auto [value, cert] = cg_multiplicity(c.nu, c.lambda, pair);
    rec.n_exact = value;
    for (const auto& g : cert.groups) rec.sums.push_back(g.sigma.str());
    rec.strongly_dominant = is_strongly_dominant(c.nu) && is_strongly_dominant(c.lambda);

    OracleConfig local = cfg;
    local.seed = splitmix64(cfg.seed ^ (0x517cc1b727220a95ULL * std::uint64_t(i + 1)));
    auto witnesses = find_witnesses(c.nu, c.lambda, pair, local);
    rec.oracle_feasible = !witnesses.empty();
    rec.witness_count = static_cast<int>(witnesses.size());

    bool n_nonzero = value.kind == CGValue::Kind::Undetermined
                         ? rec.oracle_feasible
                         : value.kind != CGValue::Kind::Zero;
    rec.theorem_a_violation = (rec.m != 0) != n_nonzero;
    if (rec.strongly_dominant) {
      bool ok = (rec.m == 0 && value.kind == CGValue::Kind::Zero) ||
                (rec.m == 1 && value.kind == CGValue::Kind::One);
      rec.theorem_b_violation = !ok;
    }

    bool nu_constant_positive =
        !c.nu.entries.empty() && c.nu.entries[0] > HalfInt(0) &&
        std::all_of(c.nu.entries.begin(), c.nu.entries.end(),
                    [&](HalfInt h) { return h == c.nu.entries[0]; });
    rec.theorem5_case =
        nu_constant_positive && value.kind == CGValue::Kind::Undetermined;

    if (value.kind == CGValue::Kind::Undetermined && !witnesses.empty()) {
      auto est = estimate_orbit_count(witnesses, cert, c.nu, pair, local);
      rec.orbit_estimate = est.clusters;
      rec.connectivity_confirmed = est.connectivity_confirmed;
      if (rec.theorem5_case) {
        std::ostringstream os;
        os << "disputed-transitivity case: claimed count != 1, oracle cluster count "
           << est.clusters << (est.connectivity_confirmed ? " (connectivity verified)" : "");
        rec.note = os.str();
      }
    }
    report.cases[size_t(i)] = std::move(rec);
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < N; ++i) run_case(i);
  } else {
    for (int i = 0; i < N; ++i) run_case(i);
  }

  for (const auto& rec : report.cases) {
    if (rec.theorem_a_violation) {
      ++report.theorem_a_violations;
      report.discrepancies.push_back("A: nu=" + rec.nu + " lambda=" + rec.lambda +
                                     " m=" + std::to_string(rec.m) +
                                     " n=" + rec.n_exact.str());
    }
    if (rec.theorem_b_violation) {
      ++report.theorem_b_violations;
      report.discrepancies.push_back("B: nu=" + rec.nu + " lambda=" + rec.lambda +
                                     " m=" + std::to_string(rec.m) +
                                     " n=" + rec.n_exact.str());
    }
    if (rec.theorem5_case) {
      ++report.theorem5_cases;
      if (rec.orbit_estimate == 1)
        report.discrepancies.push_back("T5: nu=" + rec.nu + " lambda=" + rec.lambda +
                                       " claimed count != 1 but oracle found a single cluster");
    }
  }
  return report;
}

}  // namespace cgm
