#include "cgmult/cg_exact.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cgm {

std::string CGValue::str() const {
  switch (kind) {
    case Kind::Zero: return "Zero";
    case Kind::One: return "One";
    case Kind::Finite: return "Finite(" + std::to_string(count) + ")";
    case Kind::Infinite: return "Infinite";
    case Kind::Undetermined:
      return "Undetermined(>=" + std::to_string(lower_bound) + ")";
  }
  return "?";
}

namespace {

// Exact solve of the (possibly overdetermined) system cols * sigma = rhs in
// coefficient space. Returns false when inconsistent or rank-deficient.
bool solve_poly_system(const std::vector<Poly>& cols, const Poly& rhs,
                       std::vector<Rational>& sigma) {
  int max_deg = rhs.degree();
  for (const auto& c : cols) max_deg = std::max(max_deg, c.degree());
  const int rows = max_deg + 1;
  const int unknowns = static_cast<int>(cols.size());

  std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(unknowns + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < unknowns; ++c) M[r][c] = cols[size_t(c)].coeff(r);
    M[r][unknowns] = rhs.coeff(r);
  }

  int row = 0;
  std::vector<int> pivot_of_col(unknowns, -1);
  for (int col = 0; col < unknowns && row < rows; ++col) {
    int p = -1;
    for (int r = row; r < rows; ++r)
      if (!M[r][col].is_zero()) { p = r; break; }
    if (p < 0) continue;
    std::swap(M[p], M[row]);
    Rational inv = Rational(1) / M[row][col];
    for (int c = col; c <= unknowns; ++c) M[row][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || M[r][col].is_zero()) continue;
      Rational f = M[r][col];
      for (int c = col; c <= unknowns; ++c) M[r][c] -= f * M[row][c];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (int r = row; r < rows; ++r)
    if (!M[r][unknowns].is_zero()) return false;  // inconsistent
  for (int c = 0; c < unknowns; ++c)
    if (pivot_of_col[c] < 0) return false;  // rank-deficient

  sigma.assign(unknowns, Rational(0));
  for (int c = 0; c < unknowns; ++c) sigma[size_t(c)] = M[pivot_of_col[c]][unknowns];
  return true;
}

std::string unitary_name(int m) { return "U(" + std::to_string(m) + ")"; }
std::string so_name(int z) { return "SO(" + std::to_string(z) + ")"; }

}  // namespace

CGCertificate solve_group_sums(const Weight& nu, const Weight& lambda,
                               const GroupPair& pair) {
  if (!is_dominant(nu) || !is_dominant(lambda))
    throw std::invalid_argument("solve_group_sums: weights must be dominant");
  if (!(nu.group == pair.H) || !(lambda.group == pair.K))
    throw std::invalid_argument("solve_group_sums: weights do not match pair");

  const int d = pair.d();
  const bool even_k = pair.kind() == GroupPair::Kind::EvenK;

  CGCertificate cert;
  cert.spin_compatible = spin_compatible(nu, lambda);

  // Group the nu-indices by squared value, decreasing; zero last.
  std::map<Rational, std::vector<int>, std::greater<Rational>> by_sq;
  for (int j = 0; j < d; ++j) by_sq[nu.entries[j].square()].push_back(j);

  for (const auto& [q, js] : by_sq) {
    OrbitGroup g;
    g.q = q;
    g.svar_count = static_cast<int>(js.size());
    g.coord_dim = 2 * g.svar_count;
    g.structural_zero = q.is_zero();
    for (int j : js) {
      g.coords.push_back(2 * j);
      g.coords.push_back(2 * j + 1);
    }
    cert.groups.push_back(std::move(g));
  }
  if (even_k) {
    // Lone coordinate y_{2d+1}: its own structural group, merged with a
    // zero nu-group when one exists (the polynomial only sees the total).
    if (!cert.groups.empty() && cert.groups.back().structural_zero) {
      auto& z = cert.groups.back();
      z.svar_count += 1;
      z.coord_dim += 1;
      z.coords.push_back(2 * d);
    } else {
      OrbitGroup lone;
      lone.q = Rational(0);
      lone.svar_count = 1;
      lone.coord_dim = 1;
      lone.structural_zero = true;
      lone.coords.push_back(2 * d);
      cert.groups.push_back(std::move(lone));
    }
  }

  // Pfaffian constraint: even K with nonvanishing target spectrum.
  if (even_k) {
    bool any_zero = false;
    int sign = 1;
    for (const auto& l : lambda.entries) {
      if (l.is_zero()) any_zero = true;
      if (l < HalfInt(0)) sign = -sign;
    }
    cert.pfaffian_constraint = any_zero ? 0 : sign;
  }

  // Target prod_k (t - lambda_k^2).
  std::vector<Rational> lam_sq;
  for (const auto& l : lambda.entries) lam_sq.push_back(l.square());
  Poly target = Poly::from_roots(lam_sq);

  // Base A(t) = prod over nu-groups (t - q)^{mult}.
  Poly base = Poly::constant(Rational(1));
  for (const auto& g : cert.groups) {
    int nu_mult = g.svar_count;
    if (even_k && g.coord_dim % 2 == 1) nu_mult -= 1;  // drop the lone variable
    for (int k = 0; k < nu_mult; ++k) base = base * Poly::x_minus(g.q);
  }

  // One column per group; per-group cofactor C_g(t) as in the reduced
  // characteristic polynomial.
  const Poly t_poly({Rational(0), Rational(1)});
  std::vector<Poly> cols;
  Poly rhs;
  for (const auto& g : cert.groups) {
    int nu_mult = g.svar_count;
    if (even_k && g.coord_dim % 2 == 1) nu_mult -= 1;
    if (even_k && nu_mult == 0) {
      // pure lone group: column A(t)
      cols.push_back(base);
      continue;
    }
    Poly cof = Poly::constant(Rational(1));
    for (int k = 0; k < nu_mult - 1; ++k) cof = cof * Poly::x_minus(g.q);
    for (const auto& h : cert.groups) {
      if (&h == &g) continue;
      int hm = h.svar_count;
      if (even_k && h.coord_dim % 2 == 1) hm -= 1;
      for (int k = 0; k < hm; ++k) cof = cof * Poly::x_minus(h.q);
    }
    // even K picks up the extra factor of t from the determinant expansion
    cols.push_back(even_k ? t_poly * cof : cof);
  }
  rhs = even_k ? (t_poly * base - target) : (base - target);

  std::vector<Rational> sigma;
  cert.match_polynomial_ok = solve_poly_system(cols, rhs, sigma);
  if (cert.match_polynomial_ok) {
    for (size_t i = 0; i < cert.groups.size(); ++i) cert.groups[i].sigma = sigma[i];
    // Independent reconstruction of the matched polynomial.
    Poly recon = even_k ? t_poly * base : base;
    for (size_t i = 0; i < cols.size(); ++i) recon = recon - sigma[i] * cols[i];
    if (!(recon == target)) cert.match_polynomial_ok = false;
  }

  bool nonneg = cert.match_polynomial_ok;
  for (const auto& g : cert.groups)
    if (g.sigma < Rational(0)) nonneg = false;
  cert.feasible = cert.spin_compatible && nonneg;

  {
    std::ostringstream os;
    os << "match=" << (cert.match_polynomial_ok ? "ok" : "fail")
       << " spin=" << (cert.spin_compatible ? "ok" : "mismatch") << " sums=[";
    for (size_t i = 0; i < cert.groups.size(); ++i)
      os << (i ? "," : "") << cert.groups[i].sigma.str();
    os << "] feasible=" << (cert.feasible ? "yes" : "no");
    cert.trace.push_back(os.str());
  }
  return cert;
}

std::pair<CGValue, CGCertificate> cg_multiplicity(const Weight& nu,
                                                  const Weight& lambda,
                                                  const GroupPair& pair) {
  CGCertificate cert = solve_group_sums(nu, lambda, pair);
  if (!cert.feasible) {
    cert.orbit_count = CGValue::zero();
    cert.trace.push_back("infeasible -> Zero");
    return {cert.orbit_count, cert};
  }

  bool all_certified = true;
  int certified_product = 1;
  int lower_bound = 1;
  for (auto& g : cert.groups) {
    if (g.structural_zero) {
      g.stabilizer = so_name(g.coord_dim);
    } else {
      g.stabilizer = unitary_name(g.svar_count);
    }
    if (g.sigma.is_zero()) {
      // single point, trivially one orbit
      g.transitive_certified = true;
      g.orbit_factor = 1;
      continue;
    }
    if (!g.structural_zero) {
      if (g.svar_count == 1) {
        // torus factor rotating one coordinate pair: transitive on the circle
        g.transitive_certified = true;
        g.orbit_factor = 1;
      } else {
        // U(m), m >= 2, on S^{2m-1}: not certified by this analyzer
        g.transitive_certified = false;
        g.orbit_factor = 1;
      }
    } else if (g.coord_dim == 1) {
      // lone even-K coordinate: a sign choice, settled by the Pfaffian when
      // the target spectrum is nonvanishing
      if (cert.pfaffian_constraint != 0) {
        g.transitive_certified = true;
        g.orbit_factor = 1;
      } else {
        g.transitive_certified = false;
        g.orbit_factor = 2;
      }
    } else if (g.coord_dim == 2) {
      // SO(2) circle factor
      g.transitive_certified = true;
      g.orbit_factor = 1;
    } else {
      // SO(z), z >= 3, on S^{z-1}: not certified by this analyzer
      g.transitive_certified = false;
      g.orbit_factor = 1;
    }
    if (g.transitive_certified)
      certified_product *= g.orbit_factor;
    else
      all_certified = false;
    lower_bound *= g.orbit_factor;
  }

  if (all_certified) {
    cert.orbit_count = certified_product == 1 ? CGValue::one()
                                              : CGValue::finite(certified_product);
  } else {
    cert.orbit_count = CGValue::undetermined(lower_bound);
  }

  {
    std::ostringstream os;
    os << "stabilizer=[";
    for (size_t i = 0; i < cert.groups.size(); ++i)
      os << (i ? "," : "") << cert.groups[i].stabilizer
         << (cert.groups[i].transitive_certified ? "" : "?");
    os << "] -> " << cert.orbit_count.str();
    cert.trace.push_back(os.str());
  }
  return {cert.orbit_count, cert};
}

bool cg_nonzero(const Weight& nu, const Weight& lambda, const GroupPair& pair) {
  return branch_multiplicity(pair, lambda, nu) != 0;
}

}  // namespace cgm
