#include "cgmult/branching.hpp"

#include <algorithm>
#include <functional>

namespace cgm {

GroupPair GroupPair::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("pair spec must look like 'so5/so4'");
  auto part = [&](const std::string& p) {
    if (p.size() < 3 || p.substr(0, 2) != "so")
      throw std::invalid_argument("bad group spec '" + p + "'");
    return std::stoi(p.substr(2));
  };
  int nk = part(s.substr(0, slash));
  int nh = part(s.substr(slash + 1));
  if (nh != nk - 1)
    throw std::invalid_argument("pair must be successive, got " + s);
  return GroupPair(nk);
}

bool spin_compatible(const Weight& a, const Weight& b) {
  return a.spin_class() == b.spin_class();
}

int branch_multiplicity(const GroupPair& pair, const Weight& lambda,
                        const Weight& nu) {
  if (!(lambda.group == pair.K) || !(nu.group == pair.H))
    throw std::invalid_argument("branch_multiplicity: weights do not match pair");
  if (!is_dominant(lambda) || !is_dominant(nu))
    throw std::invalid_argument("branch_multiplicity: weights must be dominant");
  if (!spin_compatible(lambda, nu)) return 0;

  const auto& l = lambda.entries;
  const auto& v = nu.entries;
  const int d = pair.d();
  if (pair.kind() == GroupPair::Kind::OddK) {
    // l1 >= v1 >= l2 >= v2 >= ... >= l_d >= |v_d|
    for (int j = 0; j + 1 < d; ++j)
      if (!(l[j] >= v[j] && v[j] >= l[j + 1])) return 0;
    if (!(l[d - 1] >= v[d - 1].abs())) return 0;
    return 1;
  }
  // EvenK: l1 >= v1 >= l2 >= ... >= l_d >= v_d >= |l_{d+1}|
  for (int j = 0; j < d; ++j) {
    if (!(l[j] >= v[j])) return 0;
    HalfInt lower = (j + 1 < d) ? l[j + 1] : l[d].abs();
    if (!(v[j] >= lower)) return 0;
  }
  return 1;
}

std::vector<Weight> restriction_decomposition(const GroupPair& pair,
                                              const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("restriction_decomposition: lambda not dominant");
  const auto& l = lambda.entries;
  const int d = pair.d();
  std::vector<Weight> out;
  std::vector<HalfInt> cur(d);

  std::function<void(int)> rec = [&](int j) {
    if (j == d) {
      out.emplace_back(cur, pair.H);
      return;
    }
    HalfInt hi = l[j];
    HalfInt lo;
    const bool last = (j == d - 1);
    if (pair.kind() == GroupPair::Kind::OddK)
      lo = last ? -l[d - 1] : l[j + 1];  // last entry ranges over [-l_d, l_d]
    else
      lo = last ? l[d].abs() : l[j + 1];
    for (std::int64_t t = lo.twice(); t <= hi.twice(); t += 2) {
      cur[j] = HalfInt(t);
      rec(j + 1);
    }
  };
  rec(0);

  std::sort(out.begin(), out.end(),
            [](const Weight& a, const Weight& b) { return a.entries < b.entries; });
  return out;
}

}  // namespace cgm
