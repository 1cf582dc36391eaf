#include "cgmult/weights.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cgm {

Weight::Weight(std::vector<HalfInt> e, GroupSpec g) : entries(std::move(e)), group(g) {
  if (static_cast<int>(entries.size()) != g.rank())
    throw std::invalid_argument("Weight: expected " + std::to_string(g.rank()) +
                                " entries for " + g.str() + ", got " +
                                std::to_string(entries.size()));
  for (const auto& x : entries)
    if (x.is_integer() != entries[0].is_integer())
      throw std::invalid_argument("Weight: entries mix spin classes");
}

bool Weight::is_zero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](HalfInt h) { return h.is_zero(); });
}

std::string Weight::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    os << entries[i].str();
  }
  return os.str();
}

Weight Weight::parse(const std::string& s, GroupSpec g) {
  std::vector<HalfInt> entries;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) entries.push_back(HalfInt::parse(tok));
  return Weight(std::move(entries), g);
}

bool is_dominant(const Weight& w) {
  const auto& e = w.entries;
  const int d = w.rank();
  for (int i = 0; i + 1 < d; ++i)
    if (e[i] < e[i + 1]) return false;
  if (d == 0) return true;
  if (w.group.even()) {
    // last comparison is against |l_d|
    if (d >= 2 && e[d - 2] < e[d - 1].abs()) return false;
    return true;
  }
  return e[d - 1] >= HalfInt(0);
}

bool is_strongly_dominant(const Weight& w) {
  const auto& e = w.entries;
  const int d = w.rank();
  for (int i = 0; i + 2 < d; ++i)
    if (!(e[i] > e[i + 1])) return false;
  if (d == 0) return true;
  if (w.group.even()) {
    if (d >= 2 && !(e[d - 2] > e[d - 1].abs())) return false;
    return true;  // SO(2): empty chain
  }
  if (d >= 2 && !(e[d - 2] > e[d - 1])) return false;
  return e[d - 1] > HalfInt(0);
}

std::vector<Weight> enumerate_weights(GroupSpec group, HalfInt max_entry,
                                      SpinClass spin_class) {
  if (max_entry < HalfInt(0))
    throw std::invalid_argument("enumerate_weights: max_entry must be >= 0");
  const int d = group.rank();
  const std::int64_t lo = spin_class == SpinClass::Integer ? 0 : 1;
  std::vector<Weight> out;
  std::vector<HalfInt> cur(d);

  std::function<void(int)> rec = [&](int i) {
    if (i == d) {
      out.emplace_back(cur, group);
      return;
    }
    const bool last = (i == d - 1);
    HalfInt ub = (i == 0) ? max_entry : cur[i - 1];
    if (last && group.even()) {
      // last entry ranges over -bound .. bound in integer steps
      HalfInt bound = ub;
      for (std::int64_t t = -bound.twice(); t <= bound.twice(); t += 2) {
        if (spin_class == SpinClass::Half && t % 2 == 0) continue;
        if (spin_class == SpinClass::Integer && t % 2 != 0) continue;
        cur[i] = HalfInt(t);
        rec(i + 1);
      }
    } else {
      for (std::int64_t t = lo; t <= ub.twice(); t += 2) {
        cur[i] = HalfInt(t);
        rec(i + 1);
      }
    }
  };
  rec(0);

  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    return a.entries < b.entries;
  });
  return out;
}

}  // namespace cgm
