#include "capdp/sequences.hpp"

#include <algorithm>
#include <sstream>

namespace capdp {

ValueProfile naive_maxplus_conv(ProfileView a, ProfileView b) {
  if (a.empty() || b.empty()) return {};
  ValueProfile c(a.size() + b.size() - 1, kBottom);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].is_bottom()) continue;
    for (std::size_t d = 0; d < b.size(); ++d) {
      if (b[d].is_bottom()) continue;
      c[j + d] = std::max(c[j + d], a[j] + b[d]);
    }
  }
  return c;
}

ValueProfile naive_minplus_conv(ProfileView a, ProfileView b) {
  if (a.empty() || b.empty()) return {};
  ValueProfile c(a.size() + b.size() - 1, kTop);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].is_top()) continue;
    for (std::size_t d = 0; d < b.size(); ++d) {
      if (b[d].is_top()) continue;
      c[j + d] = std::min(c[j + d], a[j] + b[d]);
    }
  }
  return c;
}

ValueProfile negated(ProfileView a) {
  ValueProfile out(a.size());
  std::transform(a.begin(), a.end(), out.begin(), [](ExtValue v) { return -v; });
  return out;
}

ValueProfile prefix_max(ProfileView a) {
  ValueProfile out(a.begin(), a.end());
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = std::max(out[i], out[i - 1]);
  return out;
}

ConcavityWitness check_concave(ProfileView a) {
  ConcavityWitness w;
  std::size_t first = 0;
  while (first < a.size() && a[first].is_bottom()) ++first;
  if (first == a.size()) return w;
  std::size_t last = a.size() - 1;
  while (a[last].is_bottom()) --last;

  for (std::size_t i = first; i <= last; ++i) {
    if (!a[i].is_finite()) {
      w.kind = ConcavityWitness::Kind::not_applicable;
      w.index = i;
      w.mid = a[i];
      return w;
    }
  }
  for (std::size_t i = first + 1; i < last; ++i) {
    const __int128 left = static_cast<__int128>(a[i].raw()) - a[i - 1].raw();
    const __int128 right = static_cast<__int128>(a[i + 1].raw()) - a[i].raw();
    if (left < right) {
      w.kind = ConcavityWitness::Kind::violation;
      w.index = i;
      w.prev = a[i - 1];
      w.mid = a[i];
      w.next = a[i + 1];
      return w;
    }
  }
  return w;
}

ConcavityWitness check_kstep_concave(ProfileView a, std::size_t k) {
  if (k == 0) throw Error(Errc::validation, "step k must be positive");
  ConcavityWitness w;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (i % k != 0 && a[i] != a[i - 1]) {
      w.kind = ConcavityWitness::Kind::step_mismatch;
      w.index = i;
      w.prev = a[i - 1];
      w.mid = a[i];
      if (i + 1 < a.size()) w.next = a[i + 1];
      return w;
    }
  }
  ValueProfile core;
  core.reserve(a.size() / k + 1);
  for (std::size_t i = 0; i < a.size(); i += k) core.push_back(a[i]);
  w = check_concave(core);
  w.index *= k;
  return w;
}

std::string describe(const ConcavityWitness& w) {
  std::ostringstream os;
  switch (w.kind) {
    case ConcavityWitness::Kind::concave:
      return "concave";
    case ConcavityWitness::Kind::violation:
      os << "slope increases at index " << w.index << " (" << w.prev << ", " << w.mid << ", "
         << w.next << ")";
      break;
    case ConcavityWitness::Kind::step_mismatch:
      os << "entry " << w.index << " differs from its block start (" << w.prev << " vs "
         << w.mid << ")";
      break;
    case ConcavityWitness::Kind::not_applicable:
      os << "non-finite entry " << w.mid << " inside the finite block at index " << w.index;
      break;
  }
  return os.str();
}

}  // namespace capdp
