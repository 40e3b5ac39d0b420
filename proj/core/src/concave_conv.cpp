#include "capdp/concave_conv.hpp"

#include <algorithm>
#include <deque>

#include "capdp/smawk.hpp"

namespace capdp {
namespace {

std::size_t full_length(ProfileView a, ProfileView b) {
  return a.empty() || b.empty() ? 0 : a.size() + b.size() - 1;
}

// Core routine; `b` is already known to be concave.
ValueProfile conv_concave_unchecked(ProfileView a, ProfileView b, std::size_t out_len) {
  const std::size_t out = std::min(out_len, full_length(a, b));
  ValueProfile result(out, kBottom);
  if (out == 0) return result;

  std::size_t first = 0;
  while (first < b.size() && b[first].is_bottom()) ++first;
  if (first == b.size() || first >= out) return result;
  std::size_t last = b.size() - 1;
  while (b[last].is_bottom()) --last;
  const ProfileView core = b.subspan(first, last - first + 1);
  const std::size_t rows = out - first;

  // Columns with a BOTTOM entry in `a` are all-BOTTOM and never win a row.
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < a.size() && j < rows; ++j) {
    if (!a[j].is_bottom()) cols.push_back(j);
  }
  if (cols.empty()) return result;

  // Row i only sees columns j with 0 <= i-j < |core|. Out-of-band columns are
  // ranked so the comparison stays totally monotone: a column right of the
  // row never beats one on its left, a column that fell off the left edge
  // always loses to any later in-band column.
  const std::size_t len = core.size();
  auto better = [&](std::size_t i, std::size_t j1, std::size_t j2) {
    if (j2 > i) return false;
    if (i - j1 >= len) return true;
    return a[j1] + core[i - j1] < a[j2] + core[i - j2];
  };
  const auto argmax = smawk_argmax(rows, std::span<const std::size_t>(cols), better);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t j = argmax[i];
    if (j <= i && i - j < len) result[first + i] = a[j] + core[i - j];
  }
  return result;
}

}  // namespace

ValueProfile conv_concave(ProfileView a, ProfileView b) {
  return conv_concave(a, b, full_length(a, b));
}

ValueProfile conv_concave(ProfileView a, ProfileView b, std::size_t out_len) {
  const auto w = check_concave(b);
  if (!w.is_concave()) throw Error(Errc::not_concave, describe(w));
  return conv_concave_unchecked(a, b, out_len);
}

ValueProfile conv_kstep_concave(ProfileView a, ProfileView b, std::size_t k) {
  return conv_kstep_concave(a, b, k, full_length(a, b));
}

ValueProfile conv_kstep_concave(ProfileView a, ProfileView b, std::size_t k,
                                std::size_t out_len) {
  const auto w = check_kstep_concave(b, k);
  if (!w.is_concave()) throw Error(Errc::not_kstep_concave, describe(w));
  const std::size_t out = std::min(out_len, full_length(a, b));
  if (out == 0) return {};
  if (k == 1) return conv_concave_unchecked(a, b, out);

  a = a.first(std::min(a.size(), out));
  const std::size_t full_blocks = b.size() / k;
  const std::size_t rem = b.size() % k;

  // f[qk+p] = (x^(p) (+) y)_q over the complete blocks of b.
  ValueProfile f(out, kBottom);
  if (full_blocks > 0) {
    ValueProfile y;
    y.reserve(full_blocks);
    for (std::size_t q = 0; q < full_blocks; ++q) y.push_back(b[q * k]);
    ValueProfile x;
    for (std::size_t p = 0; p < k && p < a.size(); ++p) {
      x.clear();
      for (std::size_t i = p; i < a.size(); i += k) x.push_back(a[i]);
      const std::size_t need = (out - 1 - p) / k + 1;
      const ValueProfile part = conv_concave_unchecked(x, y, need);
      for (std::size_t q = 0; q < part.size(); ++q) f[q * k + p] = part[q];
    }
  }
  ValueProfile result = sliding_window_max(f, k);

  // A trailing partial block [full_blocks*k, |b|-1] holds one constant value;
  // its contribution is that value plus a window maximum of a.
  if (rem > 0 && !b[full_blocks * k].is_bottom()) {
    const ExtValue tail = b[full_blocks * k];
    const std::size_t shift = full_blocks * k;
    ValueProfile padded(a.begin(), a.end());
    padded.resize(a.size() + rem - 1, kBottom);
    const ValueProfile g = sliding_window_max(padded, rem);
    for (std::size_t j = shift; j < out; ++j) {
      const std::size_t e = j - shift;
      if (e >= g.size()) break;
      result[j] = std::max(result[j], g[e] + tail);
    }
  }
  return result;
}

ValueProfile sliding_window_max(ProfileView f, std::size_t k) {
  if (k == 0) throw Error(Errc::validation, "window size must be positive");
  ValueProfile out(f.size());
  std::deque<std::size_t> window;
  for (std::size_t j = 0; j < f.size(); ++j) {
    while (!window.empty() && f[window.back()] <= f[j]) window.pop_back();
    window.push_back(j);
    while (window.front() + k <= j) window.pop_front();
    out[j] = f[window.front()];
  }
  return out;
}

}  // namespace capdp
