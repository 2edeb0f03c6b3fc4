#include "facenum/census.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "facenum/error.hpp"

namespace facenum {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

class Enumerator {
 public:
  Enumerator(int d, int n, const std::function<void(const Triangulation&)>& visitor)
      : d_(d), t_(d, n), used_(static_cast<std::size_t>(n * (d + 1)), false), visitor_(visitor) {}

  std::uint64_t run() {
    recurse();
    return visited_;
  }

 private:
  void recurse() {
    const auto first = std::find(used_.begin(), used_.end(), false);
    if (first == used_.end()) {
      ++visited_;
      visitor_(t_);
      return;
    }
    const int s = static_cast<int>(first - used_.begin());
    used_[static_cast<std::size_t>(s)] = true;
    for (int u = s + 1; u < static_cast<int>(used_.size()); ++u) {
      if (used_[static_cast<std::size_t>(u)]) continue;
      used_[static_cast<std::size_t>(u)] = true;
      const int sf = s / (d_ + 1), sr = s % (d_ + 1);
      const int uf = u / (d_ + 1), ur = u % (d_ + 1);
      // Every bijection sending sr to ur: fix that pair, permute the rest.
      std::vector<int> rest_src, rest_dst;
      for (int v = 0; v <= d_; ++v) {
        if (v != sr) rest_src.push_back(v);
        if (v != ur) rest_dst.push_back(v);
      }
      std::vector<int> images(static_cast<std::size_t>(d_ + 1));
      do {
        images[static_cast<std::size_t>(sr)] = ur;
        for (std::size_t k = 0; k < rest_src.size(); ++k) {
          images[static_cast<std::size_t>(rest_src[k])] = rest_dst[k];
        }
        t_.join(sf, sr, uf, Permutation(images));
        recurse();
        t_.unjoin(sf, sr);
      } while (std::next_permutation(rest_dst.begin(), rest_dst.end()));
      used_[static_cast<std::size_t>(u)] = false;
    }
    used_[static_cast<std::size_t>(s)] = false;
  }

  int d_;
  Triangulation t_;
  std::vector<bool> used_;
  const std::function<void(const Triangulation&)>& visitor_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t census_estimate(int d, int n) {
  if (d < 1 || n < 1) return 0;
  const std::uint64_t slots = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(d + 1);
  if (slots % 2 == 1) return 0;
  std::uint64_t factorial = 1;
  for (int i = 2; i <= d; ++i) factorial = saturating_mul(factorial, static_cast<std::uint64_t>(i));
  std::uint64_t total = 1;
  for (std::uint64_t k = slots - 1; k >= 1; k -= 2) {
    total = saturating_mul(total, k);
    if (k == 1) break;
  }
  for (std::uint64_t m = 0; m < slots / 2; ++m) total = saturating_mul(total, factorial);
  return total;
}

CensusSummary enumerate_closed(int d, int n, const std::function<void(const Triangulation&)>& visitor,
                               const CensusOptions& options) {
  if (d < 1 || n < 1) throw InvalidArgument("census needs d >= 1 and n >= 1");
  CensusSummary summary{d, n, 0};
  const std::uint64_t estimate = census_estimate(d, n);
  if (estimate == 0) return summary;
  if (estimate > census_limit && !options.force) {
    throw GuardExceeded("census of dimension " + std::to_string(d) + " with " + std::to_string(n) +
                        " facets would visit " + std::to_string(estimate) +
                        " triangulations (limit " + std::to_string(census_limit) +
                        ")");
  }
  summary.visited = Enumerator(d, n, visitor).run();
  return summary;
}

}  // namespace facenum
