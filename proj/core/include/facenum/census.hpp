#pragma once

#include <cstdint>
#include <functional>

#include "facenum/triangulation.hpp"

namespace facenum {

struct CensusOptions {
  /// Run even when the estimated count exceeds census_limit.
  bool force = false;
};

struct CensusSummary {
  int dim = 0;
  int facets = 0;
  std::uint64_t visited = 0;
};

/// Number of labelled triangulations the census visits: (2m-1)!! * (d!)^m
/// for m = n(d+1)/2 slot pairs, or 0 when n(d+1) is odd. Saturates at
/// UINT64_MAX.
std::uint64_t census_estimate(int d, int n);

/// Counts above this need CensusOptions::force.
inline constexpr std::uint64_t census_limit = 30'000'000;

/// Streams every closed triangulation with n facets of dimension d: all
/// perfect matchings of the n(d+1) ridge slots, combined with every vertex
/// correspondence for each matched pair. No isomorphism reduction; the
/// visitor sees each labelled triangulation once, sequentially.
///
/// An odd slot count yields nothing. Throws GuardExceeded when
/// census_estimate(d, n) > census_limit without `force`, and
/// InvalidArgument for d < 1 or n < 1.
CensusSummary enumerate_closed(int d, int n, const std::function<void(const Triangulation&)>& visitor,
                               const CensusOptions& options = {});

}  // namespace facenum
