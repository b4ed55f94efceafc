#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace extrad {

// Configuration/file errors (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values, solver breakdowns and the like (CLI exit code 3).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixed-tree pairwise summation. The reduction tree depends only on the
// length, so results are bit-stable regardless of how the terms were
// produced (thread count, chunking).
double pairwise_sum(std::span<const double> values);

// Number of worker threads: EXTRAD_THREADS if set, else hardware count.
int thread_count();

// Runs fn(i) for i in [0, n) on disjoint static chunks. fn must only write
// to per-index slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

std::uint64_t fnv1a64(std::span<const unsigned char> bytes);
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace extrad
