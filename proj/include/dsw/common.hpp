#ifndef DSW_COMMON_HPP
#define DSW_COMMON_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dsw {

inline constexpr const char* kVersion = "0.1.0";

// Thrown when the data is degenerate or a computation breaks down numerically
// (constant series, non-positive variance, failed embedding). Input/config
// problems use std::invalid_argument. The CLI maps the two to exit codes 2
// and 1 respectively.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// SplitMix64 mix of (master, index). Every Monte Carlo repetition derives its
// own seed so repetitions are independent and order-insensitive.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// FNV-1a over a string; used for content-addressed caches and file metadata.
std::uint64_t fnv1a64(std::string_view text);

double mean_of(std::span<const double> x);
// Biased (1/n) variance around the sample mean.
double variance_of(std::span<const double> x);

// Empirical quantile with linear interpolation between order statistics
// (R type 7). Input must be sorted ascending.
double quantile_sorted(std::span<const double> sorted, double prob);
double quantile(std::vector<double> values, double prob);

unsigned resolve_threads(unsigned requested);

// Runs body(i) for i in [0, count) across worker threads. Bodies must write
// to disjoint slots; exceptions are captured and rethrown on the caller.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace dsw

#endif
