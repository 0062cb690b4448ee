#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bihmap {

// Deterministic counter-based RNG (splitmix64). We do not use
// std::uniform_real_distribution because its output is not pinned across
// standard library implementations; run-to-run determinism is part of the
// contract.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [a, b)
  double uniform(double a, double b) { return a + (b - a) * next_double(); }

  // standard normal (polar Box-Muller, deterministic)
  double next_normal();

  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Fixed-order pairwise summation. The reduction tree depends only on the
// element count, never on thread count, so results are reproducible.
double pairwise_sum(std::span<const double> values);

// Accumulator that buffers terms and reduces pairwise in fixed order.
class PairwiseAccumulator {
 public:
  void add(double v) { terms_.push_back(v); }
  double total() const { return pairwise_sum(terms_); }
  void reserve(std::size_t n) { terms_.reserve(n); }

 private:
  std::vector<double> terms_;
};

// Chunked parallel map with deterministic combination: `fn(chunk_begin,
// chunk_end)` returns a partial double; partials are pairwise-summed in chunk
// order. Chunk size is fixed by work size, so the result does not depend on
// the number of worker threads.
double parallel_sum_chunks(std::size_t n, std::size_t chunk,
                           const std::function<double(std::size_t, std::size_t)>& fn);

// parallel for over [0, n) in fixed chunks
void parallel_for_chunks(std::size_t n, std::size_t chunk,
                         const std::function<void(std::size_t, std::size_t)>& fn);

// Global worker count (1 = serial). Set from CLI / BIHMAP_THREADS.
void set_thread_count(int n);
int thread_count();

std::uint64_t fnv1a64(std::span<const unsigned char> bytes);
std::uint64_t fnv1a64(const std::string& s);

struct BihmapError : std::runtime_error {
  explicit BihmapError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : BihmapError {
  using BihmapError::BihmapError;
};
struct GeometryError : BihmapError {
  using BihmapError::BihmapError;
};
struct InvalidArgument : BihmapError {
  using BihmapError::BihmapError;
};
struct UnsupportedError : BihmapError {
  using BihmapError::BihmapError;
};
struct SingularLocusError : BihmapError {
  using BihmapError::BihmapError;
};
struct ComputeError : BihmapError {
  using BihmapError::BihmapError;
};

}  // namespace bihmap
