#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace yppa {

// Error hierarchy. The CLI maps these onto exit codes:
// ValueError -> 1, NumericError -> 2, IoError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValueError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void str_append(std::ostringstream&) {}

template <typename A, typename... Rest>
void str_append(std::ostringstream& os, A&& a, Rest&&... rest) {
  os << std::forward<A>(a);
  str_append(os, std::forward<Rest>(rest)...);
}

}  // namespace detail

template <typename... Args>
std::string strcat_all(Args&&... args) {
  std::ostringstream os;
  detail::str_append(os, std::forward<Args>(args)...);
  return os.str();
}

template <typename... Args>
[[noreturn]] void fail(Args&&... args) {
  throw ValueError(strcat_all(std::forward<Args>(args)...));
}

template <typename... Args>
[[noreturn]] void fail_numeric(Args&&... args) {
  throw NumericError(strcat_all(std::forward<Args>(args)...));
}

template <typename... Args>
[[noreturn]] void fail_io(Args&&... args) {
  throw IoError(strcat_all(std::forward<Args>(args)...));
}

// Train/eval switch threaded through every stateful forward (batch norm).
enum class Mode { Train, Eval };

// Numeric precision of a computation context. Training runs single, the
// finite-difference verification harness runs double.
enum class Precision { Single, Double };

template <typename T>
constexpr Precision precision_of() {
  return sizeof(T) == 4 ? Precision::Single : Precision::Double;
}

inline const char* precision_name(Precision p) {
  return p == Precision::Single ? "f32" : "f64";
}

// Deterministic seedable RNG. All randomness in the project flows through
// this wrapper so results are bit-reproducible for a fixed seed; the raw
// mt19937_64 stream is mapped to floats by hand instead of relying on
// std::uniform_real_distribution, whose output is not pinned by the standard.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {
    // a couple of warm-up draws so nearby seeds decorrelate
    next_u64();
    next_u64();
  }

  uint64_t next_u64() {
    // splitmix64
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [lo, hi] inclusive
  int uniform_int(int lo, int hi) {
    if (hi < lo) fail("uniform_int: empty range [", lo, ", ", hi, "]");
    uint64_t span = uint64_t(hi) - uint64_t(lo) + 1;
    return lo + int(next_u64() % span);
  }

 private:
  uint64_t state_;
};

// Number of worker threads for kernel inner loops. Honors YPPA_THREADS,
// falling back to the hardware count. Parallel kernels only ever split
// disjoint output regions across workers, so results are bit-identical
// for any thread count.
int worker_threads();

}  // namespace yppa
