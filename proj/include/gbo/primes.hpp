#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gbo {

namespace detail {

// Eratosthenes over [0, limit).
inline std::vector<std::uint32_t> sieve_below(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit <= 2) return primes;
  std::vector<bool> composite(limit, false);
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
  }
  return primes;
}

// Smallest integer n with every integer below r also below n; primes p < r
// are exactly the primes below ceil(r).
inline std::uint64_t integer_bound(double r) {
  constexpr double kMaxSieve = 1u << 30;
  if (!(r > 0.0) || std::isnan(r)) throw std::invalid_argument("prime bound must be positive");
  if (r > kMaxSieve) throw std::invalid_argument("prime bound too large for the sieve");
  return static_cast<std::uint64_t>(std::ceil(r));
}

}  // namespace detail

/// All primes p with 0 < p < r, ascending.
inline std::vector<std::uint32_t> primes_below(double r) {
  return detail::sieve_below(detail::integer_bound(r));
}

/// Sieve that grows on demand and answers primes_below queries by
/// prefix, for callers that ask the same question many times.
class PrimeTable {
 public:
  /// Number of leading entries of primes() that are < r.
  std::size_t count_below(double r) {
    const std::uint64_t bound = detail::integer_bound(r);
    if (bound > limit_) {
      limit_ = std::max<std::uint64_t>(bound, 2 * limit_);
      primes_ = detail::sieve_below(limit_);
    }
    return static_cast<std::size_t>(
        std::lower_bound(primes_.begin(), primes_.end(), bound) - primes_.begin());
  }

  const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> primes_;
};

}  // namespace gbo
