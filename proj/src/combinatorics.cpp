#include "sublists/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace sublists {

std::string to_string(const ShapeIndex& idx) {
  return "(" + std::to_string(idx.k) + "," + std::to_string(idx.n) + ")";
}

bool bounded_holds(ShapeIndex idx) noexcept { return idx.k <= idx.n; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw OutOfRange("binomial: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  }
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  // result holds C(n - k + i, i) after step i; each step multiplies by
  // (n - k + i) / i, dividing out common factors first to stay exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t num = n - k + i;
    std::uint64_t den = i;
    const std::uint64_t g1 = std::gcd(result, den);
    result /= g1;
    den /= g1;
    const std::uint64_t g2 = std::gcd(num, den);
    num /= g2;
    den /= g2;
    // den is now 1: C(m, i) * i is divisible by i after the reductions above.
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      throw Overflow("binomial: C(" + std::to_string(n) + "," + std::to_string(k) +
                     ") does not fit in 64 bits");
    }
    result = result * num / den;
  }
  return result;
}

}  // namespace sublists
