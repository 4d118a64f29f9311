#include "sqs/combinatorics.hpp"

#include "sqs/errors.hpp"

#include <algorithm>

namespace sqs {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > UINT64_MAX)
      throw ResourceError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t colex_rank(std::span<const Point> block)
{
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < block.size(); ++i)
    rank += binomial(block[i], i + 1);
  return rank;
}

bool next_subset(std::vector<Point>& subset, Point v)
{
  const std::size_t k = subset.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (subset[i] < v - k + i) {
      ++subset[i];
      for (std::size_t j = i + 1; j < k; ++j)
        subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<Block> sub_blocks(std::span<const Point> block, std::size_t k)
{
  std::vector<Block> out;
  if (k > block.size())
    return out;
  std::vector<Point> positions(k);
  for (std::size_t i = 0; i < k; ++i)
    positions[i] = static_cast<Point>(i);
  do {
    Block b(k);
    for (std::size_t i = 0; i < k; ++i)
      b[i] = block[positions[i]];
    out.push_back(std::move(b));
  } while (next_subset(positions, static_cast<Point>(block.size())));
  return out;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0)
      return false;
  return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q)
{
  if (q < 2)
    return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  unsigned d = 0;
  while (q % p == 0) {
    q /= p;
    ++d;
  }
  if (q != 1)
    return std::nullopt;
  return std::make_pair(p, d);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0)
        n /= f;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1)
      result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

} // namespace sqs
