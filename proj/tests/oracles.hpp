#pragma once

// Slow, independent reference implementations used only by tests.

#include "sqs/combinatorics.hpp"
#include "sqs/design.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Poly = std::vector<std::uint32_t>; // lowest degree first

/// Schoolbook polynomial arithmetic modulo a given monic modulus over F_p,
/// elements coded as sum c_i p^i.
struct SlowField {
  std::uint32_t p;
  Poly modulus; // monic, size d + 1

  unsigned d() const { return static_cast<unsigned>(modulus.size() - 1); }
  std::uint32_t q() const
  {
    std::uint32_t r = 1;
    for (unsigned i = 0; i < d(); ++i)
      r *= p;
    return r;
  }

  Poly digits(std::uint32_t code) const
  {
    Poly out(d());
    for (auto& c : out) {
      c = code % p;
      code /= p;
    }
    return out;
  }

  std::uint32_t code(const Poly& a) const
  {
    std::uint64_t c = 0;
    for (std::size_t i = a.size(); i-- > 0;)
      c = c * p + a[i];
    return static_cast<std::uint32_t>(c);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const
  {
    Poly x = digits(a), y = digits(b);
    for (unsigned i = 0; i < d(); ++i)
      x[i] = (x[i] + y[i]) % p;
    return code(x);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
  {
    const Poly x = digits(a), y = digits(b);
    Poly prod(2 * d(), 0);
    for (unsigned i = 0; i < d(); ++i)
      for (unsigned j = 0; j < d(); ++j)
        prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    // Reduce from the top using x^d = -sum m_i x^i.
    for (std::size_t k = prod.size(); k-- > d();) {
      const std::uint32_t c = prod[k];
      if (!c)
        continue;
      prod[k] = 0;
      for (unsigned i = 0; i < d(); ++i)
        prod[k - d() + i] = (prod[k - d() + i] + (p - c) * modulus[i]) % p;
    }
    prod.resize(d());
    return code(prod);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const
  {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i)
      r = mul(r, a);
    return r;
  }

  std::uint64_t order(std::uint32_t a) const
  {
    std::uint32_t x = a;
    std::uint64_t k = 1;
    while (x != 1) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }
};

/// Evaluates a polynomial over F_p at a point of F_p.
inline std::uint32_t eval(const Poly& f, std::uint32_t x, std::uint32_t p)
{
  std::uint64_t r = 0;
  for (std::size_t i = f.size(); i-- > 0;)
    r = (r * x + f[i]) % p;
  return static_cast<std::uint32_t>(r);
}

/// Coverage count of every t-subset by straightforward enumeration.
inline std::map<sqs::Block, std::uint64_t> coverage(const sqs::Design& design)
{
  std::map<sqs::Block, std::uint64_t> counts;
  std::vector<sqs::Point> subset(design.t());
  for (std::size_t i = 0; i < subset.size(); ++i)
    subset[i] = static_cast<sqs::Point>(i);
  do {
    std::uint64_t c = 0;
    for (const auto& b : design.blocks())
      if (std::includes(b.begin(), b.end(), subset.begin(), subset.end()))
        ++c;
    counts[subset] = c;
  } while (sqs::next_subset(subset, design.v()));
  return counts;
}

inline bool is_t_design(const sqs::Design& design)
{
  for (const auto& [s, c] : coverage(design))
    if (c != design.lambda())
      return false;
  return true;
}

/// Prime powers in [2, limit] by trial division.
inline std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= limit; ++q) {
    std::uint64_t p = 0;
    for (std::uint64_t f = 2; f <= q; ++f)
      if (q % f == 0) {
        p = f;
        break;
      }
    std::uint64_t r = q;
    while (r % p == 0)
      r /= p;
    if (r == 1)
      out.push_back(q);
  }
  return out;
}

} // namespace oracle
