#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sqs {

using Point = std::uint32_t;

/// A sorted, duplicate-free list of point indices.
using Block = std::vector<Point>;

/// Binomial coefficient; throws ResourceError if the result overflows 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Rank of a sorted subset in colexicographic order:
/// sum over i of C(block[i], i + 1). Dense in [0, C(v, k)).
std::uint64_t colex_rank(std::span<const Point> block);

/// Advances `subset` to the next k-subset of [0, v) in lexicographic order.
/// Returns false after the last one.
bool next_subset(std::vector<Point>& subset, Point v);

/// All k-subsets of `block`, in lexicographic order of positions.
std::vector<Block> sub_blocks(std::span<const Point> block, std::size_t k);

bool is_prime(std::uint64_t n);

/// Returns (p, d) with q = p^d, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

} // namespace sqs
