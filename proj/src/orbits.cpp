#include "sqs/orbits.hpp"

#include <set>

namespace sqs {

void check_block(std::span<const Point> block, Point v)
{
  if (block.empty())
    throw DomainError("block is empty");
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (block[i] >= v)
      throw DomainError("block entry " + std::to_string(block[i]) + " outside [0, " +
                        std::to_string(v) + ")");
    if (i > 0 && block[i - 1] >= block[i])
      throw DomainError("block entries must be strictly increasing");
  }
}

Block image_of(const Permutation& perm, std::span<const Point> block)
{
  Block out(block.size());
  for (std::size_t i = 0; i < block.size(); ++i)
    out[i] = perm[block[i]];
  std::sort(out.begin(), out.end());
  return out;
}

BlockAction block_action(std::span<const Permutation> elements, const Block& block)
{
  const std::size_t k = block.size();
  std::set<std::vector<std::uint8_t>> image;
  for (const auto& perm : elements) {
    std::vector<std::uint8_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto it = std::lower_bound(block.begin(), block.end(), perm[block[i]]);
      if (it == block.end() || *it != perm[block[i]])
        throw DomainError("element does not fix the block setwise");
      pos[i] = static_cast<std::uint8_t>(it - block.begin());
    }
    image.insert(std::move(pos));
  }

  BlockAction action;
  action.permutations.assign(image.begin(), image.end());
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= k; ++i)
    factorial *= i;
  action.full_symmetric = action.size() == factorial;

  std::vector<bool> reached(k, false);
  for (const auto& p : action.permutations)
    reached[p[0]] = true;
  action.transitive = k > 0 && std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
  return action;
}

SubsetOrbits orbits_on_k_subsets(std::span<const Permutation> gens, Point v, std::size_t k,
                                 const Limits& limits)
{
  if (k == 0 || k > v)
    throw DomainError("k must lie in [1, v]");
  const std::uint64_t total = binomial(v, k);
  if (total > limits.max_subsets)
    throw ResourceError("C(" + std::to_string(v) + ", " + std::to_string(k) + ") = " +
                        std::to_string(total) + " exceeds the configured cap of " +
                        std::to_string(limits.max_subsets) + " subsets");

  // binom[x * (k + 1) + i] = C(x, i) for the colex rank.
  std::vector<std::uint64_t> binom(std::size_t{v} * (k + 1));
  for (Point x = 0; x < v; ++x)
    for (std::size_t i = 0; i <= k; ++i)
      binom[x * (k + 1) + i] = binomial(x, i);
  const auto rank = [&](const Block& b) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < k; ++i)
      r += binom[b[i] * (k + 1) + i + 1];
    return r;
  };

  constexpr std::uint32_t kUnassigned = ~std::uint32_t{0};
  SubsetOrbits result;
  result.v = v;
  result.k = k;
  result.orbit_of_rank.assign(total, kUnassigned);

  std::vector<Point> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  do {
    if (result.orbit_of_rank[rank(subset)] != kUnassigned)
      continue;
    const auto id = static_cast<std::uint32_t>(result.orbits.size());
    std::vector<Block> orbit{subset};
    result.orbit_of_rank[rank(subset)] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& perm : gens) {
        Block next = image_of(perm, orbit[head]);
        const auto r = rank(next);
        if (result.orbit_of_rank[r] != kUnassigned)
          continue;
        result.orbit_of_rank[r] = id;
        orbit.push_back(std::move(next));
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.orbits.push_back(std::move(orbit));
  } while (next_subset(subset, v));
  return result;
}

} // namespace sqs
