#pragma once

#include "sqs/combinatorics.hpp"
#include "sqs/errors.hpp"
#include "sqs/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace sqs {

/// Enumeration caps. These are guardrails for desk-scale runs, not constants.
struct Limits {
  std::size_t max_orbit = 10'000'000;
  std::size_t max_stabilizer = 10'000;
  std::size_t max_group = 1'000'000;
  std::uint64_t max_subsets = 10'000'000;
};

using Permutation = std::vector<Point>;

struct BlockHash {
  std::size_t operator()(const Block& b) const noexcept
  {
    std::size_t seed = b.size();
    for (Point x : b)
      seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

/// Throws DomainError unless `block` is strictly increasing with entries below v.
void check_block(std::span<const Point> block, Point v);

/// Sorted image of a block under a point permutation.
Block image_of(const Permutation& perm, std::span<const Point> block);

template <class Group>
Permutation as_permutation(const Group& group, const typename Group::element_type& g)
{
  Permutation perm(group.degree());
  for (Point x = 0; x < group.degree(); ++x)
    perm[x] = group.apply(g, x);
  return perm;
}

template <class Group>
std::vector<Permutation> as_permutations(const Group& group,
                                         std::span<const typename Group::element_type> gens)
{
  std::vector<Permutation> out;
  out.reserve(gens.size());
  for (const auto& g : gens)
    out.push_back(as_permutation(group, g));
  return out;
}

/// Orbit of a block, sorted lexicographically, with one group element per
/// member mapping the base block onto it.
template <class Group>
struct BlockOrbit {
  using element_type = typename Group::element_type;

  Block base;
  std::vector<Block> blocks;
  std::vector<element_type> transversal;

  std::size_t size() const { return blocks.size(); }

  /// Position of `b` in `blocks`, or size() if absent.
  std::size_t find(const Block& b) const
  {
    const auto it = std::lower_bound(blocks.begin(), blocks.end(), b);
    return it != blocks.end() && *it == b ? static_cast<std::size_t>(it - blocks.begin())
                                          : blocks.size();
  }
};

/// Breadth-first closure of `base` under the generators. Transversal elements
/// are fixed by first discovery in BFS order, generator index breaking ties.
template <class Group>
BlockOrbit<Group> orbit_of_block(const Group& group,
                                 std::span<const typename Group::element_type> gens,
                                 const Block& base, const Limits& limits = {})
{
  using E = typename Group::element_type;
  check_block(base, group.degree());
  const auto perms = as_permutations(group, gens);

  std::vector<Block> found{base};
  std::vector<E> elements{group.identity()};
  std::unordered_map<Block, std::size_t, BlockHash> seen{{base, 0}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t s = 0; s < perms.size(); ++s) {
      Block next = image_of(perms[s], found[head]);
      if (seen.contains(next))
        continue;
      if (found.size() >= limits.max_orbit)
        throw ResourceError("orbit exceeds the configured cap of " +
                            std::to_string(limits.max_orbit) + " blocks");
      seen.emplace(next, found.size());
      found.push_back(std::move(next));
      elements.push_back(group.compose(gens[s], elements[head]));
    }
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  BlockOrbit<Group> orbit;
  orbit.base = base;
  orbit.blocks.reserve(found.size());
  orbit.transversal.reserve(found.size());
  for (std::size_t i : order) {
    orbit.blocks.push_back(std::move(found[i]));
    orbit.transversal.push_back(std::move(elements[i]));
  }
  return orbit;
}

/// Closure of the identity under `gens`. Throws ResourceError past `cap` elements.
template <class Group>
std::vector<typename Group::element_type>
close_under(const Group& group, std::span<const typename Group::element_type> gens,
            std::size_t cap)
{
  using E = typename Group::element_type;
  std::vector<E> elements{group.identity()};
  std::unordered_set<E, ElementHash> seen{group.identity()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : gens) {
      E next = group.compose(s, elements[head]);
      if (seen.contains(next))
        continue;
      if (elements.size() >= cap)
        throw ResourceError("group closure exceeds the configured cap of " +
                            std::to_string(cap) + " elements");
      seen.insert(next);
      elements.push_back(std::move(next));
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

/// All elements of the group generated by `gens`, sorted.
template <class Group>
std::vector<typename Group::element_type>
enumerate_group(const Group& group, std::span<const typename Group::element_type> gens,
                const Limits& limits = {})
{
  return close_under(group, gens, limits.max_group);
}

template <class Group>
struct Stabilizer {
  std::uint64_t order = 0;
  std::vector<typename Group::element_type> elements; // sorted
};

/// Setwise stabilizer of the orbit's base block, generated by the Schreier
/// generators u_{s(x)}^-1 s u_x and closed under composition. The order comes
/// from the orbit-stabilizer identity and is checked against the closure.
template <class Group>
Stabilizer<Group> stabilizer(const Group& group,
                             std::span<const typename Group::element_type> gens,
                             std::uint64_t group_order, const BlockOrbit<Group>& orbit,
                             const Limits& limits = {})
{
  using E = typename Group::element_type;
  if (orbit.size() == 0 || group_order % orbit.size() != 0)
    throw std::logic_error("orbit size does not divide the group order");
  const auto perms = as_permutations(group, gens);

  std::vector<E> inverses;
  inverses.reserve(orbit.size());
  for (const auto& u : orbit.transversal)
    inverses.push_back(group.inverse(u));

  std::unordered_set<E, ElementHash> schreier;
  const E id = group.identity();
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const std::size_t j = orbit.find(image_of(perms[s], orbit.blocks[i]));
      E h = group.compose(inverses[j], group.compose(gens[s], orbit.transversal[i]));
      if (h != id)
        schreier.insert(std::move(h));
    }
  }
  std::vector<E> sgens(schreier.begin(), schreier.end());
  std::sort(sgens.begin(), sgens.end());

  Stabilizer<Group> stab;
  stab.order = group_order / orbit.size();
  stab.elements = close_under(group, std::span<const E>(sgens), limits.max_stabilizer);
  if (stab.elements.size() != stab.order)
    throw std::logic_error("stabilizer closure has " + std::to_string(stab.elements.size()) +
                           " elements, expected " + std::to_string(stab.order));
  return stab;
}

template <class Group>
Stabilizer<Group> stabilizer(const Group& group,
                             std::span<const typename Group::element_type> gens,
                             std::uint64_t group_order, const Block& base,
                             const Limits& limits = {})
{
  return stabilizer(group, gens, group_order, orbit_of_block(group, gens, base, limits), limits);
}

/// The permutations a set of block-fixing elements induce on the block's points,
/// given as position maps: perm[i] = position of g(block[i]) in block.
struct BlockAction {
  std::vector<std::vector<std::uint8_t>> permutations; // sorted, distinct
  bool full_symmetric = false;
  bool transitive = false;

  std::size_t size() const { return permutations.size(); }
};

BlockAction block_action(std::span<const Permutation> elements, const Block& block);

template <class Group>
BlockAction block_action(const Group& group,
                         std::span<const typename Group::element_type> elements,
                         const Block& block)
{
  std::vector<Permutation> perms;
  perms.reserve(elements.size());
  for (const auto& g : elements) {
    Permutation p(block.size());
    for (std::size_t i = 0; i < block.size(); ++i)
      p[i] = group.apply(g, block[i]);
    perms.push_back(std::move(p));
  }
  // Permutations given only on the block's points; block_action indexes by point.
  std::vector<Permutation> full;
  full.reserve(perms.size());
  for (auto& p : perms) {
    Permutation f(group.degree());
    std::iota(f.begin(), f.end(), 0);
    for (std::size_t i = 0; i < block.size(); ++i)
      f[block[i]] = p[i];
    full.push_back(std::move(f));
  }
  return block_action(std::span<const Permutation>(full), block);
}

/// Partition of all k-subsets of [0, v) into orbits of the group generated by
/// point permutations.
struct SubsetOrbits {
  Point v = 0;
  std::size_t k = 0;
  /// Each orbit sorted; orbits ordered by their least member.
  std::vector<std::vector<Block>> orbits;
  /// Orbit id indexed by colexicographic rank.
  std::vector<std::uint32_t> orbit_of_rank;

  std::uint32_t orbit_id(std::span<const Point> block) const
  {
    return orbit_of_rank[colex_rank(block)];
  }
};

/// Throws ResourceError if C(v, k) exceeds limits.max_subsets.
SubsetOrbits orbits_on_k_subsets(std::span<const Permutation> gens, Point v, std::size_t k,
                                 const Limits& limits = {});

template <class Group>
SubsetOrbits orbits_on_k_subsets(const Group& group,
                                 std::span<const typename Group::element_type> gens,
                                 std::size_t k, const Limits& limits = {})
{
  const auto perms = as_permutations(group, gens);
  return orbits_on_k_subsets(std::span<const Permutation>(perms), group.degree(), k, limits);
}

} // namespace sqs
