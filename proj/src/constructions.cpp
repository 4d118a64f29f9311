#include "sqs/constructions.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_map>

namespace sqs {

namespace {

std::uint64_t power_of_three(unsigned e)
{
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= 3;
    if (q > Field::kMaxOrder)
      throw DomainError("3^" + std::to_string(e) + " exceeds the supported field order");
  }
  return q;
}

Block sorted_block(std::initializer_list<Point> points)
{
  Block b(points);
  std::sort(b.begin(), b.end());
  return b;
}

// Union of PSL/PGL orbits of the given base blocks; orbits must be disjoint.
Construction orbit_construction(SqsFamily family, const Field& field, Family acting,
                                std::vector<Block> bases, const Limits& limits)
{
  const LineGroup group(field);
  const auto gens = group.generators(acting);
  const std::uint32_t v = group.degree();

  std::vector<Block> all;
  std::vector<std::size_t> sizes;
  for (const auto& base : bases) {
    auto orbit = orbit_of_block(group, std::span<const LineElement>(gens), base, limits);
    sizes.push_back(orbit.size());
    all.insert(all.end(), std::make_move_iterator(orbit.blocks.begin()),
               std::make_move_iterator(orbit.blocks.end()));
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::logic_error("base block orbits are not disjoint");
  return Construction{family, field, acting, std::move(bases), std::move(sizes),
                      Design(v, 4, 3, 1, std::move(all))};
}

} // namespace

std::string_view family_label(SqsFamily f)
{
  switch (f) {
  case SqsFamily::Ex1:
    return "ex1";
  case SqsFamily::Ex2:
    return "ex2";
  case SqsFamily::Ex3:
    return "ex3";
  }
  return "?";
}

std::string_view reason_label(NonExistence r)
{
  switch (r) {
  case NonExistence::NotAdmissible:
    return "not-admissible";
  case NonExistence::OneModTwelve:
    return "q-one-mod-twelve";
  case NonExistence::OddPointCount:
    return "odd-point-count";
  case NonExistence::HyperplaneInduction:
    return "hyperplane-induction";
  case NonExistence::SocleNotSimple:
    return "socle-not-simple";
  }
  return "?";
}

Construction build_example1(unsigned d, Family acting, const Limits& limits)
{
  if (acting == Family::PGL) {
    if (d < 2)
      throw DomainError("ex1 with PGL requires d >= 2 (q = 3^d >= 9)");
  } else if (acting == Family::PSL) {
    if (d <= 1 || d % 2 == 0)
      throw DomainError("ex1 with PSL requires odd d > 1 (q = 3^d with d odd)");
  } else {
    throw DomainError("ex1 is generated by PGL or PSL");
  }
  const auto q = static_cast<Point>(power_of_three(d));
  const Field field = Field::make(3, d);
  return orbit_construction(SqsFamily::Ex1, field, acting, {Block{0, 1, 2, q}}, limits);
}

UnsanctionedOrbit example1_psl_even(unsigned d, const Limits& limits)
{
  if (d < 2 || d % 2 != 0)
    throw DomainError("the unsanctioned PSL run is for even d >= 2");
  const auto q = static_cast<Point>(power_of_three(d));
  const LineGroup group(Field::make(3, d));
  const Block base{0, 1, 2, q};
  const auto psl = group.generators(Family::PSL);
  const auto pgl = group.generators(Family::PGL);
  const auto a = orbit_of_block(group, std::span<const LineElement>(psl), base, limits);
  const auto b = orbit_of_block(group, std::span<const LineElement>(pgl), base, limits);
  return {a.size(), b.size(), a.blocks == b.blocks};
}

Construction build_example2(std::uint64_t q, const Limits& limits)
{
  const auto pp = prime_power(q);
  if (!pp)
    throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  if (q % 12 != 7)
    throw DomainError("q = 7 (mod 12) required (got q = " + std::to_string(q) + ")");
  const Field field = Field::make(pp->first, pp->second);
  const Elem eps = field.primitive_sixth_root();
  return orbit_construction(SqsFamily::Ex2, field, Family::PSL,
                            {sorted_block({0, 1, eps, static_cast<Point>(q)})}, limits);
}

Construction build_example3(unsigned d, const Limits& limits, std::optional<Elem> nonsquare)
{
  if (d < 1)
    throw DomainError("ex3 requires d >= 1 (q = 3^(2d))");
  const auto q = static_cast<Point>(power_of_three(2 * d));
  const Field field = Field::make(3, 2 * d);
  const Elem a = nonsquare.value_or(field.smallest_nonsquare());
  if (!field.contains(a) || a == 0 || field.is_square(a))
    throw DomainError("ex3 needs a non-square field element");
  // Second base block: the image of {0, 1, -1, inf} under x -> a x. The
  // literal {0, 1, a, inf} has cross-ratio a != -1 and is not a circle.
  const Elem minus_a = field.neg(a);
  auto c = orbit_construction(
      SqsFamily::Ex3, field, Family::PSL,
      {sorted_block({0, 1, field.minus_one(), q}), sorted_block({0, a, minus_a, q})}, limits);
  if (c.orbit_sizes[0] != c.orbit_sizes[1])
    throw std::logic_error("ex3 block orbits differ in length");
  return c;
}

Verdict classify(unsigned n, std::uint64_t q)
{
  if (n < 2)
    throw DomainError("n must be at least 2");
  if (!prime_power(q))
    throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  Verdict verdict;
  verdict.n = n;
  verdict.q = q;
  verdict.v = point_count(n, q);

  if (n == 2 && (q == 2 || q == 3)) {
    verdict.reason = NonExistence::SocleNotSimple;
    return verdict;
  }
  if (n == 3) {
    verdict.reason = NonExistence::OddPointCount;
    return verdict;
  }
  if (n > 3) {
    verdict.reason = NonExistence::HyperplaneInduction;
    return verdict;
  }
  if (!hanani_admissible(verdict.v)) {
    verdict.reason = NonExistence::NotAdmissible;
    return verdict;
  }
  if (q % 12 == 1) {
    verdict.reason = NonExistence::OneModTwelve;
    return verdict;
  }
  // Admissible v = q + 1 leaves q = 3 (mod 6), a power of three, or q = 7 (mod 12).
  if (q % 3 == 0) {
    const unsigned e = prime_power(q)->second;
    FamilyEntry ex1{SqsFamily::Ex1, q, e, Family::PGL, Family::PGammaL, e % 2 == 1};
    verdict.families.push_back(ex1);
    if (e % 2 == 0)
      verdict.families.push_back({SqsFamily::Ex3, q, e / 2, Family::PSL, Family::PSigmaL, false});
  } else if (q % 12 == 7) {
    verdict.families.push_back({SqsFamily::Ex2, q, 0, Family::PSL, Family::PSigmaL, false});
  }
  return verdict;
}

std::vector<std::vector<std::size_t>>
exact_covers(const std::vector<std::vector<std::uint32_t>>& matrix)
{
  const std::size_t rows = matrix.size();
  const std::size_t cols = rows ? matrix[0].size() : 0;
  std::vector<bool> usable(cols, true);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (matrix[i][j] > 1)
        usable[j] = false;

  std::vector<std::vector<std::size_t>> solutions;
  std::vector<std::uint32_t> cover(rows, 0);
  std::vector<std::size_t> chosen;

  // Branch on the first uncovered row; each solution covers it by exactly one
  // column, so every solution is produced once.
  std::function<void()> search = [&] {
    std::size_t r = 0;
    while (r < rows && cover[r] != 0)
      ++r;
    if (r == rows) {
      auto s = chosen;
      std::sort(s.begin(), s.end());
      solutions.push_back(std::move(s));
      return;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (!usable[j] || matrix[r][j] != 1)
        continue;
      bool fits = true;
      for (std::size_t i = 0; i < rows && fits; ++i)
        fits = cover[i] + matrix[i][j] <= 1;
      if (!fits)
        continue;
      for (std::size_t i = 0; i < rows; ++i)
        cover[i] += matrix[i][j];
      chosen.push_back(j);
      search();
      chosen.pop_back();
      for (std::size_t i = 0; i < rows; ++i)
        cover[i] -= matrix[i][j];
    }
  };
  if (rows > 0)
    search();
  std::sort(solutions.begin(), solutions.end());
  return solutions;
}

namespace {

OrbitIncidence build_incidence(const SubsetOrbits& triples, const SubsetOrbits& quads)
{
  OrbitIncidence inc;
  const std::size_t rows = triples.orbits.size();
  const std::size_t cols = quads.orbits.size();
  for (const auto& o : triples.orbits) {
    inc.row_reps.push_back(o.front());
    inc.row_sizes.push_back(o.size());
  }
  for (const auto& o : quads.orbits) {
    inc.col_reps.push_back(o.front());
    inc.col_sizes.push_back(o.size());
  }

  // Count for up to three representatives per row (first, middle, last) to
  // confirm the counts do not depend on the representative.
  std::unordered_map<std::uint64_t, std::pair<std::size_t, std::size_t>> samples;
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& o = triples.orbits[i];
    const std::size_t picks[3] = {0, o.size() / 2, o.size() - 1};
    for (std::size_t s = 0; s < 3; ++s)
      samples.emplace(colex_rank(o[picks[s]]), std::make_pair(i, s));
  }
  std::vector<std::vector<std::array<std::uint32_t, 3>>> counts(
      rows, std::vector<std::array<std::uint32_t, 3>>(cols, {0, 0, 0}));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& block : quads.orbits[j])
      for (const auto& sub : sub_blocks(block, 3)) {
        const auto it = samples.find(colex_rank(sub));
        if (it != samples.end())
          ++counts[it->second.first][j][it->second.second];
      }

  inc.matrix.assign(rows, std::vector<std::uint32_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& o = triples.orbits[i];
    const std::size_t picks[3] = {0, o.size() / 2, o.size() - 1};
    for (std::size_t j = 0; j < cols; ++j) {
      inc.matrix[i][j] = counts[i][j][0];
      for (std::size_t s = 1; s < 3; ++s)
        if (o[picks[s]] != o[picks[0]] && counts[i][j][s] != counts[i][j][0])
          throw std::logic_error("orbit incidence depends on the row representative");
    }
  }
  for (std::size_t j = 0; j < cols; ++j) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < rows; ++i)
      total += std::uint64_t{inc.matrix[i][j]} * inc.row_sizes[i];
    if (total != 4 * inc.col_sizes[j])
      throw std::logic_error("orbit incidence column " + std::to_string(j) +
                             " fails the counting check");
  }
  return inc;
}

template <class Group>
SearchResult run_search(const Group& group, unsigned n, std::uint64_t q, const Limits& limits)
{
  SearchResult result;
  result.n = n;
  result.q = q;
  result.v = group.degree();
  if (result.v < 4)
    throw DomainError("fewer than four points");
  result.group_order = group_order(GroupSpec{Family::PSL, n, group.field()});

  const auto gens = group.generators(Family::PSL);
  const auto perms = as_permutations(group, std::span<const typename Group::element_type>(gens));
  const auto triples = orbits_on_k_subsets(std::span<const Permutation>(perms), result.v, 3, limits);
  const auto quads = orbits_on_k_subsets(std::span<const Permutation>(perms), result.v, 4, limits);
  result.incidence = build_incidence(triples, quads);
  result.solutions = exact_covers(result.incidence.matrix);

  for (const auto& sol : result.solutions) {
    std::vector<Block> blocks;
    for (std::size_t j : sol)
      blocks.insert(blocks.end(), quads.orbits[j].begin(), quads.orbits[j].end());
    auto design = Design::canonical(result.v, 4, 3, 1, std::move(blocks));
    if (!verify(design).is_valid)
      throw std::logic_error("exact cover produced a design that fails verification");
    result.designs.push_back(std::move(design));
  }
  return result;
}

} // namespace

SearchResult invariant_sqs_search(unsigned n, std::uint64_t q, const Limits& limits)
{
  if (n < 2)
    throw DomainError("n must be at least 2");
  const auto pp = prime_power(q);
  if (!pp)
    throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  const Field field = Field::make(pp->first, pp->second);
  const std::uint64_t v = point_count(n, q);
  if (v < 4)
    throw DomainError("fewer than four points");
  if (v > 0xFFFF || binomial(v, 4) > limits.max_subsets)
    throw ResourceError("C(" + std::to_string(v) + ", 4) exceeds the configured cap of " +
                        std::to_string(limits.max_subsets));
  if (n == 2)
    return run_search(LineGroup(field), n, q, limits);
  return run_search(SpaceGroup(field, n), n, q, limits);
}

bool is_invariant(std::span<const Permutation> gens, const Design& design)
{
  for (const auto& perm : gens) {
    if (perm.size() != design.v())
      return false;
    for (const auto& block : design.blocks())
      if (!design.contains(image_of(perm, block)))
        return false;
  }
  return true;
}

void require_invariant(std::span<const Permutation> gens, const Design& design)
{
  if (!is_invariant(gens, design))
    throw DomainError("block set is not invariant under the group");
}

OvergroupReport preserving_overgroups(const Design& design, const Field& field)
{
  const LineGroup group(field);
  if (design.v() != group.degree())
    throw DomainError("design does not live on the projective line over GF(" +
                      std::to_string(field.order()) + ")");
  const auto psl = group.generators(Family::PSL);
  require_invariant(as_permutations(group, std::span<const LineElement>(psl)), design);

  OvergroupReport report;
  const Permutation pgl_extra = as_permutation(group, group.pgl_extra());
  const Permutation frob = as_permutation(group, group.frobenius_map());
  report.pgl_extra_preserves = is_invariant(std::span<const Permutation>(&pgl_extra, 1), design);
  report.frobenius_preserves = is_invariant(std::span<const Permutation>(&frob, 1), design);
  report.frobenius_trivial = field.degree() == 1;

  const bool frob_counts = report.frobenius_preserves && !report.frobenius_trivial;
  if (report.pgl_extra_preserves)
    report.maximal = frob_counts ? Family::PGammaL : Family::PGL;
  else
    report.maximal = frob_counts ? Family::PSigmaL : Family::PSL;
  return report;
}

bool q_square_mod16_check(unsigned d)
{
  if (d < 1)
    throw DomainError("d must be at least 1");
  // q^2 = 3^(4d)
  return pow_mod(3, 4 * std::uint64_t{d}, 16) == 1;
}

} // namespace sqs
