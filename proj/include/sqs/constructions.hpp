#pragma once

#include "sqs/design.hpp"
#include "sqs/group.hpp"
#include "sqs/orbits.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sqs {

/// The three SQS families with an almost simple PSL_2(q)-type automorphism group.
///
///  - Ex1: q = 3^d, blocks are the images of F_3 + {inf} under PGL_2(q)
///    (or PSL_2(q) for odd d > 1). Derived designs are the affine lines of AG(d, 3).
///  - Ex2: q = 7 (mod 12), blocks are the images of {0, 1, inf, eps} under
///    PSL_2(q), eps a primitive sixth root of unity.
///  - Ex3: q = 3^(2d), blocks are the two PSL_2(q)-orbits of {0, 1, -1, inf}
///    and {0, a, -a, inf}, a a non-square. As a block set this coincides with
///    Ex1 for the same q; PSL_2(q) splits it into two orbits.
enum class SqsFamily { Ex1, Ex2, Ex3 };

std::string_view family_label(SqsFamily f);

/// A constructed design together with how it was obtained.
struct Construction {
  SqsFamily family;
  Field field;
  Family acting;
  std::vector<Block> base_blocks;
  std::vector<std::size_t> orbit_sizes; // aligned with base_blocks
  Design design;
};

/// acting must be PGL (d >= 2) or PSL (odd d > 1).
Construction build_example1(unsigned d, Family acting, const Limits& limits = {});

/// PSL_2(3^d) for even d is outside the sanctioned range. This only reports
/// whether its orbit of {0, 1, 2, inf} coincides with the PGL_2 orbit.
struct UnsanctionedOrbit {
  std::size_t psl_orbit_size = 0;
  std::size_t pgl_orbit_size = 0;
  bool coincides = false;
};
UnsanctionedOrbit example1_psl_even(unsigned d, const Limits& limits = {});

/// q must be a prime power with q = 7 (mod 12).
Construction build_example2(std::uint64_t q, const Limits& limits = {});

/// q = 3^(2d), d >= 1. The non-square is the smallest non-square code unless given.
Construction build_example3(unsigned d, const Limits& limits = {},
                            std::optional<Elem> nonsquare = std::nullopt);

enum class NonExistence {
  NotAdmissible,       // v is not 2 or 4 mod 6
  OneModTwelve,        // n = 2, q = 1 (mod 12): no S_4 block stabilizer is possible
  OddPointCount,       // n = 3: v = q^2 + q + 1 is odd
  HyperplaneInduction, // n > 3: a hyperplane would carry an SQS for n - 1
  SocleNotSimple,      // (n, q) = (2, 2) or (2, 3)
};

std::string_view reason_label(NonExistence r);

struct FamilyEntry {
  SqsFamily family;
  std::uint64_t q = 0;
  /// Ex1: q = 3^d. Ex3: q = 3^(2d). Zero for Ex2.
  unsigned d = 0;
  Family acting = Family::PSL;
  /// Largest group in the PSL/PGL/PSigmaL/PGammaL lattice the family admits.
  Family max_overgroup = Family::PSL;
  /// Ex1 only: PSL_2(q) alone already generates the block set (odd d > 1).
  bool psl_suffices = false;
};

struct Verdict {
  unsigned n = 0;
  std::uint64_t q = 0;
  std::uint64_t v = 0;
  std::vector<FamilyEntry> families;
  std::optional<NonExistence> reason;

  bool exists() const { return !families.empty(); }
};

/// Formula-driven classification. Throws DomainError if q is not a prime power or n < 2.
Verdict classify(unsigned n, std::uint64_t q);

/// Counts between orbits of 3-subsets (rows) and orbits of 4-subsets (columns):
/// matrix[i][j] is the number of blocks of orbit j containing the
/// representative of orbit i.
struct OrbitIncidence {
  std::vector<Block> row_reps;
  std::vector<std::size_t> row_sizes;
  std::vector<Block> col_reps;
  std::vector<std::size_t> col_sizes;
  std::vector<std::vector<std::uint32_t>> matrix;
};

struct SearchResult {
  unsigned n = 0;
  std::uint64_t q = 0;
  Point v = 0;
  std::uint64_t group_order = 0;
  OrbitIncidence incidence;
  /// Each solution lists 4-orbit ids in increasing order; solutions sorted.
  std::vector<std::vector<std::size_t>> solutions;
  std::vector<Design> designs; // aligned with solutions, all verified
};

/// All 0/1 column selections x with matrix * x = 1. Columns containing an
/// entry above 1 are never selected.
std::vector<std::vector<std::size_t>>
exact_covers(const std::vector<std::vector<std::uint32_t>>& matrix);

/// Every PSL_n(q)-invariant SQS on the points of PG(n-1, q), found as exact
/// covers of the orbit incidence. Throws ResourceError when C(v, 4) exceeds
/// limits.max_subsets.
SearchResult invariant_sqs_search(unsigned n, std::uint64_t q, const Limits& limits = {});

/// Throws DomainError unless every generator permutation maps the block set onto itself.
void require_invariant(std::span<const Permutation> gens, const Design& design);
bool is_invariant(std::span<const Permutation> gens, const Design& design);

/// Flag-transitivity of the group generated by `gens` on an invariant design:
/// one block orbit covering all blocks, and a block stabilizer transitive on
/// the block's points. Throws DomainError if the block set is not invariant.
template <class Group>
bool is_flag_transitive(const Group& group,
                        std::span<const typename Group::element_type> gens,
                        std::uint64_t group_order, const Design& design,
                        const Limits& limits = {})
{
  const auto perms = as_permutations(group, gens);
  require_invariant(perms, design);
  if (design.b() == 0)
    return false;
  const auto orbit = orbit_of_block(group, gens, design.blocks().front(), limits);
  if (orbit.size() != design.b())
    return false;
  const auto stab = stabilizer(group, gens, group_order, orbit, limits);
  return block_action(group, std::span<const typename Group::element_type>(stab.elements),
                      design.blocks().front())
      .transitive;
}

struct OvergroupReport {
  bool pgl_extra_preserves = false;
  bool frobenius_preserves = false;
  /// d = 1: the Frobenius map is the identity and PSigmaL coincides with PSL.
  bool frobenius_trivial = false;
  Family maximal = Family::PSL;
};

/// Which of diag(g, 1) and the Frobenius map preserve a PSL_2(q)-invariant
/// design on PG(1, q). Throws DomainError if the design is not PSL_2(q)-invariant.
OvergroupReport preserving_overgroups(const Design& design, const Field& field);

/// (3^(2d))^2 = 1 (mod 16).
bool q_square_mod16_check(unsigned d);

} // namespace sqs
