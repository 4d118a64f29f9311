#pragma once

#include "sqs/combinatorics.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sqs {

/// A t-(v, k, lambda) incidence structure given by its block list.
///
/// Every block is a strictly increasing list of k indices in [0, v) and the
/// block list is strictly increasing lexicographically. Whether the design
/// property actually holds is checked by verify(), not by construction.
class Design {
public:
  /// Validates the structural invariants; throws DomainError naming the
  /// offending block otherwise.
  Design(Point v, unsigned k, unsigned t, unsigned lambda, std::vector<Block> blocks);

  /// Sorts each block and the block list first. Duplicates are still rejected.
  static Design canonical(Point v, unsigned k, unsigned t, unsigned lambda,
                          std::vector<Block> blocks);

  Point v() const { return v_; }
  unsigned k() const { return k_; }
  unsigned t() const { return t_; }
  unsigned lambda() const { return lambda_; }
  std::size_t b() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }

  bool contains(const Block& block) const;

  friend bool operator==(const Design&, const Design&) = default;

private:
  Point v_;
  unsigned k_, t_, lambda_;
  std::vector<Block> blocks_;
};

struct Violation {
  Block subset;
  std::uint64_t count = 0;
};

struct VerificationReport {
  bool is_valid = false;
  std::uint64_t b = 0;
  /// Number of blocks through each point.
  std::vector<std::uint64_t> replication;
  /// t-subsets covered a number of times other than lambda, sorted, truncated.
  std::vector<Violation> violations;
  /// Total before truncation.
  std::uint64_t violation_count = 0;
  /// b * C(k, t) == lambda * C(v, t)
  bool counting_identity = false;
};

/// Checks that every t-subset lies in exactly lambda blocks. Coverage is
/// counted over the blocks; the counting identity then certifies that no
/// t-subset is missed. Uncovered subsets are only enumerated when some are missing.
VerificationReport verify(const Design& design, std::size_t violation_limit = 100);

/// Blocks through `point` with the point removed and indices above it shifted
/// down by one: a (t-1)-(v-1, k-1, lambda) design when `design` is valid.
Design derived(const Design& design, Point point);

/// Blocks through `point` with the point removed, keeping the original labels.
std::vector<Block> blocks_through(const Design& design, Point point);

/// v >= 4 and v = 2 or 4 (mod 6): the existence condition for SQS(v).
bool hanani_admissible(std::uint64_t v);

struct BlockCount {
  std::uint64_t value = 0; // floor of v(v-1)(v-2)/24
  bool integral = false;
};

/// v(v-1)(v-2)/24, the number of blocks of an SQS(v).
BlockCount sqs_block_count(std::uint64_t v);

/// Canonical text form:
///   DESIGN v=<v> k=<k> t=<t> lambda=<l> b=<b>
/// followed by one line per block, indices separated by single spaces.
std::string write_design(const Design& design);
void write_design(std::ostream& os, const Design& design);

/// Strict inverse of write_design. Throws ParseError with the line number.
Design read_design(std::string_view text);

Design read_design_file(const std::string& path);
void write_design_file(const std::string& path, const Design& design);

} // namespace sqs
