#include "sqs/design.hpp"

#include "sqs/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace sqs {

namespace {

std::string block_string(const Block& b)
{
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i)
    s += (i ? "," : "") + std::to_string(b[i]);
  return s + "}";
}

} // namespace

Design::Design(Point v, unsigned k, unsigned t, unsigned lambda, std::vector<Block> blocks)
    : v_(v), k_(k), t_(t), lambda_(lambda), blocks_(std::move(blocks))
{
  if (k == 0 || k > v)
    throw DomainError("block size must lie in [1, v]");
  if (t == 0 || t > k)
    throw DomainError("strength must lie in [1, k]");
  if (lambda == 0)
    throw DomainError("lambda must be positive");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& b = blocks_[i];
    if (b.size() != k)
      throw DomainError("block " + std::to_string(i) + " " + block_string(b) + " does not have " +
                        std::to_string(k) + " points");
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] >= v)
        throw DomainError("block " + std::to_string(i) + " " + block_string(b) +
                          " has an index outside [0, " + std::to_string(v) + ")");
      if (j > 0 && b[j - 1] >= b[j])
        throw DomainError("block " + std::to_string(i) + " " + block_string(b) +
                          " is not strictly increasing");
    }
    if (i > 0 && !(blocks_[i - 1] < b))
      throw DomainError("block " + std::to_string(i) + " " + block_string(b) +
                        (blocks_[i - 1] == b ? " is a duplicate" : " is out of order"));
  }
}

Design Design::canonical(Point v, unsigned k, unsigned t, unsigned lambda,
                         std::vector<Block> blocks)
{
  for (auto& b : blocks)
    std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return Design(v, k, t, lambda, std::move(blocks));
}

bool Design::contains(const Block& block) const
{
  return std::binary_search(blocks_.begin(), blocks_.end(), block);
}

VerificationReport verify(const Design& design, std::size_t violation_limit)
{
  VerificationReport report;
  report.b = design.b();
  report.replication.assign(design.v(), 0);

  std::unordered_map<std::uint64_t, std::uint64_t> coverage;
  coverage.reserve(design.b() * binomial(design.k(), design.t()));
  for (const auto& block : design.blocks()) {
    for (Point x : block)
      ++report.replication[x];
    for (const auto& sub : sub_blocks(block, design.t()))
      ++coverage[colex_rank(sub)];
  }

  const std::uint64_t subsets = binomial(design.v(), design.t());
  const auto lhs = static_cast<unsigned __int128>(design.b()) * binomial(design.k(), design.t());
  const auto rhs = static_cast<unsigned __int128>(design.lambda()) * subsets;
  report.counting_identity = lhs == rhs;

  std::vector<Violation> violations;
  std::vector<std::uint64_t> bad_ranks;
  for (const auto& [rank, count] : coverage)
    if (count != design.lambda())
      bad_ranks.push_back(rank);
  report.violation_count = bad_ranks.size();
  std::sort(bad_ranks.begin(), bad_ranks.end());

  const bool missing = coverage.size() < subsets;
  if (bad_ranks.empty() && !missing) {
    report.is_valid = true;
    return report;
  }

  // Materialize offending subsets in lexicographic order.
  std::vector<Point> subset(design.t());
  for (std::size_t i = 0; i < subset.size(); ++i)
    subset[i] = static_cast<Point>(i);
  report.violation_count = bad_ranks.size() + (subsets - coverage.size());
  do {
    const auto it = coverage.find(colex_rank(subset));
    const std::uint64_t count = it == coverage.end() ? 0 : it->second;
    if (count != design.lambda())
      violations.push_back({subset, count});
  } while (violations.size() < violation_limit && next_subset(subset, design.v()));
  report.violations = std::move(violations);
  return report;
}

std::vector<Block> blocks_through(const Design& design, Point point)
{
  if (point >= design.v())
    throw DomainError("point " + std::to_string(point) + " outside [0, " +
                      std::to_string(design.v()) + ")");
  std::vector<Block> out;
  for (const auto& block : design.blocks()) {
    if (!std::binary_search(block.begin(), block.end(), point))
      continue;
    Block rest;
    rest.reserve(block.size() - 1);
    for (Point x : block)
      if (x != point)
        rest.push_back(x);
    out.push_back(std::move(rest));
  }
  return out;
}

Design derived(const Design& design, Point point)
{
  if (design.t() < 2 || design.k() < 2)
    throw DomainError("derived design needs t >= 2");
  auto blocks = blocks_through(design, point);
  for (auto& block : blocks)
    for (auto& x : block)
      if (x > point)
        --x;
  // Removing one point keeps the relative order of blocks through it.
  return Design(design.v() - 1, design.k() - 1, design.t() - 1, design.lambda(),
                std::move(blocks));
}

bool hanani_admissible(std::uint64_t v)
{
  return v >= 4 && (v % 6 == 2 || v % 6 == 4);
}

BlockCount sqs_block_count(std::uint64_t v)
{
  if (v < 3)
    return {0, true};
  const auto product = static_cast<unsigned __int128>(v) * (v - 1) * (v - 2);
  return {static_cast<std::uint64_t>(product / 24), product % 24 == 0};
}

void write_design(std::ostream& os, const Design& design)
{
  os << "DESIGN v=" << design.v() << " k=" << design.k() << " t=" << design.t()
     << " lambda=" << design.lambda() << " b=" << design.b() << '\n';
  for (const auto& block : design.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i)
        os << ' ';
      os << block[i];
    }
    os << '\n';
  }
}

std::string write_design(const Design& design)
{
  std::ostringstream os;
  write_design(os, design);
  return os.str();
}

namespace {

std::uint64_t parse_number(std::string_view token, std::size_t line)
{
  std::uint64_t value = 0;
  if (token.empty() || (token.size() > 1 && token[0] == '0'))
    throw ParseError(line, "malformed number '" + std::string(token) + "'");
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "malformed number '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_spaces(std::string_view text)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(' ', start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t header_field(std::string_view token, std::string_view key, std::size_t line)
{
  if (token.substr(0, key.size()) != key || token.size() <= key.size() ||
      token[key.size()] != '=')
    throw ParseError(line, "malformed header: expected '" + std::string(key) + "=<n>'");
  return parse_number(token.substr(key.size() + 1), line);
}

} // namespace

Design read_design(std::string_view text)
{
  if (text.find('\r') != std::string_view::npos)
    throw ParseError(0, "carriage return found; design files use LF line endings");
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto pos = text.find('\n', start);
    if (pos == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  if (lines.empty())
    throw ParseError(1, "missing header");

  const auto header = split_spaces(lines[0]);
  if (header.size() != 6 || header[0] != "DESIGN")
    throw ParseError(1, "malformed header: expected 'DESIGN v=<v> k=<k> t=<t> lambda=<l> b=<b>'");
  const auto v = header_field(header[1], "v", 1);
  const auto k = header_field(header[2], "k", 1);
  const auto t = header_field(header[3], "t", 1);
  const auto lambda = header_field(header[4], "lambda", 1);
  const auto b = header_field(header[5], "b", 1);
  if (v == 0 || v > UINT32_MAX || k == 0 || k > v || t == 0 || t > k || lambda == 0 ||
      lambda > UINT32_MAX)
    throw ParseError(1, "header parameters out of range");

  if (lines.size() - 1 != b)
    throw ParseError(lines.size() < b + 1 ? lines.size() + 1 : b + 2,
                     "header declares b=" + std::to_string(b) + " but file has " +
                         std::to_string(lines.size() - 1) + " block lines");

  std::vector<Block> blocks;
  blocks.reserve(b);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tokens = split_spaces(lines[i]);
    if (tokens.size() != k)
      throw ParseError(i + 1, "expected " + std::to_string(k) + " indices");
    Block block;
    block.reserve(k);
    for (const auto tok : tokens) {
      const auto x = parse_number(tok, i + 1);
      if (x >= v)
        throw ParseError(i + 1, "index " + std::to_string(x) + " out of range");
      if (!block.empty() && block.back() >= x)
        throw ParseError(i + 1, "indices not strictly increasing");
      block.push_back(static_cast<Point>(x));
    }
    if (!blocks.empty()) {
      if (blocks.back() == block)
        throw ParseError(i + 1, "duplicate block");
      if (block < blocks.back())
        throw ParseError(i + 1, "block out of lexicographic order");
    }
    blocks.push_back(std::move(block));
  }
  return Design(static_cast<Point>(v), static_cast<unsigned>(k), static_cast<unsigned>(t),
                static_cast<unsigned>(lambda), std::move(blocks));
}

Design read_design_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_design(buffer.str());
}

void write_design_file(const std::string& path, const Design& design)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw DomainError("cannot open '" + path + "' for writing");
  write_design(out, design);
}

} // namespace sqs
