#include "sqs/projective_geometry.hpp"

#include "sqs/errors.hpp"

namespace sqs {

std::uint64_t point_count(unsigned n, std::uint64_t q)
{
  if (n < 1 || q < 2)
    throw DomainError("point_count requires n >= 1 and q >= 2");
  unsigned __int128 total = 0, power = 1;
  for (unsigned i = 0; i < n; ++i) {
    total += power;
    power *= q;
    if (total > UINT64_MAX)
      throw ResourceError("point count overflows 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

LinePoint LinePoint::from_index(Point i, std::uint32_t q)
{
  if (i > q)
    throw DomainError("line point index " + std::to_string(i) + " outside [0, " +
                      std::to_string(q) + "]");
  return i == q ? at_infinity() : finite(i);
}

ProjectiveSpace::ProjectiveSpace(Field field, unsigned n) : field_(std::move(field)), n_(n)
{
  if (n < 2)
    throw DomainError("projective space needs n >= 2");
  const std::uint64_t v = point_count(n, field_.order());
  if (v > (std::uint64_t{1} << 24))
    throw DomainError("projective space too large to tabulate");
  size_ = static_cast<std::uint32_t>(v);

  // Enumerate normalized vectors in lexicographic order: pivot positions from
  // last to first, free tail counted in base q.
  const std::uint32_t q = field_.order();
  table_.reserve(std::size_t{size_} * n_);
  for (unsigned pivot = n_; pivot-- > 0;) {
    const unsigned tail = n_ - 1 - pivot;
    std::vector<Elem> vec(n_, 0);
    vec[pivot] = 1;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < tail; ++i)
      count *= q;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::uint64_t rest = c;
      for (unsigned j = n_; j-- > pivot + 1;) {
        vec[j] = static_cast<Elem>(rest % q);
        rest /= q;
      }
      table_.insert(table_.end(), vec.begin(), vec.end());
    }
  }
}

std::vector<Elem> ProjectiveSpace::normalize(std::span<const Elem> raw) const
{
  if (raw.size() != n_)
    throw DomainError("coordinate vector has wrong length");
  std::size_t lead = 0;
  while (lead < raw.size() && raw[lead] == 0)
    ++lead;
  if (lead == raw.size())
    throw DomainError("the zero vector is not a projective point");
  const Elem scale = field_.inv(raw[lead]);
  std::vector<Elem> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    out[i] = field_.mul(raw[i], scale);
  return out;
}

Point ProjectiveSpace::index(std::span<const Elem> normalized) const
{
  if (normalized.size() != n_)
    throw DomainError("coordinate vector has wrong length");
  const std::uint64_t q = field_.order();
  unsigned pivot = 0;
  while (pivot < n_ && normalized[pivot] == 0)
    ++pivot;
  if (pivot == n_ || normalized[pivot] != 1)
    throw DomainError("vector is not normalized");
  // Points with a later pivot come first: (q^(n-1-pivot) - 1) / (q - 1) of them.
  std::uint64_t offset = 0, power = 1;
  for (unsigned i = 0; i < n_ - 1 - pivot; ++i) {
    offset += power;
    power *= q;
  }
  std::uint64_t tail = 0;
  for (unsigned j = pivot + 1; j < n_; ++j) {
    if (normalized[j] >= q)
      throw DomainError("coordinate is not a field element");
    tail = tail * q + normalized[j];
  }
  return static_cast<Point>(offset + tail);
}

Point ProjectiveSpace::index_of_raw(std::span<const Elem> raw) const
{
  return index(normalize(raw));
}

std::span<const Elem> ProjectiveSpace::point(Point i) const
{
  if (i >= size_)
    throw DomainError("point index " + std::to_string(i) + " outside [0, " +
                      std::to_string(size_) + ")");
  return {table_.data() + std::size_t{i} * n_, n_};
}

} // namespace sqs
