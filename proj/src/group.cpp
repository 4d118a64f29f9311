#include "sqs/group.hpp"

#include "sqs/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

namespace sqs {

std::string_view family_name(Family f)
{
  switch (f) {
  case Family::PSL:
    return "PSL";
  case Family::PGL:
    return "PGL";
  case Family::PSigmaL:
    return "PSigmaL";
  case Family::PGammaL:
    return "PGammaL";
  }
  return "?";
}

Family parse_family(std::string_view name)
{
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "psl")
    return Family::PSL;
  if (lower == "pgl")
    return Family::PGL;
  if (lower == "psigmal")
    return Family::PSigmaL;
  if (lower == "pgammal")
    return Family::PGammaL;
  throw DomainError("unknown group family '" + std::string(name) +
                    "' (expected psl, pgl, psigmal or pgammal)");
}

bool family_contains(Family super, Family sub)
{
  if (super == sub || sub == Family::PSL || super == Family::PGammaL)
    return true;
  return false;
}

bool GroupSpec::socle_simple() const
{
  const auto q = field.order();
  return !(n == 2 && (q == 2 || q == 3));
}

std::uint64_t group_order(const GroupSpec& spec)
{
  using u128 = unsigned __int128;
  const u128 max = ~u128{0};
  const auto checked_mul = [max](u128 a, u128 b) {
    if (b != 0 && a > max / b)
      throw ResourceError("group order overflows");
    return a * b;
  };
  const u128 q = spec.field.order();
  const unsigned d = spec.field.degree();
  u128 qn = 1;
  for (unsigned i = 0; i < spec.n; ++i)
    qn = checked_mul(qn, q);
  // |GL_n(q)| = prod_{i<n} (q^n - q^i)
  u128 gl = 1, qi = 1;
  for (unsigned i = 0; i < spec.n; ++i) {
    gl = checked_mul(gl, qn - qi);
    qi *= q;
  }
  const u128 pgl = gl / (q - 1);
  const auto center = std::gcd(std::uint64_t{spec.n}, static_cast<std::uint64_t>(q - 1));
  u128 order = 0;
  switch (spec.family) {
  case Family::PSL:
    order = pgl / center;
    break;
  case Family::PGL:
    order = pgl;
    break;
  case Family::PSigmaL:
    order = pgl / center * d;
    break;
  case Family::PGammaL:
    order = pgl * d;
    break;
  }
  if (order > UINT64_MAX)
    throw ResourceError("group order overflows 64 bits");
  return static_cast<std::uint64_t>(order);
}

// ---------------------------------------------------------------- LineGroup

LineElement LineGroup::canonical(std::array<Elem, 4> m, unsigned frob) const
{
  const auto lead = std::find_if(m.begin(), m.end(), [](Elem x) { return x != 0; });
  const Elem scale = field_.inv(*lead);
  for (auto& x : m)
    x = field_.mul(x, scale);
  return {m, frob};
}

LineElement LineGroup::make(Elem a, Elem b, Elem c, Elem d, unsigned frob) const
{
  for (Elem x : {a, b, c, d})
    if (!field_.contains(x))
      throw DomainError("matrix entry is not a field element");
  if (frob >= field_.degree())
    throw DomainError("Frobenius exponent must lie in [0, d)");
  if (field_.sub(field_.mul(a, d), field_.mul(b, c)) == 0)
    throw DomainError("singular matrix");
  return canonical({a, b, c, d}, frob);
}

LineElement LineGroup::compose(const LineElement& g, const LineElement& h) const
{
  const auto& f = field_;
  std::array<Elem, 4> t;
  for (int i = 0; i < 4; ++i)
    t[i] = f.frobenius(h.m[i], g.frob);
  const auto& a = g.m;
  return canonical({f.add(f.mul(a[0], t[0]), f.mul(a[1], t[2])),
                    f.add(f.mul(a[0], t[1]), f.mul(a[1], t[3])),
                    f.add(f.mul(a[2], t[0]), f.mul(a[3], t[2])),
                    f.add(f.mul(a[2], t[1]), f.mul(a[3], t[3]))},
                   (g.frob + h.frob) % f.degree());
}

LineElement LineGroup::inverse(const LineElement& g) const
{
  const auto& f = field_;
  const unsigned e = (f.degree() - g.frob) % f.degree();
  // Adjugate; scaling is absorbed by canonicalization.
  std::array<Elem, 4> adj{g.m[3], f.neg(g.m[1]), f.neg(g.m[2]), g.m[0]};
  for (auto& x : adj)
    x = f.frobenius(x, e);
  return canonical(adj, e);
}

Point LineGroup::apply(const LineElement& g, Point x) const
{
  const auto& f = field_;
  const std::uint32_t q = f.order();
  const auto& [a, b, c, d] = g.m;
  if (x == q)
    return c == 0 ? q : f.div(a, c);
  const Elem xs = f.frobenius(x, g.frob);
  const Elem den = f.add(f.mul(c, xs), d);
  if (den == 0)
    return q;
  return f.div(f.add(f.mul(a, xs), b), den);
}

Elem LineGroup::determinant(const LineElement& g) const
{
  return field_.sub(field_.mul(g.m[0], g.m[3]), field_.mul(g.m[1], g.m[2]));
}

bool LineGroup::in_psl(const LineElement& g) const
{
  return g.frob == 0 && field_.is_square(determinant(g));
}

LineElement LineGroup::pgl_extra() const
{
  return make(field_.primitive(), 0, 0, 1);
}

LineElement LineGroup::frobenius_map() const
{
  return make(1, 0, 0, 1, 1 % field_.degree());
}

std::vector<LineElement> LineGroup::generators(Family family) const
{
  const Elem g = field_.primitive();
  std::vector<LineElement> gens{
      make(1, 1, 0, 1),
      make(g, 0, 0, field_.inv(g)),
      make(0, 1, field_.minus_one(), 0),
  };
  if (family == Family::PGL || family == Family::PGammaL)
    gens.push_back(pgl_extra());
  if (family == Family::PSigmaL || family == Family::PGammaL)
    gens.push_back(frobenius_map());
  return gens;
}

// --------------------------------------------------------------- SpaceGroup

SpaceElement SpaceGroup::identity() const
{
  const unsigned n = dimension();
  std::vector<Elem> m(n * n, 0);
  for (unsigned i = 0; i < n; ++i)
    m[i * n + i] = 1;
  return {std::move(m), 0};
}

SpaceElement SpaceGroup::canonical(std::vector<Elem> m, unsigned frob) const
{
  const auto lead = std::find_if(m.begin(), m.end(), [](Elem x) { return x != 0; });
  const Elem scale = field().inv(*lead);
  for (auto& x : m)
    x = field().mul(x, scale);
  return {std::move(m), frob};
}

std::vector<Elem> SpaceGroup::invert_matrix(const std::vector<Elem>& m) const
{
  const auto& f = field();
  const unsigned n = dimension();
  std::vector<Elem> a = m;
  std::vector<Elem> inv(n * n, 0);
  for (unsigned i = 0; i < n; ++i)
    inv[i * n + i] = 1;
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && a[pivot * n + col] == 0)
      ++pivot;
    if (pivot == n)
      return {};
    for (unsigned j = 0; j < n; ++j) {
      std::swap(a[pivot * n + j], a[col * n + j]);
      std::swap(inv[pivot * n + j], inv[col * n + j]);
    }
    const Elem s = f.inv(a[col * n + col]);
    for (unsigned j = 0; j < n; ++j) {
      a[col * n + j] = f.mul(a[col * n + j], s);
      inv[col * n + j] = f.mul(inv[col * n + j], s);
    }
    for (unsigned r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0)
        continue;
      const Elem factor = a[r * n + col];
      for (unsigned j = 0; j < n; ++j) {
        a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
        inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
      }
    }
  }
  return inv;
}

SpaceElement SpaceGroup::make(std::vector<Elem> m, unsigned frob) const
{
  const unsigned n = dimension();
  if (m.size() != std::size_t{n} * n)
    throw DomainError("matrix must have n*n entries");
  for (Elem x : m)
    if (!field().contains(x))
      throw DomainError("matrix entry is not a field element");
  if (frob >= field().degree())
    throw DomainError("Frobenius exponent must lie in [0, d)");
  if (invert_matrix(m).empty())
    throw DomainError("singular matrix");
  return canonical(std::move(m), frob);
}

SpaceElement SpaceGroup::transvection(unsigned i, unsigned j, Elem lambda) const
{
  const unsigned n = dimension();
  if (i == j || i >= n || j >= n)
    throw DomainError("transvection needs distinct indices below n");
  auto t = identity();
  t.m[i * n + j] = lambda;
  return canonical(std::move(t.m), 0);
}

SpaceElement SpaceGroup::compose(const SpaceElement& g, const SpaceElement& h) const
{
  const auto& f = field();
  const unsigned n = dimension();
  std::vector<Elem> out(n * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      const Elem gik = g.m[i * n + k];
      if (gik == 0)
        continue;
      for (unsigned j = 0; j < n; ++j)
        out[i * n + j] = f.add(out[i * n + j], f.mul(gik, f.frobenius(h.m[k * n + j], g.frob)));
    }
  return canonical(std::move(out), (g.frob + h.frob) % f.degree());
}

SpaceElement SpaceGroup::inverse(const SpaceElement& g) const
{
  const auto& f = field();
  const unsigned e = (f.degree() - g.frob) % f.degree();
  auto inv = invert_matrix(g.m);
  for (auto& x : inv)
    x = f.frobenius(x, e);
  return canonical(std::move(inv), e);
}

Point SpaceGroup::apply(const SpaceElement& g, Point x) const
{
  const auto& f = field();
  const unsigned n = dimension();
  const auto coords = space_.point(x);
  std::vector<Elem> twisted(n), image(n, 0);
  for (unsigned i = 0; i < n; ++i)
    twisted[i] = f.frobenius(coords[i], g.frob);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      image[i] = f.add(image[i], f.mul(g.m[i * n + j], twisted[j]));
  return space_.index_of_raw(image);
}

std::vector<SpaceElement> SpaceGroup::generators(Family family) const
{
  const auto& f = field();
  const unsigned n = dimension();
  std::vector<SpaceElement> gens;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i == j)
        continue;
      for (unsigned k = 0; k < f.degree(); ++k)
        gens.push_back(transvection(i, j, f.pow(f.primitive(), k)));
    }
  if (family == Family::PGL || family == Family::PGammaL) {
    auto diag = identity();
    diag.m[0] = f.primitive();
    gens.push_back(make(std::move(diag.m)));
  }
  if (family == Family::PSigmaL || family == Family::PGammaL)
    gens.push_back(make(identity().m, 1 % f.degree()));
  return gens;
}

// ------------------------------------------------------------------ hashing

namespace {

inline void mix(std::size_t& seed, std::size_t v)
{
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

} // namespace

std::size_t ElementHash::operator()(const LineElement& g) const noexcept
{
  std::size_t seed = g.frob;
  for (Elem x : g.m)
    mix(seed, x);
  return seed;
}

std::size_t ElementHash::operator()(const SpaceElement& g) const noexcept
{
  std::size_t seed = g.frob;
  for (Elem x : g.m)
    mix(seed, x);
  return seed;
}

} // namespace sqs
