#include "sqs/finite_field.hpp"

#include "sqs/combinatorics.hpp"
#include "sqs/errors.hpp"

#include <numeric>
#include <sstream>

namespace sqs {

namespace {

using Poly = std::vector<std::uint32_t>; // lowest degree first

void trim(Poly& a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// Remainder of a modulo a monic divisor over F_p.
Poly poly_mod(Poly a, const Poly& monic, std::uint32_t p)
{
  trim(a);
  const std::size_t dm = monic.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * monic[i]) % p);
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p)
{
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  for (unsigned deg = 1; deg <= d / 2; ++deg) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < deg; ++i)
      count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly div(deg + 1);
      div[deg] = 1;
      std::uint64_t rest = c;
      for (unsigned i = 0; i < deg; ++i) {
        div[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_mod(f, div, p).empty())
        return false;
    }
  }
  return true;
}

// Lexicographically least (c_{d-1}, ..., c_0) such that x^d + sum c_i x^i is irreducible.
Poly smallest_irreducible(std::uint32_t p, unsigned d)
{
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i)
    count *= p;
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly f(d + 1);
    f[d] = 1;
    std::uint64_t rest = t;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(f, p))
      return f;
  }
  throw DomainError("no irreducible polynomial found"); // unreachable for prime p
}

struct SlowArith {
  std::uint32_t p;
  unsigned d;
  Poly modulus;

  Poly digits(std::uint64_t code) const
  {
    Poly out(d);
    for (unsigned i = 0; i < d; ++i) {
      out[i] = static_cast<std::uint32_t>(code % p);
      code /= p;
    }
    return out;
  }

  std::uint32_t encode(const Poly& a) const
  {
    std::uint64_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;)
      code = code * p + a[i];
    return static_cast<std::uint32_t>(code);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const
  {
    Poly x = digits(a), y = digits(b);
    for (unsigned i = 0; i < d; ++i)
      x[i] = (x[i] + y[i]) % p;
    return encode(x);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
  {
    const Poly x = digits(a), y = digits(b);
    Poly prod(2 * d, 0);
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p);
    Poly r = poly_mod(prod, modulus, p);
    r.resize(d, 0);
    return encode(r);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const
  {
    std::uint32_t result = 1, base = a;
    while (e) {
      if (e & 1)
        result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
};

} // namespace

Field Field::make(std::uint64_t p, unsigned d)
{
  if (!is_prime(p))
    throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (d == 0)
    throw DomainError("field degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < d; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw DomainError("field order " + std::to_string(p) + "^" + std::to_string(d) +
                        " exceeds the supported maximum " + std::to_string(kMaxOrder));
  }

  auto t = std::make_shared<Tables>();
  t->p = static_cast<std::uint32_t>(p);
  t->d = d;
  t->q = static_cast<std::uint32_t>(q);
  t->modulus = smallest_irreducible(t->p, d);

  const SlowArith slow{t->p, d, t->modulus};
  const std::uint64_t n = q - 1;
  const auto factors = prime_factors(n);
  for (std::uint32_t c = 1; c < q; ++c) {
    bool full = true;
    for (auto r : factors)
      if (slow.pow(c, n / r) == 1) {
        full = false;
        break;
      }
    if (full) {
      t->g = c;
      break;
    }
  }

  t->exp.resize(2 * n);
  t->log.assign(q, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    t->exp[i] = t->exp[i + n] = x;
    t->log[x] = static_cast<std::uint32_t>(i);
    x = slow.mul(x, t->g);
  }
  t->zech.resize(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    const Elem s = slow.add(1, t->exp[k]);
    t->zech[k] = s == 0 ? -1 : static_cast<std::int64_t>(t->log[s]);
  }
  t->neg.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly c = slow.digits(a);
    for (auto& ci : c)
      ci = (t->p - ci) % t->p;
    t->neg[a] = slow.encode(c);
  }
  t->frob_exp.resize(d);
  for (unsigned e = 0; e < d; ++e)
    t->frob_exp[e] = n == 0 ? 0 : pow_mod(p, e, n);

  return Field(std::move(t));
}

Elem Field::add(Elem a, Elem b) const
{
  if (a == 0)
    return b;
  if (b == 0)
    return a;
  const std::uint64_t n = t_->q - 1;
  const std::uint64_t la = t_->log[a], lb = t_->log[b];
  const std::int64_t z = t_->zech[(lb + n - la) % n];
  if (z < 0)
    return 0;
  return t_->exp[la + static_cast<std::uint64_t>(z)];
}

Elem Field::inv(Elem a) const
{
  if (a == 0)
    throw DomainError("inverse of zero");
  const std::uint32_t n = t_->q - 1;
  return t_->exp[(n - t_->log[a]) % n];
}

Elem Field::pow(Elem a, std::uint64_t e) const
{
  if (a == 0)
    return e == 0 ? 1 : 0;
  const std::uint64_t n = t_->q - 1;
  const auto l = static_cast<unsigned __int128>(t_->log[a]) * (e % n) % n;
  return t_->exp[static_cast<std::size_t>(l)];
}

Elem Field::frobenius(Elem a, unsigned e) const
{
  if (e >= t_->d)
    throw DomainError("Frobenius exponent must lie in [0, d)");
  if (a == 0)
    return 0;
  const std::uint64_t n = t_->q - 1;
  return t_->exp[(std::uint64_t{t_->log[a]} * t_->frob_exp[e]) % n];
}

bool Field::is_square(Elem a) const
{
  if (a == 0)
    throw DomainError("square class of zero is undefined");
  if (t_->p == 2)
    return true;
  return t_->log[a] % 2 == 0;
}

Elem Field::primitive_sixth_root() const
{
  if ((t_->q - 1) % 6 != 0)
    throw DomainError("no primitive sixth root of unity: 6 does not divide q - 1 = " +
                      std::to_string(t_->q - 1));
  return t_->exp[(t_->q - 1) / 6];
}

Elem Field::smallest_nonsquare() const
{
  if (t_->p == 2)
    throw DomainError("every nonzero element is a square in characteristic 2");
  for (Elem a = 1; a < t_->q; ++a)
    if (!is_square(a))
      return a;
  throw DomainError("no non-square found"); // unreachable for odd q
}

std::uint64_t Field::multiplicative_order(Elem a) const
{
  if (a == 0)
    throw DomainError("zero has no multiplicative order");
  const std::uint64_t n = t_->q - 1;
  const std::uint64_t l = t_->log[a];
  return n / std::gcd(n, l == 0 ? n : l);
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const
{
  std::vector<std::uint32_t> out(t_->d);
  for (unsigned i = 0; i < t_->d; ++i) {
    out[i] = a % t_->p;
    a /= t_->p;
  }
  return out;
}

Elem Field::from_coefficients(const std::vector<std::uint32_t>& coeffs) const
{
  if (coeffs.size() != t_->d)
    throw DomainError("coefficient vector length must equal the field degree");
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= t_->p)
      throw DomainError("coefficient out of range");
    code = code * t_->p + coeffs[i];
  }
  return static_cast<Elem>(code);
}

std::string Field::modulus_string() const
{
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = t_->modulus.size(); i-- > 0;) {
    const auto c = t_->modulus[i];
    if (c == 0)
      continue;
    if (!first)
      os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1)
      os << c;
    os << 'x';
    if (i > 1)
      os << '^' << i;
  }
  return os.str();
}

} // namespace sqs
