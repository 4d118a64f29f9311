#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sqs {

/// Canonical code of an element of GF(p^d): the polynomial sum c_i x^i
/// (reduced modulo the field's modulus) is encoded as sum c_i p^i.
/// Code 0 is zero and code 1 is one.
using Elem = std::uint32_t;

/// The finite field GF(p^d) with a deterministic modulus and primitive element.
///
/// The modulus is the monic irreducible polynomial of degree d whose
/// coefficient tuple (c_{d-1}, ..., c_0) is lexicographically smallest. The
/// primitive element is the smallest code of multiplicative order q - 1.
/// Both choices depend only on (p, d), so element codes are reproducible.
///
/// A Field is an immutable handle; copies share the arithmetic tables.
class Field {
public:
  /// Largest supported order. Arithmetic is table-driven, so tables scale with q.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// Throws DomainError for a non-prime p, d == 0, or p^d above kMaxOrder.
  static Field make(std::uint64_t p, unsigned d);

  std::uint32_t characteristic() const { return t_->p; }
  unsigned degree() const { return t_->d; }
  std::uint32_t order() const { return t_->q; }

  /// Monic modulus, lowest degree first (size d + 1).
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
  Elem primitive() const { return t_->g; }

  bool contains(Elem a) const { return a < t_->q; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const { return t_->neg[a]; }
  Elem mul(Elem a, Elem b) const
  {
    if (a == 0 || b == 0)
      return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
  }
  /// Throws DomainError for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// a^(p^e) for 0 <= e < d; throws DomainError otherwise.
  Elem frobenius(Elem a, unsigned e) const;

  /// Quadratic character of a nonzero element. Every nonzero element is a
  /// square when q is even. Throws DomainError for a == 0.
  bool is_square(Elem a) const;

  /// g^((q-1)/6); throws DomainError unless 6 divides q - 1.
  Elem primitive_sixth_root() const;

  /// Smallest nonzero code that is not a square; throws DomainError for even q.
  Elem smallest_nonsquare() const;

  Elem minus_one() const { return neg(1); }

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Elem a) const;

  /// Base-p digits of a code, lowest first (size d).
  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

  /// Human-readable modulus, e.g. "x^2 + 1".
  std::string modulus_string() const;

  friend bool operator==(const Field& a, const Field& b)
  {
    return a.t_->p == b.t_->p && a.t_->d == b.t_->d;
  }

private:
  struct Tables {
    std::uint32_t p = 0;
    unsigned d = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    Elem g = 0;
    std::vector<Elem> exp;               // g^i for i in [0, 2(q-1))
    std::vector<std::uint32_t> log;      // log[0] unused
    std::vector<std::int64_t> zech;      // log(1 + g^k), -1 when 1 + g^k == 0
    std::vector<Elem> neg;
    std::vector<std::uint64_t> frob_exp; // p^e mod (q-1)
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

} // namespace sqs
