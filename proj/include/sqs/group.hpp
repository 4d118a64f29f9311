#pragma once

#include "sqs/finite_field.hpp"
#include "sqs/projective_geometry.hpp"

#include <array>
#include <compare>
#include <string_view>
#include <vector>

namespace sqs {

enum class Family { PSL, PGL, PSigmaL, PGammaL };

std::string_view family_name(Family f);

/// Accepts psl, pgl, psigmal, pgammal (any case). Throws DomainError otherwise.
Family parse_family(std::string_view name);

/// True if `sub` is contained in `super` in the lattice PSL < PGL, PSigmaL < PGammaL.
bool family_contains(Family super, Family sub);

struct GroupSpec {
  Family family = Family::PSL;
  unsigned n = 2;
  Field field;

  /// PSL_n(q) is simple except for (n, q) = (2, 2) and (2, 3).
  bool socle_simple() const;
};

/// Order of the projective group named by `spec`. Throws ResourceError on overflow.
std::uint64_t group_order(const GroupSpec& spec);

/// A semilinear transformation of PG(1, q): x -> (a x^s + b) / (c x^s + d) with
/// s the Frobenius power `frob`. The matrix (a, b, c, d) is scaled so its first
/// nonzero entry is 1.
struct LineElement {
  std::array<Elem, 4> m{1, 0, 0, 1};
  unsigned frob = 0;

  friend auto operator<=>(const LineElement&, const LineElement&) = default;
};

/// A semilinear transformation of PG(n-1, q): x -> M x^s, with M row-major and
/// scaled so its first nonzero entry is 1.
struct SpaceElement {
  std::vector<Elem> m;
  unsigned frob = 0;

  friend auto operator<=>(const SpaceElement&, const SpaceElement&) = default;
};

/// PGammaL_2(q) acting on the projective line, with infinity indexed as q.
class LineGroup {
public:
  using element_type = LineElement;

  explicit LineGroup(Field field) : field_(std::move(field)) {}

  const Field& field() const { return field_; }
  std::uint32_t degree() const { return field_.order() + 1; }

  LineElement identity() const { return {}; }

  /// Canonically scaled element. Throws DomainError for a singular matrix or
  /// a Frobenius exponent outside [0, d).
  LineElement make(Elem a, Elem b, Elem c, Elem d, unsigned frob = 0) const;

  /// g after h.
  LineElement compose(const LineElement& g, const LineElement& h) const;
  LineElement inverse(const LineElement& g) const;

  Point apply(const LineElement& g, Point x) const;
  LinePoint apply(const LineElement& g, LinePoint x) const
  {
    return LinePoint::from_index(apply(g, x.index(field_.order())), field_.order());
  }

  Elem determinant(const LineElement& g) const;

  /// frob == 0 and the determinant is a square.
  bool in_psl(const LineElement& g) const;

  /// Borel plus Weyl generators for PSL, extended per family:
  /// PGL adds diag(g, 1), PSigmaL adds the Frobenius map, PGammaL adds both.
  std::vector<LineElement> generators(Family family) const;

  /// The extra generator diag(g, 1) of PGL over PSL.
  LineElement pgl_extra() const;
  /// x -> x^p (the identity when d = 1).
  LineElement frobenius_map() const;

private:
  LineElement canonical(std::array<Elem, 4> m, unsigned frob) const;

  Field field_;
};

/// PGammaL_n(q) acting on PG(n-1, q) for n >= 2.
class SpaceGroup {
public:
  using element_type = SpaceElement;

  SpaceGroup(Field field, unsigned n) : space_(std::move(field), n) {}

  const Field& field() const { return space_.field(); }
  const ProjectiveSpace& space() const { return space_; }
  unsigned dimension() const { return space_.dimension(); }
  std::uint32_t degree() const { return space_.size(); }

  SpaceElement identity() const;

  /// Throws DomainError for a singular or wrongly sized matrix.
  SpaceElement make(std::vector<Elem> m, unsigned frob = 0) const;

  /// I + lambda E_ij.
  SpaceElement transvection(unsigned i, unsigned j, Elem lambda) const;

  SpaceElement compose(const SpaceElement& g, const SpaceElement& h) const;
  SpaceElement inverse(const SpaceElement& g) const;

  /// Coordinate-wise Frobenius, then the matrix, then normalization.
  Point apply(const SpaceElement& g, Point x) const;

  /// PSL: all transvections T_ij(g^k), i != j, 0 <= k < d. PGL adds
  /// diag(g, 1, ..., 1); PSigmaL and PGammaL add the Frobenius map.
  std::vector<SpaceElement> generators(Family family) const;

private:
  SpaceElement canonical(std::vector<Elem> m, unsigned frob) const;
  /// Inverse matrix by Gauss-Jordan elimination; empty if singular.
  std::vector<Elem> invert_matrix(const std::vector<Elem>& m) const;

  ProjectiveSpace space_;
};

struct ElementHash {
  std::size_t operator()(const LineElement& g) const noexcept;
  std::size_t operator()(const SpaceElement& g) const noexcept;
};

} // namespace sqs
