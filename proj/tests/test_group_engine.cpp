#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqs/errors.hpp"
#include "sqs/orbits.hpp"

#include <random>
#include <set>

using namespace sqs;

namespace {

template <class G>
std::vector<typename G::element_type> all_elements(const G& group, Family family)
{
  const auto gens = group.generators(family);
  return enumerate_group(group, std::span<const typename G::element_type>(gens));
}

template <class G>
Block image(const G& group, const typename G::element_type& g, const Block& b)
{
  Block out;
  for (Point x : b)
    out.push_back(group.apply(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("line action conventions")
{
  const LineGroup g7(Field::make(7, 1));
  const auto id = g7.identity();
  for (Point x = 0; x <= 7; ++x)
    CHECK(g7.apply(id, x) == x);
  const auto w = g7.make(0, 1, 6, 0); // x -> -1/x
  CHECK(g7.apply(w, 0) == 7);
  CHECK(g7.apply(w, 7) == 0);
  const auto t = g7.make(1, 1, 0, 1);
  CHECK(g7.apply(t, 6) == 0);
  CHECK(g7.apply(t, 7) == 7);
  CHECK(g7.apply(t, LinePoint::at_infinity()) == LinePoint::at_infinity());
  CHECK_THROWS_AS(g7.make(1, 2, 3, 6), DomainError);
}

TEST_CASE("composition agrees with successive application")
{
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{7, 1}, {3, 2}, {3, 3}, {2, 3}}) {
    const LineGroup group(Field::make(p, d));
    const auto gens = group.generators(Family::PGammaL);
    std::mt19937 rng(p * 10 + d);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      auto g = group.identity(), h = group.identity();
      for (int i = 0; i < 6; ++i) {
        g = group.compose(gens[pick(rng)], g);
        h = group.compose(h, gens[pick(rng)]);
      }
      const auto gh = group.compose(g, h);
      const auto inv = group.inverse(g);
      for (Point x = 0; x < group.degree(); ++x) {
        REQUIRE(group.apply(gh, x) == group.apply(g, group.apply(h, x)));
        REQUIRE(group.apply(inv, group.apply(g, x)) == x);
      }
      REQUIRE(group.compose(g, inv) == group.identity());
      // canonical scaling: first nonzero entry is 1
      const auto lead = std::find_if(g.m.begin(), g.m.end(), [](Elem e) { return e != 0; });
      REQUIRE(*lead == 1);
    }
  }
}

TEST_CASE("semilinear composition over GF(9)")
{
  const LineGroup group(Field::make(3, 2));
  const auto m = group.make(3, 1, 1, 0, 1); // x -> (x * x^3 + 1) / x^3
  const auto mm = group.compose(m, m);
  CHECK(mm.frob == 0);
  // x -> M x^s applied twice is M M^s (x^s)^s, and s^2 = 1 over GF(9).
  const auto& f = group.field();
  const auto twisted = group.make(f.frobenius(3, 1), 1, 1, 0);
  const auto plain = group.make(3, 1, 1, 0);
  CHECK(mm == group.compose(plain, twisted));
  for (Point x = 0; x < 10; ++x)
    CHECK(group.apply(mm, x) == group.apply(m, group.apply(m, x)));
}

TEST_CASE("generator sets")
{
  const LineGroup g7(Field::make(7, 1));
  const auto psl = g7.generators(Family::PSL);
  CHECK(psl.size() == 3);
  for (const auto& g : psl)
    CHECK(g7.in_psl(g));
  const LineGroup g9(Field::make(3, 2));
  CHECK(g9.generators(Family::PGL).size() == 4);
  CHECK_FALSE(g9.in_psl(g9.pgl_extra()));

  const SpaceGroup s43(Field::make(3, 1), 4);
  CHECK(s43.generators(Family::PSL).size() == 12);
}

TEST_CASE("group orders: formula against enumeration")
{
  CHECK(group_order({Family::PSL, 2, Field::make(3, 2)}) == 360);
  CHECK(group_order({Family::PGL, 2, Field::make(3, 2)}) == 720);
  CHECK(group_order({Family::PSL, 2, Field::make(7, 1)}) == 168);
  CHECK(group_order({Family::PSL, 4, Field::make(3, 1)}) == 6065280);

  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {13, 1}, {2, 3}}) {
    const Field f = Field::make(p, d);
    const LineGroup group(f);
    for (auto fam : {Family::PSL, Family::PGL, Family::PSigmaL, Family::PGammaL}) {
      CAPTURE(f.order());
      CAPTURE(family_name(fam));
      CHECK(all_elements(group, fam).size() == group_order({fam, 2, f}));
    }
  }
  CHECK(all_elements(LineGroup(Field::make(5, 1)), Family::PSL).size() == 60);
  CHECK(all_elements(LineGroup(Field::make(3, 1)), Family::PGL).size() == 24);
  CHECK(all_elements(LineGroup(Field::make(13, 1)), Family::PSL).size() == 1092);

  // n = 3 over small fields.
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    const Field f = Field::make(p, d);
    const SpaceGroup group(f, 3);
    for (auto fam : {Family::PSL, Family::PGL, Family::PGammaL})
      CHECK(all_elements(group, fam).size() == group_order({fam, 3, f}));
  }
}

TEST_CASE("generators produce the full group for every q <= 81 within the cap")
{
  for (std::uint64_t q = 2; q <= 81; ++q) {
    const auto pp = prime_power(q);
    if (!pp)
      continue;
    const Field f = Field::make(pp->first, pp->second);
    const LineGroup group(f);
    for (auto fam : {Family::PSL, Family::PGL, Family::PSigmaL, Family::PGammaL}) {
      const auto order = group_order({fam, 2, f});
      if (order > 1'000'000)
        continue;
      CAPTURE(q);
      CAPTURE(family_name(fam));
      CHECK(all_elements(group, fam).size() == order);
    }
  }
}

TEST_CASE("PSL membership of enumerated elements")
{
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{7, 1}, {3, 2}, {5, 1}}) {
    const LineGroup group(Field::make(p, d));
    for (const auto& g : all_elements(group, Family::PSL))
      REQUIRE(group.in_psl(g));
  }
}

TEST_CASE("PGL_2(q) is sharply 3-transitive")
{
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}}) {
    const LineGroup group(Field::make(p, d));
    const std::uint64_t q = group.field().order();
    std::set<std::array<Point, 3>> triples;
    for (const auto& g : all_elements(group, Family::PGL))
      triples.insert({group.apply(g, 0), group.apply(g, 1), group.apply(g, q)});
    CHECK(triples.size() == (q + 1) * q * (q - 1));
  }
}

TEST_CASE("space action")
{
  const SpaceGroup group(Field::make(3, 1), 4);
  const auto t = group.transvection(0, 1, 1);
  CHECK(group.apply(t, 0) == 0); // (0,0,0,1) has second coordinate 0
  for (const auto& g : group.generators(Family::PGL)) {
    std::set<Point> images;
    for (Point x = 0; x < group.degree(); ++x)
      images.insert(group.apply(g, x));
    CHECK(images.size() == 40);
  }
  const auto gens = group.generators(Family::PGammaL);
  auto g = group.identity();
  for (int i = 0; i < 20; ++i)
    g = group.compose(gens[(i * 7) % gens.size()], g);
  const auto inv = group.inverse(g);
  for (Point x = 0; x < 40; ++x)
    CHECK(group.apply(inv, group.apply(g, x)) == x);

  const SpaceGroup g94(Field::make(3, 2), 3);
  const auto ggens = g94.generators(Family::PGammaL);
  const auto h = g94.compose(ggens.back(), g94.compose(ggens[1], ggens.back()));
  for (Point x = 0; x < g94.degree(); ++x)
    CHECK(g94.apply(h, x) == g94.apply(ggens.back(), g94.apply(ggens[1], g94.apply(ggens.back(), x))));
}

TEST_CASE("block orbits against the enumerated group")
{
  struct Case {
    unsigned p, d;
    Family fam;
    Block base;
    std::size_t size;
  };
  // q = 9: -1 has code 2, infinity is 9.
  for (const auto& c : std::vector<Case>{{3, 2, Family::PSL, {0, 1, 2, 9}, 15},
                                         {3, 2, Family::PGL, {0, 1, 2, 9}, 30},
                                         {7, 1, Family::PSL, {0, 1, 3, 7}, 14}}) {
    const LineGroup group(Field::make(c.p, c.d));
    const auto gens = group.generators(c.fam);
    const auto orbit = orbit_of_block(group, std::span<const LineElement>(gens), c.base);
    std::set<Block> brute;
    std::size_t fixing = 0;
    for (const auto& g : all_elements(group, c.fam)) {
      const Block b = image(group, g, c.base);
      brute.insert(b);
      fixing += b == c.base;
    }
    CHECK(orbit.size() == c.size);
    CHECK(std::vector<Block>(brute.begin(), brute.end()) == orbit.blocks);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      REQUIRE(image(group, orbit.transversal[i], c.base) == orbit.blocks[i]);

    const auto order = group_order({c.fam, 2, group.field()});
    const auto stab = stabilizer(group, std::span<const LineElement>(gens), order, orbit);
    CHECK(stab.order == fixing);
    CHECK(stab.elements.size() * orbit.size() == order);
    for (const auto& g : stab.elements)
      REQUIRE(image(group, g, c.base) == c.base);
  }

  const LineGroup group(Field::make(7, 1));
  const std::vector<LineElement> only_id{group.identity()};
  const auto trivial = orbit_of_block(group, std::span<const LineElement>(only_id), Block{0, 1, 3, 7});
  CHECK(trivial.blocks == std::vector<Block>{{0, 1, 3, 7}});
  CHECK_THROWS_AS(orbit_of_block(group, std::span<const LineElement>(only_id), Block{3, 1}), DomainError);
  CHECK_THROWS_AS(orbit_of_block(group, std::span<const LineElement>(only_id), Block{1, 9}), DomainError);
}

TEST_CASE("orbit cap")
{
  const LineGroup group(Field::make(3, 2));
  const auto gens = group.generators(Family::PSL);
  Limits tight;
  tight.max_orbit = 5;
  CHECK_THROWS_AS(orbit_of_block(group, std::span<const LineElement>(gens), Block{0, 1, 2, 9}, tight),
                  ResourceError);
  tight.max_group = 10;
  CHECK_THROWS_AS(enumerate_group(group, std::span<const LineElement>(gens), tight), ResourceError);
}

TEST_CASE("stabilizer action on the block")
{
  const LineGroup g9(Field::make(3, 2));
  const auto gens = g9.generators(Family::PSL);
  const Block circle{0, 1, 2, 9};
  const auto stab = stabilizer(g9, std::span<const LineElement>(gens), 360, circle);
  CHECK(stab.order == 24);
  const auto action = block_action(g9, std::span<const LineElement>(stab.elements), circle);
  CHECK(action.size() == 24);
  CHECK(action.full_symmetric);
  CHECK(action.transitive);

  const LineGroup g7(Field::make(7, 1));
  const auto gens7 = g7.generators(Family::PSL);
  const Block b7{0, 1, 3, 7};
  const auto stab7 = stabilizer(g7, std::span<const LineElement>(gens7), 168, b7);
  CHECK(stab7.order == 12);
  const auto action7 = block_action(g7, std::span<const LineElement>(stab7.elements), b7);
  CHECK(action7.size() == 12);
  CHECK_FALSE(action7.full_symmetric);

  const std::vector<LineElement> only_id{g7.identity()};
  CHECK(block_action(g7, std::span<const LineElement>(only_id), b7).size() == 1);
}

TEST_CASE("orbits on k-subsets")
{
  const auto count = [](unsigned p, unsigned d) {
    const LineGroup group(Field::make(p, d));
    const auto gens = group.generators(Family::PSL);
    return orbits_on_k_subsets(group, std::span<const LineElement>(gens), 3);
  };
  const auto o13 = count(13, 1);
  REQUIRE(o13.orbits.size() == 2);
  CHECK(o13.orbits[0].size() == 182);
  CHECK(o13.orbits[1].size() == 182);
  const auto o7 = count(7, 1);
  REQUIRE(o7.orbits.size() == 1);
  CHECK(o7.orbits[0].size() == 56);

  const LineGroup g9(Field::make(3, 2));
  const auto pgl = g9.generators(Family::PGL);
  CHECK(orbits_on_k_subsets(g9, std::span<const LineElement>(pgl), 3).orbits.size() == 1);

  // Partition property, and orbit ids agree with membership.
  for (std::size_t k : {2u, 3u, 4u}) {
    const auto part = orbits_on_k_subsets(g9, std::span<const LineElement>(pgl), k);
    std::size_t total = 0;
    std::set<Block> seen;
    for (std::size_t i = 0; i < part.orbits.size(); ++i) {
      total += part.orbits[i].size();
      REQUIRE(std::is_sorted(part.orbits[i].begin(), part.orbits[i].end()));
      if (i > 0)
        REQUIRE(part.orbits[i - 1].front() < part.orbits[i].front());
      for (const auto& b : part.orbits[i]) {
        REQUIRE(seen.insert(b).second);
        REQUIRE(part.orbit_id(b) == i);
      }
    }
    CHECK(total == binomial(10, k));
  }

  Limits tight;
  tight.max_subsets = 100;
  CHECK_THROWS_AS(orbits_on_k_subsets(g9, std::span<const LineElement>(pgl), 4, tight), ResourceError);
}

TEST_CASE("socle simplicity flag")
{
  CHECK_FALSE((GroupSpec{Family::PSL, 2, Field::make(2, 1)}.socle_simple()));
  CHECK_FALSE((GroupSpec{Family::PSL, 2, Field::make(3, 1)}.socle_simple()));
  CHECK((GroupSpec{Family::PSL, 2, Field::make(2, 2)}.socle_simple()));
  CHECK((GroupSpec{Family::PSL, 3, Field::make(2, 1)}.socle_simple()));
}

TEST_CASE("family names")
{
  CHECK(parse_family("PSigmaL") == Family::PSigmaL);
  CHECK(parse_family("pgl") == Family::PGL);
  CHECK_THROWS_AS(parse_family("psu"), DomainError);
  CHECK(family_contains(Family::PGammaL, Family::PSigmaL));
  CHECK_FALSE(family_contains(Family::PGL, Family::PSigmaL));
}
