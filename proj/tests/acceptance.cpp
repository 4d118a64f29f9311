// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracles.hpp"
#include "sqs/constructions.hpp"
#include "sqs/errors.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace sqs;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::vector<std::string> failures;

  void expect(bool condition, const std::string& what)
  {
    if (!condition) {
      ok = false;
      failures.push_back(what);
    }
  }
};

// Constructions are shared between criteria; the first criterion to ask pays for the build.
struct Key {
  SqsFamily family;
  std::uint64_t q;
  auto operator<=>(const Key&) const = default;
};

std::map<Key, Construction>& cache()
{
  static std::map<Key, Construction> c;
  return c;
}

const Construction& ex1(unsigned d, Family acting)
{
  std::uint64_t q = 1;
  for (unsigned i = 0; i < d; ++i)
    q *= 3;
  auto& c = cache();
  const Key key{SqsFamily::Ex1, q};
  if (!c.contains(key))
    c.emplace(key, build_example1(d, acting));
  return c.at(key);
}

const Construction& ex2(std::uint64_t q)
{
  auto& c = cache();
  const Key key{SqsFamily::Ex2, q};
  if (!c.contains(key))
    c.emplace(key, build_example2(q));
  return c.at(key);
}

const Construction& ex3(unsigned d)
{
  std::uint64_t q = 1;
  for (unsigned i = 0; i < 2 * d; ++i)
    q *= 3;
  auto& c = cache();
  const Key key{SqsFamily::Ex3, q};
  if (!c.contains(key))
    c.emplace(key, build_example3(d));
  return c.at(key);
}

std::string tag(const Construction& c)
{
  return std::string(family_label(c.family)) + " q=" + std::to_string(c.field.order());
}

// |G_B| counted directly over the enumerated group.
std::uint64_t fixing_count(const LineGroup& group, const std::vector<LineElement>& elements,
                           const Block& block)
{
  std::uint64_t count = 0;
  for (const auto& g : elements) {
    Block img;
    for (Point x : block)
      img.push_back(group.apply(g, x));
    std::sort(img.begin(), img.end());
    count += img == block;
  }
  return count;
}

// Orbit-stabilizer on each base block: Schreier stabilizer order times orbit
// length equals |G|, and for |G| <= 10^6 a direct count over G agrees.
void check_orbit_stabilizer(Outcome& o, const Construction& c)
{
  const LineGroup group(c.field);
  const auto gens = group.generators(c.acting);
  const auto order = group_order(GroupSpec{c.acting, 2, c.field});
  std::vector<LineElement> elements;
  if (order <= 1'000'000)
    elements = enumerate_group(group, std::span<const LineElement>(gens));
  for (const auto& base : c.base_blocks) {
    const auto orbit = orbit_of_block(group, std::span<const LineElement>(gens), base);
    const auto stab = stabilizer(group, std::span<const LineElement>(gens), order, orbit);
    o.expect(orbit.size() * stab.order == order, tag(c) + " orbit-stabilizer");
    const auto action = block_action(group, std::span<const LineElement>(stab.elements), base);
    o.expect(action.size() == stab.order, tag(c) + " stabilizer not faithful on block");
    if (!elements.empty())
      o.expect(fixing_count(group, elements, base) == stab.order,
               tag(c) + " direct stabilizer count");
  }
}

Outcome construction_validity()
{
  Outcome o;
  struct Case {
    std::function<const Construction&()> build;
    std::uint64_t b;
    double limit;
  };
  const std::vector<Case> cases{
      {[]() -> const Construction& { return ex1(2, Family::PGL); }, 30, 10},
      {[]() -> const Construction& { return ex1(3, Family::PSL); }, 819, 10},
      {[]() -> const Construction& { return ex2(7); }, 14, 10},
      {[]() -> const Construction& { return ex2(19); }, 285, 10},
      {[]() -> const Construction& { return ex3(1); }, 30, 10},
      {[]() -> const Construction& { return ex3(2); }, 22140, 60},
  };
  for (const auto& cs : cases) {
    const auto start = Clock::now();
    const auto& c = cs.build();
    const auto report = verify(c.design);
    const double t = seconds_since(start);
    const auto& d = c.design;
    o.expect(report.is_valid && d.t() == 3 && d.k() == 4 && d.lambda() == 1,
             tag(c) + " fails verify");
    o.expect(d.b() == cs.b, tag(c) + " has b=" + std::to_string(d.b()));
    o.expect(sqs_block_count(d.v()).value == cs.b, tag(c) + " block count formula");
    o.expect(t < cs.limit, tag(c) + " took " + std::to_string(t) + " s");
    if (d.v() <= 28)
      o.expect(oracle::is_t_design(d), tag(c) + " fails brute-force coverage");
  }
  return o;
}

Outcome block_stabilizers_q9()
{
  Outcome o;
  const auto& c = ex3(1);
  o.expect(c.orbit_sizes == std::vector<std::size_t>{15, 15}, "Ex3 orbit sizes at q=9");
  const LineGroup group(c.field);
  const auto gens = group.generators(Family::PSL);
  const auto elements = enumerate_group(group, std::span<const LineElement>(gens));
  std::set<std::vector<LineElement>> seen;
  for (const auto& block : c.design.blocks()) {
    const auto stab = stabilizer(group, std::span<const LineElement>(gens), 360, block);
    const auto action = block_action(group, std::span<const LineElement>(stab.elements), block);
    o.expect(stab.order == 24, "stabilizer order " + std::to_string(stab.order));
    o.expect(fixing_count(group, elements, block) == 24, "direct stabilizer count");
    o.expect(action.size() == 24 && action.full_symmetric, "block image not S4");
    seen.insert(stab.elements);
  }
  o.expect(seen.size() == 30, "block to stabilizer map not injective");
  return o;
}

Outcome orbit_splitting()
{
  Outcome o;
  for (std::uint64_t q : {9u, 13u, 25u, 7u, 11u, 19u}) {
    const auto pp = prime_power(q);
    const LineGroup group(Field::make(pp->first, pp->second));
    const auto gens = group.generators(Family::PSL);
    const auto orbits = orbits_on_k_subsets(group, std::span<const LineElement>(gens), 3);
    const std::size_t expected = q % 4 == 1 ? 2 : 1;
    o.expect(orbits.orbits.size() == expected,
             "q=" + std::to_string(q) + ": " + std::to_string(orbits.orbits.size()) + " orbits");
    if (orbits.orbits.size() == 2)
      o.expect(orbits.orbits[0].size() == orbits.orbits[1].size(),
               "q=" + std::to_string(q) + ": unequal orbits");
  }
  return o;
}

Outcome nonexistence_line()
{
  Outcome o;
  for (std::uint64_t q : {13u, 25u, 37u}) {
    const auto start = Clock::now();
    const auto r = invariant_sqs_search(2, q);
    const double t = seconds_since(start);
    o.expect(r.solutions.empty(), "q=" + std::to_string(q) + " has solutions");
    o.expect(t < 60, "q=" + std::to_string(q) + " took " + std::to_string(t) + " s");
  }
  return o;
}

Outcome nonexistence_higher()
{
  Outcome o;
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 9u})
    o.expect(classify(3, q).reason == NonExistence::OddPointCount,
             "classify(3," + std::to_string(q) + ")");
  const auto start = Clock::now();
  const auto r = invariant_sqs_search(4, 3);
  const double t = seconds_since(start);
  o.expect(r.v == 40, "PG(3,3) has " + std::to_string(r.v) + " points");
  std::uint64_t subsets = 0;
  for (auto s : r.incidence.col_sizes)
    subsets += s;
  o.expect(subsets == 91390, "4-subset orbits cover " + std::to_string(subsets));
  o.expect(r.solutions.empty(), "(4,3) has solutions");
  o.expect(t < 300, "(4,3) took " + std::to_string(t) + " s");
  return o;
}

bool flag_transitive(const Construction& c)
{
  const LineGroup group(c.field);
  const auto gens = group.generators(c.acting);
  return is_flag_transitive(group, std::span<const LineElement>(gens),
                            group_order(GroupSpec{c.acting, 2, c.field}), c.design);
}

Outcome flag_transitivity()
{
  Outcome o;
  for (const auto* c : {&ex1(2, Family::PGL), &ex1(3, Family::PSL), &ex2(7), &ex2(19)})
    o.expect(flag_transitive(*c), tag(*c) + " not flag-transitive");
  for (const auto* c : {&ex3(1), &ex3(2)})
    o.expect(!flag_transitive(*c), tag(*c) + " flag-transitive");
  return o;
}

Outcome overgroup_ranges()
{
  Outcome o;
  const auto expect_max = [&](const Construction& c, Family want) {
    const auto r = preserving_overgroups(c.design, c.field);
    o.expect(r.maximal == want, tag(c) + " reports " + std::string(family_name(r.maximal)) +
                                    ", expected " + std::string(family_name(want)));
    return r;
  };
  expect_max(ex1(2, Family::PGL), Family::PGammaL);
  expect_max(ex1(3, Family::PSL), Family::PGammaL);
  expect_max(ex3(1), Family::PSigmaL);
  expect_max(ex3(2), Family::PSigmaL);
  expect_max(ex2(343), Family::PSigmaL);
  for (std::uint64_t q : {7u, 19u}) {
    const auto r = expect_max(ex2(q), Family::PSL);
    o.expect(r.frobenius_trivial, "ex2 q=" + std::to_string(q) + " Frobenius not trivial");
    o.expect(!r.pgl_extra_preserves, "ex2 q=" + std::to_string(q) + " preserved by PGL");
  }
  return o;
}

Outcome derived_structure()
{
  Outcome o;
  for (unsigned d : {2u, 3u}) {
    const auto& c = ex1(d, d == 2 ? Family::PGL : Family::PSL);
    const Field& f = c.field;
    const Point q = f.order();
    std::set<Block> zero_sum;
    for (Elem x = 0; x < q; ++x)
      for (Elem y = x + 1; y < q; ++y)
        for (Elem z = y + 1; z < q; ++z)
          if (f.add(f.add(x, y), z) == 0)
            zero_sum.insert({x, y, z});
    const auto through = blocks_through(c.design, q);
    o.expect(std::set<Block>(through.begin(), through.end()) == zero_sum,
             tag(c) + " derived design at infinity");
  }
  for (const auto& [key, c] : cache()) {
    for (Point x = 0; x < c.design.v(); ++x) {
      const Design sts = derived(c.design, x);
      const bool ok = sts.t() == 2 && sts.k() == 3 && verify(sts).is_valid;
      o.expect(ok, tag(c) + " derived at " + std::to_string(x));
      if (!ok)
        break;
    }
  }
  return o;
}

Outcome generator_sanity()
{
  Outcome o;
  for (std::uint64_t q : {5u, 7u, 9u, 13u, 25u, 27u}) {
    const auto pp = prime_power(q);
    const Field field = Field::make(pp->first, pp->second);
    const LineGroup group(field);
    for (Family fam : {Family::PSL, Family::PGL, Family::PSigmaL, Family::PGammaL}) {
      const auto gens = group.generators(fam);
      const auto size = enumerate_group(group, std::span<const LineElement>(gens)).size();
      o.expect(size == group_order(GroupSpec{fam, 2, field}),
               std::string(family_name(fam)) + "_2(" + std::to_string(q) + ") enumerates " +
                   std::to_string(size));
    }
  }
  for (const auto& [key, c] : cache())
    check_orbit_stabilizer(o, c);
  return o;
}

Outcome property_suites()
{
  Outcome o;
  for (std::uint64_t q : oracle::prime_powers_up_to(81)) {
    const auto pp = prime_power(q);
    const Field f = Field::make(pp->first, pp->second);
    const oracle::SlowField slow{f.characteristic(), f.modulus()};
    const std::string at = "q=" + std::to_string(q);
    bool axioms = true;
    for (Elem a = 0; a < q; ++a) {
      axioms = axioms && f.add(a, 0) == a && f.mul(a, 1) == a && f.add(a, f.neg(a)) == 0;
      if (a != 0)
        axioms = axioms && f.mul(a, f.inv(a)) == 1;
      for (Elem b = 0; b < q; ++b) {
        axioms = axioms && f.add(a, b) == slow.add(a, b) && f.mul(a, b) == slow.mul(a, b) &&
                 f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
        for (Elem c = 0; c < q && axioms; ++c)
          axioms = f.add(f.add(a, b), c) == f.add(a, f.add(b, c)) &&
                   f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) &&
                   f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
      }
    }
    o.expect(axioms, at + " field axioms");

    bool frob = true;
    for (unsigned e = 0; e < f.degree(); ++e)
      for (Elem a = 0; a < q; ++a) {
        frob = frob && f.frobenius(a, e) == f.pow(a, [&] {
                 std::uint64_t r = 1;
                 for (unsigned i = 0; i < e; ++i)
                   r *= f.characteristic();
                 return r;
               }());
        for (Elem b = 0; b < q && frob; ++b)
          frob = f.frobenius(f.add(a, b), e) == f.add(f.frobenius(a, e), f.frobenius(b, e)) &&
                 f.frobenius(f.mul(a, b), e) == f.mul(f.frobenius(a, e), f.frobenius(b, e));
      }
    o.expect(frob, at + " Frobenius law");
  }
  for (std::uint64_t q : {5u, 7u, 9u, 13u, 25u, 27u, 81u}) {
    const auto pp = prime_power(q);
    const Field f = Field::make(pp->first, pp->second);
    o.expect(f.is_square(f.minus_one()) == (q % 4 == 1),
             "is_square(-1) at q=" + std::to_string(q));
  }
  std::uint64_t q = 1;
  for (unsigned d = 1; d <= 4; ++d) {
    q *= 9;
    o.expect(q_square_mod16_check(d) && q * q % 16 == 1, "q^2 mod 16 at d=" + std::to_string(d));
  }
  for (std::uint64_t p : oracle::prime_powers_up_to(10000)) {
    if (p % 4 != 1 || !hanani_admissible(p + 1))
      continue;
    const auto pp = prime_power(p);
    const bool even_three = pp->first == 3 && pp->second % 2 == 0;
    o.expect(even_three != (p % 12 == 1), "case split at q=" + std::to_string(p));
  }
  return o;
}

Outcome consistency()
{
  Outcome o;
  for (std::uint64_t q : {9u, 13u, 25u}) {
    const auto verdict = classify(2, q);
    const auto search = invariant_sqs_search(2, q);
    o.expect(verdict.exists() == !search.solutions.empty(),
             "q=" + std::to_string(q) + " classify and search disagree");
    if (q == 9) {
      bool found = false;
      for (const auto& d : search.designs)
        found = found || d == ex3(1).design;
      o.expect(found, "Ex3 pair not among q=9 solutions");
    }
  }
  return o;
}

} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"construction validity", construction_validity},
      {"block stabilizers at q=9", block_stabilizers_q9},
      {"orbit splitting on 3-subsets", orbit_splitting},
      {"nonexistence for q=1 mod 12", nonexistence_line},
      {"nonexistence for n>=3", nonexistence_higher},
      {"flag-transitivity", flag_transitivity},
      {"overgroup ranges", overgroup_ranges},
      {"derived structure", derived_structure},
      {"generator and order sanity", generator_sanity},
      {"property suites", property_suites},
      {"classify agrees with search", consistency},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first;
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2f s)", seconds_since(start));
    line << buf;
    for (std::size_t k = 0; k < o.failures.size(); ++k)
      line << (k ? "; " : ": ") << o.failures[k];
    std::cout << line.str() << std::endl;
    failed += !o.ok;
  }
  std::cout << (failed ? "FAILED " : "PASSED ") << criteria.size() - failed << "/"
            << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
