#include "sqs/cli.hpp"

#include "sqs/constructions.hpp"
#include "sqs/errors.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace sqs {

namespace {

std::string format_block(const Block& b)
{
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i)
    s += (i ? "," : "") + std::to_string(b[i]);
  return s + "}";
}

std::string group_label(Family f, unsigned n, std::uint64_t q)
{
  return std::string(family_name(f)) + "_" + std::to_string(n) + "(" + std::to_string(q) + ")";
}

Field field_for(std::uint64_t q)
{
  const auto pp = prime_power(q);
  if (!pp)
    throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  return Field::make(pp->first, pp->second);
}

// Exponent e with q = 3^e, or throws naming the family's requirement.
unsigned three_exponent(std::uint64_t q, const std::string& requirement)
{
  const auto pp = prime_power(q);
  if (!pp || pp->first != 3)
    throw DomainError(requirement);
  return pp->second;
}

Block parse_block_list(const std::string& text)
{
  Block block;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto value = std::stoul(item, &used);
      if (used != item.size())
        throw std::invalid_argument(item);
      block.push_back(static_cast<Point>(value));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed block entry '" + item + "'");
    }
  }
  std::sort(block.begin(), block.end());
  return block;
}

struct Options {
  std::string family, group, in, out, block;
  std::uint64_t q = 0, p = 0;
  unsigned n = 2, d = 1, k = 3;
  Point point = 0;
  bool unsanctioned = false;
  bool cross_check = false;
  Limits limits;
};

void add_limits(CLI::App* cmd, Options& o)
{
  cmd->add_option("--max-orbit", o.limits.max_orbit, "Cap on orbit sizes");
  cmd->add_option("--max-subsets", o.limits.max_subsets, "Cap on C(v, k) for subset orbits");
}

void print_construction(std::ostream& out, const Construction& c, const Limits& limits)
{
  const Design& design = c.design;
  const auto report = verify(design);
  out << "family: " << family_label(c.family) << '\n';
  out << "q: " << c.field.order() << '\n';
  out << "group: " << group_label(c.acting, 2, c.field.order()) << '\n';
  out << "v: " << design.v() << '\n';
  out << "b: " << design.b() << '\n';
  out << "base blocks:";
  for (const auto& b : c.base_blocks)
    out << ' ' << format_block(b);
  out << '\n';
  out << "orbits: ";
  for (std::size_t i = 0; i < c.orbit_sizes.size(); ++i)
    out << (i ? " + " : "") << c.orbit_sizes[i];
  out << '\n';
  out << "valid: " << (report.is_valid ? "yes" : "no") << '\n';

  const LineGroup group(c.field);
  const auto gens = group.generators(c.acting);
  const auto order = group_order(GroupSpec{c.acting, 2, c.field});
  const bool flag = is_flag_transitive(group, std::span<const LineElement>(gens), order, design, limits);
  out << "flag-transitive: " << (flag ? "yes" : "no") << '\n';
  const auto over = preserving_overgroups(design, c.field);
  out << "maximal group: " << family_name(over.maximal) << '\n';
}

int cmd_construct(const Options& o, std::ostream& out)
{
  if (o.family == "ex1") {
    const unsigned d = three_exponent(o.q, "ex1 requires q = 3^d");
    const Family acting = o.group.empty() ? Family::PGL : parse_family(o.group);
    if (acting == Family::PSL && d % 2 == 0 && d >= 2) {
      if (!o.unsanctioned)
        throw DomainError("ex1 with PSL requires odd d > 1; pass --unsanctioned to run the "
                          "orbit comparison anyway");
      const auto r = example1_psl_even(d, o.limits);
      out << "unsanctioned parameters: PSL_2(" << o.q << ") with even d = " << d << '\n';
      out << "PSL orbit: " << r.psl_orbit_size << '\n';
      out << "PGL orbit: " << r.pgl_orbit_size << '\n';
      out << "coincides with PGL orbit: " << (r.coincides ? "yes" : "no") << '\n';
      return 0;
    }
    const auto c = build_example1(d, acting, o.limits);
    print_construction(out, c, o.limits);
    if (!o.out.empty())
      write_design_file(o.out, c.design);
    return 0;
  }
  if (!o.group.empty() && parse_family(o.group) != Family::PSL)
    throw DomainError(o.family + " is constructed from PSL_2(q)");
  Construction c = [&] {
    if (o.family == "ex2")
      return build_example2(o.q, o.limits);
    if (o.family == "ex3") {
      const unsigned e = three_exponent(o.q, "ex3 requires q = 3^(2d)");
      if (e % 2 != 0)
        throw DomainError("ex3 requires q = 3^(2d)");
      return build_example3(e / 2, o.limits);
    }
    throw DomainError("unknown family '" + o.family + "' (expected ex1, ex2 or ex3)");
  }();
  print_construction(out, c, o.limits);
  if (!o.out.empty())
    write_design_file(o.out, c.design);
  return 0;
}

std::string parameters(const Design& d)
{
  return std::to_string(d.t()) + "-(" + std::to_string(d.v()) + "," + std::to_string(d.k()) +
         "," + std::to_string(d.lambda()) + ")";
}

int cmd_verify(const Options& o, std::ostream& out)
{
  const Design design = read_design_file(o.in);
  const auto report = verify(design);
  if (report.is_valid) {
    out << "valid " << parameters(design) << ", b = " << design.b() << '\n';
    return 0;
  }
  out << "invalid " << parameters(design) << ", b = " << design.b() << ": "
      << report.violation_count << " violations\n";
  for (const auto& v : report.violations)
    out << "  " << format_block(v.subset) << " covered " << v.count << " times\n";
  return 1;
}

int cmd_derive(const Options& o, std::ostream& out)
{
  const Design design = read_design_file(o.in);
  const Design result = derived(design, o.point);
  const bool valid = verify(result).is_valid;
  out << "derived at point " << o.point << ": " << parameters(result) << ", b = " << result.b()
      << '\n';
  out << "valid: " << (valid ? "yes" : "no") << '\n';
  if (!o.out.empty())
    write_design_file(o.out, result);
  return 0;
}

template <class Group>
void print_orbits(std::ostream& out, const Group& group, Family family, unsigned n,
                  std::uint64_t q, const Options& o)
{
  const auto gens = group.generators(family);
  const auto orbits =
      orbits_on_k_subsets(group, std::span<const typename Group::element_type>(gens), o.k, o.limits);
  out << "group: " << group_label(family, n, q) << ", order "
      << group_order(GroupSpec{family, n, group.field()}) << '\n';
  out << "points: " << group.degree() << '\n';
  out << "orbits on " << o.k << "-subsets: " << orbits.orbits.size() << '\n';
  for (std::size_t i = 0; i < orbits.orbits.size(); ++i)
    out << "  orbit " << i << ": size " << orbits.orbits[i].size() << ", rep "
        << format_block(orbits.orbits[i].front()) << '\n';
}

int cmd_orbits(const Options& o, std::ostream& out)
{
  const Field field = field_for(o.q);
  const Family family = parse_family(o.group.empty() ? "psl" : o.group);
  if (o.n == 2)
    print_orbits(out, LineGroup(field), family, 2, o.q, o);
  else
    print_orbits(out, SpaceGroup(field, o.n), family, o.n, o.q, o);
  return 0;
}

template <class Group>
void print_stabilizer(std::ostream& out, const Group& group, Family family, unsigned n,
                      std::uint64_t q, const Block& block, const Limits& limits)
{
  using E = typename Group::element_type;
  const auto gens = group.generators(family);
  const auto order = group_order(GroupSpec{family, n, group.field()});
  const auto orbit = orbit_of_block(group, std::span<const E>(gens), block, limits);
  const auto stab = stabilizer(group, std::span<const E>(gens), order, orbit, limits);
  const auto action = block_action(group, std::span<const E>(stab.elements), block);
  out << "group: " << group_label(family, n, q) << ", order " << order << '\n';
  out << "block: " << format_block(block) << '\n';
  out << "orbit size: " << orbit.size() << '\n';
  out << "stabilizer order: " << stab.order << '\n';
  out << "image on block: " << action.size()
      << " (full symmetric: " << (action.full_symmetric ? "yes" : "no")
      << ", transitive: " << (action.transitive ? "yes" : "no") << ")\n";
  out << "faithful: " << (action.size() == stab.order ? "yes" : "no") << '\n';
}

int cmd_stabilizer(const Options& o, std::ostream& out)
{
  const Field field = field_for(o.q);
  const Family family = parse_family(o.group.empty() ? "psl" : o.group);
  const Block block = parse_block_list(o.block);
  if (o.n == 2)
    print_stabilizer(out, LineGroup(field), family, 2, o.q, block, o.limits);
  else
    print_stabilizer(out, SpaceGroup(field, o.n), family, o.n, o.q, block, o.limits);
  return 0;
}

int cmd_search(const Options& o, std::ostream& out)
{
  const auto r = invariant_sqs_search(o.n, o.q, o.limits);
  const auto& inc = r.incidence;
  out << "group: " << group_label(Family::PSL, o.n, o.q) << ", order " << r.group_order
      << ", on " << r.v << " points\n";
  out << "3-subset orbits: " << inc.row_reps.size() << '\n';
  for (std::size_t i = 0; i < inc.row_reps.size(); ++i)
    out << "  row " << i << ": size " << inc.row_sizes[i] << ", rep "
        << format_block(inc.row_reps[i]) << '\n';
  out << "4-subset orbits: " << inc.col_reps.size() << '\n';
  for (std::size_t j = 0; j < inc.col_reps.size(); ++j)
    out << "  col " << j << ": size " << inc.col_sizes[j] << ", rep "
        << format_block(inc.col_reps[j]) << '\n';
  out << "incidence:\n";
  for (const auto& row : inc.matrix) {
    out << " ";
    for (auto x : row)
      out << ' ' << x;
    out << '\n';
  }
  out << "solutions: " << r.solutions.size() << '\n';
  for (std::size_t s = 0; s < r.solutions.size(); ++s) {
    out << "  solution " << s << ": {";
    for (std::size_t i = 0; i < r.solutions[s].size(); ++i)
      out << (i ? "," : "") << r.solutions[s][i];
    out << "}, b = " << r.designs[s].b() << '\n';
  }
  return 0;
}

std::string describe(const FamilyEntry& f)
{
  std::ostringstream os;
  os << family_label(f.family) << ": ";
  switch (f.family) {
  case SqsFamily::Ex1:
    os << "images of {0,1,2,inf} under PGL_2(3^" << f.d << ")";
    if (f.psl_suffices)
      os << " (PSL_2 suffices, d odd)";
    break;
  case SqsFamily::Ex2:
    os << "images of {0,1,inf,eps} under PSL_2(" << f.q << "), eps a primitive sixth root of unity";
    break;
  case SqsFamily::Ex3:
    os << "images of {0,1,-1,inf} and {0,a,-a,inf} under PSL_2(3^(2*" << f.d
       << ")), a a non-square";
    break;
  }
  os << "; PSL_2(" << f.q << ") <= G <= " << family_name(f.max_overgroup) << "_2(" << f.q << ")";
  return os.str();
}

std::string explain(const Verdict& v)
{
  switch (*v.reason) {
  case NonExistence::SocleNotSimple:
    return "PSL_2(" + std::to_string(v.q) + ") is not simple";
  case NonExistence::NotAdmissible:
    return "v = " + std::to_string(v.v) + " is not 2 or 4 (mod 6)";
  case NonExistence::OneModTwelve:
    return "q = " + std::to_string(v.q) + " = 1 (mod 12), no block stabilizer S_4 fits";
  case NonExistence::OddPointCount:
    return "v = " + std::to_string(v.v) + " odd (n = 3)";
  case NonExistence::HyperplaneInduction:
    return "n > 3, a hyperplane would carry an invariant SQS for n - 1";
  }
  return "";
}

int cmd_classify(const Options& o, std::ostream& out)
{
  const auto verdict = classify(o.n, o.q);
  if (verdict.exists()) {
    out << "exists: v = " << verdict.v << '\n';
    for (const auto& f : verdict.families)
      out << "  " << describe(f) << '\n';
  } else {
    out << "none: " << explain(verdict) << '\n';
    out << "reason: " << reason_label(*verdict.reason) << '\n';
  }
  if (!o.cross_check)
    return 0;
  const auto search = invariant_sqs_search(o.n, o.q, o.limits);
  const bool agree = verdict.exists() == !search.solutions.empty();
  out << "cross-check: " << (agree ? "agree" : "DISAGREE") << " (search solutions: "
      << search.solutions.size() << ")\n";
  return agree ? 0 : 1;
}

int cmd_field_info(const Options& o, std::ostream& out)
{
  const Field f = Field::make(o.p, o.d);
  out << "q: " << f.order() << '\n';
  out << "p: " << f.characteristic() << '\n';
  out << "d: " << f.degree() << '\n';
  out << "modulus: " << f.modulus_string() << '\n';
  out << "primitive element: " << f.primitive() << '\n';
  out << "minus one: " << f.minus_one() << '\n';
  if (f.order() % 2 == 1) {
    out << "-1 is a square: " << (f.is_square(f.minus_one()) ? "yes" : "no") << '\n';
    out << "smallest non-square: " << f.smallest_nonsquare() << '\n';
  }
  if ((f.order() - 1) % 6 == 0)
    out << "primitive sixth root: " << f.primitive_sixth_root() << '\n';
  return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Steiner quadruple systems with projective linear automorphism groups"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build an SQS family member");
  construct->add_option("--family", o.family, "ex1, ex2 or ex3")->required();
  construct->add_option("--q", o.q, "Field order")->required();
  construct->add_option("--group", o.group, "psl or pgl (ex1 only)");
  construct->add_option("--out", o.out, "Design file to write");
  construct->add_flag("--unsanctioned", o.unsanctioned,
                      "Allow ex1 with PSL and even d (orbit comparison only)");
  add_limits(construct, o);

  auto* verify_cmd = app.add_subcommand("verify", "Check a design file");
  verify_cmd->add_option("--in", o.in, "Design file")->required();

  auto* derive = app.add_subcommand("derive", "Derived design at a point");
  derive->add_option("--in", o.in, "Design file")->required();
  derive->add_option("--point", o.point, "Point index")->required();
  derive->add_option("--out", o.out, "Design file to write");

  auto* orbits = app.add_subcommand("orbits", "Orbits on k-subsets");
  orbits->add_option("--q", o.q, "Field order")->required();
  orbits->add_option("--group", o.group, "psl, pgl, psigmal or pgammal");
  orbits->add_option("--k", o.k, "Subset size")->required();
  orbits->add_option("--n", o.n, "Vector space dimension (default 2)");
  add_limits(orbits, o);

  auto* stab = app.add_subcommand("stabilizer", "Setwise stabilizer of a block");
  stab->add_option("--q", o.q, "Field order")->required();
  stab->add_option("--group", o.group, "psl, pgl, psigmal or pgammal");
  stab->add_option("--block", o.block, "Comma-separated point indices")
      ->required()
      ->check([](const std::string& text) -> std::string {
        try {
          parse_block_list(text);
        } catch (const std::invalid_argument& e) {
          return e.what();
        }
        return {};
      });
  stab->add_option("--n", o.n, "Vector space dimension (default 2)");
  add_limits(stab, o);

  auto* search = app.add_subcommand("search", "All PSL-invariant SQS via orbit exact cover");
  search->add_option("--n", o.n, "Vector space dimension")->required();
  search->add_option("--q", o.q, "Field order")->required();
  add_limits(search, o);

  auto* classify_cmd = app.add_subcommand("classify", "Which families exist for (n, q)");
  classify_cmd->add_option("--n", o.n, "Vector space dimension")->required();
  classify_cmd->add_option("--q", o.q, "Field order")->required();
  classify_cmd->add_flag("--cross-check", o.cross_check, "Confirm with invariant_sqs_search");
  add_limits(classify_cmd, o);

  auto* field_info = app.add_subcommand("field-info", "Describe GF(p^d)");
  field_info->add_option("--p", o.p, "Characteristic")->required();
  field_info->add_option("--d", o.d, "Degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (construct->parsed())
      return cmd_construct(o, out);
    if (verify_cmd->parsed())
      return cmd_verify(o, out);
    if (derive->parsed())
      return cmd_derive(o, out);
    if (orbits->parsed())
      return cmd_orbits(o, out);
    if (stab->parsed())
      return cmd_stabilizer(o, out);
    if (search->parsed())
      return cmd_search(o, out);
    if (classify_cmd->parsed())
      return cmd_classify(o, out);
    if (field_info->parsed())
      return cmd_field_info(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

} // namespace sqs
