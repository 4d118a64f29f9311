#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sqs/constructions.hpp"
#include "sqs/errors.hpp"

#include <sstream>

namespace py = pybind11;
using namespace sqs;

namespace {

Field field_for(std::uint64_t q)
{
  const auto pp = prime_power(q);
  if (!pp)
    throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  return Field::make(pp->first, pp->second);
}

std::string design_repr(const Design& d)
{
  std::ostringstream os;
  os << "<Design " << d.t() << "-(" << d.v() << "," << d.k() << "," << d.lambda()
     << ") b=" << d.b() << ">";
  return os.str();
}

py::dict orbit_summary(std::uint64_t q, unsigned k, const std::string& group, unsigned n)
{
  const Field field = field_for(q);
  const Family family = parse_family(group);
  py::list sizes, reps;
  auto fill = [&](const auto& g) {
    using E = typename std::decay_t<decltype(g)>::element_type;
    const auto gens = g.generators(family);
    const auto orbits = orbits_on_k_subsets(g, std::span<const E>(gens), k);
    for (const auto& o : orbits.orbits) {
      sizes.append(o.size());
      reps.append(py::cast(o.front()));
    }
  };
  if (n == 2)
    fill(LineGroup(field));
  else
    fill(SpaceGroup(field, n));
  py::dict out;
  out["sizes"] = sizes;
  out["representatives"] = reps;
  return out;
}

py::dict block_stabilizer(std::uint64_t q, Block block, const std::string& group)
{
  const Field field = field_for(q);
  const Family family = parse_family(group);
  const LineGroup g(field);
  const auto gens = g.generators(family);
  const auto order = group_order(GroupSpec{family, 2, field});
  std::sort(block.begin(), block.end());
  const auto orbit = orbit_of_block(g, std::span<const LineElement>(gens), block);
  const auto stab = stabilizer(g, std::span<const LineElement>(gens), order, orbit);
  const auto action = block_action(g, std::span<const LineElement>(stab.elements), block);
  py::dict out;
  out["group_order"] = order;
  out["orbit_size"] = orbit.size();
  out["order"] = stab.order;
  out["image_size"] = action.size();
  out["full_symmetric"] = action.full_symmetric;
  out["transitive"] = action.transitive;
  return out;
}

bool flag_transitive(const Construction& c)
{
  const LineGroup g(c.field);
  const auto gens = g.generators(c.acting);
  return is_flag_transitive(g, std::span<const LineElement>(gens),
                            group_order(GroupSpec{c.acting, 2, c.field}), c.design);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Steiner quadruple systems invariant under PSL_2(q) and its overgroups.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Field>(m, "Field")
      .def(py::init([](std::uint64_t p, unsigned d) { return Field::make(p, d); }),
           py::arg("p"), py::arg("d") = 1)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("primitive", &Field::primitive)
      .def_property_readonly("modulus", &Field::modulus)
      .def("modulus_string", &Field::modulus_string)
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("neg", &Field::neg)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("pow", &Field::pow)
      .def("frobenius", &Field::frobenius)
      .def("is_square", &Field::is_square)
      .def("smallest_nonsquare", &Field::smallest_nonsquare)
      .def("primitive_sixth_root", &Field::primitive_sixth_root)
      .def("minus_one", &Field::minus_one)
      .def("__repr__", [](const Field& f) {
        return "<Field GF(" + std::to_string(f.order()) + ") mod " + f.modulus_string() + ">";
      });

  py::class_<Design>(m, "Design")
      .def(py::init<Point, unsigned, unsigned, unsigned, std::vector<Block>>(), py::arg("v"),
           py::arg("k"), py::arg("t"), py::arg("lam"), py::arg("blocks"))
      .def_property_readonly("v", &Design::v)
      .def_property_readonly("k", &Design::k)
      .def_property_readonly("t", &Design::t)
      .def_property_readonly("lam", &Design::lambda)
      .def_property_readonly("b", &Design::b)
      .def_property_readonly("blocks", &Design::blocks)
      .def("__contains__", &Design::contains)
      .def("__len__", &Design::b)
      .def("__eq__", [](const Design& a, const Design& b) { return a == b; })
      .def("__repr__", &design_repr)
      .def("dumps", [](const Design& d) { return write_design(d); })
      .def_static("loads", [](const std::string& text) { return read_design(text); });

  py::class_<Violation>(m, "Violation")
      .def_readonly("subset", &Violation::subset)
      .def_readonly("count", &Violation::count);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("is_valid", &VerificationReport::is_valid)
      .def_readonly("b", &VerificationReport::b)
      .def_readonly("replication", &VerificationReport::replication)
      .def_readonly("violations", &VerificationReport::violations)
      .def_readonly("violation_count", &VerificationReport::violation_count)
      .def_readonly("counting_identity", &VerificationReport::counting_identity)
      .def("__bool__", [](const VerificationReport& r) { return r.is_valid; });

  m.def("verify", &verify, py::arg("design"), py::arg("violation_limit") = 100);
  m.def("derived", &derived, py::arg("design"), py::arg("point"));
  m.def("hanani_admissible", &hanani_admissible, py::arg("v"));
  m.def("sqs_block_count", [](std::uint64_t v) -> py::object {
    const auto c = sqs_block_count(v);
    if (!c.integral)
      return py::none();
    return py::int_(c.value);
  }, py::arg("v"));

  py::class_<Construction>(m, "Construction")
      .def_property_readonly("family", [](const Construction& c) { return std::string(family_label(c.family)); })
      .def_property_readonly("q", [](const Construction& c) { return c.field.order(); })
      .def_property_readonly("field", [](const Construction& c) { return c.field; })
      .def_property_readonly("group", [](const Construction& c) { return std::string(family_name(c.acting)); })
      .def_readonly("base_blocks", &Construction::base_blocks)
      .def_readonly("orbit_sizes", &Construction::orbit_sizes)
      .def_readonly("design", &Construction::design)
      .def("is_flag_transitive", &flag_transitive)
      .def("maximal_group", [](const Construction& c) {
        return std::string(family_name(preserving_overgroups(c.design, c.field).maximal));
      });

  m.def("build_example1", [](unsigned d, const std::string& group) {
    return build_example1(d, parse_family(group));
  }, py::arg("d"), py::arg("group") = "pgl");
  m.def("build_example2", [](std::uint64_t q) { return build_example2(q); }, py::arg("q"));
  m.def("build_example3", [](unsigned d) { return build_example3(d); }, py::arg("d"));

  m.def("classify", [](unsigned n, std::uint64_t q) {
    const auto v = classify(n, q);
    py::dict out;
    out["n"] = v.n;
    out["q"] = v.q;
    out["v"] = v.v;
    out["exists"] = v.exists();
    py::list families;
    for (const auto& f : v.families) {
      py::dict e;
      e["family"] = std::string(family_label(f.family));
      e["d"] = f.d;
      e["group"] = std::string(family_name(f.acting));
      e["max_overgroup"] = std::string(family_name(f.max_overgroup));
      e["psl_suffices"] = f.psl_suffices;
      families.append(e);
    }
    out["families"] = families;
    out["reason"] = v.reason ? py::object(py::str(std::string(reason_label(*v.reason))))
                             : py::object(py::none());
    return out;
  }, py::arg("n"), py::arg("q"));

  m.def("invariant_sqs_search", [](unsigned n, std::uint64_t q) {
    const auto r = invariant_sqs_search(n, q);
    py::dict out;
    out["v"] = r.v;
    out["group_order"] = r.group_order;
    out["row_sizes"] = r.incidence.row_sizes;
    out["col_sizes"] = r.incidence.col_sizes;
    out["col_reps"] = r.incidence.col_reps;
    out["matrix"] = r.incidence.matrix;
    out["solutions"] = r.solutions;
    out["designs"] = r.designs;
    return out;
  }, py::arg("n"), py::arg("q"));

  m.def("orbits_on_k_subsets", &orbit_summary, py::arg("q"), py::arg("k"),
        py::arg("group") = "psl", py::arg("n") = 2);
  m.def("block_stabilizer", &block_stabilizer, py::arg("q"), py::arg("block"),
        py::arg("group") = "psl");
  m.def("group_order", [](const std::string& group, unsigned n, std::uint64_t q) {
    return group_order(GroupSpec{parse_family(group), n, field_for(q)});
  }, py::arg("group"), py::arg("n"), py::arg("q"));

}
