// Python bindings. Rationals cross the boundary as fractions.Fraction; inputs
// may also be int or str ("3/4", "0.425").

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "satdiv/constructive.hpp"
#include "satdiv/families.hpp"
#include "satdiv/solvers.hpp"
#include "satdiv/verify.hpp"

namespace py = pybind11;
using namespace satdiv;

namespace {

Rational from_py(const py::handle& value) {
  if (py::isinstance<py::float_>(value))
    throw Error(ErrorKind::ParseError, "floats are not exact; pass a Fraction, int or str");
  return parse_rational(py::str(value).cast<std::string>());
}

py::object to_py(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(value));
}

py::list to_py(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

py::list to_py(const Solution& x) { return to_py(x.coords()); }

std::vector<Rational> vector_from_py(const py::iterable& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(from_py(v));
  return out;
}

Instance make_instance(const py::iterable& rows, bool tight) {
  Matrix m;
  for (const auto& r : rows) m.push_back(vector_from_py(r.cast<py::iterable>()));
  return validate_instance(std::move(m), tight ? Tightness::Tight : Tightness::General);
}

solvers::SearchOptions options(std::uint64_t node_limit) {
  solvers::SearchOptions o;
  o.node_limit = node_limit;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact solvers for satisfactory budget division";

  static py::handle error = py::exception<Error>(m, "SatdivError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error(e.what());
      exc.attr("kind") = to_string(e.kind());
      py::set_error(error, exc);
    }
  });

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("rows"), py::arg("tight") = false)
      .def_property_readonly("agents", &Instance::agents)
      .def_property_readonly("projects", &Instance::projects)
      .def_property_readonly("tight", &Instance::is_tight)
      .def_property_readonly("rows", [](const Instance& inst) {
        py::list out;
        for (const auto& r : inst.demands()) out.append(to_py(r));
        return out;
      })
      .def("__repr__", [](const Instance& inst) {
        return "<Instance agents=" + std::to_string(inst.agents()) + " projects=" + std::to_string(inst.projects()) +
               ">";
      });

  m.def("fixture", [](const std::string& name) { return families::fixture(name); });
  m.def("builtin", [](const std::string& name) -> py::object {
    auto f = families::builtin(name);
    if (!f) return py::none();
    return py::cast(std::move(f->instance));
  });

  m.def(
      "satisfied",
      [](const py::iterable& x, const Instance& inst, int tau) {
        const auto r = satisfaction_report(Solution(vector_from_py(x)), inst, tau);
        std::vector<int> who;
        for (std::size_t i = 0; i < r.per_agent.size(); ++i)
          if (r.per_agent[i].satisfied) who.push_back(static_cast<int>(i));
        return who;
      },
      py::arg("x"), py::arg("instance"), py::arg("tau"), "0-based indices of the satisfied agents.");

  m.def(
      "max_satisfied",
      [](const Instance& inst, int tau, const py::object& budget, std::uint64_t node_limit) {
        const auto r = solvers::max_satisfied_exact(inst, tau, from_py(budget), options(node_limit));
        return py::make_tuple(r.satisfied, to_py(r.solution));
      },
      py::arg("instance"), py::arg("tau"), py::arg("budget") = 1, py::arg("node_limit") = solvers::kDefaultNodeLimit);

  m.def(
      "all_agents_sat",
      [](const Instance& inst, int tau, const py::object& budget, std::uint64_t node_limit) -> py::object {
        const auto d = solvers::all_agents_sat(inst, tau, from_py(budget), options(node_limit));
        if (!d.witness) return py::none();
        return to_py(*d.witness);
      },
      py::arg("instance"), py::arg("tau"), py::arg("budget") = 1, py::arg("node_limit") = solvers::kDefaultNodeLimit,
      "A satisfying division, or None.");

  m.def(
      "min_budget",
      [](const Instance& inst, int tau, std::uint64_t node_limit) {
        const auto r = solvers::min_budget_exact(inst, tau, options(node_limit));
        return py::make_tuple(to_py(r.budget), to_py(r.solution));
      },
      py::arg("instance"), py::arg("tau"), py::arg("node_limit") = solvers::kDefaultNodeLimit);

  m.def(
      "utilitarian",
      [](const Instance& inst, const py::object& budget) {
        const auto r = solvers::utilitarian_dp(inst, from_py(budget));
        return py::make_tuple(r.pair_count, to_py(r.solution));
      },
      py::arg("instance"), py::arg("budget") = 1);

  m.def(
      "dictator",
      [](const Instance& inst, int tau) {
        const auto r = solvers::dictator(inst, tau);
        return py::make_tuple(r.agent, r.satisfied, to_py(r.solution));
      },
      py::arg("instance"), py::arg("tau"));

  m.def("three_agent", [](const Instance& inst) { return to_py(constructive::three_agent_half_solve(inst).solution); });
  m.def("two_agent_four", [](const Instance& inst) { return to_py(constructive::two_agent_four_solve(inst)); });

  m.def(
      "verify",
      [](const std::string& suite) {
        py::list out;
        for (const auto& r : verify::run_suite(suite)) {
          py::dict d;
          d["id"] = r.id;
          d["title"] = r.title;
          d["passed"] = r.outcome.pass;
          d["expected"] = r.outcome.expected;
          d["actual"] = r.outcome.actual;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all");
}
