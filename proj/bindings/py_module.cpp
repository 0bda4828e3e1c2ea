#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <variant>

#include "hiersearch/baselines.hpp"
#include "hiersearch/benchmarks.hpp"
#include "hiersearch/engine.hpp"
#include "hiersearch/harness.hpp"
#include "hiersearch/hierarchy.hpp"

namespace py = pybind11;
using namespace hiersearch;

namespace {

// dims: list of {"name", "lo", "hi", "scale"?} or {"name", "labels"}.
SearchSpace space_from_py(const py::list &dims, const py::dict &fixed,
                          const std::string &direction) {
  SearchSpace s;
  if (direction == "maximize")
    s.direction = Direction::maximize;
  else if (direction != "minimize")
    throw ConfigError("direction must be minimize or maximize");
  for (const auto &item : dims) {
    py::dict d = item.cast<py::dict>();
    auto name = d["name"].cast<std::string>();
    if (d.contains("labels")) {
      s.dimensions.push_back(Dimension::categorical(
          name, d["labels"].cast<std::vector<std::string>>()));
    } else {
      Scale scale = Scale::linear;
      if (d.contains("scale")) {
        auto sc = d["scale"].cast<std::string>();
        if (sc == "log10")
          scale = Scale::log10;
        else if (sc != "linear")
          throw ConfigError("unknown scale: " + sc);
      }
      s.dimensions.push_back(Dimension::continuous(
          name, d["lo"].cast<double>(), d["hi"].cast<double>(), scale));
    }
    if (!fixed.contains(name.c_str()))
      s.objective_names.push_back(name);
  }
  for (const auto &kv : fixed) {
    auto name = kv.first.cast<std::string>();
    const Dimension &dim = s.dim(name);
    if (dim.is_categorical()) {
      // accept a label string or an index
      if (py::isinstance<py::str>(kv.second)) {
        auto label = kv.second.cast<std::string>();
        const auto &labels = std::get<CategoricalDomain>(dim.domain).labels;
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end())
          throw CategoryOutOfRange("unknown label: " + label);
        s.fixed_assignments[name] =
            static_cast<double>(it - labels.begin());
        continue;
      }
    }
    s.fixed_assignments[name] = kv.second.cast<double>();
  }
  validate_space(s);
  return s;
}

py::object external_value(const Dimension &d, double internal) {
  if (d.is_categorical()) {
    const auto &labels = std::get<CategoricalDomain>(d.domain).labels;
    return py::str(labels.at(static_cast<std::size_t>(internal)));
  }
  return py::float_(d.to_external(internal));
}

py::dict coord_to_py(const SearchSpace &s, const Coordinate &c) {
  py::dict out;
  for (std::size_t i = 0; i < s.size(); ++i)
    out[s.dimensions[i].name.c_str()] =
        external_value(s.dimensions[i], c.values[i]);
  return out;
}

py::dict report_to_py(const SearchSpace &s, const RunReport &r) {
  py::dict out;
  out["best"] = coord_to_py(s, r.best);
  out["best_psi"] = r.best_psi;
  out["iterations_run"] = r.iterations_run;
  out["evaluations"] = r.evaluations;
  out["setup_evaluations"] = r.setup_evaluations;
  out["width_fallbacks"] = r.width_fallbacks;
  py::dict widths;
  for (const auto &[name, eps] : r.final_widths)
    widths[name.c_str()] = eps;
  out["final_widths"] = widths;
  py::list trace;
  for (const IterationTrace &tr : r.trace) {
    py::dict row;
    row["iteration"] = tr.iteration;
    row["start_psi"] = tr.start_psi;
    row["best_psi"] = tr.best_psi;
    row["stagnated"] = tr.stagnated;
    row["per_terminal_best"] = tr.per_terminal_best;
    trace.append(row);
  }
  out["trace"] = trace;
  return out;
}

// Python objectives run on the interpreter thread, so evaluation stays
// sequential (threads = 1) — the callback owns the GIL.
ObjectiveHandle wrap_objective(const SearchSpace &s, const py::function &f) {
  return ObjectiveHandle(
      [&s, f](const Coordinate &c) {
        return f(coord_to_py(s, c)).cast<double>();
      },
      s.size());
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hierarchical collaborative random search with matched-budget "
            "baselines";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<SearchSpace>(m, "SearchSpace")
      .def_property_readonly(
          "names",
          [](const SearchSpace &s) {
            std::vector<std::string> out;
            for (const auto &d : s.dimensions)
              out.push_back(d.name);
            return out;
          })
      .def_property_readonly(
          "objective_names",
          [](const SearchSpace &s) { return s.objective_names; })
      .def("__len__", [](const SearchSpace &s) { return s.size(); });

  m.def("make_space", &space_from_py, py::arg("dims"),
        py::arg("fixed") = py::dict(), py::arg("direction") = "minimize");

  m.def(
      "tune",
      [](const SearchSpace &s, const py::function &objective,
         std::size_t iterations, std::size_t budget, std::size_t connections,
         double omega, double delta, std::uint64_t seed) {
        Hierarchy h = build_hierarchy(s, connections);
        ObjectiveHandle obj = wrap_objective(s, objective);
        TuneOptions opts;
        opts.iterations = iterations;
        opts.budget = budget;
        opts.omega = omega;
        opts.delta = delta;
        opts.seed = seed;
        opts.threads = 1;
        return report_to_py(s, tune(h, s, obj, opts));
      },
      py::arg("space"), py::arg("objective"), py::arg("iterations") = 10,
      py::arg("budget") = 3, py::arg("connections") = 2,
      py::arg("omega") = 9.0, py::arg("delta") = 2.0, py::arg("seed") = 0);

  m.def(
      "random_search",
      [](const SearchSpace &s, const py::function &objective,
         std::size_t agents, std::size_t iterations, std::size_t budget,
         std::uint64_t seed) {
        ObjectiveHandle obj = wrap_objective(s, objective);
        BaselineOptions opts;
        opts.agents = agents;
        opts.iterations = iterations;
        opts.budget = budget;
        opts.seed = seed;
        opts.threads = 1;
        return report_to_py(s, random_search(s, obj, opts));
      },
      py::arg("space"), py::arg("objective"), py::arg("agents") = 0,
      py::arg("iterations") = 10, py::arg("budget") = 3, py::arg("seed") = 0);

  m.def(
      "latin_hypercube",
      [](const SearchSpace &s, const py::function &objective,
         std::size_t agents, std::size_t iterations, std::size_t budget,
         std::uint64_t seed) {
        ObjectiveHandle obj = wrap_objective(s, objective);
        BaselineOptions opts;
        opts.agents = agents;
        opts.iterations = iterations;
        opts.budget = budget;
        opts.seed = seed;
        opts.threads = 1;
        return report_to_py(s, latin_hypercube(s, obj, opts));
      },
      py::arg("space"), py::arg("objective"), py::arg("agents") = 0,
      py::arg("iterations") = 10, py::arg("budget") = 3, py::arg("seed") = 0);

  m.def("benchmark_keys", &benchmark_keys);

  m.def(
      "benchmark_info",
      [](const std::string &key, std::uint64_t seed) {
        BenchmarkFunction b = make_benchmark(key, seed);
        py::dict out;
        out["key"] = b.key;
        out["family"] = b.family;
        out["dims"] = b.dims;
        out["lo"] = b.lo;
        out["hi"] = b.hi;
        out["known_optimum"] = b.known_optimum;
        out["argmin"] = b.argmin;
        return out;
      },
      py::arg("key"), py::arg("seed") = 0);

  m.def(
      "benchmark_eval",
      [](const std::string &key, const std::vector<double> &x,
         std::uint64_t seed) { return make_benchmark(key, seed).fn(x); },
      py::arg("key"), py::arg("x"), py::arg("seed") = 0);

  m.def(
      "run_benchmark",
      [](const std::string &key, const std::string &method,
         std::size_t iterations, std::size_t budget, std::size_t connections,
         double omega, double delta, std::uint64_t seed, int threads) {
        RunParams p;
        p.iterations = iterations;
        p.budget = budget;
        p.connections = connections;
        p.omega = omega;
        p.delta = delta;
        SearchSpace s = benchmark_space(make_benchmark(key, seed));
        RunReport r =
            run_single(parse_method(method), key, p, seed, seed, threads);
        return report_to_py(s, r);
      },
      py::arg("key"), py::arg("method") = "hiersearch",
      py::arg("iterations") = 10, py::arg("budget") = 3,
      py::arg("connections") = 2, py::arg("omega") = 9.0,
      py::arg("delta") = 2.0, py::arg("seed") = 0, py::arg("threads") = 1);

  m.def(
      "hierarchy_info",
      [](const SearchSpace &s, std::size_t connections) {
        Hierarchy h = build_hierarchy(s, connections);
        HierarchyStats st = hierarchy_stats(h);
        py::dict out;
        out["node_count"] = st.node_count;
        out["depth"] = st.depth;
        out["terminal_count"] = st.terminal_count;
        out["tree"] = render_tree(h);
        return out;
      },
      py::arg("space"), py::arg("connections") = 2);
}
