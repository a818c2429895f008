// Python bindings for the link-pattern / Catalan-tree library. The module
// mirrors the C++ surface with python idioms: families and statistics are
// named by strings, exact counts come back as python ints, and level
// traversal is a generator-style iterator.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>
#include <vector>

#include "lpcat/codec.hpp"
#include "lpcat/enumeration.hpp"
#include "lpcat/errors.hpp"
#include "lpcat/oracle.hpp"
#include "lpcat/render.hpp"
#include "lpcat/stats.hpp"
#include "lpcat/tl.hpp"
#include "lpcat/tree.hpp"

namespace py = pybind11;
using namespace lpcat;

namespace {

Family family_of(const std::string& name) {
  if (auto family = family_from_name(name)) return *family;
  throw py::value_error("unknown family: " + name);
}

Statistic statistic_of(const std::string& name) {
  if (auto stat = statistic_from_name(name)) return *stat;
  throw py::value_error("unknown statistic: " + name);
}

TreeNode to_node(py::handle obj) {
  if (py::isinstance<LinkPattern>(obj)) return TreeNode{obj.cast<LinkPattern>()};
  if (py::isinstance<DyckPath>(obj)) return TreeNode{obj.cast<DyckPath>()};
  if (py::isinstance<Perm123>(obj)) return TreeNode{obj.cast<Perm123>()};
  throw py::type_error("expected a LinkPattern, DyckPath, or Perm123");
}

py::object from_node(const TreeNode& node) {
  return std::visit([](const auto& value) { return py::cast(value); }, node.value);
}

py::int_ to_py_int(const BigCount& value) {
  const std::string digits = value.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

/// Streaming iterator over one tree level (python __iter__/__next__).
struct LevelIter {
  LevelStream stream;

  py::object next() {
    if (auto node = stream.next()) return from_node(*node);
    throw py::stop_iteration();
  }
};

py::dict stat_dict(const TreeNode& node) {
  const StatRecord record = stat_record(node);
  py::dict out;
  out["family"] = family_name(record.family);
  out["level"] = record.level;
  out["label"] = record.label;
  if (record.exposure) out["exposure"] = *record.exposure;
  if (record.interaction) out["interaction"] = *record.interaction;
  if (record.last_descent) out["ldl"] = *record.last_descent;
  if (record.peaks) out["peaks"] = *record.peaks;
  return out;
}

}  // namespace

PYBIND11_MODULE(_lpcat, m) {
  m.doc() = "link patterns, Dyck paths, and 123-avoiding permutations on one generating tree";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<LinkPattern>(m, "LinkPattern",
                          "noncrossing perfect matching of 2n circle points")
      .def(py::init(
               [](const std::vector<std::pair<int, int>>& pairs, int strands) {
                 return LinkPattern::from_pairs(pairs, strands);
               }),
           py::arg("pairs"), py::arg("strands"))
      .def_static("from_partner", &LinkPattern::from_partner, py::arg("partner"))
      .def_property_readonly("strands", &LinkPattern::strands)
      .def_property_readonly("points", &LinkPattern::points)
      .def("partner", &LinkPattern::partner, py::arg("point"))
      .def("has_link", &LinkPattern::has_link, py::arg("a"), py::arg("b"))
      .def("pairs", &LinkPattern::pairs)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def("__hash__",
           [](const LinkPattern& p) { return std::hash<LinkPattern>{}(p); })
      .def("__str__", [](const LinkPattern& p) { return encode(p); })
      .def("__repr__",
           [](const LinkPattern& p) { return "LinkPattern('" + encode(p) + "')"; });

  py::class_<DyckPath>(m, "DyckPath", "balanced U/D step sequence never below the axis")
      .def(py::init([](const std::string& word) { return parse_dyck(word); }),
           py::arg("word"))
      .def_property_readonly("word", [](const DyckPath& d) { return encode(d); })
      .def_property_readonly("length", &DyckPath::length)
      .def_property_readonly("semilength", &DyckPath::semilength)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const DyckPath& d) { return py::hash(py::str(encode(d))); })
      .def("__str__", [](const DyckPath& d) { return encode(d); })
      .def("__repr__", [](const DyckPath& d) { return "DyckPath('" + encode(d) + "')"; });

  py::class_<Perm123>(m, "Perm123", "123-avoiding permutation in one-line notation")
      .def(py::init([](const std::vector<int>& values) {
             return Perm123::from_values(values);
           }),
           py::arg("values"))
      .def_property_readonly("values",
                             [](const Perm123& p) { return p.values(); })
      .def_property_readonly("size", &Perm123::size)
      .def("value", &Perm123::value, py::arg("position"))
      .def("first_ascent", &Perm123::first_ascent)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Perm123& p) { return py::hash(py::str(encode(p))); })
      .def("__str__", [](const Perm123& p) { return encode(p); })
      .def("__repr__", [](const Perm123& p) { return "Perm123('" + encode(p) + "')"; });

  // --- pattern surgery and the generator action ---------------------------
  m.def("exposure", &exposure, py::arg("pattern"), py::arg("gap") = 0,
        "arcs on the unbounded face after cutting at the gap");
  m.def("insert_strand", &insert_strand, py::arg("pattern"), py::arg("index"));
  m.def("delete_strand", &delete_strand, py::arg("pattern"), py::arg("index"));
  m.def("rotate", &rotate, py::arg("pattern"), py::arg("amount"));
  m.def(
      "apply_generator",
      [](const LinkPattern& pattern, int gen) {
        const ActionResult result = apply_generator(pattern, gen);
        return py::make_tuple(result.pattern, result.loops);
      },
      py::arg("pattern"), py::arg("gen"),
      "returns (pattern, closed_loops)");
  m.def(
      "apply_word",
      [](const LinkPattern& pattern, const std::vector<int>& word) {
        const ActionResult result = apply_word(pattern, word);
        return py::make_tuple(result.pattern, result.loops);
      },
      py::arg("pattern"), py::arg("word"));
  m.def("drag_outermost", &drag_outermost, py::arg("pattern"), py::arg("rank"));
  m.def("preimages", &preimages, py::arg("pattern"), py::arg("gen"),
        "patterns the generator maps onto `pattern`, by ascending exposure");

  // --- generating tree -----------------------------------------------------
  py::class_<LevelIter>(m, "LevelIter")
      .def("__iter__", [](LevelIter& it) -> LevelIter& { return it; })
      .def("__next__", &LevelIter::next)
      .def_property_readonly("max_frames",
                             [](const LevelIter& it) { return it.stream.max_frames(); });

  m.def("root", [](const std::string& family) { return from_node(tree_root(family_of(family))); },
        py::arg("family"));
  m.def("label", [](py::handle obj) { return label(to_node(obj)); }, py::arg("node"));
  m.def(
      "children",
      [](py::handle obj) {
        py::list out;
        for (const TreeNode& kid : children(to_node(obj))) out.append(from_node(kid));
        return out;
      },
      py::arg("node"));
  m.def("child", [](py::handle obj, int rank) { return from_node(child(to_node(obj), rank)); },
        py::arg("node"), py::arg("rank"));
  m.def("parent", [](py::handle obj) { return from_node(parent(to_node(obj))); },
        py::arg("node"));
  m.def("child_rank", [](py::handle obj) { return child_rank(to_node(obj)); },
        py::arg("node"));
  m.def("path_code", [](py::handle obj) { return path_code(to_node(obj)); },
        py::arg("node"));
  m.def(
      "node_at",
      [](const std::string& family, const PathCode& code) {
        return from_node(node_at(family_of(family), code));
      },
      py::arg("family"), py::arg("code"));
  m.def(
      "iterate_level",
      [](const std::string& family, int level) {
        return LevelIter{LevelStream(family_of(family), level)};
      },
      py::arg("family"), py::arg("level"),
      "lazy document-order iterator over one tree level");
  m.def(
      "count_level",
      [](const std::string& family, int level) {
        return count_level(family_of(family), level);
      },
      py::arg("family"), py::arg("level"));

  // --- statistics and conversions ------------------------------------------
  m.def("last_descent_length", &last_descent_length, py::arg("path"));
  m.def("peaks", &peaks, py::arg("path"));
  m.def("interaction", &interaction, py::arg("pattern"));
  m.def(
      "convert",
      [](py::handle obj, const std::string& family) {
        return from_node(convert(to_node(obj), family_of(family)));
      },
      py::arg("node"), py::arg("family"),
      "the object of the target family at the same tree address");
  m.def("stat_record", [](py::handle obj) { return stat_dict(to_node(obj)); },
        py::arg("node"));

  // --- exact counting -------------------------------------------------------
  m.def("catalan", [](int n) { return to_py_int(catalan(n)); }, py::arg("n"));
  m.def("binomial", [](int n, int k) { return to_py_int(binomial(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("count_by_exposure",
        [](int n, int k) { return to_py_int(count_by_exposure(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("count_by_interaction",
        [](int n, int ell) { return to_py_int(count_by_interaction(n, ell)); },
        py::arg("n"), py::arg("ell"));
  m.def(
      "histogram",
      [](const std::string& family, int level, const std::string& stat, int jobs) {
        py::dict out;
        for (const auto& [value, count] :
             histogram(family_of(family), level, statistic_of(stat), jobs))
          out[py::int_(value)] = to_py_int(count);
        return out;
      },
      py::arg("family"), py::arg("level"), py::arg("statistic"), py::arg("jobs") = 1);

  // --- relation checking ----------------------------------------------------
  py::class_<RelationCheck>(m, "RelationCheck")
      .def_readonly("relation", &RelationCheck::relation)
      .def_readonly("i", &RelationCheck::i)
      .def_readonly("j", &RelationCheck::j)
      .def_readonly("passed", &RelationCheck::pass)
      .def_readonly("witness", &RelationCheck::witness)
      .def("__repr__", [](const RelationCheck& c) {
        return "RelationCheck(" + c.relation + ", i=" + std::to_string(c.i) +
               ", j=" + std::to_string(c.j) + ", " + (c.pass ? "pass" : "fail") + ")";
      });

  py::class_<RelationReport>(m, "RelationReport")
      .def_readonly("strands", &RelationReport::strands)
      .def_readonly("basis_size", &RelationReport::basis_size)
      .def_readonly("checks", &RelationReport::checks)
      .def("core_pass", &RelationReport::core_pass)
      .def("literal_commutation",
           [](const RelationReport& report) -> py::object {
             const RelationCheck* check = report.literal_commutation();
             return check == nullptr ? py::none() : py::cast(*check);
           })
      .def("table", &RelationReport::table);

  m.def("check_relations", &check_relations, py::arg("strands"));

  // --- oracles --------------------------------------------------------------
  m.def("brute_patterns", &brute_patterns, py::arg("n"));
  m.def("brute_preimages", &brute_preimages, py::arg("target"), py::arg("gen"));
  m.def("brute_avoiders", &brute_avoiders, py::arg("n"));

  // --- codecs and rendering -------------------------------------------------
  m.def("encode", [](py::handle obj) { return encode(to_node(obj)); }, py::arg("node"));
  m.def(
      "parse",
      [](const std::string& line, const std::string& family) {
        return from_node(parse_record(line, family_of(family)));
      },
      py::arg("line"), py::arg("family"));
  m.def(
      "render",
      [](py::handle obj, const std::string& format, int radius, int spacing) {
        return render(to_node(obj), RenderSpec{format, radius, spacing});
      },
      py::arg("node"), py::arg("format") = "ascii-arc", py::arg("radius") = 100,
      py::arg("spacing") = 28);
}
