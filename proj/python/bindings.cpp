#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "altiset/collective.hpp"
#include "altiset/dependence.hpp"
#include "altiset/domains.hpp"
#include "altiset/errors.hpp"
#include "altiset/geoalt.hpp"
#include "altiset/induced_orders.hpp"
#include "altiset/layers.hpp"
#include "altiset/relation.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using namespace altiset;

using KeyValue = std::variant<std::int64_t, double, std::string>;

Key to_key(const KeyValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return Key(*i);
    if (const auto* d = std::get_if<double>(&v)) return Key::from_double(*d);
    return Key::parse(std::get<std::string>(v));
}

Universe make_universe(std::size_t size, const std::optional<std::vector<std::string>>& labels) {
    if (!labels) return Universe(size);
    if (labels->size() != size) throw DimensionError("label count differs from size");
    return Universe(*labels);
}

std::vector<Point2> to_points(const std::vector<std::pair<double, double>>& xy) {
    std::vector<Point2> out;
    out.reserve(xy.size());
    for (auto [x, y] : xy) out.push_back({x, y});
    return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

SubsetFamily make_family(const std::vector<std::string>& elements, const py::dict& h,
                         const std::vector<std::vector<std::string>>& family) {
    std::vector<double> values;
    for (const auto& e : elements) {
        if (!h.contains(e)) throw MembershipError("no valuation for element '" + e + "'");
        values.push_back(h[py::str(e)].cast<double>());
    }
    SubsetFamily f{ValuedGroundSet(elements, values), {}};
    for (const auto& names : family) {
        Subset m;
        for (const auto& n : names) {
            const auto it = std::find(elements.begin(), elements.end(), n);
            if (it == elements.end()) throw MembershipError("'" + n + "' is not an element");
            m.push_back(static_cast<std::size_t>(it - elements.begin()));
        }
        f.members.push_back(std::move(m));
    }
    return f;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Altisets of finite relations, order systems and datasets";

    auto base = py::register_exception<Error>(m, "AltisetError", PyExc_ValueError);
    py::register_exception<CyclicRelationError>(m, "CyclicRelationError", base);

    py::class_<FiniteRelation>(m, "Relation")
        .def(py::init([](std::size_t size, const std::vector<IndexPair>& pairs,
                         const std::optional<std::vector<std::string>>& labels) {
                 return FiniteRelation::from_pairs(make_universe(size, labels), pairs);
             }),
             "size"_a, "pairs"_a, "labels"_a = py::none())
        .def_property_readonly("size", &FiniteRelation::size)
        .def_property_readonly("labels", [](const FiniteRelation& r) { return r.universe().labels(); })
        .def("pairs", &FiniteRelation::pairs)
        .def("__contains__", [](const FiniteRelation& r, const IndexPair& p) {
            return p.first < r.size() && p.second < r.size() && r.contains(p.first, p.second);
        })
        .def("__eq__", [](const FiniteRelation& a, const FiniteRelation& b) { return a == b; })
        .def("inverse", &FiniteRelation::inverse)
        .def("asym", [](const FiniteRelation& r) { return asym_interior(r); })
        .def("transitive_closure", [](const FiniteRelation& r) { return transitive_closure(r); })
        .def("complementary_inversion", [](const FiniteRelation& r) { return complementary_inversion(r); })
        .def("is_symmetric", [](const FiniteRelation& r) { return is_symmetric(r); })
        .def("has_aa_property", [](const FiniteRelation& r) { return has_aa_property(r); })
        .def("__repr__", [](const FiniteRelation& r) {
            return "Relation(size=" + std::to_string(r.size()) + ", pairs=" + std::to_string(r.pair_count()) + ")";
        });

    m.def(
        "altiset",
        [](const FiniteRelation& r, const std::optional<std::vector<std::size_t>>& subset) {
            return ::altiset::altiset(r, subset ? *subset : all_indices(r.size())).indices();
        },
        "relation"_a, "subset"_a = py::none(), "Elements of the subset dominated by nothing in it.");

    m.def(
        "layers",
        [](const FiniteRelation& r) {
            const auto d = upper_layers(r);
            return py::dict("d"_a = d.class_count, "upper_index"_a = d.upper_index, "lower_index"_a = d.lower_index,
                            "upper_layers"_a = d.upper_layers(), "lower_layers"_a = d.lower_layers());
        },
        "relation"_a, "Successive upper and lower altisets; raises CyclicRelationError without the AA-property.");

    m.def(
        "chain_coloring",
        [](const FiniteRelation& r, const std::string& term) { return chain_coloring(ChainTerm::parse(term), r); },
        "relation"_a, "term"_a, "1-based colouring from a chain term over u/l of length d(R).");

    m.def(
        "longest_chain", [](const FiniteRelation& r) { return longest_chain(r); }, "strict_order"_a,
        "Length of the longest chain of a strict order.");

    m.def(
        "altiset_of_system",
        [](const std::vector<std::pair<std::vector<KeyValue>, std::string>>& orders, 
           const std::optional<std::vector<std::size_t>>& subset) {
            if (orders.empty()) throw ArgumentError("an order system needs at least one order");
            std::vector<KeyedOrder> keyed;
            for (const auto& [values, direction] : orders) {
                KeyedOrder o;
                for (const auto& v : values) o.keys.push_back(to_key(v));
                if (direction == "gain") o.direction = Direction::gain;
                else if (direction == "price") o.direction = Direction::price;
                else throw ArgumentError("direction must be 'gain' or 'price'");
                keyed.push_back(std::move(o));
            }
            const auto size = keyed.front().keys.size();
            const OrderSystem system(Universe(size), std::move(keyed));
            return (subset ? altiset_of_system(system, *subset) : altiset_of_system(system)).indices();
        },
        "orders"_a, "subset"_a = py::none(),
        "Altiset of a system of (keys, 'gain'|'price') orders; keys are ints, floats or decimal strings.");

    m.def(
        "increasingness_index",
        [](const std::vector<std::pair<double, double>>& xy) { return increasingness_index(PointSet2D(to_points(xy))); },
        "points"_a);
    m.def(
        "decreasingness_index",
        [](const std::vector<std::pair<double, double>>& xy) { return decreasingness_index(PointSet2D(to_points(xy))); },
        "points"_a);
    m.def(
        "epsilon", [](const std::vector<std::pair<double, double>>& xy) { return epsilon(PointSet2D(to_points(xy))); },
        "points"_a, "ln(iota_minus / iota_plus) / ln n.");
    m.def(
        "increasing_decomposition",
        [](const std::vector<std::pair<double, double>>& xy) {
            return increasing_decomposition(PointSet2D(to_points(xy)));
        },
        "points"_a, "Minimum partition into increasing blocks.");

    m.def(
        "collective_altiset",
        [](const std::vector<std::string>& elements, const py::dict& h,
           const std::vector<std::vector<std::string>>& family) {
            return collective_altiset(make_family(elements, h, family)).indices();
        },
        "elements"_a, "h"_a, "family"_a, "Indices of the significant members of the family.");
    m.def(
        "pairwise_elimination",
        [](const std::vector<std::string>& elements, const py::dict& h,
           const std::vector<std::vector<std::string>>& family) {
            return pairwise_elimination(make_family(elements, h, family)).indices();
        },
        "elements"_a, "h"_a, "family"_a);

    m.def(
        "skyline",
        [](const std::vector<std::pair<double, double>>& summits, const std::vector<double>& altitudes,
           std::pair<double, double> reference, const std::string& space, const std::string& method,
           std::size_t block_size) {
            const SummitField field(parse_metric_kind(space), to_points(summits), altitudes,
                                    {reference.first, reference.second});
            if (method == "oracle") return geo_altiset_oracle(field);
            if (method == "circular") return skyline_circular(field);
            if (method == "contour") return skyline_contour(field);
            if (method == "recursive") return skyline_recursive(field, block_size);
            if (method == "records") return record_events(field);
            throw ArgumentError("unknown skyline method '" + method + "'");
        },
        "summits"_a, "altitudes"_a, "reference"_a, "space"_a = "euclidean-2d", "method"_a = "oracle",
        "block_size"_a = 16, "Summits not both lower-or-equal and farther-or-equal than another, one strictly.");

    m.def(
        "evolve",
        [](const std::vector<std::pair<double, double>>& summits, const std::vector<double>& h0,
           std::pair<std::size_t, std::size_t> grid, double inflate, std::size_t max_steps) {
            const auto points = to_points(summits);
            const auto g = GridMeasure::around(points, inflate, grid.first, grid.second);
            const auto trace = evolve(points, h0, g, max_steps);
            return py::dict("stop_index"_a = trace.stop_index, "valuations"_a = trace.valuations);
        },
        "summits"_a, "h0"_a, "grid"_a = std::pair<std::size_t, std::size_t>{128, 128}, "inflate"_a = 0.25,
        "max_steps"_a = 1000, "Iterate h -> mu(Voronoi domain among the not-lower summits) to its fixed point.");
}
