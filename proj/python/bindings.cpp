#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hkt/cli.hpp"
#include "hkt/error.hpp"
#include "hkt/lattice_io.hpp"
#include "hkt/quaternion_model.hpp"
#include "hkt/scan.hpp"
#include "hkt/twistor_core.hpp"

namespace py = pybind11;
using namespace hkt;

namespace {

// Python ints and fractions.Fraction cross the boundary as decimal strings.
Rational to_rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

Integer to_integer(const py::handle& h) {
    const Rational r = to_rational(h);
    if (r.get_den() != 1) throw Error(ErrorKind::ParseError, "expected an integer, got " + r.get_str());
    return r.get_num();
}

RationalVector rational_vector(const py::sequence& s) {
    RationalVector out;
    for (const auto& h : s) out.push_back(to_rational(h));
    return out;
}

IntegerVector integer_vector(const py::sequence& s) {
    IntegerVector out;
    for (const auto& h : s) out.push_back(to_integer(h));
    return out;
}

Matrix<Integer> integer_matrix(const py::sequence& rows) {
    const std::size_t m = py::len(rows);
    const std::size_t n = m ? py::len(rows[0]) : 0;
    Matrix<Integer> a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        const py::sequence row = rows[i];
        if (py::len(row) != n) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
        for (std::size_t j = 0; j < n; ++j) a(i, j) = to_integer(row[j]);
    }
    return a;
}

py::object py_int(const Integer& x) { return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10)); }

py::object py_fraction(const Rational& x) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py_int(x.get_num()), py_int(x.get_den()));
}

py::list py_ints(std::span<const Integer> v) {
    py::list out;
    for (const auto& x : v) out.append(py_int(x));
    return out;
}

py::tuple py_ray(const Ray& r) { return py::make_tuple(py_int(r[0]), py_int(r[1]), py_int(r[2])); }

TwistorPoint point_from(const py::sequence& p) {
    if (py::len(p) != 3) throw Error(ErrorKind::DimensionMismatch, "twistor point needs three coordinates");
    bool exact = true;
    for (const auto& h : p) exact = exact && !py::isinstance<py::float_>(h);
    if (exact) {
        const auto v = rational_vector(p);
        return TwistorPoint::from_coords({v[0], v[1], v[2]});
    }
    return TwistorPoint::from_unit({p[0].cast<double>(), p[1].cast<double>(), p[2].cast<double>()});
}

py::dict py_point(const TwistorPoint& t) {
    py::dict d;
    d["ray"] = t.is_exact() ? py::object(py_ray(t.ray())) : py::object(py::none());
    d["unit"] = py::make_tuple(t.unit()[0], t.unit()[1], t.unit()[2]);
    return d;
}

py::list py_cloud(const PointCloud& cloud) {
    py::list out;
    for (const auto& e : cloud.entries()) out.append(py::make_tuple(py_ray(e.point.ray()), py::cast(e.witness)));
    return out;
}

ScanConfig scan_config(std::int64_t bound, std::vector<std::size_t> mask, unsigned threads) {
    ScanConfig c;
    c.box_bound = bound;
    c.coordinate_mask = std::move(mask);
    c.threads = threads;
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact twistor-sphere computations on integral period lattices";

    static py::exception<Error> hkt_error(m, "HktError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(hkt_error, e.what());
        }
    });

    py::class_<PeriodData>(m, "PeriodData")
        .def(py::init([](const py::sequence& gram, const py::sequence& triple) {
                 if (py::len(triple) != 3) throw Error(ErrorKind::InvalidTriple, "triple needs three vectors");
                 return PeriodData::make(GramLattice(integer_matrix(gram)),
                                         {rational_vector(triple[0]), rational_vector(triple[1]),
                                          rational_vector(triple[2])});
             }),
             py::arg("gram"), py::arg("triple"))
        .def_static(
            "load",
            [](const std::string& source) {
                LatticeSpec s = load_lattice(source);
                return PeriodData::make(std::move(s.lattice), std::move(s.triple));
            },
            py::arg("source"), "Built-in name (U3, K3, diag222) or JSON file path")
        .def_property_readonly("rank", &PeriodData::rank)
        .def_property_readonly("signature", [](const PeriodData& d) {
            return py::make_tuple(d.signature().n_plus, d.signature().n_minus, d.signature().n_zero);
        });

    m.def(
        "signature",
        [](const py::sequence& gram) {
            const auto s = signature(GramLattice(integer_matrix(gram)));
            return py::make_tuple(s.n_plus, s.n_minus, s.n_zero);
        },
        py::arg("gram"));
    m.def(
        "q_eval",
        [](const PeriodData& d, const py::sequence& x, const py::sequence& y) {
            return py_fraction(q_eval(d.lattice(), rational_vector(x), rational_vector(y)));
        },
        py::arg("data"), py::arg("x"), py::arg("y"));
    m.def(
        "project_to_v",
        [](const PeriodData& d, const py::sequence& x) {
            const VCoords c = project_to_V(d.lattice(), d.triple(), rational_vector(x));
            return py::make_tuple(py_fraction(c[0]), py_fraction(c[1]), py_fraction(c[2]));
        },
        py::arg("data"), py::arg("x"));
    m.def(
        "perp_v_basis",
        [](const PeriodData& d) {
            py::list out;
            for (const auto& v : perp_V_basis(d.lattice(), d.triple())) out.append(py_ints(v));
            return out;
        },
        py::arg("data"));
    m.def(
        "integer_kernel",
        [](const py::sequence& a) {
            py::list out;
            for (const auto& v : integer_kernel(integer_matrix(a))) out.append(py_ints(v));
            return out;
        },
        py::arg("matrix"));
    m.def(
        "pi_map", [](const PeriodData& d, const py::sequence& omega) { return py_point(pi_map(d, rational_vector(omega)).point); },
        py::arg("data"), py::arg("omega"));
    m.def(
        "hodge_type_11",
        [](const PeriodData& d, const py::sequence& x, const py::sequence& point) {
            return hodge_type_11(d, rational_vector(x), point_from(point));
        },
        py::arg("data"), py::arg("x"), py::arg("point"));
    m.def(
        "two_zero_plane",
        [](const PeriodData& d, const py::sequence& point) {
            const auto plane = two_zero_plane(d.triple(), point_from(point));
            py::list out;
            for (const auto& v : plane) {
                py::list row;
                for (const auto& x : v) row.append(py_fraction(x));
                out.append(row);
            }
            return out;
        },
        py::arg("data"), py::arg("point"));
    m.def(
        "is_general_type",
        [](const PeriodData& d, const py::sequence& point, std::int64_t bound, std::vector<std::size_t> mask) -> py::tuple {
            const auto verdict = is_general_type(d, point_from(point), bound, mask);
            if (const auto* ng = std::get_if<NotGeneralType>(&verdict))
                return py::make_tuple("NotGeneralType", py_ints(ng->witness));
            return py::make_tuple("GeneralTypeUpToBound", std::get<GeneralTypeUpToBound>(verdict).bound);
        },
        py::arg("data"), py::arg("point"), py::arg("bound") = 3, py::arg("mask") = std::vector<std::size_t>{});
    m.def(
        "stereographic",
        [](const py::sequence& point) -> py::object {
            const CP1Point z = stereographic(point_from(point));
            if (z.infinite) return py::float_(std::numeric_limits<double>::infinity());
            return py::cast(z.z);
        },
        py::arg("point"), "CP^1 coordinate; float('inf') at the north pole (1, 0, 0)");
    m.def("antipode", [](const py::sequence& point) { return py_point(antipode(point_from(point))); }, py::arg("point"));
    m.def(
        "scan_algebraic",
        [](const PeriodData& d, std::int64_t bound, std::vector<std::size_t> mask, unsigned threads) {
            return py_cloud(scan_algebraic(d, scan_config(bound, std::move(mask), threads)));
        },
        py::arg("data"), py::arg("bound"), py::arg("mask") = std::vector<std::size_t>{}, py::arg("threads") = 1u);
    m.def(
        "scan_non_general_type",
        [](const PeriodData& d, std::int64_t bound, std::vector<std::size_t> mask, unsigned threads) {
            return py_cloud(scan_non_general_type(d, scan_config(bound, std::move(mask), threads)));
        },
        py::arg("data"), py::arg("bound"), py::arg("mask") = std::vector<std::size_t>{}, py::arg("threads") = 1u);
    m.def(
        "covering_radius",
        [](const std::vector<std::array<double, 3>>& directions, int grid) {
            std::vector<Unit3> units;
            for (const auto& d : directions) units.push_back(TwistorPoint::from_unit(d).unit());
            return covering_radius(std::span<const Unit3>(units), grid);
        },
        py::arg("directions"), py::arg("grid") = 200);
    m.def(
        "quaternion_report",
        [](unsigned seed, int samples) {
            py::list out;
            for (const auto& c : quat::verification_report(seed, samples))
                out.append(py::make_tuple(c.name, c.passed, c.max_error));
            return out;
        },
        py::arg("seed") = 20240601u, py::arg("samples") = 100);
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
