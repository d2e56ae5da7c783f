#include "hkt/twistor_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "detail/box.hpp"
#include "hkt/error.hpp"

namespace hkt {
namespace {

Unit3 normalized(double a, double b, double c) {
    const double n = std::sqrt(a * a + b * b + c * c);
    return {a / n, b / n, c / n};
}

Unit3 unit_of(const Ray& r) {
    // Scale by the largest magnitude first so huge rays stay finite in double.
    Integer m = 0;
    for (const auto& x : r)
        if (abs(x) > m) m = abs(x);
    const Rational a(r[0], m), b(r[1], m), c(r[2], m);
    return normalized(a.get_d(), b.get_d(), c.get_d());
}

bool is_zero(const std::array<Integer, 3>& s) { return s[0] == 0 && s[1] == 0 && s[2] == 0; }

bool cross_is_zero(const std::array<Integer, 3>& s, const Ray& d) {
    return s[1] * d[2] == s[2] * d[1] && s[2] * d[0] == s[0] * d[2] && s[0] * d[1] == s[1] * d[0];
}

double sine_to_unit(const double s[3], const Unit3& u) {
    const double n = std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);
    const double cx = s[1] * u[2] - s[2] * u[1];
    const double cy = s[2] * u[0] - s[0] * u[2];
    const double cz = s[0] * u[1] - s[1] * u[0];
    return std::sqrt(cx * cx + cy * cy + cz * cz) / n;
}

std::array<Integer, 3> integer_projection(const HyperTriple& triple, std::span<const Integer> x) {
    if (x.size() != triple.rank())
        throw Error(ErrorKind::DimensionMismatch, "vector has length " + std::to_string(x.size()) +
                                                      ", lattice rank is " + std::to_string(triple.rank()));
    const auto& rows = triple.integer_rows();
    std::array<Integer, 3> s;
    for (std::size_t a = 0; a < 3; ++a) {
        s[a] = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0 && rows(a, j) != 0) s[a] += rows(a, j) * x[j];
    }
    return s;
}

std::pair<Integer, Integer> size_key(const IntegerVector& v) {
    Integer inf = 0, l1 = 0;
    for (const auto& x : v) {
        const Integer m = abs(x);
        if (m > inf) inf = m;
        l1 += m;
    }
    return {inf, l1};
}

IntegerVector exact_witness(const PeriodData& data, const Ray& d) {
    const auto& S = data.triple().integer_rows();
    const std::size_t r = data.rank();
    Matrix<Integer> system(3, r);
    for (std::size_t j = 0; j < r; ++j) {
        system(0, j) = d[2] * S(1, j) - d[1] * S(2, j);
        system(1, j) = d[0] * S(2, j) - d[2] * S(0, j);
        system(2, j) = d[1] * S(0, j) - d[0] * S(1, j);
    }
    const auto kernel = integer_kernel(system);

    const IntegerVector* best = nullptr;
    for (const auto& v : kernel) {
        if (is_zero(integer_projection(data.triple(), v))) continue;
        if (!best || size_key(v) < size_key(*best)) best = &v;
    }
    if (!best)
        throw Error(ErrorKind::InternalError, "collinearity kernel has no vector with nonzero projection");
    IntegerVector w = *best;

    // Shrink by SU(2)-invariant directions; they do not change p(w).
    const auto perp = perp_V_basis(data.lattice(), data.triple());
    for (bool improved = true; improved;) {
        improved = false;
        for (const auto& b : perp)
            for (int sign : {1, -1}) {
                IntegerVector t = w;
                for (std::size_t j = 0; j < r; ++j) t[j] += sign * b[j];
                if (size_key(t) < size_key(w)) {
                    w = std::move(t);
                    improved = true;
                }
            }
    }

    const auto s = integer_projection(data.triple(), w);
    if (s[0] * d[0] + s[1] * d[1] + s[2] * d[2] < 0)
        for (auto& x : w) x = -x;
    return w;
}

}  // namespace

PeriodData PeriodData::make(GramLattice lattice, std::array<RationalVector, 3> triple) {
    if (!lattice.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "gram matrix is not symmetric");
    const SignatureReport sig = hkt::signature(lattice);
    if (!sig.nondegenerate())
        throw Error(ErrorKind::Degenerate, "gram matrix is degenerate (" + std::to_string(sig.n_zero) + " null directions)");
    const std::size_t r = lattice.rank();
    if (r < 3 || sig.n_plus != 3 || sig.n_minus != r - 3)
        throw Error(ErrorKind::InvalidSignature, "signature is (" + std::to_string(sig.n_plus) + ", " +
                                                     std::to_string(sig.n_minus) + "), expected (3, " +
                                                     std::to_string(r < 3 ? 0 : r - 3) + ")");
    HyperTriple t = HyperTriple::make(lattice, std::move(triple));
    return PeriodData(std::move(lattice), std::move(t), sig);
}

TwistorPoint TwistorPoint::from_ray(const Ray& direction) {
    if (is_zero(direction)) throw Error(ErrorKind::InvalidConfig, "twistor direction must be nonzero");
    const auto p = primitive_integer(std::span<const Integer>(direction.data(), 3));
    TwistorPoint t;
    t.ray_ = Ray{p[0], p[1], p[2]};
    t.unit_ = unit_of(*t.ray_);
    return t;
}

TwistorPoint TwistorPoint::from_coords(const VCoords& direction) {
    const auto p = primitive_integer(std::span<const Rational>(direction.data(), 3));
    return from_ray(Ray{p[0], p[1], p[2]});
}

TwistorPoint TwistorPoint::from_ints(std::int64_t a, std::int64_t b, std::int64_t c) {
    return from_ray(Ray{Integer(static_cast<long>(a)), Integer(static_cast<long>(b)), Integer(static_cast<long>(c))});
}

TwistorPoint TwistorPoint::from_unit(const Unit3& direction) {
    const double n2 = direction[0] * direction[0] + direction[1] * direction[1] + direction[2] * direction[2];
    if (!(n2 > 0) || !std::isfinite(n2)) throw Error(ErrorKind::InvalidConfig, "twistor direction must be nonzero");
    TwistorPoint t;
    t.unit_ = normalized(direction[0], direction[1], direction[2]);
    return t;
}

const Ray& TwistorPoint::ray() const {
    if (!ray_) throw Error(ErrorKind::IrrationalPoint, "twistor point has no exact rational ray");
    return *ray_;
}

int TwistorPoint::orientation() const {
    if (ray_) {
        for (const auto& x : *ray_)
            if (x != 0) return sgn(x);
    }
    for (double x : unit_)
        if (x != 0) return x > 0 ? 1 : -1;
    return 1;
}

Ray TwistorPoint::line_key() const {
    Ray k = ray();
    if (orientation() < 0)
        for (auto& x : k) x = -x;
    return k;
}

bool operator==(const TwistorPoint& a, const TwistorPoint& b) {
    if (a.ray_.has_value() != b.ray_.has_value()) return false;
    if (a.ray_) return *a.ray_ == *b.ray_;
    return a.unit_ == b.unit_;
}

std::optional<Ray> projection_ray(const HyperTriple& triple, std::span<const Integer> x) {
    const auto s = integer_projection(triple, x);
    if (is_zero(s)) return std::nullopt;
    const auto p = primitive_integer(std::span<const Integer>(s.data(), 3));
    return Ray{p[0], p[1], p[2]};
}

std::optional<Ray> projection_ray(const HyperTriple& triple, std::span<const Rational> x) {
    const VCoords c = project_to_V(triple, x);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) return std::nullopt;
    const auto p = primitive_integer(std::span<const Rational>(c.data(), 3));
    return Ray{p[0], p[1], p[2]};
}

RationalVector omega_of(const HyperTriple& triple, const TwistorPoint& L) {
    const Ray& d = L.ray();
    return triple.expand(std::span<const Integer, 3>(d.data(), 3));
}

PositiveClass pi_map(const PeriodData& data, std::span<const Rational> omega) {
    const Rational self = q_eval(data.lattice(), omega, omega);
    if (self <= 0) throw Error(ErrorKind::NotPositive, "q(omega, omega) = " + self.get_str() + " is not positive");
    auto ray = projection_ray(data.triple(), omega);
    if (!ray)
        throw Error(ErrorKind::InternalError,
                    "p(omega) = 0 for a positive class; V^perp is not negative definite for this lattice");

    // q(omega, omega_L) for L = +ray is norm * <ray, coords>; keep the
    // orientation on which it is positive.
    const VCoords c = project_to_V(data.triple(), omega);
    const Rational pairing = (*ray)[0] * c[0] + (*ray)[1] * c[1] + (*ray)[2] * c[2];
    if (pairing < 0)
        for (auto& x : *ray) x = -x;
    TwistorPoint point = TwistorPoint::from_ray(*ray);
    const Rational check = q_eval(data.lattice(), omega, omega_of(data.triple(), point));
    if (check <= 0) throw Error(ErrorKind::InternalError, "q(omega, omega_L) is not positive after orientation");
    return {RationalVector(omega.begin(), omega.end()), std::move(point)};
}

bool hodge_type_11(const PeriodData& data, std::span<const Rational> x, const TwistorPoint& L) {
    const Ray& d = L.ray();
    const VCoords c = project_to_V(data.triple(), x);
    return c[1] * d[2] == c[2] * d[1] && c[2] * d[0] == c[0] * d[2] && c[0] * d[1] == c[1] * d[0];
}

std::array<RationalVector, 2> two_zero_plane(const HyperTriple& triple, const TwistorPoint& L) {
    const Ray& d = L.ray();
    std::size_t k = 0;
    for (std::size_t a = 1; a < 3; ++a)
        if (abs(d[a]) < abs(d[k])) k = a;
    const Integer dd = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    std::array<Integer, 3> u;
    for (std::size_t a = 0; a < 3; ++a) u[a] = -d[k] * d[a];
    u[k] += dd;
    std::array<Integer, 3> v = {d[1] * u[2] - d[2] * u[1], d[2] * u[0] - d[0] * u[2], d[0] * u[1] - d[1] * u[0]};
    const auto pu = primitive_integer(std::span<const Integer>(u.data(), 3));
    const auto pv = primitive_integer(std::span<const Integer>(v.data(), 3));
    return {triple.expand(std::span<const Integer, 3>(pu.data(), 3)),
            triple.expand(std::span<const Integer, 3>(pv.data(), 3))};
}

GeneralTypeVerdict is_general_type(const PeriodData& data, const TwistorPoint& L, std::int64_t bound,
                                   std::span<const std::size_t> mask) {
    if (bound < 1) throw Error(ErrorKind::InvalidBound, "bound must be at least 1, got " + std::to_string(bound));
    if (L.is_exact()) return NotGeneralType{exact_witness(data, L.ray())};

    std::vector<std::size_t> active(mask.begin(), mask.end());
    if (active.empty()) {
        active.resize(data.rank());
        std::iota(active.begin(), active.end(), std::size_t{0});
    }
    for (auto i : active)
        if (i >= data.rank())
            throw Error(ErrorKind::InvalidConfig, "mask index " + std::to_string(i) + " outside rank " +
                                                      std::to_string(data.rank()));

    detail::BoxOdometer box(data.rank(), active, bound);
    detail::RowProjector proj(data.triple().integer_rows(), bound, active.size());
    const Unit3& u = L.unit();
    do {
        if (box.is_zero()) continue;
        double s[3];
        if (proj.fast()) {
            std::int64_t t[3];
            proj.apply(box.value(), t);
            if (t[0] == 0 && t[1] == 0 && t[2] == 0) continue;
            for (int a = 0; a < 3; ++a) s[a] = static_cast<double>(t[a]);
        } else {
            Integer t[3];
            proj.apply(box.value(), t);
            if (t[0] == 0 && t[1] == 0 && t[2] == 0) continue;
            for (int a = 0; a < 3; ++a) s[a] = t[a].get_d();
        }
        if (sine_to_unit(s, u) < kCollinearityTolerance) return NotGeneralType{to_integer(box.value())};
    } while (box.advance());
    return GeneralTypeUpToBound{bound};
}

bool certifies_non_general_type(const PeriodData& data, std::span<const Integer> lambda, const TwistorPoint& L) {
    const auto s = integer_projection(data.triple(), lambda);
    if (is_zero(s)) return false;
    if (L.is_exact()) return cross_is_zero(s, L.ray());
    const double sd[3] = {s[0].get_d(), s[1].get_d(), s[2].get_d()};
    return sine_to_unit(sd, L.unit()) < kCollinearityTolerance;
}

CP1Point stereographic(const TwistorPoint& L) {
    const Unit3& u = L.unit();
    bool north = false;
    if (L.is_exact()) {
        const Ray& d = L.ray();
        north = d[0] > 0 && d[1] == 0 && d[2] == 0;
    } else {
        north = u[0] == 1.0 && u[1] == 0.0 && u[2] == 0.0;
    }
    if (north) return {true, {0.0, 0.0}};
    return {false, std::complex<double>(u[1], u[2]) / (1.0 - u[0])};
}

Unit3 inverse_stereographic(const CP1Point& p) {
    if (p.infinite) return {1.0, 0.0, 0.0};
    const double s = std::norm(p.z);
    return {(s - 1.0) / (s + 1.0), 2.0 * p.z.real() / (s + 1.0), 2.0 * p.z.imag() / (s + 1.0)};
}

TwistorPoint antipode(const TwistorPoint& L) {
    if (L.is_exact()) {
        Ray r = L.ray();
        for (auto& x : r) x = -x;
        return TwistorPoint::from_ray(r);
    }
    const Unit3& u = L.unit();
    return TwistorPoint::from_unit({-u[0], -u[1], -u[2]});
}

double angle_between(const Unit3& u, const Unit3& v) {
    const double cx = u[1] * v[2] - u[2] * v[1];
    const double cy = u[2] * v[0] - u[0] * v[2];
    const double cz = u[0] * v[1] - u[1] * v[0];
    return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), u[0] * v[0] + u[1] * v[1] + u[2] * v[2]);
}

}  // namespace hkt
