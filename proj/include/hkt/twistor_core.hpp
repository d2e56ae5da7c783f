#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hkt/exact_linalg.hpp"

namespace hkt {

/// Lattice plus hyperkähler triple, validated for twistor use: symmetric,
/// nondegenerate, signature (3, r - 3), triple invariants.
class PeriodData {
public:
    /// Throws NotSymmetric, Degenerate, InvalidSignature or InvalidTriple.
    static PeriodData make(GramLattice lattice, std::array<RationalVector, 3> triple);

    const GramLattice& lattice() const noexcept { return lattice_; }
    const HyperTriple& triple() const noexcept { return triple_; }
    const SignatureReport& signature() const noexcept { return signature_; }
    std::size_t rank() const noexcept { return lattice_.rank(); }

private:
    PeriodData(GramLattice lattice, HyperTriple triple, SignatureReport sig)
        : lattice_(std::move(lattice)), triple_(std::move(triple)), signature_(sig) {}

    GramLattice lattice_;
    HyperTriple triple_;
    SignatureReport signature_;
};

/// Signed primitive integer direction in triple coordinates.
using Ray = std::array<Integer, 3>;
using Unit3 = std::array<double, 3>;

/// A point of the twistor sphere S^2 ⊂ V. Exact points carry the primitive
/// integer representative of their ray with its sign (L and -L differ);
/// float-only points carry just the unit vector. Equality is exact ray
/// equality; float-only points are never equal to exact ones.
class TwistorPoint {
public:
    /// Throws InvalidConfig on the zero vector.
    static TwistorPoint from_ray(const Ray& direction);
    static TwistorPoint from_coords(const VCoords& direction);
    static TwistorPoint from_ints(std::int64_t a, std::int64_t b, std::int64_t c);
    static TwistorPoint from_unit(const Unit3& direction);

    bool is_exact() const noexcept { return ray_.has_value(); }
    /// Throws IrrationalPoint for float-only points.
    const Ray& ray() const;
    const Unit3& unit() const noexcept { return unit_; }

    /// Ray with first nonzero coordinate made positive, and the sign removed.
    Ray line_key() const;
    int orientation() const;

    friend bool operator==(const TwistorPoint& a, const TwistorPoint& b);

private:
    TwistorPoint() = default;
    std::optional<Ray> ray_;
    Unit3 unit_{};
};

/// Kähler-class model: a positive rational class with the twistor point it
/// is assigned to by pi_map.
struct PositiveClass {
    RationalVector vec;
    TwistorPoint point;
};

struct NotGeneralType {
    IntegerVector witness;
};
struct GeneralTypeUpToBound {
    std::int64_t bound = 0;
};
using GeneralTypeVerdict = std::variant<NotGeneralType, GeneralTypeUpToBound>;

/// Rational multiple a*w_I + b*w_J + c*w_K of omega_L for the primitive ray
/// (a, b, c). Positive multiple of the Kähler class of L. Throws IrrationalPoint.
RationalVector omega_of(const HyperTriple& triple, const TwistorPoint& L);

/// Assigns a positive class to the unique twistor point L with
/// q(omega, omega_L) > 0 on the line of p(omega). Throws NotPositive; throws
/// InternalError if p(omega) vanishes.
PositiveClass pi_map(const PeriodData& data, std::span<const Rational> omega);

/// True iff p(x) is an exact rational multiple (possibly zero) of L's ray.
/// Throws IrrationalPoint for float-only L.
bool hodge_type_11(const PeriodData& data, std::span<const Rational> x, const TwistorPoint& L);

/// Two q-orthogonal vectors of V, both orthogonal to omega_L, spanning the
/// real (2,0)+(0,2) part at L; returns (w_J, w_K) for L = I.
std::array<RationalVector, 2> two_zero_plane(const HyperTriple& triple, const TwistorPoint& L);

/// Degree-2 general-type test. Exact points: integer kernel of the
/// collinearity system, returns a small witness. Float-only points: box
/// search over [-bound, bound] on the masked coordinates (all when empty) with
/// tolerance kCollinearityTolerance on the sine of the angle. Throws InvalidBound.
GeneralTypeVerdict is_general_type(const PeriodData& data, const TwistorPoint& L, std::int64_t bound,
                                   std::span<const std::size_t> mask = {});

inline constexpr double kCollinearityTolerance = 1e-9;

/// p(lambda) != 0 and p(lambda) collinear with L (either orientation); exact
/// for exact L, tolerance-based otherwise.
bool certifies_non_general_type(const PeriodData& data, std::span<const Integer> lambda, const TwistorPoint& L);

/// Point of CP^1: infinite == true encodes ∞.
struct CP1Point {
    bool infinite = false;
    std::complex<double> z;
};

/// (a, b, c) -> (b + i c) / (1 - a) on the unit representative.
CP1Point stereographic(const TwistorPoint& L);
Unit3 inverse_stereographic(const CP1Point& p);

TwistorPoint antipode(const TwistorPoint& L);

/// Angle in radians between unit representatives.
double angle_between(const Unit3& u, const Unit3& v);

/// Ray of p(x) in triple coordinates, or nullopt when p(x) = 0.
std::optional<Ray> projection_ray(const HyperTriple& triple, std::span<const Rational> x);
std::optional<Ray> projection_ray(const HyperTriple& triple, std::span<const Integer> x);

}  // namespace hkt
