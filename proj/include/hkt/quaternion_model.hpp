#pragma once

#include <Eigen/Dense>

#include <array>
#include <random>
#include <string>
#include <vector>

// Flat model of a hyperkähler tangent space: R^{4n} = H^n with basis
// (1, i, j, k) per component. Complex structures and SU(2) both act by left
// quaternion multiplication; the metric is <p, q> = Re(p conj(q)) summed over
// components, orientation (1, i, j, k).
namespace hkt::quat {

inline constexpr double kTolerance = 1e-12;

struct Quaternion {
    double w = 0, x = 0, y = 0, z = 0;

    static Quaternion one() { return {1, 0, 0, 0}; }
    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    Quaternion conj() const { return {w, -x, -y, -z}; }
    double norm() const;
    Quaternion normalized() const;
    bool is_unit_imaginary(double tol = kTolerance) const;

    friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
    }
    friend Quaternion operator*(double s, const Quaternion& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }
};

/// Matrix of left multiplication by q on H in basis (1, i, j, k).
Eigen::Matrix4d left_multiplication(const Quaternion& q);

/// 3x3 matrix of u -> conj(g) u g on the imaginary quaternions.
Eigen::Matrix3d conjugation_rotation(const Quaternion& g);

struct ComplexStructureMatrix {
    int n = 1;
    Eigen::MatrixXd mat;
};

struct TwoForm {
    int n = 1;
    Eigen::MatrixXd mat;  // omega(x, y) = x^T mat y

    double operator()(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const { return x.dot(mat * y); }
};

class SU2Element {
public:
    SU2Element(const Quaternion& q, int n);

    const Quaternion& quaternion() const noexcept { return q_; }
    int n() const noexcept { return n_; }
    const Eigen::MatrixXd& rep() const noexcept { return rep_; }

    friend SU2Element operator*(const SU2Element& a, const SU2Element& b);

private:
    Quaternion q_;
    int n_;
    Eigen::MatrixXd rep_;
};

/// Left multiplication by a unit imaginary u on H^n. Throws NotUnitImaginary.
ComplexStructureMatrix complex_structure_from(const Quaternion& u, int n);

/// mat = L with the standard metric. Throws InvariantViolation if the result
/// is not antisymmetric within tolerance.
TwoForm induced_two_form(const ComplexStructureMatrix& L);

/// Pullback rep^T mat rep. Throws DimensionMismatch.
TwoForm su2_act_on_form(const SU2Element& g, const TwoForm& f);

/// Hodge star on 2-forms of R^4 with the Euclidean metric and orientation
/// (1, i, j, k), as a 6x6 matrix on the basis dx01, dx02, dx03, dx12, dx13, dx23.
/// Throws Unsupported for n != 1.
Eigen::Matrix<double, 6, 6> hodge_star_2forms(int n = 1);
TwoForm hodge_star(const TwoForm& f);

/// Coordinates of a 2-form on R^4 in the basis (dx01, dx02, dx03, dx12, dx13, dx23).
Eigen::Matrix<double, 6, 1> form_coordinates(const TwoForm& f);
TwoForm form_from_coordinates(const Eigen::Matrix<double, 6, 1>& c);

/// Frobenius pairing sum_{a<b} f_ab g_ab.
double form_inner(const TwoForm& f, const TwoForm& g);

/// Anti-self-dual basis on R^4: the forms <x, R_u y> for right multiplication
/// by u = i, j, k.
std::array<TwoForm, 3> anti_self_dual_basis();

struct IdentityCheck {
    std::string name;
    bool passed = false;
    double max_error = 0;
};

/// Runs the flat-model identities (quaternion relations, antisymmetry and
/// nondegeneracy of induced forms, SU(2)/star commutation, rotation formula)
/// with a fixed seed.
std::vector<IdentityCheck> verification_report(unsigned seed = 20240601, int samples = 100);

/// Uniform on S^3 (normalized Gaussian 4-vector).
Quaternion random_unit(std::mt19937_64& rng);

}  // namespace hkt::quat
