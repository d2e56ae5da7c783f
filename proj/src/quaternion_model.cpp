#include "hkt/quaternion_model.hpp"

#include <cmath>
#include <string>

#include "hkt/error.hpp"

namespace hkt::quat {
namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int levi_civita(int a, int b, int c, int d) {
    const int p[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) sign = -sign;
        }
    return sign;
}

Eigen::MatrixXd block_diagonal(const Eigen::Matrix4d& block, int n) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(4 * n, 4 * n);
    for (int b = 0; b < n; ++b) out.block<4, 4>(4 * b, 4 * b) = block;
    return out;
}

Eigen::Matrix4d right_multiplication(const Quaternion& q) {
    Eigen::Matrix4d m;
    const Quaternion basis[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
    for (int c = 0; c < 4; ++c) {
        const Quaternion v = basis[c] * q;
        m.col(c) << v.w, v.x, v.y, v.z;
    }
    return m;
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

Quaternion random_unit_imaginary(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Quaternion u{0, normal(rng), normal(rng), normal(rng)};
    return u.normalized();
}

Eigen::Matrix<double, 6, 6> action_matrix(const SU2Element& g) {
    Eigen::Matrix<double, 6, 6> m;
    for (int c = 0; c < 6; ++c) {
        Eigen::Matrix<double, 6, 1> e = Eigen::Matrix<double, 6, 1>::Zero();
        e(c) = 1;
        m.col(c) = form_coordinates(su2_act_on_form(g, form_from_coordinates(e)));
    }
    return m;
}

}  // namespace

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z, p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x, p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion Quaternion::normalized() const {
    const double n = norm();
    return {w / n, x / n, y / n, z / n};
}

bool Quaternion::is_unit_imaginary(double tol) const {
    return std::abs(w) <= tol && std::abs(x * x + y * y + z * z - 1.0) <= tol;
}

Quaternion random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Quaternion q{normal(rng), normal(rng), normal(rng), normal(rng)};
    return q.normalized();
}

Eigen::Matrix4d left_multiplication(const Quaternion& q) {
    Eigen::Matrix4d m;
    const Quaternion basis[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
    for (int c = 0; c < 4; ++c) {
        const Quaternion v = q * basis[c];
        m.col(c) << v.w, v.x, v.y, v.z;
    }
    return m;
}

Eigen::Matrix3d conjugation_rotation(const Quaternion& g) {
    Eigen::Matrix3d r;
    const Quaternion basis[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
    for (int c = 0; c < 3; ++c) {
        const Quaternion v = g.conj() * basis[c] * g;
        r.col(c) << v.x, v.y, v.z;
    }
    return r;
}

SU2Element::SU2Element(const Quaternion& q, int n) : q_(q), n_(n) {
    if (n < 1) throw Error(ErrorKind::DimensionMismatch, "n must be positive");
    if (std::abs(q.norm() - 1.0) > kTolerance)
        throw Error(ErrorKind::InvariantViolation, "SU(2) element must be a unit quaternion");
    rep_ = block_diagonal(left_multiplication(q), n);
}

SU2Element operator*(const SU2Element& a, const SU2Element& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::DimensionMismatch, "SU(2) elements act on different H^n");
    return SU2Element((a.q_ * b.q_).normalized(), a.n_);
}

ComplexStructureMatrix complex_structure_from(const Quaternion& u, int n) {
    if (n < 1) throw Error(ErrorKind::DimensionMismatch, "n must be positive");
    if (!u.is_unit_imaginary())
        throw Error(ErrorKind::NotUnitImaginary, "complex structure needs w = 0 and x^2 + y^2 + z^2 = 1");
    return {n, block_diagonal(left_multiplication(u), n)};
}

TwoForm induced_two_form(const ComplexStructureMatrix& L) {
    // G = Id, so omega_L(x, y) = <x, L y> has matrix L itself.
    TwoForm f{L.n, L.mat};
    if (max_abs(f.mat + f.mat.transpose()) > kTolerance)
        throw Error(ErrorKind::InvariantViolation, "induced 2-form is not antisymmetric");
    return f;
}

TwoForm su2_act_on_form(const SU2Element& g, const TwoForm& f) {
    if (g.n() != f.n) throw Error(ErrorKind::DimensionMismatch, "form and group element act on different H^n");
    return {f.n, g.rep().transpose() * f.mat * g.rep()};
}

Eigen::Matrix<double, 6, 6> hodge_star_2forms(int n) {
    if (n != 1) throw Error(ErrorKind::Unsupported, "Hodge star is only provided on R^4 (n = 1)");
    Eigen::Matrix<double, 6, 6> star = Eigen::Matrix<double, 6, 6>::Zero();
    // (*F)_ij = 1/2 sum_kl eps_ijkl F_kl; with F_kl = -F_lk this is
    // sum_{k<l} eps_ijkl F_kl.
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c)
            star(r, c) = levi_civita(kPairs[r][0], kPairs[r][1], kPairs[c][0], kPairs[c][1]);
    return star;
}

Eigen::Matrix<double, 6, 1> form_coordinates(const TwoForm& f) {
    if (f.n != 1) throw Error(ErrorKind::Unsupported, "form coordinates are only defined on R^4 (n = 1)");
    Eigen::Matrix<double, 6, 1> c;
    for (int r = 0; r < 6; ++r) c(r) = f.mat(kPairs[r][0], kPairs[r][1]);
    return c;
}

TwoForm form_from_coordinates(const Eigen::Matrix<double, 6, 1>& c) {
    TwoForm f{1, Eigen::MatrixXd::Zero(4, 4)};
    for (int r = 0; r < 6; ++r) {
        f.mat(kPairs[r][0], kPairs[r][1]) = c(r);
        f.mat(kPairs[r][1], kPairs[r][0]) = -c(r);
    }
    return f;
}

TwoForm hodge_star(const TwoForm& f) {
    return form_from_coordinates(hodge_star_2forms(f.n) * form_coordinates(f));
}

double form_inner(const TwoForm& f, const TwoForm& g) {
    if (f.n != g.n) throw Error(ErrorKind::DimensionMismatch, "forms live on different H^n");
    return 0.5 * f.mat.cwiseProduct(g.mat).sum();
}

std::array<TwoForm, 3> anti_self_dual_basis() {
    const Quaternion us[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
    std::array<TwoForm, 3> out;
    for (int a = 0; a < 3; ++a) out[a] = TwoForm{1, right_multiplication(us[a])};
    return out;
}

std::vector<IdentityCheck> verification_report(unsigned seed, int samples) {
    std::mt19937_64 rng(seed);
    std::vector<IdentityCheck> out;
    auto record = [&](std::string name, double err, double tol) { out.push_back({std::move(name), err <= tol, err}); };

    const auto I = complex_structure_from(Quaternion::i(), 1).mat;
    const auto J = complex_structure_from(Quaternion::j(), 1).mat;
    const auto K = complex_structure_from(Quaternion::k(), 1).mat;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(4, 4);
    record("I*J = K (exact)", max_abs(I * J - K), 0.0);
    record("J*I = -K (exact)", max_abs(J * I + K), 0.0);
    record("I^2 = J^2 = K^2 = -Id (exact)", std::max({max_abs(I * I + id), max_abs(J * J + id), max_abs(K * K + id)}), 0.0);

    double square = 0, orth = 0, anticomm = 0, antisym = 0, nondeg = 0, opposite = 0;
    for (int s = 0; s < samples; ++s) {
        const Quaternion u = random_unit_imaginary(rng);
        // v: unit imaginary orthogonal to u
        Quaternion v = random_unit_imaginary(rng);
        const double d = u.x * v.x + u.y * v.y + u.z * v.z;
        v = Quaternion{0, v.x - d * u.x, v.y - d * u.y, v.z - d * u.z}.normalized();
        for (int n : {1, 2}) {
            const auto Lu = complex_structure_from(u, n);
            const auto Lv = complex_structure_from(v, n);
            const Eigen::MatrixXd idn = Eigen::MatrixXd::Identity(4 * n, 4 * n);
            square = std::max(square, max_abs(Lu.mat * Lu.mat + idn));
            orth = std::max(orth, max_abs(Lu.mat.transpose() * Lu.mat - idn));
            anticomm = std::max(anticomm, max_abs(Lu.mat * Lv.mat + Lv.mat * Lu.mat));
            const TwoForm w = induced_two_form(Lu);
            antisym = std::max(antisym, max_abs(w.mat + w.mat.transpose()));
            nondeg = std::max(nondeg, std::abs(std::abs(w.mat.determinant()) - 1.0));
            const TwoForm wm = induced_two_form(complex_structure_from(-1.0 * u, n));
            opposite = std::max(opposite, max_abs(wm.mat + w.mat));
        }
    }
    record("L_u^2 = -Id, u random unit imaginary (n = 1, 2)", square, kTolerance);
    record("L_u orthogonal (n = 1, 2)", orth, kTolerance);
    record("L_u L_v = -L_v L_u for u orthogonal to v", anticomm, kTolerance);
    record("omega_L antisymmetric", antisym, kTolerance);
    record("omega_L nondegenerate (|det| = 1)", nondeg, 1e-9);
    record("omega_{-L} = -omega_L", opposite, kTolerance);

    const TwoForm wI = induced_two_form(complex_structure_from(Quaternion::i(), 1));
    const TwoForm wJ = induced_two_form(complex_structure_from(Quaternion::j(), 1));
    const TwoForm wK = induced_two_form(complex_structure_from(Quaternion::k(), 1));
    const double n2 = form_inner(wI, wI);
    record("omega_I, omega_J, omega_K orthogonal with equal norms",
           std::max({std::abs(form_inner(wI, wJ)), std::abs(form_inner(wI, wK)), std::abs(form_inner(wJ, wK)),
                     std::abs(form_inner(wJ, wJ) - n2), std::abs(form_inner(wK, wK) - n2)}),
           kTolerance);

    const auto star = hodge_star_2forms(1);
    record("star^2 = Id on 2-forms of R^4", max_abs(star * star - Eigen::Matrix<double, 6, 6>::Identity()), 0.0);
    record("omega_I, omega_J, omega_K self-dual",
           std::max({max_abs(hodge_star(wI).mat - wI.mat), max_abs(hodge_star(wJ).mat - wJ.mat),
                     max_abs(hodge_star(wK).mat - wK.mat)}),
           0.0);

    double commute = 0, asd = 0, rotation = 0, hom = 0;
    const auto asd_basis = anti_self_dual_basis();
    const TwoForm triple[3] = {wI, wJ, wK};
    for (int s = 0; s < samples; ++s) {
        const SU2Element g(random_unit(rng), 1);
        const SU2Element h(random_unit(rng), 1);
        const auto act = action_matrix(g);
        commute = std::max(commute, max_abs(star * act - act * star));
        for (const auto& f : asd_basis) asd = std::max(asd, max_abs(su2_act_on_form(g, f).mat - f.mat));
        const Eigen::Matrix3d R = conjugation_rotation(g.quaternion());
        for (int c = 0; c < 3; ++c) {
            const TwoForm moved = su2_act_on_form(g, triple[c]);
            for (int r = 0; r < 3; ++r)
                rotation = std::max(rotation, std::abs(form_inner(moved, triple[r]) / n2 - R(r, c)));
        }
        hom = std::max(hom, max_abs((g * h).rep() - g.rep() * h.rep()));
    }
    record("SU(2) action commutes with the Hodge star", commute, kTolerance);
    record("SU(2) acts trivially on anti-self-dual forms", asd, kTolerance);
    record("SU(2) rotates omega_I, omega_J, omega_K by u -> conj(g) u g", rotation, kTolerance);
    record("rep(g h) = rep(g) rep(h)", hom, kTolerance);
    return out;
}

}  // namespace hkt::quat
