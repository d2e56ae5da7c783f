#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "hkt/matrix.hpp"
#include "hkt/rational.hpp"

namespace hkt {

/// Integral lattice with a symmetric bilinear form given by its Gram matrix in
/// a fixed basis. Only squareness is enforced on construction; symmetry and
/// nondegeneracy are checked by the operations that need them.
class GramLattice {
public:
    explicit GramLattice(Matrix<Integer> gram);

    std::size_t rank() const noexcept { return gram_.rows(); }
    const Matrix<Integer>& gram() const noexcept { return gram_; }
    bool is_symmetric() const;

private:
    Matrix<Integer> gram_;
};

struct SignatureReport {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;

    bool nondegenerate() const noexcept { return n_zero == 0; }
    friend bool operator==(const SignatureReport&, const SignatureReport&) = default;
};

/// Coordinates (a, b, c) of a vector of V in the triple basis.
using VCoords = std::array<Rational, 3>;

/// Three pairwise q-orthogonal vectors of equal positive norm spanning the
/// positive 3-plane V. Construction validates the invariants against a
/// lattice and caches the rows of gram * w so projections are dot products.
class HyperTriple {
public:
    static HyperTriple make(const GramLattice& lattice, std::array<RationalVector, 3> vectors);

    const RationalVector& operator[](std::size_t a) const { return w_[a]; }
    const std::array<RationalVector, 3>& vectors() const noexcept { return w_; }
    std::size_t rank() const noexcept { return w_[0].size(); }

    /// Common value q(w, w).
    const Rational& norm() const noexcept { return norm_; }

    /// Row a holds gram * w_a, so q(x, w_a) = <row a, x>.
    const Matrix<Rational>& dual_rows() const noexcept { return dual_; }

    /// dual_rows() scaled by one positive common factor to integers. Since all
    /// norms agree, integer_rows() * x is a positive multiple of p(x) in
    /// triple coordinates.
    const Matrix<Integer>& integer_rows() const noexcept { return dual_int_; }

    /// a*w_I + b*w_J + c*w_K in lattice coordinates.
    template <class T>
    RationalVector expand(std::span<const T, 3> coords) const;
    RationalVector expand(const VCoords& coords) const { return expand(std::span<const Rational, 3>(coords)); }

private:
    HyperTriple() = default;

    std::array<RationalVector, 3> w_;
    Rational norm_;
    Matrix<Rational> dual_;
    Matrix<Integer> dual_int_;
};

/// x^T * gram * y. Throws DimensionMismatch.
Rational q_eval(const GramLattice& lattice, std::span<const Rational> x, std::span<const Rational> y);

/// Exact congruence diagonalization. Throws NotSymmetric.
SignatureReport signature(const GramLattice& lattice);
SignatureReport signature(const Matrix<Rational>& symmetric);

/// q-orthogonal projection onto V in triple coordinates: a = q(x, w_I)/q(w_I, w_I), ...
VCoords project_to_V(const GramLattice& lattice, const HyperTriple& triple, std::span<const Rational> x);
VCoords project_to_V(const HyperTriple& triple, std::span<const Rational> x);

/// Saturated integral basis of Lambda ∩ V^perp, in Hermite normal form.
std::vector<IntegerVector> perp_V_basis(const GramLattice& lattice, const HyperTriple& triple);

/// Saturated basis of {v integral : A v = 0}, in row Hermite normal form
/// (positive pivots, entries above pivots reduced). Empty when A is injective.
std::vector<IntegerVector> integer_kernel(const Matrix<Integer>& a);

/// Row Hermite normal form of the rows of a matrix of full row rank; zero rows
/// are dropped. The result spans the same lattice.
std::vector<IntegerVector> hermite_rows(std::vector<IntegerVector> rows);

/// Gram matrix of a list of lattice vectors.
Matrix<Rational> restricted_gram(const GramLattice& lattice, std::span<const IntegerVector> basis);

template <class T>
RationalVector HyperTriple::expand(std::span<const T, 3> coords) const {
    RationalVector out(rank());
    for (std::size_t a = 0; a < 3; ++a) {
        const Rational c(coords[a]);
        if (c == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * w_[a][j];
    }
    return out;
}

}  // namespace hkt
