#include "hkt/exact_linalg.hpp"

#include <string>
#include <utility>

#include "hkt/error.hpp"

namespace hkt {
namespace {

void require_length(std::size_t got, std::size_t rank, const char* what) {
    if (got != rank)
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + " has length " + std::to_string(got) + ", lattice rank is " + std::to_string(rank));
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

GramLattice::GramLattice(Matrix<Integer> gram) : gram_(std::move(gram)) {
    if (gram_.rows() == 0) throw Error(ErrorKind::DimensionMismatch, "gram matrix is empty");
    if (gram_.rows() != gram_.cols())
        throw Error(ErrorKind::DimensionMismatch, "gram matrix is " + std::to_string(gram_.rows()) + "x" +
                                                      std::to_string(gram_.cols()) + ", expected square");
}

bool GramLattice::is_symmetric() const {
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = i + 1; j < rank(); ++j)
            if (gram_(i, j) != gram_(j, i)) return false;
    return true;
}

Rational q_eval(const GramLattice& lattice, std::span<const Rational> x, std::span<const Rational> y) {
    const std::size_t r = lattice.rank();
    require_length(x.size(), r, "x");
    require_length(y.size(), r, "y");
    const auto& g = lattice.gram();
    Rational total = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < r; ++j)
            if (g(i, j) != 0 && y[j] != 0) row += g(i, j) * y[j];
        total += x[i] * row;
    }
    return total;
}

SignatureReport signature(const Matrix<Rational>& symmetric) {
    const std::size_t n = symmetric.rows();
    if (n != symmetric.cols()) throw Error(ErrorKind::DimensionMismatch, "signature needs a square matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (symmetric(i, j) != symmetric(j, i))
                throw Error(ErrorKind::NotSymmetric, "gram(" + std::to_string(i) + "," + std::to_string(j) +
                                                         ") != gram(" + std::to_string(j) + "," + std::to_string(i) + ")");

    Matrix<Rational> a = symmetric;
    SignatureReport report;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n && pivot == n; ++i)
            if (a(i, i) != 0) pivot = i;

        if (pivot == n) {
            // Zero diagonal: fold the first nonzero off-diagonal pair onto row i,
            // which makes a(i, i) = 2 a(i, j) != 0.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                report.n_zero += n - k;
                break;
            }
            for (std::size_t t = k; t < n; ++t) a(pi, t) += a(pj, t);
            for (std::size_t t = k; t < n; ++t) a(t, pi) += a(t, pj);
            pivot = pi;
        }

        a.swap_rows(k, pivot);
        a.swap_cols(k, pivot);
        const Rational p = a(k, k);
        if (p > 0)
            ++report.n_plus;
        else
            ++report.n_minus;

        // Schur complement on the trailing block.
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rational f = a(i, k) / p;
            for (std::size_t j = k + 1; j < n; ++j)
                if (a(k, j) != 0) a(i, j) -= f * a(k, j);
        }
    }
    return report;
}

SignatureReport signature(const GramLattice& lattice) {
    const std::size_t r = lattice.rank();
    Matrix<Rational> a(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a(i, j) = lattice.gram()(i, j);
    return signature(a);
}

HyperTriple HyperTriple::make(const GramLattice& lattice, std::array<RationalVector, 3> vectors) {
    const std::size_t r = lattice.rank();
    for (std::size_t a = 0; a < 3; ++a) require_length(vectors[a].size(), r, "triple vector");
    if (!lattice.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "gram matrix is not symmetric");

    HyperTriple t;
    t.w_ = std::move(vectors);
    t.dual_ = Matrix<Rational>(3, r);
    const auto& g = lattice.gram();
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t j = 0; j < r; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < r; ++k)
                if (g(j, k) != 0 && t.w_[a][k] != 0) s += g(j, k) * t.w_[a][k];
            t.dual_(a, j) = s;
        }

    auto pair = [&](std::size_t a, std::size_t b) {
        Rational s = 0;
        for (std::size_t j = 0; j < r; ++j) s += t.dual_(a, j) * t.w_[b][j];
        return s;
    };
    static constexpr const char* names[3] = {"w_I", "w_J", "w_K"};
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
            if (pair(a, b) != 0)
                throw Error(ErrorKind::InvalidTriple, std::string("triple not orthogonal: q(") + names[a] + ", " +
                                                          names[b] + ") = " + pair(a, b).get_str());
    t.norm_ = pair(0, 0);
    if (t.norm_ <= 0)
        throw Error(ErrorKind::InvalidTriple, "triple norm q(w_I, w_I) = " + t.norm_.get_str() + " is not positive");
    for (std::size_t a = 1; a < 3; ++a)
        if (pair(a, a) != t.norm_)
            throw Error(ErrorKind::InvalidTriple, std::string("triple norms differ: q(") + names[a] + ", " + names[a] +
                                                      ") = " + pair(a, a).get_str() + " vs " + t.norm_.get_str());

    Integer den = 1;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t j = 0; j < r; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.dual_(a, j).get_den_mpz_t());
    t.dual_int_ = Matrix<Integer>(3, r);
    Integer g_all = 0;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t j = 0; j < r; ++j) {
            t.dual_int_(a, j) = t.dual_(a, j).get_num() * (den / t.dual_(a, j).get_den());
            mpz_gcd(g_all.get_mpz_t(), g_all.get_mpz_t(), t.dual_int_(a, j).get_mpz_t());
        }
    if (g_all > 1)
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t j = 0; j < r; ++j)
                mpz_divexact(t.dual_int_(a, j).get_mpz_t(), t.dual_int_(a, j).get_mpz_t(), g_all.get_mpz_t());
    return t;
}

VCoords project_to_V(const HyperTriple& triple, std::span<const Rational> x) {
    require_length(x.size(), triple.rank(), "x");
    VCoords out;
    const auto& d = triple.dual_rows();
    for (std::size_t a = 0; a < 3; ++a) {
        Rational s = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0 && d(a, j) != 0) s += d(a, j) * x[j];
        out[a] = s / triple.norm();
    }
    return out;
}

VCoords project_to_V(const GramLattice& lattice, const HyperTriple& triple, std::span<const Rational> x) {
    require_length(triple.rank(), lattice.rank(), "triple");
    return project_to_V(triple, x);
}

std::vector<IntegerVector> hermite_rows(std::vector<IntegerVector> rows) {
    if (rows.empty()) return rows;
    const std::size_t n = rows.front().size();
    std::size_t r = 0;
    Integer g, s, t;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            if (rows[r][c] == 0) {
                std::swap(rows[r], rows[i]);
                continue;
            }
            const Integer a = rows[r][c], b = rows[i][c];
            extended_gcd(a, b, g, s, t);
            const Integer ag = a / g, bg = b / g;
            for (std::size_t j = c; j < n; ++j) {
                const Integer x = rows[r][j], y = rows[i][j];
                rows[r][j] = s * x + t * y;
                rows[i][j] = ag * y - bg * x;
            }
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (auto& x : rows[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i][c] == 0) continue;
            const Integer f = floor_div(rows[i][c], rows[r][c]);
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<IntegerVector> integer_kernel(const Matrix<Integer>& a) {
    const std::size_t m = a.rows(), n = a.cols();
    // Column operations on [A; I]; the identity block records the unimodular
    // transform, whose columns behind the pivots span ker A over Z.
    Matrix<Integer> w(m + n, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
    for (std::size_t j = 0; j < n; ++j) w(m + j, j) = 1;

    std::size_t piv = 0;
    Integer g, s, t;
    for (std::size_t row = 0; row < m && piv < n; ++row) {
        for (std::size_t j = piv + 1; j < n; ++j) {
            if (w(row, j) == 0) continue;
            if (w(row, piv) == 0) {
                w.swap_cols(piv, j);
                continue;
            }
            const Integer x = w(row, piv), y = w(row, j);
            extended_gcd(x, y, g, s, t);
            const Integer xg = x / g, yg = y / g;
            for (std::size_t i = row; i < m + n; ++i) {
                const Integer u = w(i, piv), v = w(i, j);
                w(i, piv) = s * u + t * v;
                w(i, j) = xg * v - yg * u;
            }
        }
        if (w(row, piv) != 0) ++piv;
    }

    std::vector<IntegerVector> basis;
    for (std::size_t j = piv; j < n; ++j) {
        IntegerVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = w(m + i, j);
        basis.push_back(std::move(v));
    }
    return hermite_rows(std::move(basis));
}

std::vector<IntegerVector> perp_V_basis(const GramLattice& lattice, const HyperTriple& triple) {
    require_length(triple.rank(), lattice.rank(), "triple");
    return integer_kernel(triple.integer_rows());
}

Matrix<Rational> restricted_gram(const GramLattice& lattice, std::span<const IntegerVector> basis) {
    Matrix<Rational> out(basis.size(), basis.size());
    std::vector<RationalVector> rb;
    rb.reserve(basis.size());
    for (const auto& b : basis) rb.push_back(to_rational(std::span<const Integer>(b)));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) out(i, j) = out(j, i) = q_eval(lattice, rb[i], rb[j]);
    return out;
}

}  // namespace hkt
