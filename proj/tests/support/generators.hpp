#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hkt/exact_linalg.hpp"
#include "hkt/lattice_io.hpp"
#include "hkt/twistor_core.hpp"

namespace hkt::testing {

inline PeriodData builtin_data(const char* name) {
    LatticeSpec s = builtin_lattice(name);
    return PeriodData::make(std::move(s.lattice), std::move(s.triple));
}

inline RationalVector rv(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline RationalVector random_rational_vector(std::mt19937_64& rng, std::size_t n, long num_bound = 6,
                                             long den_bound = 5) {
    RationalVector v(n);
    for (auto& x : v) x = random_rational(rng, num_bound, den_bound);
    return v;
}

inline IntegerVector random_integer_vector(std::mt19937_64& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    IntegerVector v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

/// Random rational class with q > 0. On rank 22 (K3) the U-block
/// coordinates are dense and the E8(-1) coordinates sparse and small.
inline RationalVector random_positive_class(std::mt19937_64& rng, const PeriodData& data) {
    const std::size_t r = data.rank();
    std::bernoulli_distribution sparse(0.2);
    while (true) {
        RationalVector v(r);
        for (std::size_t i = 0; i < r; ++i) {
            if (i < 6 || r <= 6)
                v[i] = random_rational(rng, 6, 5);
            else if (sparse(rng))
                v[i] = random_rational(rng, 1, 3);
        }
        if (q_eval(data.lattice(), v, v) > 0) return v;
    }
}

/// Product of random elementary integer matrices; determinant ±1.
inline Matrix<Integer> random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
    Matrix<Integer> u(n, n);
    for (std::size_t i = 0; i < n; ++i) u(i, i) = 1;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> k(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = idx(rng), j = idx(rng);
        if (i == j) {
            for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
            continue;
        }
        const long f = k(rng);
        for (std::size_t c = 0; c < n; ++c) u(i, c) += f * u(j, c);
    }
    return u;
}

/// U^T G U.
inline Matrix<Integer> congruent(const Matrix<Integer>& g, const Matrix<Integer>& u) {
    const std::size_t n = g.rows();
    Matrix<Integer> gu(n, n), out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) gu(i, j) += g(i, k) * u(k, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out(i, j) += u(k, i) * gu(k, j);
    return out;
}

/// Solves sum_i c_i basis_i = v over Q by Gaussian elimination and reports
/// whether a solution exists with all c_i integral.
inline bool in_integer_span(const std::vector<IntegerVector>& basis, const IntegerVector& v) {
    const std::size_t k = basis.size(), n = v.size();
    if (k == 0) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    // Augmented n x (k + 1) system.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
        a[i][k] = v[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < k && row < n; ++c) {
        std::size_t p = row;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[row][c];
            for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (a[i][k] != 0) return false;
    for (std::size_t i = 0; i < row; ++i) {
        const Rational c = a[i][k] / a[i][pivot_col[i]];
        if (c.get_den() != 1) return false;
    }
    return true;
}

}  // namespace hkt::testing
