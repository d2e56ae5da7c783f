#include <doctest.h>

#include <Eigen/Dense>

#include "hkt/error.hpp"
#include "hkt/exact_linalg.hpp"
#include "hkt/lattice_io.hpp"
#include "support/generators.hpp"

using namespace hkt;
using namespace hkt::testing;

namespace {

GramLattice u3() { return builtin_lattice("U3").lattice; }

HyperTriple u3_triple() {
    auto s = builtin_lattice("U3");
    return HyperTriple::make(s.lattice, s.triple);
}

// Signature through floating eigenvalues: an independent route for
// well-conditioned small matrices.
SignatureReport eigen_signature(const Matrix<Integer>& g) {
    const auto n = static_cast<Eigen::Index>(g.rows());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = g(i, j).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    SignatureReport r;
    for (double ev : es.eigenvalues()) {
        if (ev > 1e-9)
            ++r.n_plus;
        else if (ev < -1e-9)
            ++r.n_minus;
        else
            ++r.n_zero;
    }
    return r;
}

IntegerVector iv(std::initializer_list<long> xs) {
    IntegerVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("q_eval hand values on U3") {
    const auto L = u3();
    CHECK(q_eval(L, rv({1, 1, 0, 0, 0, 0}), rv({1, 1, 0, 0, 0, 0})) == 2);
    CHECK(q_eval(L, rv({1, -1, 0, 0, 0, 0}), rv({1, 1, 0, 0, 0, 0})) == 0);
    CHECK(q_eval(L, rv({0, 0, 0, 0, 0, 0}), rv({3, -1, 2, 0, 5, 1})) == 0);
    CHECK_THROWS_AS(q_eval(L, rv({1, 1}), rv({1, 1, 0, 0, 0, 0})), Error);
}

TEST_CASE("q_eval is symmetric and bilinear on random rationals") {
    std::mt19937_64 rng(11);
    const auto L = builtin_lattice("K3").lattice;
    for (int t = 0; t < 200; ++t) {
        const auto x = random_rational_vector(rng, 22), y = random_rational_vector(rng, 22),
                   z = random_rational_vector(rng, 22);
        CHECK(q_eval(L, x, y) == q_eval(L, y, x));
        RationalVector xz(22);
        for (std::size_t i = 0; i < 22; ++i) xz[i] = x[i] + 3 * z[i];
        CHECK(q_eval(L, xz, y) == q_eval(L, x, y) + 3 * q_eval(L, z, y));
    }
}

TEST_CASE("signature of the built-in lattices") {
    CHECK(signature(u3()) == SignatureReport{3, 3, 0});
    CHECK(signature(builtin_lattice("diag222").lattice) == SignatureReport{3, 0, 0});
    // Frozen from tests/oracles/scan_oracle.py (Fraction LDL^T).
    CHECK(signature(builtin_lattice("K3").lattice) == SignatureReport{3, 19, 0});
    CHECK(signature(GramLattice(e8_gram())) == SignatureReport{8, 0, 0});
}

TEST_CASE("signature detects degeneracy and asymmetry") {
    CHECK(signature(GramLattice(Matrix<Integer>{{1, 1}, {1, 1}})) == SignatureReport{1, 0, 1});
    CHECK(signature(GramLattice(Matrix<Integer>{{0, 0}, {0, 0}})) == SignatureReport{0, 0, 2});
    CHECK(signature(GramLattice(Matrix<Integer>{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}})) == SignatureReport{1, 1, 1});
    try {
        (void)signature(GramLattice(Matrix<Integer>{{0, 1}, {2, 0}}));
        FAIL("expected NotSymmetric");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSymmetric);
    }
    CHECK_THROWS_AS(GramLattice(Matrix<Integer>(2, 3)), Error);
}

TEST_CASE("signature agrees with eigenvalue counts on random small forms") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + t % 5;
        Matrix<Integer> g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = d(rng);
        const auto exact = signature(GramLattice(g));
        const auto approx = eigen_signature(g);
        CHECK(exact == approx);
    }
}

TEST_CASE("signature is invariant under unimodular congruence") {
    std::mt19937_64 rng(17);
    for (const char* name : {"U3", "K3", "diag222"}) {
        const auto L = builtin_lattice(name).lattice;
        const auto base = signature(L);
        for (int t = 0; t < 10; ++t) {
            const auto u = random_unimodular(rng, L.rank());
            CHECK(signature(GramLattice(congruent(L.gram(), u))) == base);
        }
    }
}

TEST_CASE("project_to_V examples") {
    const auto L = u3();
    const auto t = u3_triple();
    CHECK(project_to_V(L, t, rv({1, 1, 0, 0, 0, 0})) == VCoords{1, 0, 0});
    CHECK(project_to_V(L, t, rv({1, -1, 0, 0, 0, 0})) == VCoords{0, 0, 0});
    CHECK(project_to_V(L, t, rv({1, 1, 1, 0, 0, 0})) == VCoords{1, Rational(1, 2), 0});
}

TEST_CASE("projection is idempotent and leaves a q-orthogonal remainder") {
    std::mt19937_64 rng(23);
    for (const char* name : {"U3", "K3"}) {
        auto s = builtin_lattice(name);
        const auto t = HyperTriple::make(s.lattice, s.triple);
        for (int k = 0; k < 200; ++k) {
            const auto x = random_rational_vector(rng, s.lattice.rank());
            const VCoords c = project_to_V(s.lattice, t, x);
            const RationalVector px = t.expand(c);
            CHECK(project_to_V(s.lattice, t, px) == c);
            RationalVector rest(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) rest[i] = x[i] - px[i];
            for (std::size_t a = 0; a < 3; ++a) CHECK(q_eval(s.lattice, rest, t[a]) == 0);
        }
    }
}

TEST_CASE("HyperTriple validation") {
    const auto L = u3();
    SUBCASE("accepts rational triples") {
        const auto t = HyperTriple::make(L, {RationalVector{Rational(1, 2), 1, 0, 0, 0, 0},
                                             RationalVector{0, 0, Rational(1, 2), 1, 0, 0},
                                             RationalVector{0, 0, 0, 0, Rational(1, 2), 1}});
        CHECK(t.norm() == 1);
    }
    SUBCASE("rejects unequal norms") {
        try {
            (void)HyperTriple::make(L, {rv({1, 1, 0, 0, 0, 0}), rv({0, 0, 1, 2, 0, 0}), rv({0, 0, 0, 0, 1, 1})});
            FAIL("expected InvalidTriple");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidTriple);
        }
    }
    SUBCASE("rejects non-orthogonal vectors") {
        CHECK_THROWS_AS(
            HyperTriple::make(L, {rv({1, 1, 0, 0, 0, 0}), rv({1, 1, 0, 0, 0, 0}), rv({0, 0, 0, 0, 1, 1})}), Error);
    }
    SUBCASE("rejects non-positive norm") {
        CHECK_THROWS_AS(
            HyperTriple::make(L, {rv({1, -1, 0, 0, 0, 0}), rv({0, 0, 1, -1, 0, 0}), rv({0, 0, 0, 0, 1, -1})}),
            Error);
    }
    SUBCASE("rejects wrong length") {
        CHECK_THROWS_AS(HyperTriple::make(L, {rv({1, 1}), rv({0, 0}), rv({0, 0})}), Error);
    }
}

TEST_CASE("integer_kernel examples") {
    CHECK(integer_kernel(Matrix<Integer>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).empty());
    CHECK(integer_kernel(Matrix<Integer>{{1, -1}}) == std::vector<IntegerVector>{iv({1, 1})});
    // Saturated: (2, -1), not (4, -2).
    CHECK(integer_kernel(Matrix<Integer>{{2, 4}}) == std::vector<IntegerVector>{iv({2, -1})});
    CHECK(integer_kernel(Matrix<Integer>{{0, 0}}).size() == 2);
}

TEST_CASE("integer_kernel is a saturated basis (box oracle)") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int t = 0; t < 40; ++t) {
        const std::size_t m = 1 + t % 2, n = 4;
        Matrix<Integer> a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
        const auto basis = integer_kernel(a);
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < m; ++i) {
                Integer s = 0;
                for (std::size_t j = 0; j < n; ++j) s += a(i, j) * v[j];
                CHECK(s == 0);
            }
            CHECK(content(v) == 1);
        }
        // Every kernel vector in a small box lies in the integer span.
        IntegerVector x(n);
        const long B = 3;
        std::vector<long> c(n, -B);
        while (true) {
            for (std::size_t j = 0; j < n; ++j) x[j] = c[j];
            bool in_kernel = true;
            for (std::size_t i = 0; i < m && in_kernel; ++i) {
                Integer s = 0;
                for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
                in_kernel = s == 0;
            }
            if (in_kernel) CHECK(in_integer_span(basis, x));
            std::size_t k = n;
            while (k > 0 && c[k - 1] == B) c[--k] = -B;
            if (k == 0) break;
            ++c[k - 1];
        }
    }
}

TEST_CASE("perp_V_basis on U3 matches the hand basis by double inclusion") {
    const auto L = u3();
    const auto basis = perp_V_basis(L, u3_triple());
    const std::vector<IntegerVector> hand = {iv({1, -1, 0, 0, 0, 0}), iv({0, 0, 1, -1, 0, 0}), iv({0, 0, 0, 0, 1, -1})};
    REQUIRE(basis.size() == 3);
    for (const auto& v : basis) CHECK(in_integer_span(hand, v));
    for (const auto& v : hand) CHECK(in_integer_span(basis, v));
}

TEST_CASE("perp_V_basis is empty when V is everything") {
    auto s = builtin_lattice("diag222");
    CHECK(perp_V_basis(s.lattice, HyperTriple::make(s.lattice, s.triple)).empty());
}

TEST_CASE("V-perp is negative definite on U3 and K3") {
    for (const char* name : {"U3", "K3"}) {
        auto s = builtin_lattice(name);
        const auto basis = perp_V_basis(s.lattice, HyperTriple::make(s.lattice, s.triple));
        const std::size_t r = s.lattice.rank();
        CHECK(basis.size() == r - 3);
        CHECK(signature(restricted_gram(s.lattice, basis)) == SignatureReport{0, r - 3, 0});
        for (const auto& v : basis) CHECK(content(v) == 1);
    }
}

TEST_CASE("hermite_rows is canonical for the row lattice") {
    std::mt19937_64 rng(41);
    const std::vector<IntegerVector> rows = {iv({2, 1, 0, 3}), iv({0, 1, 1, -1}), iv({4, 0, -2, 1})};
    const auto h = hermite_rows(rows);
    for (int t = 0; t < 10; ++t) {
        // Random unimodular recombination of the rows has the same HNF.
        const auto u = random_unimodular(rng, 3);
        std::vector<IntegerVector> mixed(3, IntegerVector(4));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t j = 0; j < 4; ++j) mixed[i][j] += u(i, k) * rows[k][j];
        CHECK(hermite_rows(mixed) == h);
    }
}
