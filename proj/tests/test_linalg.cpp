#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "likert/errors.hpp"
#include "likert/linalg.hpp"
#include "support/oracles.hpp"

using likert::cholesky;
using likert::EigenPair;
using likert::frobenius_norm;
using likert::generalized_eigen;
using likert::jacobi_eigen;
using likert::Mat;
using likert::sandwich;
using likert::SymMatrix;

namespace {

Mat make(std::size_t rows, std::size_t cols, std::initializer_list<double> values) {
    Mat m(rows, cols);
    std::size_t idx = 0;
    for (double v : values) {
        m(idx / cols, idx % cols) = v;
        ++idx;
    }
    return m;
}

Mat toy_x() { return make(2, 3, {1, 1, 2, 1, 2, 2}); }

double quad(const SymMatrix& s, const std::vector<double>& v) {
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) acc += v[i] * s(i, j) * v[j];
    }
    return acc;
}

}  // namespace

TEST_CASE("SymMatrix symmetrizes and rejects skew") {
    Mat slightly_off = make(2, 2, {1.0, 2.0 + 1e-14, 2.0, 3.0});
    const SymMatrix s(slightly_off);
    CHECK(s(0, 1) == s(1, 0));

    CHECK_THROWS_AS(SymMatrix(make(2, 2, {1, 2, 3, 4})), likert::ValidationError);
    CHECK_THROWS_AS(SymMatrix(Mat(2, 3)), likert::DimensionError);
}

TEST_CASE("sandwich on the toy matrices matches the naive oracle") {
    const Mat x = toy_x();
    const Mat laplacian =
        make(3, 3, {0.5, -0.5, 0.0, -0.5, 1.0, -0.5, 0.0, -0.5, 0.5});
    const SymMatrix m = sandwich(laplacian, x);
    CHECK(m(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(m(0, 1) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(m(1, 1) == doctest::Approx(0.5).epsilon(1e-14));

    const Mat degrees = make(3, 3, {0.5, 0, 0, 0, 1, 0, 0, 0, 0.5});
    const SymMatrix b = sandwich(degrees, x);
    CHECK(b(0, 0) == 3.5);
    CHECK(b(0, 1) == 4.5);
    CHECK(b(1, 1) == 6.5);

    for (const Mat& inner : {laplacian, degrees}) {
        const Mat expected = oracles::naive_sandwich(x, inner);
        const SymMatrix got = sandwich(inner, x);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                CHECK(got(i, j) == doctest::Approx(expected(i, j)).epsilon(1e-13));
            }
        }
    }

    const SymMatrix zero = sandwich(Mat(3, 3), x);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) CHECK(zero(i, j) == 0.0);
    }

    CHECK_THROWS_AS(sandwich(Mat(4, 4), x), likert::DimensionError);
}

TEST_CASE("cholesky factors the worked 2x2 example") {
    const Mat g = cholesky(SymMatrix(make(2, 2, {4, 2, 2, 5})));
    CHECK(g(0, 0) == 2.0);
    CHECK(g(0, 1) == 0.0);
    CHECK(g(1, 0) == 1.0);
    CHECK(g(1, 1) == 2.0);
}

TEST_CASE("cholesky identity, diagonal exactness, and failure") {
    const Mat id = cholesky(SymMatrix(Mat::identity(4)));
    CHECK(id == Mat::identity(4));

    const Mat diag = make(3, 3, {4, 0, 0, 0, 9, 0, 0, 0, 0.25});
    const Mat g = cholesky(SymMatrix(diag));
    CHECK(g(0, 0) == 2.0);
    CHECK(g(1, 1) == 3.0);
    CHECK(g(2, 2) == 0.5);

    CHECK_THROWS_AS(cholesky(SymMatrix(make(2, 2, {1, 2, 2, 1}))), likert::NotPositiveDefinite);
    CHECK_THROWS_AS(cholesky(SymMatrix(Mat(3, 3))), likert::NotPositiveDefinite);
}

TEST_CASE("property: cholesky reconstruction error stays below 1e-10 * norm") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t order = 2 + rng() % 19;
        const SymMatrix b(oracles::random_positive_definite(rng, order));
        const Mat g = cholesky(b);
        const double scale = frobenius_norm(b.mat());
        for (std::size_t i = 0; i < order; ++i) {
            for (std::size_t j = 0; j < order; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < order; ++k) acc += g(i, k) * g(j, k);
                CHECK(std::abs(acc - b(i, j)) <= 1e-10 * scale);
            }
        }
    }
}

TEST_CASE("jacobi on a diagonal matrix returns sorted unit vectors") {
    const auto pairs = jacobi_eigen(SymMatrix(make(3, 3, {3, 0, 0, 0, 1, 0, 0, 0, 2})));
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].value == 1.0);
    CHECK(pairs[1].value == 2.0);
    CHECK(pairs[2].value == 3.0);
    CHECK(std::abs(pairs[0].vector[1]) == 1.0);
    CHECK(std::abs(pairs[1].vector[2]) == 1.0);
    CHECK(std::abs(pairs[2].vector[0]) == 1.0);
}

TEST_CASE("jacobi solves the closed-form 2x2") {
    const auto pairs = jacobi_eigen(SymMatrix(make(2, 2, {2, 1, 1, 2})));
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pairs[1].value == doctest::Approx(3.0).epsilon(1e-12));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(pairs[0].vector[0]) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
    CHECK(pairs[0].vector[0] * pairs[0].vector[1] < 0.0);  // (1,-1) direction
    CHECK(pairs[1].vector[0] * pairs[1].vector[1] > 0.0);  // (1,1) direction
}

TEST_CASE("property: jacobi reconstructs random symmetric matrices") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t order = 2 + rng() % 11;
        const SymMatrix s(oracles::random_symmetric(rng, order, 3.0));
        const auto pairs = jacobi_eigen(s);
        REQUIRE(pairs.size() == order);
        const double scale = frobenius_norm(s.mat());

        for (std::size_t i = 1; i < order; ++i) CHECK(pairs[i - 1].value <= pairs[i].value);

        // Sum of lambda_k v_k v_k^T puts the matrix back together.
        for (std::size_t i = 0; i < order; ++i) {
            for (std::size_t j = 0; j < order; ++j) {
                double acc = 0.0;
                for (const EigenPair& p : pairs) acc += p.value * p.vector[i] * p.vector[j];
                CHECK(std::abs(acc - s(i, j)) <= 1e-9 * std::max(1.0, scale));
            }
        }

        // ||V^T V - I||_F <= 1e-10.
        double ortho = 0.0;
        for (std::size_t a = 0; a < order; ++a) {
            for (std::size_t b = 0; b < order; ++b) {
                double dot = 0.0;
                for (std::size_t i = 0; i < order; ++i) {
                    dot += pairs[a].vector[i] * pairs[b].vector[i];
                }
                const double target = a == b ? 1.0 : 0.0;
                ortho += (dot - target) * (dot - target);
            }
        }
        CHECK(std::sqrt(ortho) <= 1e-10);

        // Residual per pair.
        for (const EigenPair& p : pairs) {
            for (std::size_t i = 0; i < order; ++i) {
                double sv = 0.0;
                for (std::size_t j = 0; j < order; ++j) sv += s(i, j) * p.vector[j];
                CHECK(std::abs(sv - p.value * p.vector[i]) <= 1e-9 * std::max(1.0, scale));
            }
        }
    }
}

TEST_CASE("generalized eigensolve matches the 2x2 closed form on the toy problem") {
    const Mat m = make(2, 2, {0.5, 0, 0, 0.5});
    const Mat b = make(2, 2, {3.5, 4.5, 4.5, 6.5});
    const auto pairs = generalized_eigen(SymMatrix(m), SymMatrix(b));
    REQUIRE(pairs.size() == 2);

    const auto oracle = oracles::closed_form_generalized_2x2(m, b);
    CHECK(pairs[0].value == doctest::Approx(oracle[0].value).epsilon(1e-12));
    CHECK(pairs[1].value == doctest::Approx(oracle[1].value).epsilon(1e-12));
    CHECK(pairs[0].value == doctest::Approx(0.051316701949).epsilon(1e-9));

    // Direction matches (0.72075922..., 1) up to sign.
    const double ratio = pairs[0].vector[0] / pairs[0].vector[1];
    CHECK(ratio == doctest::Approx(oracle[0].v0 / oracle[0].v1).epsilon(1e-10));
    CHECK(ratio == doctest::Approx(0.7207592201).epsilon(1e-8));

    // Vectors come back B-normalized.
    CHECK(quad(SymMatrix(b), pairs[0].vector) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("generalized eigensolve reduces to jacobi when B is the identity") {
    std::mt19937_64 rng(5150);
    const SymMatrix m(oracles::random_symmetric(rng, 6, 2.0));
    const auto standard = jacobi_eigen(m);
    const auto general = generalized_eigen(m, SymMatrix(Mat::identity(6)));
    REQUIRE(standard.size() == general.size());
    for (std::size_t k = 0; k < standard.size(); ++k) {
        CHECK(general[k].value == doctest::Approx(standard[k].value).epsilon(1e-12));
    }
}

TEST_CASE("M = B makes every generalized eigenvalue 1") {
    std::mt19937_64 rng(6174);
    const SymMatrix b(oracles::random_positive_definite(rng, 5));
    for (const EigenPair& p : generalized_eigen(b, b)) {
        CHECK(p.value == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("property: generalized residual, B-orthogonality, and Rayleigh minimality") {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t order = 2 + rng() % 19;
        const SymMatrix m(oracles::random_symmetric(rng, order, 2.0));
        const SymMatrix b(oracles::random_positive_definite(rng, order));
        const auto pairs = generalized_eigen(m, b);
        REQUIRE(pairs.size() == order);

        const double norm_scale = frobenius_norm(m.mat()) + frobenius_norm(b.mat());
        for (const EigenPair& p : pairs) {
            double a_norm = 0.0;
            for (double v : p.vector) a_norm += v * v;
            a_norm = std::sqrt(a_norm);
            double residual = 0.0;
            for (std::size_t i = 0; i < order; ++i) {
                double mv = 0.0, bv = 0.0;
                for (std::size_t j = 0; j < order; ++j) {
                    mv += m(i, j) * p.vector[j];
                    bv += b(i, j) * p.vector[j];
                }
                residual += (mv - p.value * bv) * (mv - p.value * bv);
            }
            CHECK(std::sqrt(residual) <= 1e-8 * norm_scale * a_norm);
            CHECK(quad(b, p.vector) == doctest::Approx(1.0).epsilon(1e-10));
        }

        // B-orthogonality across pairs.
        for (std::size_t p1 = 0; p1 + 1 < order; ++p1) {
            double cross = 0.0;
            for (std::size_t i = 0; i < order; ++i) {
                for (std::size_t j = 0; j < order; ++j) {
                    cross += pairs[p1].vector[i] * b(i, j) * pairs[p1 + 1].vector[j];
                }
            }
            CHECK(std::abs(cross) <= 1e-8);
        }

        // No random probe beats the smallest eigenvalue's Rayleigh quotient.
        for (int probe = 0; probe < 200; ++probe) {
            std::vector<double> r(order);
            for (double& v : r) v = dist(rng);
            const double quotient = quad(m, r) / quad(b, r);
            CHECK(pairs[0].value <= quotient + 1e-9);
        }
    }
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(
        generalized_eigen(SymMatrix(Mat::identity(3)), SymMatrix(Mat::identity(2))),
        likert::DimensionError);
}
