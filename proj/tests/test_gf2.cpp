#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropreal/gf2.hpp"

#include <random>

using namespace tropreal;

namespace {

Gf2Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
    std::bernoulli_distribution bit(density);
    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c);
    return m;
}

// Size of the null space by enumerating every vector.
std::size_t brute_kernel_size(const Gf2Matrix& m) {
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.cols()); ++mask) {
        Gf2Vector v(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c)
            if ((mask >> c) & 1U) v.set(c);
        if (m.multiply(v).is_zero()) ++count;
    }
    return count;
}

Gf2Vector bits(std::initializer_list<int> b) {
    Gf2Vector v(b.size());
    std::size_t k = 0;
    for (int x : b) v.set(k++, x != 0);
    return v;
}

}  // namespace

TEST_CASE("vector operations") {
    Gf2Vector a = Gf2Vector::from_indices(130, {0, 64, 129});
    Gf2Vector b = Gf2Vector::from_indices(130, {64, 100});
    CHECK((a ^ b).ones() == std::vector<std::size_t>{0, 100, 129});
    CHECK((a & b).ones() == std::vector<std::size_t>{64});
    CHECK(a.dot(b));
    CHECK(a.popcount() == 3);
    CHECK(a.lowest() == 0);
    CHECK(Gf2Vector(7).lowest() == 7);
    CHECK(Gf2Vector(7).is_zero());
}

TEST_CASE("kernel examples") {
    CHECK(kernel(Gf2Matrix(3, 3)).dim() == 3);

    Gf2Matrix id(4, 4);
    for (std::size_t k = 0; k < 4; ++k) id.set(k, k);
    CHECK(kernel(id).dim() == 0);

    Gf2Matrix ones(2, 2);
    ones.set(0, 0), ones.set(0, 1), ones.set(1, 0), ones.set(1, 1);
    Gf2Subspace k = kernel(ones);
    REQUIRE(k.dim() == 1);
    CHECK(k.basis()[0] == bits({1, 1}));
}

TEST_CASE("solve_affine examples") {
    SolutionFlat full = solve_affine({}, 5);
    CHECK(full.kind == SolutionFlat::Kind::Linear);
    CHECK(full.dim() == 5);

    SolutionFlat one = solve_affine({{bits({0, 1, 1, 0, 1}), true}}, 5);
    CHECK(one.kind == SolutionFlat::Kind::Affine);
    CHECK(one.dim() == 4);
    CHECK(one.contains(bits({0, 1, 0, 0, 0})));
    CHECK_FALSE(one.contains(bits({0, 1, 1, 0, 0})));

    Gf2Vector v = bits({1, 0, 1});
    SolutionFlat none = solve_affine({{v, false}, {v, true}}, 3);
    CHECK(none.kind == SolutionFlat::Kind::Empty);
    CHECK_FALSE(none.contains(Gf2Vector(3)));
}

TEST_CASE("rank plus kernel dimension equals columns on random matrices") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<std::size_t> size(1, 40);
    std::uniform_real_distribution<double> dens(0.05, 0.6);
    for (int trial = 0; trial < 1000; ++trial) {
        Gf2Matrix m = random_matrix(rng, size(rng), size(rng), dens(rng));
        Gf2Subspace k = kernel(m);
        REQUIRE(m.rank() + k.dim() == m.cols());
        for (const auto& v : k.basis()) REQUIRE(m.multiply(v).is_zero());
        REQUIRE(Gf2Subspace::span(m.cols(), k.basis()).dim() == k.dim());
    }
}

TEST_CASE("kernel dimension matches enumeration on small matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> rows(1, 10), cols(1, 12);
    for (int trial = 0; trial < 200; ++trial) {
        Gf2Matrix m = random_matrix(rng, rows(rng), cols(rng), 0.35);
        REQUIRE((std::size_t{1} << kernel(m).dim()) == brute_kernel_size(m));
    }
}

TEST_CASE("solve_affine agrees with enumeration") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> count(0, 7);
    std::bernoulli_distribution bit(0.5);
    const std::size_t n = 8;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Gf2Constraint> cons;
        std::size_t k = count(rng);
        for (std::size_t c = 0; c < k; ++c) {
            Gf2Vector v(n);
            for (std::size_t i = 0; i < n; ++i) v.set(i, bit(rng));
            cons.push_back({v, bit(rng)});
        }
        SolutionFlat flat = solve_affine(cons, n);
        std::size_t solutions = 0;
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            Gf2Vector x(n);
            for (std::size_t i = 0; i < n; ++i) x.set(i, (mask >> i) & 1U);
            bool ok = true;
            for (const auto& c : cons) ok = ok && c.coefficients.dot(x) == c.rhs;
            if (ok) ++solutions;
            REQUIRE(flat.contains(x) == ok);
        }
        if (solutions == 0) REQUIRE(flat.kind == SolutionFlat::Kind::Empty);
        else REQUIRE(solutions == (std::size_t{1} << flat.dim()));
    }
}

TEST_CASE("subspace membership and insertion") {
    Gf2Subspace s(4);
    CHECK(s.insert(bits({1, 1, 0, 0})));
    CHECK(s.insert(bits({0, 1, 1, 0})));
    CHECK_FALSE(s.insert(bits({1, 0, 1, 0})));
    CHECK(s.contains(bits({1, 0, 1, 0})));
    CHECK_FALSE(s.contains(bits({0, 0, 0, 1})));
    CHECK(s.dim() == 2);
    CHECK(Gf2Subspace::full(6).dim() == 6);
}

TEST_CASE("phase lines") {
    for (std::uint8_t r = 0; r < 4; ++r)
        for (std::uint8_t d = 1; d < 4; ++d) {
            PhaseLine l(Z2Pair{r}, Z2Pair{d});
            auto e = l.elements();
            CHECK(e[0] != e[1]);
            CHECK(e[0] + e[1] == l.direction());
            CHECK(l.contains(Z2Pair{r}));
            CHECK(l == PhaseLine(Z2Pair{r} + Z2Pair{d}, Z2Pair{d}));
            CHECK(l.translated(Z2Pair{d}) == l);
        }
    CHECK_THROWS(PhaseLine(Z2Pair{1}, Z2Pair{0}));
}
