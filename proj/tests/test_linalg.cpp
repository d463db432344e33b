#include <doctest.h>

#include "charplie/linalg.hpp"

using namespace charplie;

namespace {

Mat random_mat(const Field& f, int rows, int cols, Rng& rng) {
    Mat m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, f.sample(rng));
    return m;
}

} // namespace

TEST_CASE("kernel basics") {
    Field f = Field::make(2, 1);
    CHECK(kernel(Mat(f, 3, 3)).dim() == 3);
    CHECK(kernel(Mat::identity(f, 5)).dim() == 0);
}

TEST_CASE("kernel of a rank-4 product over GF(2^8)") {
    Field f = Field::make(2, 8);
    Rng rng(31337);
    // full-rank 10x4 and 4x6 factors give a rank-4 10x6 matrix
    Mat a(f, 10, 4), b(f, 4, 6);
    do { a = random_mat(f, 10, 4, rng); } while (a.rank() != 4);
    do { b = random_mat(f, 4, 6, rng); } while (b.rank() != 4);
    Mat m = a * b;
    CHECK(m.rank() == 4);
    Subspace ker = kernel(m);
    CHECK(ker.dim() == 2);
    for (int i = 0; i < ker.dim(); ++i) {
        Vec v = ker.basis_vector(i);
        Vec mv = m.apply(v);
        for (const auto& e : mv) CHECK(f.is_zero(e));
    }
}

TEST_CASE("rank-nullity on random matrices") {
    for (auto [p, k] : {std::pair{2, 1}, {2, 9}, {3, 4}}) {
        Field f = Field::make(p, k);
        Rng rng(std::uint64_t(p * 100 + k));
        for (int t = 0; t < 167; ++t) {
            int rows = 1 + int(rng.next() % 12), cols = 1 + int(rng.next() % 12);
            Mat m = random_mat(f, rows, cols, rng);
            CHECK(m.rank() + kernel(m).dim() == cols);
        }
    }
}

TEST_CASE("subspace lattice basics") {
    Field f = Field::make(2, 1);
    // complementary coordinate planes of GF(2)^4
    Subspace a = Subspace::from_rows(f, 4, {{f.one(), f.zero(), f.zero(), f.zero()},
                                            {f.zero(), f.one(), f.zero(), f.zero()}});
    Subspace b = Subspace::from_rows(f, 4, {{f.zero(), f.zero(), f.one(), f.zero()},
                                            {f.zero(), f.zero(), f.zero(), f.one()}});
    CHECK(intersect(a, b).dim() == 0);
    CHECK(sum(a, b).dim() == 4);
    CHECK(sum(a, b) == Subspace::full(f, 4));
    // a subset b => contains and absorption
    Subspace line = Subspace::from_rows(f, 4, {{f.one(), f.zero(), f.zero(), f.zero()}});
    CHECK(a.contains(line));
    CHECK(sum(line, a) == a);
}

TEST_CASE("Zassenhaus dimension identity on random subspace pairs") {
    for (auto [p, k] : {std::pair{2, 1}, {2, 6}, {3, 3}}) {
        Field f = Field::make(p, k);
        Rng rng(std::uint64_t(p * 10 + k));
        for (int t = 0; t < 40; ++t) {
            Subspace a = Subspace::from_matrix_rows(random_mat(f, 5, 9, rng));
            Subspace b = Subspace::from_matrix_rows(random_mat(f, 7, 9, rng));
            CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
            CHECK(sum(a, b).contains(a));
            CHECK(a.contains(intersect(a, b)));
        }
    }
}

TEST_CASE("RREF canonicity: random bases of the same subspace agree") {
    Field f = Field::make(2, 10);
    Rng rng(8);
    Mat m = random_mat(f, 4, 8, rng);
    Subspace s = Subspace::from_matrix_rows(m);
    for (int t = 0; t < 20; ++t) {
        // random invertible 4x4 change of basis
        Mat g(f, 4, 4);
        do { g = random_mat(f, 4, 4, rng); } while (g.rank() != 4);
        CHECK(Subspace::from_matrix_rows(g * m) == s);
    }
}

TEST_CASE("quotient map") {
    Field f = Field::make(2, 1);
    Rng rng(55);
    Mat m = random_mat(f, 3, 7, rng);
    Subspace s = Subspace::from_matrix_rows(m);
    Mat q = s.quotient_map();
    CHECK(q.rows() == 7 - s.dim());
    CHECK(kernel(q) == s);
    CHECK(q.rank() == q.rows());
}

TEST_CASE("solve") {
    Field f = Field::make(3, 2);
    Rng rng(4);
    Mat a = random_mat(f, 6, 4, rng);
    Vec x(4);
    for (auto& e : x) e = f.sample(rng);
    Vec b = a.apply(x);
    auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
}

TEST_CASE("field mismatch is rejected") {
    Mat a(Field::make(2, 1), 2, 2), b(Field::make(2, 2), 2, 2);
    CHECK_THROWS_AS(a * b, error);
    CHECK_THROWS_AS(a + b, error);
}

TEST_CASE("dump / parse round trip") {
    for (auto [p, k] : {std::pair{2, 1}, {2, 5}, {3, 2}}) {
        Field f = Field::make(p, k);
        Rng rng(std::uint64_t(60 + k));
        Mat m = random_mat(f, 3, 4, rng);
        CHECK(Mat::parse(m.dump()) == m);
    }
}
