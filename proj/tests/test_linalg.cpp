#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "primfree/linalg.hpp"

using namespace primfree;

namespace {

QMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
    QMatrix m(static_cast<int>(rows.size()),
              rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (long long x : row)
            m.at(r, c++) = Rational(x);
        ++r;
    }
    return m;
}

QVector vec(std::initializer_list<long long> xs) {
    QVector v;
    for (long long x : xs)
        v.push_back(Rational(x));
    return v;
}

QMatrix random_matrix(std::mt19937& rng, int max_dim = 8) {
    std::uniform_int_distribution<int> dim(1, max_dim), entry(-5, 5);
    QMatrix m(dim(rng), dim(rng));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            m.at(r, c) = Rational(entry(rng));
    return m;
}

}  // namespace

TEST_CASE("rref on hand-worked matrices") {
    // [[2,4],[1,2]] reduces to the single row [1,2] with pivot column 0.
    auto [r1, p1] = rref(mat({{2, 4}, {1, 2}}));
    CHECK(r1 == mat({{1, 2}}));
    CHECK(p1 == std::vector<int>{0});

    auto [r2, p2] = rref(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(r2 == mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(p2 == std::vector<int>{0, 1, 2});

    auto [r3, p3] = rref(mat({{0, 0}, {0, 0}}));
    CHECK(r3.rows == 0);
    CHECK(r3.cols == 2);
    CHECK(p3.empty());
}

TEST_CASE("rref is idempotent and pivots increase") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 60; ++iter) {
        QMatrix m = random_matrix(rng);
        auto [r, p] = rref(m);
        auto [rr, pp] = rref(r);
        CHECK(r == rr);
        CHECK(p == pp);
        for (size_t i = 1; i < p.size(); ++i)
            CHECK(p[i - 1] < p[i]);
    }
}

TEST_CASE("nullspace basics") {
    // Single equation x + y = 0: kernel is the line through (1,-1),
    // canonicalized with leading 1.
    QSubspace k = nullspace(mat({{1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k.basis.row(0) == vec({1, -1}));

    CHECK(nullspace(mat({{1, 0}, {0, 1}})).dim() == 0);

    QMatrix zero(3, 4);
    CHECK(nullspace(zero).dim() == 4);
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 60; ++iter) {
        QMatrix m = random_matrix(rng);
        QSubspace k = nullspace(m);
        CHECK(rank(m) + k.dim() == m.cols);
        // every kernel basis vector really is killed by m
        for (int r = 0; r < k.basis.rows; ++r)
            CHECK(is_zero(mat_apply(m, k.basis.row(r))));
    }
}

TEST_CASE("complement picks non-pivot coordinates") {
    QSubspace s1 = QSubspace::span(2, {vec({1, 0})});
    CHECK(complement(s1).basis.row(0) == vec({0, 1}));

    CHECK(complement(QSubspace::full(3)).dim() == 0);

    // span{(1,1)} has its pivot in column 0, so the complement is e_1.
    QSubspace s2 = QSubspace::span(2, {vec({1, 1})});
    QSubspace c2 = complement(s2);
    CHECK(c2.dim() == 1);
    CHECK(c2.basis.row(0) == vec({0, 1}));
}

TEST_CASE("complement is a true direct summand") {
    std::mt19937 rng(424242);
    for (int iter = 0; iter < 60; ++iter) {
        QMatrix m = random_matrix(rng);
        std::vector<QVector> rows;
        for (int r = 0; r < m.rows; ++r)
            rows.push_back(m.row(r));
        QSubspace s = QSubspace::span(m.cols, rows);
        QSubspace c = complement(s);
        CHECK(s.dim() + c.dim() == m.cols);
        CHECK(sum(s, c).dim() == m.cols);
        CHECK(intersect(s, c).dim() == 0);
    }
}

TEST_CASE("intersect basics") {
    QSubspace a = QSubspace::span(2, {vec({1, 0}), vec({0, 1})});
    QSubspace b = QSubspace::span(2, {vec({1, 1})});
    CHECK(intersect(a, a) == a);
    CHECK(intersect(QSubspace::span(2, {vec({1, 0})}),
                    QSubspace::span(2, {vec({0, 1})}))
              .dim() == 0);
    QSubspace ab = intersect(a, b);
    CHECK(ab.dim() == 1);
    CHECK(ab.basis.row(0) == vec({1, 1}));

    CHECK_THROWS_AS(intersect(a, QSubspace::full(3)), dimension_error);
}

TEST_CASE("intersection dimension formula") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 60; ++iter) {
        int ambient = std::uniform_int_distribution<int>(1, 7)(rng);
        auto rand_space = [&] {
            int n = std::uniform_int_distribution<int>(0, ambient)(rng);
            std::vector<QVector> vs;
            std::uniform_int_distribution<int> entry(-5, 5);
            for (int i = 0; i < n; ++i) {
                QVector v(ambient);
                for (auto& x : v)
                    x = Rational(entry(rng));
                vs.push_back(v);
            }
            return QSubspace::span(ambient, vs);
        };
        QSubspace a = rand_space(), b = rand_space();
        QSubspace meet = intersect(a, b), join = sum(a, b);
        CHECK(meet.dim() == a.dim() + b.dim() - join.dim());
        for (int r = 0; r < meet.basis.rows; ++r) {
            CHECK(member(a, meet.basis.row(r)));
            CHECK(member(b, meet.basis.row(r)));
        }
    }
}

TEST_CASE("membership") {
    QSubspace full2 = QSubspace::span(2, {vec({1, 0}), vec({0, 1})});
    CHECK(member(full2, vec({1, 1})));
    CHECK_FALSE(member(QSubspace::span(2, {vec({0, 1})}), vec({1, 0})));
    CHECK(member(QSubspace::span(2, {vec({1, -1})}), vec({2, -2})));
    CHECK_THROWS_AS(member(full2, vec({1, 1, 1})), dimension_error);
}

TEST_CASE("coords_in reconstructs the vector") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 40; ++iter) {
        QMatrix m = random_matrix(rng, 6);
        std::vector<QVector> rows;
        for (int r = 0; r < m.rows; ++r)
            rows.push_back(m.row(r));
        QSubspace s = QSubspace::span(m.cols, rows);
        if (s.dim() == 0)
            continue;
        // random combination of the basis lies inside and round-trips
        QVector v(m.cols, Rational(0));
        std::uniform_int_distribution<int> entry(-3, 3);
        QVector want(s.dim());
        for (int r = 0; r < s.dim(); ++r) {
            want[r] = Rational(entry(rng));
            axpy(v, want[r], s.basis.row(r));
        }
        auto c = coords_in(s, v);
        REQUIRE(c.has_value());
        CHECK(*c == want);
    }
}

TEST_CASE("express_in_rows solves batches") {
    std::vector<QVector> family = {vec({1, 2, 0}), vec({0, 1, 1})};
    std::vector<QVector> rhs = {vec({1, 3, 1}), vec({0, 0, 1}), vec({2, 4, 0})};
    auto sol = express_in_rows(family, rhs, 3);
    REQUIRE(sol[0].has_value());
    CHECK(*sol[0] == vec({1, 1}));
    CHECK_FALSE(sol[1].has_value());
    REQUIRE(sol[2].has_value());
    CHECK(*sol[2] == vec({2, 0}));
}

TEST_CASE("rational arithmetic stays exact") {
    // normalization invariants of the scalar type
    Rational a(2, 4);
    CHECK(numerator(a) == 1);
    CHECK(denominator(a) == 2);
    CHECK(Rational(0, 5) == 0);
    CHECK(denominator(rat(3, -6)) > 0);
    CHECK(rat(3, -6) == rat(-1, 2));

    // a small elimination whose exact answer is known: no rounding anywhere
    auto [r, p] = rref(mat({{1, 3}, {2, 5}}));
    CHECK(r == mat({{1, 0}, {0, 1}}));
    Rational third = Rational(1, 3);
    CHECK(third * 3 == 1);
}
