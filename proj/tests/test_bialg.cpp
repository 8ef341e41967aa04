#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "primfree/bialg.hpp"
#include "primfree/models.hpp"

using namespace primfree;

TEST_CASE("reduced coproduct matrices match hand expansions") {
    // NSym degree 2, basis (S2, S1.S1): middle parts are S1(x)S1 and
    // 2 S1(x)S1, giving the 1x2 matrix [1 2].
    Presentation nsym = models::nsym_model(2);
    QMatrix m = reduced_coproduct_matrix(nsym, 2);
    REQUIRE(m.rows == 1);
    REQUIRE(m.cols == 2);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 2);

    // FQSym degree 2: both F12 and F21 deconcatenate to F1(x)F1.
    Presentation fq = models::fqsym_model(2);
    QMatrix f = reduced_coproduct_matrix(fq, 2);
    REQUIRE(f.rows == 1);
    CHECK(f.at(0, 0) == 1);
    CHECK(f.at(0, 1) == 1);

    // degree 1 has no middle blocks at all
    CHECK(reduced_coproduct_matrix(nsym, 1).rows == 0);
    CHECK_THROWS_AS(reduced_coproduct_matrix(nsym, 0), dimension_error);
}

TEST_CASE("counital filtration of nsym") {
    Presentation h = models::nsym_model(4);
    FiltrationTable ft = counital_filtration(h);
    // layers 0 and 1 are full in every positive degree, degree 0 is trivial
    CHECK(ft.layer_dim(0, 0) == 1);
    CHECK(ft.layer_dim(0, 1) == 0);
    for (int n = 1; n <= 4; ++n) {
        CHECK(ft.layer_dim(n, 0) == h.dim(n));
        CHECK(ft.layer_dim(n, 1) == h.dim(n));
        CHECK(ft.layer_dim(n, n + 1) == 0);
        CHECK(ft.bound(n) == n + 1);
    }
    // degree 2: products of two positive elements span S1.S1 only
    CHECK(ft.layer_dim(2, 2) == 1);
    CHECK(ft.layer(2, 2).basis.row(0) == QVector{Rational(0), Rational(1)});
    GrSpace g = gr(ft);
    CHECK(g.dim(2, 1) == 1);
    CHECK(g.dim(2, 2) == 1);
}

TEST_CASE("counital filtration of fqsym at degree 2") {
    Presentation h = models::fqsym_model(2);
    FiltrationTable ft = counital_filtration(h);
    // (ker eps)^2 in degree 2 is spanned by F1*F1 = F12 + F21
    CHECK(ft.layer_dim(2, 2) == 1);
    CHECK(ft.layer(2, 2).basis.row(0) == QVector{Rational(1), Rational(1)});
}

TEST_CASE("every word is a product of letters in the tensor model") {
    Presentation h = models::tensor_model(2, 3);
    FiltrationTable ft = counital_filtration(h);
    for (int n = 1; n <= 3; ++n) {
        for (int k = 0; k <= n; ++k)
            CHECK(ft.layer_dim(n, k) == h.dim(n));
        CHECK(ft.layer_dim(n, n + 1) == 0);
    }
}

TEST_CASE("gr preserves degreewise dimension for the models") {
    for (const Presentation& h :
         {models::tensor_model(2, 4), models::nsym_model(4), models::fqsym_model(3)}) {
        FiltrationTable ft = counital_filtration(h);
        GrSpace g = gr(ft);
        for (int n = 0; n <= h.max_degree; ++n) {
            long long total = 0;
            for (int k = 0; k <= ft.bound(n); ++k)
                total += g.dim(n, k);
            CHECK(total == h.dim(n));
        }
    }
}

TEST_CASE("tensor square of the nsym counital filtration") {
    Presentation h = models::nsym_model(4);
    FiltrationTable ft = counital_filtration(h);
    FiltrationTable sq = tensor_filtration(ft, ft);
    // degree 2 of H(x)H decomposes as 1(x)H2 + S1(x)S1 + H2(x)1 in layer 2
    CHECK(sq.ambient.dim(2) == 5);
    CHECK(sq.layer_dim(2, 2) == 3);
    CHECK(check_gr_tensor_iso(ft, ft).ok);
}

TEST_CASE("subset split residuals land deep in the tensor filtration") {
    Presentation nsym = models::nsym_model(4);
    FiltrationTable fn = counital_filtration(nsym);
    FiltrationTable tn = tensor_filtration(fn, fn);

    // one primitive factor: residual is exactly zero
    QVector s1 = unit_vector<Rational>(1, 0);
    CHECK(subset_split_residual_ok(nsym, {{1, s1}}, tn));

    // S2 alone: residual S1(x)S1 sits in layer 2
    QVector s2 = unit_vector<Rational>(nsym.dim(2), 0);
    CHECK(subset_split_residual_ok(nsym, {{2, s2}}, tn));

    Presentation fq = models::fqsym_model(3);
    FiltrationTable ff = counital_filtration(fq);
    FiltrationTable tf = tensor_filtration(ff, ff);
    QVector f1 = unit_vector<Rational>(1, 0);
    CHECK(subset_split_residual_ok(fq, {{1, f1}, {1, f1}}, tf));

    // a degree-0 factor has nonzero counit
    CHECK_THROWS_AS(subset_split_residual_ok(fq, {{0, unit_vector<Rational>(1, 0)}}, tf),
                    dimension_error);
}

TEST_CASE("randomized subset split residuals") {
    std::mt19937 rng(555);
    Presentation h = models::nsym_model(4);
    FiltrationTable ft = counital_filtration(h);
    FiltrationTable sq = tensor_filtration(ft, ft);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int iter = 0; iter < 15; ++iter) {
        std::vector<Element> factors;
        int total = 0;
        int m = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int t = 0; t < m && total < 4; ++t) {
            int d = std::uniform_int_distribution<int>(1, 4 - total)(rng);
            QVector v(h.dim(d));
            for (auto& x : v)
                x = Rational(coeff(rng));
            factors.push_back({d, v});
            total += d;
        }
        CHECK(subset_split_residual_ok(h, factors, sq));
    }
}
