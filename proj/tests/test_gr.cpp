#include <catch2/catch_amalgamated.hpp>

#include "primfree/gr.hpp"
#include "primfree/models.hpp"

using namespace primfree;

TEST_CASE("gr of the tensor model reproduces the tensor model") {
    // every word of length n sits in layer n exactly, so representatives
    // are the words themselves and the graded product is concatenation
    Presentation h = models::tensor_model(2, 3);
    GrBialgebra g = gr_bialgebra(h);
    for (int n = 0; n <= 3; ++n) {
        REQUIRE(g.pres.dim(n) == h.dim(n));
        for (const auto& el : g.elements[n])
            CHECK(el.layer == n);
    }
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q)
            CHECK(g.pres.product.at({p, q}) == h.product.at({p, q}));
    CHECK(check_axioms(g.pres).verdict());
}

TEST_CASE("gr of nsym at degree 2") {
    Presentation h = models::nsym_model(2);
    GrBialgebra g = gr_bialgebra(h);
    REQUIRE(g.pres.dim(2) == 2);
    // layer-1 representative is S2, layer-2 representative is S1.S1
    CHECK(g.elements[2][0].layer == 1);
    CHECK(g.elements[2][0].rep == QVector{Rational(1), Rational(0)});
    CHECK(g.elements[2][1].layer == 2);
    CHECK(g.elements[2][1].rep == QVector{Rational(0), Rational(1)});

    // the class of S2 is primitive in Gr: only the two end terms survive
    REQUIRE(g.pres.coproduct[2][0].size() == 2);
    for (const auto& t : g.pres.coproduct[2][0])
        CHECK((t.left_degree == 0 || t.left_degree == 2));
}

TEST_CASE("gr of fqsym at degree 2") {
    Presentation h = models::fqsym_model(2);
    GrBialgebra g = gr_bialgebra(h);
    REQUIRE(g.pres.dim(2) == 2);
    // the canonical layer-1 representative is F21 (its class spans the
    // quotient, where F21 = -F12); layer 2 is spanned by F12+F21
    CHECK(g.elements[2][0].layer == 1);
    CHECK(g.elements[2][0].rep == QVector{Rational(0), Rational(1)});
    CHECK(g.elements[2][1].layer == 2);
    CHECK(g.elements[2][1].rep == QVector{Rational(1), Rational(1)});

    // the graded square of F1 is the layer-2 class
    QVector sq = g.pres.product_of(1, 1, 0, 0);
    CHECK(sq == QVector{Rational(0), Rational(1)});
}

TEST_CASE("gr outputs are graded bialgebras and cocommutative") {
    for (const Presentation& h :
         {models::tensor_model(2, 3), models::nsym_model(4), models::fqsym_model(3)}) {
        GrBialgebra g = gr_bialgebra(h);
        for (int n = 0; n <= h.max_degree; ++n)
            CHECK(g.pres.dim(n) == h.dim(n));
        CHECK(check_axioms(g.pres).verdict());
        CHECK(check_cocommutative(g.pres).ok);
    }
}

TEST_CASE("gr unit acts as identity") {
    GrBialgebra g = gr_bialgebra(models::fqsym_model(3));
    for (int n = 0; n <= 3; ++n)
        for (int i = 0; i < g.pres.dim(n); ++i) {
            QVector e = unit_vector<Rational>(g.pres.dim(n), i);
            CHECK(mul(g.pres, 0, unit_vector<Rational>(1, 0), n, e) == e);
            CHECK(mul(g.pres, n, e, 0, unit_vector<Rational>(1, 0)) == e);
        }
}
