#pragma once

#include <string>
#include <vector>

#include "primfree/bialg.hpp"

namespace primfree {

// The associated graded bialgebra of the counital filtration, presented on
// an explicit basis of layer-quotient representatives. Every Gr basis
// element stores the layer it came from and a representative vector in the
// original degree-n coordinates, which is exactly what generator lifting
// needs later.
struct GrBialgebra {
    struct BasisElement {
        int layer;
        QVector rep;  // representative in H_n coordinates
    };

    Presentation pres;
    FiltrationTable filtration;                       // counital filtration of the input
    std::vector<std::vector<BasisElement>> elements;  // [n][flat Gr index]
};

namespace detail {

// Representatives of layer(n,k) mod layer(n,k+1): the rows of the
// canonical basis of layer(n,k) whose coordinate positions are not pivots
// of the coordinate image of layer(n,k+1). Deterministic by construction.
inline std::vector<QVector> layer_representatives(const QSubspace& outer,
                                                  const QSubspace& inner) {
    std::vector<QVector> coords;
    for (int r = 0; r < inner.basis.rows; ++r) {
        auto c = coords_in(outer, inner.basis.row(r));
        if (!c)
            throw filtration_error("layer representatives: filtration not nested");
        coords.push_back(std::move(*c));
    }
    QSubspace image = QSubspace::span(outer.dim(), coords);
    QSubspace comp = complement(image);
    std::vector<QVector> reps;
    for (int r = 0; r < comp.basis.rows; ++r) {
        // complement of a coordinate image is a coordinate subspace: each
        // basis row is a standard vector picking one row of `outer`
        int pos = comp.pivots[r];
        reps.push_back(outer.basis.row(pos));
    }
    return reps;
}

}  // namespace detail

// Builds Gr(H) for the counital filtration: basis elements are the chosen
// layer representatives; the product of classes is the class of the
// product in the summed layer; the coproduct is read off by decomposing
// Delta of a representative against representative pairs modulo the next
// tensor layer.
inline GrBialgebra gr_bialgebra(const Presentation& h) {
    const int N = h.max_degree;
    GrBialgebra g;
    g.filtration = counital_filtration(h);
    const FiltrationTable& F = g.filtration;

    g.elements.resize(N + 1);
    Presentation& p = g.pres;
    p.name = "gr(" + h.name + ")";
    p.max_degree = N;
    p.basis.resize(N + 1);
    p.coproduct.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= F.bound(n) - 1; ++k) {
            std::vector<QVector> reps =
                detail::layer_representatives(F.layer(n, k), F.layer(n, k + 1));
            for (QVector& r : reps) {
                // label by the leading coordinate of the representative
                int lead = 0;
                while (lead < static_cast<int>(r.size()) && r[lead] == 0)
                    ++lead;
                p.basis[n].push_back("gr" + std::to_string(k) + ":" + h.basis[n][lead]);
                g.elements[n].push_back({k, std::move(r)});
            }
        }
        if (static_cast<int>(g.elements[n].size()) != h.dim(n))
            throw filtration_error("gr basis does not match the degree dimension");
        p.coproduct[n].resize(h.dim(n));
    }

    // flat Gr indices of the elements sitting in layer k of degree n
    auto indices_at_layer = [&](int n, int k) {
        std::vector<int> out;
        for (size_t c = 0; c < g.elements[n].size(); ++c)
            if (g.elements[n][c].layer == k)
                out.push_back(static_cast<int>(c));
        return out;
    };

    // products: for each target (n, kappa), express the products of
    // representative pairs against [reps at kappa ; layer kappa+1]
    for (int n = 0; n <= N; ++n) {
        for (int kappa = 0; kappa <= F.bound(n); ++kappa) {
            struct Job {
                int p_deg, q_deg, i, j;  // Gr indices i, j
            };
            std::vector<Job> jobs;
            std::vector<QVector> rhs;
            for (int pd = 0; pd <= n; ++pd) {
                int qd = n - pd;
                for (size_t i = 0; i < g.elements[pd].size(); ++i)
                    for (size_t j = 0; j < g.elements[qd].size(); ++j) {
                        if (g.elements[pd][i].layer + g.elements[qd][j].layer != kappa)
                            continue;
                        jobs.push_back({pd, qd, static_cast<int>(i), static_cast<int>(j)});
                        rhs.push_back(mul(h, pd, g.elements[pd][i].rep, qd,
                                          g.elements[qd][j].rep));
                    }
            }
            if (jobs.empty())
                continue;
            std::vector<int> rep_idx = indices_at_layer(n, kappa);
            std::vector<QVector> family;
            for (int c : rep_idx)
                family.push_back(g.elements[n][c].rep);
            const QSubspace& deeper = F.layer(n, kappa + 1);
            for (int r = 0; r < deeper.basis.rows; ++r)
                family.push_back(deeper.basis.row(r));
            auto sols = express_in_rows(family, rhs, h.dim(n));
            for (size_t t = 0; t < jobs.size(); ++t) {
                if (!sols[t])
                    throw filtration_error("gr product escapes its layer");
                QVector out(h.dim(n), Rational(0));
                for (size_t c = 0; c < rep_idx.size(); ++c)
                    out[rep_idx[c]] = (*sols[t])[c];
                auto& table = p.product_table(jobs[t].p_deg, jobs[t].q_deg);
                table[static_cast<size_t>(jobs[t].i) * p.dim(jobs[t].q_deg) + jobs[t].j] =
                    std::move(out);
            }
        }
        // make sure all bidegree tables exist even if some layers were empty
        for (int pd = 0; pd <= n; ++pd)
            p.product_table(pd, n - pd);
    }

    // coproducts, against the tensor square of the filtration
    FiltrationTable T = tensor_filtration(F, F);
    for (int n = 0; n <= N; ++n) {
        TensorIndex ti = tensor_index(h, n);
        for (int kappa = 0; kappa <= F.bound(n); ++kappa) {
            std::vector<int> sources = indices_at_layer(n, kappa);
            if (sources.empty())
                continue;
            // family: representative pairs with layer sum kappa, then the
            // next tensor layer
            struct PairRef {
                int p_deg, i, j;
            };
            std::vector<PairRef> pairs;
            std::vector<QVector> family;
            for (int pd = 0; pd <= n; ++pd) {
                int qd = n - pd;
                for (size_t i = 0; i < g.elements[pd].size(); ++i)
                    for (size_t j = 0; j < g.elements[qd].size(); ++j) {
                        if (g.elements[pd][i].layer + g.elements[qd][j].layer != kappa)
                            continue;
                        pairs.push_back({pd, static_cast<int>(i), static_cast<int>(j)});
                        family.push_back(
                            ti.embed(pd, g.elements[pd][i].rep, g.elements[qd][j].rep));
                    }
            }
            const QSubspace& deeper = T.layer(n, kappa + 1);
            for (int r = 0; r < deeper.basis.rows; ++r)
                family.push_back(deeper.basis.row(r));
            std::vector<QVector> rhs;
            for (int c : sources)
                rhs.push_back(coproduct_vector(h, n, g.elements[n][c].rep, ti));
            auto sols = express_in_rows(family, rhs, ti.total);
            for (size_t t = 0; t < sources.size(); ++t) {
                if (!sols[t])
                    throw filtration_error("gr coproduct escapes its tensor layer");
                for (size_t c = 0; c < pairs.size(); ++c) {
                    const Rational& coeff = (*sols[t])[c];
                    if (coeff == 0)
                        continue;
                    p.coproduct[n][sources[t]].push_back(
                        {pairs[c].p_deg, pairs[c].i, pairs[c].j, coeff});
                }
            }
        }
    }
    return g;
}

}  // namespace primfree
