#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "primfree/presentation.hpp"

namespace primfree {

struct AxiomReport {
    bool connected_ok = true;
    bool associativity_ok = true;
    bool coassociativity_ok = true;
    bool counit_ok = true;
    bool compatibility_ok = true;
    std::string connected_witness;
    std::string associativity_witness;
    std::string coassociativity_witness;
    std::string counit_witness;
    std::string compatibility_witness;
    // structured location of the first associativity failure, for tests
    std::array<int, 3> assoc_degrees{-1, -1, -1};
    std::array<int, 3> assoc_indices{-1, -1, -1};

    bool verdict() const {
        return connected_ok && associativity_ok && coassociativity_ok && counit_ok &&
               compatibility_ok;
    }
};

namespace detail {

// Delta(x) * Delta(y) inside the degree-(p+q) tensor space.
inline QVector coproduct_product(const Presentation& h, int p, int i, int q, int j,
                                 const TensorIndex& ti) {
    const int n = p + q;
    QVector out(ti.total, Rational(0));
    for (const auto& a : h.coproduct[p][i]) {
        for (const auto& b : h.coproduct[q][j]) {
            int left_deg = a.left_degree + b.left_degree;
            int right_deg = n - left_deg;
            const QVector& lhs = h.product_of(a.left_degree, b.left_degree, a.left_index,
                                              b.left_index);
            const QVector& rhs = h.product_of(p - a.left_degree, q - b.left_degree,
                                              a.right_index, b.right_index);
            Rational c = a.coeff * b.coeff;
            for (int s = 0; s < h.dim(left_deg); ++s) {
                if (lhs[s] == 0)
                    continue;
                for (int t = 0; t < h.dim(right_deg); ++t)
                    if (rhs[t] != 0)
                        out[ti.at(left_deg, s, t)] += c * lhs[s] * rhs[t];
            }
        }
    }
    return out;
}

}  // namespace detail

// Verifies the graded bialgebra axioms on every basis tuple with total
// degree within the truncation: associativity, coassociativity, the
// counit law, multiplicativity of the coproduct, and the degree-0
// structure. Grading of both operations is enforced by the table schema.
inline AxiomReport check_axioms(const Presentation& h) {
    validate(h);
    AxiomReport rep;
    const int N = h.max_degree;

    if (h.dim(0) != 1) {
        rep.connected_ok = false;
        rep.connected_witness = "degree 0 has dimension " + std::to_string(h.dim(0));
    } else {
        QVector one_sq = h.product_of(0, 0, 0, 0);
        bool unit_cop = h.coproduct[0][0].size() == 1 &&
                        h.coproduct[0][0][0].left_degree == 0 &&
                        h.coproduct[0][0][0].coeff == 1;
        if (one_sq != unit_vector<Rational>(1, 0) || !unit_cop) {
            rep.connected_ok = false;
            rep.connected_witness = "degree-0 element is not grouplike";
        }
    }

    for (int p = 0; p <= N && rep.associativity_ok; ++p)
        for (int q = 0; p + q <= N && rep.associativity_ok; ++q)
            for (int r = 0; p + q + r <= N && rep.associativity_ok; ++r)
                for (int i = 0; i < h.dim(p) && rep.associativity_ok; ++i)
                    for (int j = 0; j < h.dim(q) && rep.associativity_ok; ++j)
                        for (int k = 0; k < h.dim(r); ++k) {
                            QVector ij = h.product_of(p, q, i, j);
                            QVector left = mul(h, p + q, ij, r,
                                               unit_vector<Rational>(h.dim(r), k));
                            QVector jk = h.product_of(q, r, j, k);
                            QVector right = mul(h, p, unit_vector<Rational>(h.dim(p), i),
                                                q + r, jk);
                            if (left != right) {
                                rep.associativity_ok = false;
                                rep.assoc_degrees = {p, q, r};
                                rep.assoc_indices = {i, j, k};
                                rep.associativity_witness =
                                    "degrees (" + std::to_string(p) + "," + std::to_string(q) +
                                    "," + std::to_string(r) + ") indices (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) + ")";
                                break;
                            }
                        }

    for (int n = 0; n <= N && rep.coassociativity_ok; ++n) {
        for (int i = 0; i < h.dim(n); ++i) {
            // triple tensor coordinates keyed by (a, b, u, v, w)
            std::map<std::array<int, 5>, Rational> lhs, rhs;
            for (const auto& t : h.coproduct[n][i]) {
                for (const auto& s : h.coproduct[t.left_degree][t.left_index]) {
                    std::array<int, 5> key{s.left_degree, t.left_degree - s.left_degree,
                                           s.left_index, s.right_index, t.right_index};
                    lhs[key] += t.coeff * s.coeff;
                }
                for (const auto& s : h.coproduct[n - t.left_degree][t.right_index]) {
                    std::array<int, 5> key{t.left_degree, s.left_degree, t.left_index,
                                           s.left_index, s.right_index};
                    rhs[key] += t.coeff * s.coeff;
                }
            }
            std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
            if (lhs != rhs) {
                rep.coassociativity_ok = false;
                rep.coassociativity_witness =
                    "degree " + std::to_string(n) + " index " + std::to_string(i);
                break;
            }
        }
    }

    for (int n = 0; n <= N && rep.counit_ok; ++n) {
        for (int i = 0; i < h.dim(n); ++i) {
            QVector left_end(h.dim(n), Rational(0));   // terms e (x) 1
            QVector right_end(h.dim(n), Rational(0));  // terms 1 (x) e
            for (const auto& t : h.coproduct[n][i]) {
                if (t.left_degree == n)
                    left_end[t.left_index] += t.coeff;
                if (t.left_degree == 0)
                    right_end[t.right_index] += t.coeff;
            }
            QVector e = unit_vector<Rational>(h.dim(n), i);
            if (left_end != e || right_end != e) {
                rep.counit_ok = false;
                rep.counit_witness = "degree " + std::to_string(n) + " index " + std::to_string(i);
                break;
            }
        }
    }

    for (int p = 0; p <= N && rep.compatibility_ok; ++p)
        for (int q = 0; p + q <= N && rep.compatibility_ok; ++q) {
            TensorIndex ti = tensor_index(h, p + q);
            for (int i = 0; i < h.dim(p) && rep.compatibility_ok; ++i)
                for (int j = 0; j < h.dim(q); ++j) {
                    QVector of_product =
                        coproduct_vector(h, p + q, h.product_of(p, q, i, j), ti);
                    QVector product_of = detail::coproduct_product(h, p, i, q, j, ti);
                    if (of_product != product_of) {
                        rep.compatibility_ok = false;
                        rep.compatibility_witness =
                            "degrees (" + std::to_string(p) + "," + std::to_string(q) +
                            ") indices (" + std::to_string(i) + "," + std::to_string(j) + ")";
                        break;
                    }
                }
        }

    return rep;
}

// Matrix of the reduced coproduct x -> Delta(x) - x(x)1 - 1(x)x on degree
// n, rows indexed by the middle tensor blocks p = 1..n-1, columns by the
// degree-n basis. Its kernel is the space of primitive elements.
inline QMatrix reduced_coproduct_matrix(const Presentation& h, int n) {
    if (n < 1 || n > h.max_degree)
        throw dimension_error("reduced coproduct needs 1 <= n <= max degree");
    TensorIndex ti = tensor_index(h, n, 1, n - 1);
    QMatrix m(ti.total, h.dim(n));
    for (int i = 0; i < h.dim(n); ++i)
        for (const auto& t : h.coproduct[n][i])
            if (t.left_degree >= 1 && t.left_degree <= n - 1)
                m.at(ti.at(t.left_degree, t.left_index, t.right_index), i) += t.coeff;
    return m;
}

// The filtration of H by powers of the augmentation ideal: layer (n,k) is
// the span of all k-fold products of positive-degree basis elements with
// degrees summing to n. Layers vanish for k > n, so the bound is n+1 in
// every degree. Refuses to run when the axioms fail.
inline FiltrationTable counital_filtration(const Presentation& h) {
    AxiomReport rep = check_axioms(h);
    if (!rep.verdict())
        throw presentation_error("counital filtration: bialgebra axioms fail (" +
                                 (rep.connected_ok ? std::string() : rep.connected_witness) +
                                 rep.associativity_witness + rep.coassociativity_witness +
                                 rep.counit_witness + rep.compatibility_witness + ")");
    const int N = h.max_degree;
    FiltrationTable ft;
    ft.ambient = h.graded_dims();
    ft.layers.resize(N + 1);
    ft.layers[0] = {QSubspace::full(1), QSubspace(1)};
    for (int n = 1; n <= N; ++n) {
        ft.layers[n].push_back(QSubspace::full(h.dim(n)));  // k = 0
        ft.layers[n].push_back(QSubspace::full(h.dim(n)));  // k = 1: positive degree
        for (int k = 2; k <= n; ++k) {
            std::vector<QVector> gens;
            for (int p = std::max(1, k - 1); p <= n - 1; ++p) {
                int q = n - p;
                const QSubspace& prev = ft.layer(p, k - 1);
                for (int r = 0; r < prev.basis.rows; ++r)
                    for (int j = 0; j < h.dim(q); ++j)
                        gens.push_back(mul(h, p, prev.basis.row(r), q,
                                           unit_vector<Rational>(h.dim(q), j)));
            }
            ft.layers[n].push_back(QSubspace::span(h.dim(n), gens));
        }
        ft.layers[n].push_back(QSubspace(h.dim(n)));  // k = n+1 is zero
    }
    return ft;
}

struct CocommCheck {
    bool ok = true;
    int witness_degree = -1;
    int witness_index = -1;
};

// tau compose Delta = Delta on every basis element up to the truncation?
inline CocommCheck check_cocommutative(const Presentation& h) {
    for (int n = 0; n <= h.max_degree; ++n) {
        TensorIndex ti = tensor_index(h, n);
        for (int i = 0; i < h.dim(n); ++i) {
            QVector d = coproduct_vector(h, n, unit_vector<Rational>(h.dim(n), i), ti);
            QVector swapped(ti.total, Rational(0));
            for (const auto& t : h.coproduct[n][i])
                swapped[ti.at(n - t.left_degree, t.right_index, t.left_index)] += t.coeff;
            if (d != swapped)
                return {false, n, i};
        }
    }
    return {};
}

// One homogeneous positive-degree element of H.
struct Element {
    int degree = 0;
    QVector coords;
};

// Checks that Delta(x_1...x_m) minus the sum over subsets S of [m] of
// (product over S) (x) (product over the complement) lies in layer m+1 of
// the tensor-square filtration; the subset products keep the original
// factor order. `tensor_ft` must be the tensor square of the counital
// filtration of h.
inline bool subset_split_residual_ok(const Presentation& h, const std::vector<Element>& factors,
                                     const FiltrationTable& tensor_ft) {
    const int m = static_cast<int>(factors.size());
    int n = 0;
    for (const auto& f : factors) {
        if (f.degree == 0 && !is_zero(f.coords))
            throw dimension_error("subset split residual: factor has nonzero counit");
        n += f.degree;
    }
    if (n > h.max_degree)
        throw truncation_error("subset split residual: total degree exceeds truncation");
    auto product_over = [&](unsigned mask) {
        Element acc{0, unit_vector<Rational>(1, 0)};
        for (int t = 0; t < m; ++t)
            if ((mask >> t) & 1u) {
                acc.coords = mul(h, acc.degree, acc.coords, factors[t].degree, factors[t].coords);
                acc.degree += factors[t].degree;
            }
        return acc;
    };
    Element full = product_over(m == 32 ? ~0u : (1u << m) - 1u);
    TensorIndex ti = tensor_index(h, n);
    QVector residual = coproduct_vector(h, n, full.coords, ti);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Element left = product_over(mask);
        Element right = product_over(((1u << m) - 1u) & ~mask);
        for (int s = 0; s < h.dim(left.degree); ++s) {
            if (left.coords[s] == 0)
                continue;
            for (int t = 0; t < h.dim(right.degree); ++t)
                if (right.coords[t] != 0)
                    residual[ti.at(left.degree, s, t)] -= left.coords[s] * right.coords[t];
        }
    }
    return member(tensor_ft.layer(n, m + 1), residual);
}

inline bool subset_split_residual_ok(const Presentation& h, const std::vector<Element>& factors) {
    FiltrationTable f = counital_filtration(h);
    return subset_split_residual_ok(h, factors, tensor_filtration(f, f));
}

}  // namespace primfree
