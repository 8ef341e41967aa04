#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "primfree/graded.hpp"
#include "primfree/linalg.hpp"

namespace primfree {

// A graded connected bialgebra given by structure constants, truncated at
// max_degree. Degree 0 is one-dimensional and its basis element is the
// unit; the counit is coefficient extraction on that element. Product
// tables exist for every bidegree (p,q) with p+q <= max_degree; coproduct
// terms carry only the left degree since the right one is forced by
// grading.
struct Presentation {
    struct CopTerm {
        int left_degree;   // p
        int left_index;    // j, basis index in degree p
        int right_index;   // k, basis index in degree n-p
        Rational coeff;
    };

    std::string name;
    int max_degree = 0;
    std::vector<std::vector<std::string>> basis;  // labels, [n][i]
    // product[{p,q}][i * dim(q) + j] = coordinates of e_i * e_j in degree p+q
    std::map<std::pair<int, int>, std::vector<QVector>> product;
    std::vector<std::vector<std::vector<CopTerm>>> coproduct;  // [n][i]

    int dim(int n) const {
        return (n >= 0 && n <= max_degree) ? static_cast<int>(basis[n].size()) : 0;
    }

    GradedDims graded_dims() const {
        GradedDims d;
        d.max_degree = max_degree;
        for (int n = 0; n <= max_degree; ++n)
            d.dims.push_back(dim(n));
        return d;
    }

    const QVector& product_of(int p, int q, int i, int j) const {
        return product.at({p, q})[static_cast<size_t>(i) * dim(q) + j];
    }

    std::vector<QVector>& product_table(int p, int q) {
        auto it = product.find({p, q});
        if (it == product.end()) {
            it = product.emplace(std::pair{p, q},
                                 std::vector<QVector>(static_cast<size_t>(dim(p)) * dim(q),
                                                      QVector(dim(p + q), Rational(0))))
                     .first;
        }
        return it->second;
    }
};

// x * y for homogeneous coordinate vectors x in degree p, y in degree q.
inline QVector mul(const Presentation& h, int p, const QVector& x, int q, const QVector& y) {
    if (p + q > h.max_degree)
        throw truncation_error("product exceeds truncation degree");
    QVector out(h.dim(p + q), Rational(0));
    const auto& table = h.product.at({p, q});
    const int dq = h.dim(q);
    for (int i = 0; i < h.dim(p); ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < dq; ++j) {
            if (y[j] == 0)
                continue;
            axpy(out, Rational(x[i] * y[j]), table[static_cast<size_t>(i) * dq + j]);
        }
    }
    return out;
}

inline QVector commutator(const Presentation& h, int p, const QVector& x, int q, const QVector& y) {
    return sub(mul(h, p, x, q, y), mul(h, q, y, p, x));
}

inline TensorIndex tensor_index(const Presentation& h, int n, int p_lo = 0, int p_hi = -1) {
    GradedDims d = h.graded_dims();
    return TensorIndex(d, d, n, p_lo, p_hi < 0 ? n : p_hi);
}

// Delta(x) as a coordinate vector over the full degree-n tensor basis
// (blocks p = 0..n).
inline QVector coproduct_vector(const Presentation& h, int n, const QVector& x,
                                const TensorIndex& ti) {
    QVector out(ti.total, Rational(0));
    for (int i = 0; i < h.dim(n); ++i) {
        if (x[i] == 0)
            continue;
        for (const auto& t : h.coproduct[n][i])
            out[ti.at(t.left_degree, t.left_index, t.right_index)] += x[i] * t.coeff;
    }
    return out;
}

inline QVector coproduct_vector(const Presentation& h, int n, const QVector& x) {
    return coproduct_vector(h, n, x, tensor_index(h, n));
}

// Structural well-formedness plus the connectedness/unit invariants that
// every pipeline stage assumes. Throws presentation_error.
inline void validate(const Presentation& h) {
    if (h.max_degree < 0 || static_cast<int>(h.basis.size()) != h.max_degree + 1)
        throw presentation_error("basis table does not match truncation degree");
    if (h.dim(0) != 1)
        throw presentation_error("not connected: degree 0 must be one-dimensional");
    if (static_cast<int>(h.coproduct.size()) != h.max_degree + 1)
        throw presentation_error("coproduct table does not match truncation degree");
    for (int p = 0; p <= h.max_degree; ++p) {
        for (int q = 0; p + q <= h.max_degree; ++q) {
            auto it = h.product.find({p, q});
            if (it == h.product.end())
                throw presentation_error("missing product table for bidegree (" +
                                         std::to_string(p) + "," + std::to_string(q) + ")");
            if (static_cast<int>(it->second.size()) != h.dim(p) * h.dim(q))
                throw presentation_error("product table has wrong size");
            for (const QVector& v : it->second)
                if (static_cast<int>(v.size()) != h.dim(p + q))
                    throw presentation_error("product vector has wrong length");
        }
    }
    for (int n = 0; n <= h.max_degree; ++n) {
        if (static_cast<int>(h.coproduct[n].size()) != h.dim(n))
            throw presentation_error("coproduct table has wrong size");
        for (const auto& terms : h.coproduct[n])
            for (const auto& t : terms) {
                if (t.left_degree < 0 || t.left_degree > n)
                    throw presentation_error("coproduct term with bad left degree");
                if (t.left_index < 0 || t.left_index >= h.dim(t.left_degree) ||
                    t.right_index < 0 || t.right_index >= h.dim(n - t.left_degree))
                    throw presentation_error("coproduct term with bad index");
            }
    }
    // the degree-0 element must act as a two-sided unit
    for (int n = 0; n <= h.max_degree; ++n) {
        for (int i = 0; i < h.dim(n); ++i) {
            QVector e = unit_vector<Rational>(h.dim(n), i);
            QVector one = unit_vector<Rational>(1, 0);
            if (mul(h, 0, one, n, e) != e || mul(h, n, e, 0, one) != e)
                throw presentation_error("degree-0 basis element is not a two-sided unit");
        }
    }
}

// Re-index the basis of every positive degree by the given permutations
// (perms[n][new_index] = old_index). Used to confirm that verdicts and
// multiplicities do not depend on basis order.
inline Presentation permute_basis(const Presentation& h,
                                  const std::vector<std::vector<int>>& perms) {
    Presentation out;
    out.name = h.name;
    out.max_degree = h.max_degree;
    out.basis.resize(h.max_degree + 1);
    out.coproduct.resize(h.max_degree + 1);
    // inverse[n][old_index] = new_index
    std::vector<std::vector<int>> inverse(h.max_degree + 1);
    for (int n = 0; n <= h.max_degree; ++n) {
        const auto& perm = perms[n];
        inverse[n].resize(h.dim(n));
        for (int i = 0; i < h.dim(n); ++i)
            inverse[n][perm[i]] = i;
        for (int i = 0; i < h.dim(n); ++i)
            out.basis[n].push_back(h.basis[n][perm[i]]);
    }
    auto permute_vec = [&](int n, const QVector& v) {
        QVector w(v.size());
        for (size_t i = 0; i < v.size(); ++i)
            w[i] = v[perms[n][i]];
        return w;
    };
    for (const auto& [pq, table] : h.product) {
        auto [p, q] = pq;
        auto& out_table = out.product[pq];
        out_table.resize(table.size());
        for (int i = 0; i < h.dim(p); ++i)
            for (int j = 0; j < h.dim(q); ++j)
                out_table[static_cast<size_t>(i) * h.dim(q) + j] = permute_vec(
                    p + q, table[static_cast<size_t>(perms[p][i]) * h.dim(q) + perms[q][j]]);
    }
    for (int n = 0; n <= h.max_degree; ++n) {
        out.coproduct[n].resize(h.dim(n));
        for (int i = 0; i < h.dim(n); ++i)
            for (const auto& t : h.coproduct[n][perms[n][i]])
                out.coproduct[n][i].push_back({t.left_degree, inverse[t.left_degree][t.left_index],
                                               inverse[n - t.left_degree][t.right_index],
                                               t.coeff});
    }
    return out;
}

// Drop all structure above the new truncation degree.
inline Presentation truncate(const Presentation& h, int new_max) {
    if (new_max > h.max_degree)
        throw truncation_error("cannot extend a presentation past its truncation degree");
    Presentation out;
    out.name = h.name;
    out.max_degree = new_max;
    out.basis.assign(h.basis.begin(), h.basis.begin() + new_max + 1);
    out.coproduct.resize(new_max + 1);
    for (int n = 0; n <= new_max; ++n)
        for (int i = 0; i < h.dim(n); ++i) {
            out.coproduct[n].push_back(h.coproduct[n][i]);
        }
    for (const auto& [pq, table] : h.product)
        if (pq.first + pq.second <= new_max)
            out.product[pq] = table;
    return out;
}

}  // namespace primfree
