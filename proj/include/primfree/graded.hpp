#pragma once

#include <string>
#include <vector>

#include "primfree/linalg.hpp"

namespace primfree {

// Dimension table of a graded space truncated at max_degree.
struct GradedDims {
    int max_degree = 0;
    std::vector<long long> dims;  // dims[n] for 0 <= n <= max_degree

    long long dim(int n) const {
        return (n >= 0 && n <= max_degree) ? dims[n] : 0;
    }
};

// Index bookkeeping for the degree-n part of a tensor product of two
// graded spaces: blocks p = p_lo..p_hi, block p holding A_p (x) B_{n-p}
// pairs in row-major order (A index major).
struct TensorIndex {
    int n = 0;
    int p_lo = 0, p_hi = 0;
    std::vector<int> offsets;      // offsets[p - p_lo]
    std::vector<long long> dim_a;  // dim A_p for p in range
    std::vector<long long> dim_b;  // dim B_{n-p}
    int total = 0;

    TensorIndex() = default;
    TensorIndex(const GradedDims& a, const GradedDims& b, int degree, int lo, int hi)
        : n(degree), p_lo(lo), p_hi(hi) {
        int off = 0;
        for (int p = p_lo; p <= p_hi; ++p) {
            offsets.push_back(off);
            dim_a.push_back(a.dim(p));
            dim_b.push_back(b.dim(n - p));
            off += static_cast<int>(a.dim(p) * b.dim(n - p));
        }
        total = off;
    }

    int at(int p, int i, int j) const {
        return offsets[p - p_lo] + static_cast<int>(i * dim_b[p - p_lo] + j);
    }

    // u (x) w for u in A_p, w in B_{n-p}, embedded at block p.
    QVector embed(int p, const QVector& u, const QVector& w) const {
        QVector out(total, Rational(0));
        for (size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0)
                continue;
            for (size_t j = 0; j < w.size(); ++j)
                if (w[j] != 0)
                    out[at(p, static_cast<int>(i), static_cast<int>(j))] = u[i] * w[j];
        }
        return out;
    }
};

// A graded filtered space, stored per degree: layers[n][k] is the
// degree-n piece of the k-th filtration layer, a subspace of the ambient
// degree-n space. layers[n] runs k = 0..K(n) and ends with the zero
// subspace (local finiteness); layers must be nested and start full.
struct FiltrationTable {
    GradedDims ambient;
    std::vector<std::vector<QSubspace>> layers;

    int bound(int n) const { return static_cast<int>(layers[n].size()) - 1; }  // K(n)

    const QSubspace& layer(int n, int k) const {
        const auto& ln = layers[n];
        if (k >= static_cast<int>(ln.size()))
            return ln.back();  // zero subspace
        return ln[k];
    }

    long long layer_dim(int n, int k) const {
        if (k < 0)
            return ambient.dim(n);
        return layer(n, k).dim();
    }

    // The filtration with V^(0) = V, V^(1) = 0 in every degree.
    static FiltrationTable trivial(const GradedDims& dims) {
        FiltrationTable ft;
        ft.ambient = dims;
        ft.layers.resize(dims.max_degree + 1);
        for (int n = 0; n <= dims.max_degree; ++n) {
            ft.layers[n].push_back(QSubspace::full(static_cast<int>(dims.dim(n))));
            ft.layers[n].push_back(QSubspace(static_cast<int>(dims.dim(n))));
        }
        return ft;
    }
};

// Dimensions of the associated graded space: dims(n,k) = dim of the k-th
// layer quotient in degree n.
struct GrSpace {
    int max_degree = 0;
    std::vector<std::vector<long long>> dims;  // dims[n][k], k <= bound(n)

    long long dim(int n, int k) const {
        if (n < 0 || n > max_degree || k < 0 || k >= static_cast<int>(dims[n].size()))
            return 0;
        return dims[n][k];
    }
};

// Associated graded of a filtration: per (n,k) the quotient dimension
// dim layer(n,k) - dim layer(n,k+1). Validates that the table really is a
// filtration (starts full, nested, ends at zero); degreewise total
// dimension is then preserved by telescoping.
inline GrSpace gr(const FiltrationTable& ft) {
    GrSpace g;
    g.max_degree = ft.ambient.max_degree;
    g.dims.resize(g.max_degree + 1);
    for (int n = 0; n <= g.max_degree; ++n) {
        const auto& ln = ft.layers[n];
        if (ln.empty() || ln.front().dim() != ft.ambient.dim(n))
            throw filtration_error("layer (n,0) must be the full degree-n space");
        if (ln.back().dim() != 0)
            throw filtration_error("filtration does not terminate at zero");
        for (size_t k = 0; k + 1 < ln.size(); ++k) {
            for (int r = 0; r < ln[k + 1].basis.rows; ++r)
                if (!member(ln[k], ln[k + 1].basis.row(r)))
                    throw filtration_error("filtration layers are not nested");
            g.dims[n].push_back(ln[k].dim() - ln[k + 1].dim());
        }
    }
    return g;
}

// Raw quotient dimensions without validation; used by the tensor
// compatibility check so that corrupted tables yield a witness instead of
// an exception.
inline GrSpace gr_dims_unchecked(const FiltrationTable& ft) {
    GrSpace g;
    g.max_degree = ft.ambient.max_degree;
    g.dims.resize(g.max_degree + 1);
    for (int n = 0; n <= g.max_degree; ++n)
        for (int k = 0; k < static_cast<int>(ft.layers[n].size()) - 1; ++k)
            g.dims[n].push_back(ft.layer_dim(n, k) - ft.layer_dim(n, k + 1));
    return g;
}

// Tensor product filtration: degree-n ambient is the ordered block basis
// of sum_p A_p (x) B_{n-p}, and the k-th layer is the span of all
// u (x) w with u in a layer i of A and w in a layer k-i of B.
inline FiltrationTable tensor_filtration(const FiltrationTable& a, const FiltrationTable& b) {
    int N = std::min(a.ambient.max_degree, b.ambient.max_degree);
    FiltrationTable out;
    out.ambient.max_degree = N;
    out.ambient.dims.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        long long d = 0;
        for (int p = 0; p <= n; ++p)
            d += a.ambient.dim(p) * b.ambient.dim(n - p);
        out.ambient.dims[n] = d;
    }
    out.layers.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        TensorIndex ti(a.ambient, b.ambient, n, 0, n);
        int k = 0;
        while (true) {
            std::vector<QVector> gens;
            for (int p = 0; p <= n; ++p) {
                int q = n - p;
                for (int i = std::max(0, k - b.bound(q)); i <= std::min(k, a.bound(p)); ++i) {
                    const QSubspace& la = a.layer(p, i);
                    const QSubspace& lb = b.layer(q, k - i);
                    for (int r = 0; r < la.basis.rows; ++r)
                        for (int s = 0; s < lb.basis.rows; ++s)
                            gens.push_back(ti.embed(p, la.basis.row(r), lb.basis.row(s)));
                }
            }
            QSubspace layer = QSubspace::span(ti.total, gens);
            bool zero = layer.dim() == 0;
            out.layers[n].push_back(std::move(layer));
            if (zero && k > 0)
                break;
            if (zero && k == 0)
                break;  // degree with empty ambient
            ++k;
        }
        if (out.layers[n].size() == 1)  // ensure an explicit terminating zero layer
            out.layers[n].push_back(QSubspace(ti.total));
    }
    return out;
}

struct GrTensorCheck {
    bool ok = true;
    int witness_degree = -1;
    int witness_layer = -1;
};

// Dimension form of the compatibility of Gr with tensor products: the
// associated graded of a(x)b must have, in every bidegree (n,k), the
// convolution of the factor quotient dimensions. True for every genuine
// filtration pair; a corrupted table produces a witness.
inline GrTensorCheck check_gr_tensor_iso(const FiltrationTable& a, const FiltrationTable& b) {
    FiltrationTable t = tensor_filtration(a, b);
    GrSpace lhs = gr_dims_unchecked(t);
    GrSpace ga = gr_dims_unchecked(a);
    GrSpace gb = gr_dims_unchecked(b);
    for (int n = 0; n <= t.ambient.max_degree; ++n) {
        int kmax = std::max<int>(static_cast<int>(lhs.dims[n].size()), 2 * (n + 2));
        for (int k = 0; k <= kmax; ++k) {
            long long rhs = 0;
            for (int p = 0; p <= n; ++p)
                for (int i = 0; i <= k; ++i)
                    rhs += ga.dim(p, i) * gb.dim(n - p, k - i);
            if (lhs.dim(n, k) != rhs)
                return {false, n, k};
        }
    }
    return {};
}

}  // namespace primfree
