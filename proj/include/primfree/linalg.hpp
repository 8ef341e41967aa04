#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "primfree/rational.hpp"

namespace primfree {

// Exact linear algebra over a field K, written for the rational
// instantiation below. Matrices are dense row-major; a Subspace is stored
// by its unique reduced row echelon basis, so equal subspaces have equal
// representations and every downstream choice that depends on a basis is
// reproducible.

template <class K>
using VectorT = std::vector<K>;

template <class K>
struct MatrixT {
    int rows = 0;
    int cols = 0;
    std::vector<K> data;  // row-major, rows*cols entries

    MatrixT() = default;
    MatrixT(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    K& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const K& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    VectorT<K> row(int r) const {
        return VectorT<K>(data.begin() + static_cast<size_t>(r) * cols,
                          data.begin() + static_cast<size_t>(r + 1) * cols);
    }
    void set_row(int r, const VectorT<K>& v) {
        std::copy(v.begin(), v.end(), data.begin() + static_cast<size_t>(r) * cols);
    }

    static MatrixT from_rows(const std::vector<VectorT<K>>& rs, int ncols) {
        MatrixT m(static_cast<int>(rs.size()), ncols);
        for (size_t i = 0; i < rs.size(); ++i)
            m.set_row(static_cast<int>(i), rs[i]);
        return m;
    }

    bool operator==(const MatrixT& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }
};

template <class K>
bool is_zero(const VectorT<K>& v) {
    for (const K& x : v)
        if (x != 0)
            return false;
    return true;
}

template <class K>
void axpy(VectorT<K>& dst, const K& c, const VectorT<K>& src) {
    if (c == 0)
        return;
    for (size_t i = 0; i < dst.size(); ++i)
        dst[i] += c * src[i];
}

template <class K>
VectorT<K> sub(VectorT<K> a, const VectorT<K>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

template <class K>
VectorT<K> scaled(VectorT<K> v, const K& c) {
    for (K& x : v)
        x *= c;
    return v;
}

template <class K>
VectorT<K> unit_vector(int dim, int pos) {
    VectorT<K> v(dim, K(0));
    v[pos] = K(1);
    return v;
}

// Reduced row echelon form. Pivot search always takes the first nonzero
// entry below the current row, so the output is a pure function of the
// input. Zero rows are dropped; pivot columns come back strictly
// increasing and each pivot column is cleared above and below.
template <class K>
std::pair<MatrixT<K>, std::vector<int>> rref(MatrixT<K> m) {
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < m.cols && lead < m.rows; ++col) {
        int sel = -1;
        for (int r = lead; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0)
            continue;
        if (sel != lead)
            for (int c = 0; c < m.cols; ++c)
                std::swap(m.at(sel, c), m.at(lead, c));
        K inv = K(1) / m.at(lead, col);
        for (int c = col; c < m.cols; ++c)
            m.at(lead, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == lead || m.at(r, col) == 0)
                continue;
            K f = m.at(r, col);
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) -= f * m.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    m.data.resize(static_cast<size_t>(lead) * m.cols);
    m.rows = lead;
    return {std::move(m), std::move(pivots)};
}

template <class K>
int rank(const MatrixT<K>& m) {
    return rref(m).first.rows;
}

// A linear subspace of K^ambient in canonical form: the basis rows are the
// reduced row echelon form of any spanning set, so two subspaces are equal
// iff their stored bases are identical.
template <class K>
struct SubspaceT {
    int ambient = 0;
    MatrixT<K> basis;          // rref rows
    std::vector<int> pivots;   // strictly increasing pivot columns

    SubspaceT() = default;
    explicit SubspaceT(int ambient_dim) : ambient(ambient_dim), basis(0, ambient_dim) {}

    static SubspaceT span(int ambient_dim, const std::vector<VectorT<K>>& vecs) {
        SubspaceT s(ambient_dim);
        auto [b, p] = rref(MatrixT<K>::from_rows(vecs, ambient_dim));
        s.basis = std::move(b);
        s.pivots = std::move(p);
        return s;
    }

    static SubspaceT full(int ambient_dim) {
        SubspaceT s(ambient_dim);
        s.basis = MatrixT<K>(ambient_dim, ambient_dim);
        for (int i = 0; i < ambient_dim; ++i) {
            s.basis.at(i, i) = K(1);
            s.pivots.push_back(i);
        }
        return s;
    }

    int dim() const { return basis.rows; }

    bool operator==(const SubspaceT& o) const {
        return ambient == o.ambient && basis == o.basis;
    }
};

// v in span(s)?  Reduction against the rref basis decides exactly.
template <class K>
bool member(const SubspaceT<K>& s, VectorT<K> v) {
    if (static_cast<int>(v.size()) != s.ambient)
        throw dimension_error("member: vector length does not match ambient dimension");
    for (int r = 0; r < s.basis.rows; ++r) {
        const K& c = v[s.pivots[r]];
        if (c != 0) {
            K f = c;
            for (int j = 0; j < s.ambient; ++j)
                v[j] -= f * s.basis.at(r, j);
        }
    }
    return is_zero(v);
}

// Coordinates of v in the canonical basis of s (empty if v is outside).
// For an rref basis the coordinate on row r is just v[pivot_r].
template <class K>
std::optional<VectorT<K>> coords_in(const SubspaceT<K>& s, const VectorT<K>& v) {
    if (!member(s, v))
        return std::nullopt;
    VectorT<K> c(s.basis.rows);
    for (int r = 0; r < s.basis.rows; ++r)
        c[r] = v[s.pivots[r]];
    return c;
}

// The coordinate subspace spanned by the standard basis vectors at the
// non-pivot positions of s. This is the deterministic complement used for
// every "choose a complement" step in the pipeline: s + complement(s) is
// the whole space and the intersection is zero.
template <class K>
SubspaceT<K> complement(const SubspaceT<K>& s) {
    std::vector<VectorT<K>> vecs;
    size_t pi = 0;
    for (int j = 0; j < s.ambient; ++j) {
        if (pi < s.pivots.size() && s.pivots[pi] == j) {
            ++pi;
            continue;
        }
        vecs.push_back(unit_vector<K>(s.ambient, j));
    }
    return SubspaceT<K>::span(s.ambient, vecs);
}

template <class K>
SubspaceT<K> sum(const SubspaceT<K>& a, const SubspaceT<K>& b) {
    if (a.ambient != b.ambient)
        throw dimension_error("sum: ambient dimensions differ");
    std::vector<VectorT<K>> vecs;
    for (int r = 0; r < a.basis.rows; ++r)
        vecs.push_back(a.basis.row(r));
    for (int r = 0; r < b.basis.rows; ++r)
        vecs.push_back(b.basis.row(r));
    return SubspaceT<K>::span(a.ambient, vecs);
}

// Kernel of m as a subspace of K^cols, canonicalized.
template <class K>
SubspaceT<K> nullspace(const MatrixT<K>& m) {
    auto [r, piv] = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : piv)
        is_pivot[p] = true;
    std::vector<VectorT<K>> vecs;
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j])
            continue;
        VectorT<K> v(m.cols, K(0));
        v[j] = K(1);
        for (size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -r.at(static_cast<int>(i), j);
        vecs.push_back(std::move(v));
    }
    return SubspaceT<K>::span(m.cols, vecs);
}

// a ∩ b, via the kernel of [a^T | -b^T].
template <class K>
SubspaceT<K> intersect(const SubspaceT<K>& a, const SubspaceT<K>& b) {
    if (a.ambient != b.ambient)
        throw dimension_error("intersect: ambient dimensions differ");
    const int ra = a.basis.rows, rb = b.basis.rows;
    if (ra == 0 || rb == 0)
        return SubspaceT<K>(a.ambient);
    MatrixT<K> m(a.ambient, ra + rb);
    for (int i = 0; i < a.ambient; ++i) {
        for (int j = 0; j < ra; ++j)
            m.at(i, j) = a.basis.at(j, i);
        for (int j = 0; j < rb; ++j)
            m.at(i, ra + j) = -b.basis.at(j, i);
    }
    SubspaceT<K> ker = nullspace(m);
    std::vector<VectorT<K>> vecs;
    for (int r = 0; r < ker.basis.rows; ++r) {
        VectorT<K> v(a.ambient, K(0));
        for (int j = 0; j < ra; ++j)
            axpy(v, ker.basis.at(r, j), a.basis.row(j));
        vecs.push_back(std::move(v));
    }
    return SubspaceT<K>::span(a.ambient, vecs);
}

// Express each rhs as a K-combination of the given family rows: one
// elimination for the whole batch, pivoting restricted to the family
// columns. Returns one coefficient vector per rhs (nullopt if that rhs is
// outside the span). Free coefficients are set to zero, so solutions are
// canonical even for dependent families.
template <class K>
std::vector<std::optional<VectorT<K>>> express_in_rows(const std::vector<VectorT<K>>& family,
                                                       const std::vector<VectorT<K>>& rhs,
                                                       int ambient) {
    const int nf = static_cast<int>(family.size());
    const int nr = static_cast<int>(rhs.size());
    MatrixT<K> m(ambient, nf + nr);
    for (int i = 0; i < ambient; ++i) {
        for (int j = 0; j < nf; ++j)
            m.at(i, j) = family[j][i];
        for (int j = 0; j < nr; ++j)
            m.at(i, nf + j) = rhs[j][i];
    }
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < nf && lead < m.rows; ++col) {
        int sel = -1;
        for (int r = lead; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0)
            continue;
        if (sel != lead)
            for (int c = 0; c < m.cols; ++c)
                std::swap(m.at(sel, c), m.at(lead, c));
        K inv = K(1) / m.at(lead, col);
        for (int c = col; c < m.cols; ++c)
            m.at(lead, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == lead || m.at(r, col) == 0)
                continue;
            K f = m.at(r, col);
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) -= f * m.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    std::vector<std::optional<VectorT<K>>> out(nr);
    for (int j = 0; j < nr; ++j) {
        bool consistent = true;
        for (int r = lead; r < m.rows; ++r)
            if (m.at(r, nf + j) != 0) {
                consistent = false;
                break;
            }
        if (!consistent) {
            out[j] = std::nullopt;
            continue;
        }
        VectorT<K> c(nf, K(0));
        for (size_t i = 0; i < pivots.size(); ++i)
            c[pivots[i]] = m.at(static_cast<int>(i), nf + j);
        out[j] = std::move(c);
    }
    return out;
}

template <class K>
VectorT<K> mat_apply(const MatrixT<K>& m, const VectorT<K>& v) {
    if (static_cast<int>(v.size()) != m.cols)
        throw dimension_error("mat_apply: vector length does not match matrix columns");
    VectorT<K> out(m.rows, K(0));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c) != 0 && v[c] != 0)
                out[r] += m.at(r, c) * v[c];
    return out;
}

using QVector = VectorT<Rational>;
using QMatrix = MatrixT<Rational>;
using QSubspace = SubspaceT<Rational>;

}  // namespace primfree
