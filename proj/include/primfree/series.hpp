#pragma once

#include <vector>

#include "primfree/rational.hpp"

namespace primfree {

// Truncated integer power series utilities used for generator counting:
// coefficients are small at desk scale, so long long is plenty.
using Series = std::vector<long long>;  // s[n] = coefficient of t^n

inline Series series_mul(const Series& a, const Series& b, int max_degree) {
    Series out(max_degree + 1, 0);
    for (int i = 0; i <= max_degree && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= max_degree && j < static_cast<int>(b.size()); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// 1 / (sum b_n t^n) with b_0 = 1.
inline Series series_inverse(const Series& b, int max_degree) {
    if (b.empty() || b[0] != 1)
        throw dimension_error("series inverse needs constant term 1");
    Series inv(max_degree + 1, 0);
    inv[0] = 1;
    for (int n = 1; n <= max_degree; ++n) {
        long long s = 0;
        for (int k = 1; k <= n; ++k)
            if (k < static_cast<int>(b.size()))
                s += b[k] * inv[n - k];
        inv[n] = -s;
    }
    return inv;
}

// (1 - t^n)^(-c) truncated: coefficient of t^(n j) is C(c-1+j, j).
inline Series geometric_pow(int n, long long c, int max_degree) {
    Series out(max_degree + 1, 0);
    out[0] = 1;
    long long coeff = 1;
    for (long long j = 1; n * j <= max_degree; ++j) {
        coeff = coeff * (c - 1 + j) / j;  // exact: product of j consecutive terms
        out[static_cast<size_t>(n * j)] = coeff;
    }
    return out;
}

// prod_{n=1..N} (1 - t^n)^(-e[n]) mod t^(N+1); e is 1-indexed by degree.
inline Series product_of_geometric(const std::vector<long long>& e, int max_degree) {
    Series out(max_degree + 1, 0);
    out[0] = 1;
    for (int n = 1; n <= max_degree; ++n) {
        if (n >= static_cast<int>(e.size()) || e[n] == 0)
            continue;
        out = series_mul(out, geometric_pow(n, e[n], max_degree), max_degree);
    }
    return out;
}

// Generator multiplicities of a free algebra from its dimension sequence:
// the unique v with sum a_n t^n = 1/(1 - sum v_n t^n), computed by
// v_n = a_n - sum_{k=1}^{n-1} v_k a_{n-k}. Negative entries signal that no
// free algebra has this Hilbert series; callers decide what that means.
inline std::vector<long long> invert_hilbert(const std::vector<long long>& a) {
    if (a.empty() || a[0] != 1)
        throw dimension_error("hilbert inversion needs a(0) = 1");
    const int N = static_cast<int>(a.size()) - 1;
    std::vector<long long> v(N + 1, 0);
    for (int n = 1; n <= N; ++n) {
        long long s = a[n];
        for (int k = 1; k < n; ++k)
            s -= v[k] * a[n - k];
        v[n] = s;
    }
    return v;
}

}  // namespace primfree
