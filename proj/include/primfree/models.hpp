#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "primfree/presentation.hpp"

namespace primfree {
namespace models {

inline constexpr int kFqsymDefaultCap = 5;

namespace detail {

inline void init_tables(Presentation& h) {
    h.coproduct.assign(h.max_degree + 1, {});
    for (int n = 0; n <= h.max_degree; ++n)
        h.coproduct[n].resize(h.dim(n));
    for (int p = 0; p <= h.max_degree; ++p)
        for (int q = 0; p + q <= h.max_degree; ++q)
            h.product_table(p, q);
    // unit action and counit behaviour of the degree-0 element
    for (int n = 0; n <= h.max_degree; ++n) {
        for (int i = 0; i < h.dim(n); ++i) {
            if (n > 0 || i > 0) {
                h.product_table(0, n)[i] = unit_vector<Rational>(h.dim(n), i);
                h.product_table(n, 0)[i] = unit_vector<Rational>(h.dim(n), i);
            }
        }
    }
    h.product_table(0, 0)[0] = unit_vector<Rational>(1, 0);
    h.coproduct[0][0].push_back({0, 0, 0, Rational(1)});
}

// all compositions of n, ordered by length then lexicographically
inline std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= rest; ++part) {
            cur.push_back(part);
            self(self, rest - part);
            cur.pop_back();
        }
    };
    if (n == 0)
        out.push_back({});
    else
        rec(rec, n);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

inline std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// the permutation with the same relative order as w (letters distinct)
inline std::vector<int> standardize(const std::vector<int>& w) {
    std::vector<int> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
    std::vector<int> out(w.size());
    for (size_t r = 0; r < idx.size(); ++r)
        out[idx[r]] = static_cast<int>(r) + 1;
    return out;
}

inline void shuffles(const std::vector<int>& u, const std::vector<int>& v,
                     std::vector<int>& cur, size_t i, size_t j,
                     std::vector<std::vector<int>>& out) {
    if (i == u.size() && j == v.size()) {
        out.push_back(cur);
        return;
    }
    if (i < u.size()) {
        cur.push_back(u[i]);
        shuffles(u, v, cur, i + 1, j, out);
        cur.pop_back();
    }
    if (j < v.size()) {
        cur.push_back(v[j]);
        shuffles(u, v, cur, i, j + 1, out);
        cur.pop_back();
    }
}

}  // namespace detail

// Tensor bialgebra on `letters` primitive generators of degree 1: basis of
// degree n is all words of length n, the product is concatenation and the
// coproduct sends a word to the sum of its subword/complement splits
// (which makes every letter primitive and the coproduct cocommutative).
inline Presentation tensor_model(int letters, int max_degree) {
    if (letters < 1)
        throw presentation_error("tensor model needs at least one letter");
    if (letters > 26)
        throw resource_error("tensor model letter alphabet capped at 26");
    Presentation h;
    h.name = "tensor" + std::to_string(letters);
    h.max_degree = max_degree;
    h.basis.resize(max_degree + 1);
    h.basis[0] = {"1"};
    // word of degree n <-> its base-`letters` rank
    auto word_of = [&](int n, long long idx) {
        std::string w(n, 'a');
        for (int t = n - 1; t >= 0; --t) {
            w[t] = static_cast<char>('a' + idx % letters);
            idx /= letters;
        }
        return w;
    };
    long long dn = 1;
    for (int n = 1; n <= max_degree; ++n) {
        dn *= letters;
        for (long long i = 0; i < dn; ++i)
            h.basis[n].push_back(word_of(n, i));
    }
    detail::init_tables(h);
    auto rank = [&](const std::string& w) {
        long long r = 0;
        for (char c : w)
            r = r * letters + (c - 'a');
        return static_cast<int>(r);
    };
    for (int p = 1; p <= max_degree; ++p)
        for (int q = 1; p + q <= max_degree; ++q) {
            auto& table = h.product_table(p, q);
            for (int i = 0; i < h.dim(p); ++i)
                for (int j = 0; j < h.dim(q); ++j)
                    table[static_cast<size_t>(i) * h.dim(q) + j] = unit_vector<Rational>(
                        h.dim(p + q), rank(h.basis[p][i] + h.basis[q][j]));
        }
    for (int n = 1; n <= max_degree; ++n) {
        for (int i = 0; i < h.dim(n); ++i) {
            const std::string& w = h.basis[n][i];
            std::map<std::tuple<int, int, int>, Rational> acc;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::string left, right;
                for (int t = 0; t < n; ++t)
                    ((mask >> t) & 1u ? left : right) += w[t];
                int p = static_cast<int>(left.size());
                acc[{p, p ? rank(left) : 0, (n - p) ? rank(right) : 0}] += 1;
            }
            for (const auto& [key, c] : acc) {
                auto [p, l, r] = key;
                h.coproduct[n][i].push_back({p, l, r, c});
            }
        }
    }
    return h;
}

// Noncommutative symmetric functions: degree-n basis indexed by the
// compositions of n (products S_{c1}...S_{ck}), concatenation product, and
// the coproduct determined by Delta(S_m) = sum S_i (x) S_{m-i} extended
// multiplicatively.
inline Presentation nsym_model(int max_degree) {
    Presentation h;
    h.name = "nsym";
    h.max_degree = max_degree;
    h.basis.resize(max_degree + 1);
    std::vector<std::vector<std::vector<int>>> comps(max_degree + 1);
    std::vector<std::map<std::vector<int>, int>> index(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) {
        comps[n] = detail::compositions(n);
        for (size_t i = 0; i < comps[n].size(); ++i) {
            index[n][comps[n][i]] = static_cast<int>(i);
            if (n == 0) {
                h.basis[0] = {"1"};
                continue;
            }
            std::string label;
            for (int part : comps[n][i])
                label += (label.empty() ? "S" : ".S") + std::to_string(part);
            h.basis[n].push_back(label);
        }
    }
    detail::init_tables(h);
    for (int p = 1; p <= max_degree; ++p)
        for (int q = 1; p + q <= max_degree; ++q) {
            auto& table = h.product_table(p, q);
            for (int i = 0; i < h.dim(p); ++i)
                for (int j = 0; j < h.dim(q); ++j) {
                    std::vector<int> cat = comps[p][i];
                    cat.insert(cat.end(), comps[q][j].begin(), comps[q][j].end());
                    table[static_cast<size_t>(i) * h.dim(q) + j] =
                        unit_vector<Rational>(h.dim(p + q), index[p + q][cat]);
                }
        }
    for (int n = 1; n <= max_degree; ++n) {
        for (int i = 0; i < h.dim(n); ++i) {
            const std::vector<int>& c = comps[n][i];
            std::map<std::tuple<int, int, int>, Rational> acc;
            // split every part c_t as a_t + b_t; nonzero a's to the left
            std::vector<int> split(c.size(), 0);
            while (true) {
                std::vector<int> left, right;
                int p = 0;
                for (size_t t = 0; t < c.size(); ++t) {
                    if (split[t] > 0)
                        left.push_back(split[t]);
                    if (c[t] - split[t] > 0)
                        right.push_back(c[t] - split[t]);
                    p += split[t];
                }
                acc[{p, index[p][left], index[n - p][right]}] += 1;
                size_t t = 0;
                while (t < c.size() && split[t] == c[t])
                    split[t++] = 0;
                if (t == c.size())
                    break;
                ++split[t];
            }
            for (const auto& [key, coeff] : acc) {
                auto [p, l, r] = key;
                h.coproduct[n][i].push_back({p, l, r, coeff});
            }
        }
    }
    return h;
}

// Bialgebra of permutations in the fundamental basis: shifted-shuffle
// product, deconcatenate-standardize coproduct. Dimension n! per degree,
// so the truncation degree is capped.
inline Presentation fqsym_model(int max_degree, int cap = kFqsymDefaultCap) {
    if (cap > 8)
        throw resource_error("permutation model cap must be at most 8");
    if (max_degree > cap)
        throw resource_error("permutation model truncation degree exceeds cap " +
                             std::to_string(cap));
    Presentation h;
    h.name = "fqsym";
    h.max_degree = max_degree;
    h.basis.resize(max_degree + 1);
    h.basis[0] = {"1"};
    std::vector<std::vector<std::vector<int>>> perms(max_degree + 1);
    std::vector<std::map<std::vector<int>, int>> index(max_degree + 1);
    perms[0] = {{}};
    index[0][{}] = 0;
    for (int n = 1; n <= max_degree; ++n) {
        perms[n] = detail::permutations_of(n);
        for (size_t i = 0; i < perms[n].size(); ++i) {
            index[n][perms[n][i]] = static_cast<int>(i);
            std::string label = "F";
            for (int v : perms[n][i])
                label += std::to_string(v);
            h.basis[n].push_back(label);
        }
    }
    detail::init_tables(h);
    for (int p = 1; p <= max_degree; ++p)
        for (int q = 1; p + q <= max_degree; ++q) {
            auto& table = h.product_table(p, q);
            for (int i = 0; i < h.dim(p); ++i)
                for (int j = 0; j < h.dim(q); ++j) {
                    std::vector<int> shifted = perms[q][j];
                    for (int& v : shifted)
                        v += p;
                    std::vector<std::vector<int>> words;
                    std::vector<int> cur;
                    detail::shuffles(perms[p][i], shifted, cur, 0, 0, words);
                    QVector out(h.dim(p + q), Rational(0));
                    for (const auto& w : words)
                        out[index[p + q][w]] += 1;
                    table[static_cast<size_t>(i) * h.dim(q) + j] = std::move(out);
                }
        }
    for (int n = 1; n <= max_degree; ++n) {
        for (int i = 0; i < h.dim(n); ++i) {
            const std::vector<int>& sigma = perms[n][i];
            for (int p = 0; p <= n; ++p) {
                std::vector<int> pre(sigma.begin(), sigma.begin() + p);
                std::vector<int> suf(sigma.begin() + p, sigma.end());
                h.coproduct[n][i].push_back({p, index[p][detail::standardize(pre)],
                                             index[n - p][detail::standardize(suf)],
                                             Rational(1)});
            }
        }
    }
    return h;
}

}  // namespace models
}  // namespace primfree
