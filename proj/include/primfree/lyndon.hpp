#pragma once

#include <memory>
#include <vector>

#include "primfree/series.hpp"

namespace primfree {

// Alphabet of homogeneous generator symbols, ordered by ascending degree
// and then by per-degree extraction order. Symbol ids are indices into
// `degree`.
struct GradedAlphabet {
    std::vector<int> degree;  // degree of each symbol

    // u[d] symbols of degree d, for d = 1..u.size()-1
    static GradedAlphabet from_multiplicities(const std::vector<long long>& u) {
        GradedAlphabet a;
        for (int d = 1; d < static_cast<int>(u.size()); ++d)
            for (long long t = 0; t < u[d]; ++t)
                a.degree.push_back(d);
        return a;
    }
};

// A Lyndon word over the alphabet together with its standard bracketing:
// the right factor of every node is the longest proper Lyndon suffix of
// the node's foliage.
struct LyndonTree {
    std::vector<int> word;  // foliage, symbol ids
    int degree = 0;
    int symbol = -1;  // leaf id, -1 for internal nodes
    std::shared_ptr<LyndonTree> left, right;
};

namespace detail {

// w strictly smaller than every proper suffix?
inline bool is_lyndon(const std::vector<int>& w) {
    for (size_t s = 1; s < w.size(); ++s) {
        // compare w with w[s..]
        bool smaller = false, bigger = false;
        for (size_t i = 0; s + i < w.size(); ++i) {
            if (w[i] < w[s + i]) {
                smaller = true;
                break;
            }
            if (w[i] > w[s + i]) {
                bigger = true;
                break;
            }
        }
        if (bigger)
            return false;
        if (!smaller && !bigger)
            return false;  // w[s..] is a prefix of w, so w <= suffix fails
    }
    return !w.empty();
}

inline LyndonTree standard_bracketing(const GradedAlphabet& alphabet,
                                      const std::vector<int>& w) {
    LyndonTree t;
    t.word = w;
    for (int s : w)
        t.degree += alphabet.degree[s];
    if (w.size() == 1) {
        t.symbol = w[0];
        return t;
    }
    // longest proper Lyndon suffix
    size_t split = w.size() - 1;
    for (size_t s = 1; s < w.size(); ++s) {
        std::vector<int> suffix(w.begin() + s, w.end());
        if (is_lyndon(suffix)) {
            split = s;
            break;
        }
    }
    std::vector<int> u(w.begin(), w.begin() + split);
    std::vector<int> v(w.begin() + split, w.end());
    t.left = std::make_shared<LyndonTree>(standard_bracketing(alphabet, u));
    t.right = std::make_shared<LyndonTree>(standard_bracketing(alphabet, v));
    return t;
}

}  // namespace detail

// All Lyndon words of total degree n over the graded alphabet with u[d]
// symbols of degree d, in lexicographic order, each with its standard
// bracketing. Their count is the graded analogue of the Witt number:
// prod_n (1-t^n)^(-count_n) = 1/(1 - sum_d u_d t^d).
inline std::vector<LyndonTree> lyndon_basis(const std::vector<long long>& u, int n) {
    GradedAlphabet alphabet = GradedAlphabet::from_multiplicities(u);
    std::vector<LyndonTree> out;
    std::vector<int> word;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            if (detail::is_lyndon(word))
                out.push_back(detail::standard_bracketing(alphabet, word));
            return;
        }
        for (int s = 0; s < static_cast<int>(alphabet.degree.size()); ++s) {
            if (alphabet.degree[s] > rest)
                continue;
            word.push_back(s);
            self(self, rest - alphabet.degree[s]);
            word.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

}  // namespace primfree
