#pragma once

#include <string>
#include <vector>

#include "primfree/gr.hpp"
#include "primfree/series.hpp"

namespace primfree {

struct lift_error : error {
    int witness_degree;
    lift_error(const std::string& msg, int degree) : error(msg), witness_degree(degree) {}
};

// Homogeneous algebra generators: gens[n] lists linearly independent
// degree-n vectors spanning a complement of the decomposables.
struct GeneratorSet {
    int max_degree = 0;
    std::vector<std::vector<QVector>> gens;  // [n][t], degree-n coordinates

    std::vector<long long> multiplicities() const {
        std::vector<long long> v(max_degree + 1, 0);
        for (int n = 1; n <= max_degree; ++n)
            v[n] = static_cast<long long>(gens[n].size());
        return v;
    }
};

struct HilbertData {
    std::vector<long long> a;  // dim H_n
    std::vector<long long> v;  // generator multiplicity per degree
};

struct FreeCheck {
    bool ok = true;
    int witness_degree = -1;
    std::string detail;
};

inline std::vector<long long> hilbert(const Presentation& h) {
    std::vector<long long> a(h.max_degree + 1);
    for (int n = 0; n <= h.max_degree; ++n)
        a[n] = h.dim(n);
    return a;
}

// Span of all products of two positive-degree elements in degree n.
inline QSubspace decomposables(const Presentation& h, int n) {
    if (n < 1 || n > h.max_degree)
        throw dimension_error("decomposables need 1 <= n <= max degree");
    std::vector<QVector> gens;
    for (int p = 1; p <= n - 1; ++p) {
        int q = n - p;
        const auto& table = h.product.at({p, q});
        for (const QVector& v : table)
            gens.push_back(v);
    }
    return QSubspace::span(h.dim(n), gens);
}

// Canonical homogeneous generators: in each degree the coordinate
// complement of the decomposables.
inline GeneratorSet extract_generators(const Presentation& h) {
    GeneratorSet g;
    g.max_degree = h.max_degree;
    g.gens.resize(h.max_degree + 1);
    for (int n = 1; n <= h.max_degree; ++n) {
        QSubspace comp = complement(decomposables(h, n));
        for (int r = 0; r < comp.basis.rows; ++r)
            g.gens[n].push_back(comp.basis.row(r));
    }
    return g;
}

namespace detail {

// compositions of n in lexicographic order: (1,1,..,1) first, (n) last
inline std::vector<std::vector<int>> compositions_lex(int n) {
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
    rec(rec, n);
    return out;
}

}  // namespace detail

// Evaluates every word in the generators of total degree n, composition by
// composition (lexicographic), generator indices in odometer order.
inline std::vector<QVector> generator_words(const Presentation& h, const GeneratorSet& g,
                                            int n) {
    std::vector<QVector> words;
    for (const auto& comp : detail::compositions_lex(n)) {
        bool possible = true;
        for (int part : comp)
            if (g.gens[part].empty()) {
                possible = false;
                break;
            }
        if (!possible)
            continue;
        std::vector<size_t> idx(comp.size(), 0);
        while (true) {
            QVector acc = g.gens[comp[0]][idx[0]];
            int deg = comp[0];
            for (size_t t = 1; t < comp.size(); ++t) {
                acc = mul(h, deg, acc, comp[t], g.gens[comp[t]][idx[t]]);
                deg += comp[t];
            }
            words.push_back(std::move(acc));
            size_t t = comp.size();
            while (t > 0 && ++idx[t - 1] == g.gens[comp[t - 1]].size())
                idx[--t] = 0;
            if (t == 0)
                break;
        }
    }
    return words;
}

// Does evaluation of all generator words give a basis in each degree?
// Equivalent to: the word count matches dim H_n and the evaluation matrix
// has full rank.
inline FreeCheck check_free(const Presentation& h, const GeneratorSet& g) {
    for (int n = 1; n <= h.max_degree; ++n) {
        std::vector<QVector> words = generator_words(h, g, n);
        long long count = static_cast<long long>(words.size());
        if (count != h.dim(n)) {
            return {false, n,
                    "degree " + std::to_string(n) + ": " + std::to_string(count) +
                        " generator words vs dimension " + std::to_string(h.dim(n))};
        }
        int r = rank(QMatrix::from_rows(words, h.dim(n)));
        if (r != h.dim(n)) {
            return {false, n,
                    "degree " + std::to_string(n) + ": word evaluation rank " +
                        std::to_string(r) + " below dimension " + std::to_string(h.dim(n))};
        }
    }
    return {};
}

// Pulls generators back from the associated graded: Gr generators are
// single basis classes (coordinate complements), and each class carries
// its stored representative in H. When Gr is free these representatives
// generate H freely.
inline GeneratorSet lift_generators_from_gr(const Presentation& h) {
    GrBialgebra g = gr_bialgebra(h);
    GeneratorSet gr_gens = extract_generators(g.pres);
    FreeCheck fc = check_free(g.pres, gr_gens);
    if (!fc.ok)
        throw lift_error("generator lift failed: associated graded is not free at degree " +
                             std::to_string(fc.witness_degree),
                         fc.witness_degree);
    GeneratorSet out;
    out.max_degree = h.max_degree;
    out.gens.resize(h.max_degree + 1);
    for (int n = 1; n <= h.max_degree; ++n) {
        for (const QVector& v : gr_gens.gens[n]) {
            int pos = -1;
            for (size_t c = 0; c < v.size(); ++c) {
                if (v[c] == 0)
                    continue;
                if (pos >= 0 || v[c] != 1)
                    throw lift_error("generator lift: Gr generator is not a basis class", n);
                pos = static_cast<int>(c);
            }
            if (pos < 0)
                throw lift_error("generator lift: zero Gr generator", n);
            out.gens[n].push_back(g.elements[n][pos].rep);
        }
    }
    return out;
}

}  // namespace primfree
