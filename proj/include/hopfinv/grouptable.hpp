#ifndef HOPFINV_GROUPTABLE_HPP
#define HOPFINV_GROUPTABLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hopfinv/errors.hpp"

namespace hopfinv {

/// Multiplication table of a finite group on {0, ..., n-1}.
/// table[g][h] = g*h. Validation finds the identity and inverses and checks
/// associativity; failures throw NotAGroup naming a witness.
struct GroupTable {
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity = 0;

    std::size_t order() const { return table.size(); }
    std::size_t mul(std::size_t g, std::size_t h) const { return table[g][h]; }
    std::size_t inverse(std::size_t g) const;

    static GroupTable from_table(std::vector<std::vector<std::size_t>> t);
    static GroupTable cyclic(std::size_t n);
    static GroupTable product(const GroupTable& a, const GroupTable& b);
};

inline std::size_t GroupTable::inverse(std::size_t g) const {
    for (std::size_t h = 0; h < order(); ++h)
        if (mul(g, h) == identity) return h;
    throw NotAGroup("element " + std::to_string(g) + " has no inverse");
}

inline GroupTable GroupTable::from_table(std::vector<std::vector<std::size_t>> t) {
    GroupTable g;
    g.table = std::move(t);
    const std::size_t n = g.table.size();
    if (n == 0) throw NotAGroup("empty table");
    for (const auto& row : g.table) {
        if (row.size() != n) throw NotAGroup("table is not square");
        for (std::size_t v : row)
            if (v >= n) throw NotAGroup("table entry out of range");
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t h = 0; h < n; ++h)
            if (g.table[e][h] != h || g.table[h][e] != h) ok = false;
        if (ok) {
            g.identity = e;
            found = true;
        }
    }
    if (!found) throw NotAGroup("no identity element");
    for (std::size_t a = 0; a < n; ++a) {
        bool has_inv = false;
        for (std::size_t b = 0; b < n; ++b)
            if (g.table[a][b] == g.identity && g.table[b][a] == g.identity) has_inv = true;
        if (!has_inv) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
                    throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ")");
    return g;
}

inline GroupTable GroupTable::cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t));
}

inline GroupTable GroupTable::product(const GroupTable& a, const GroupTable& b) {
    const std::size_t na = a.order(), nb = b.order();
    std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
    for (std::size_t x = 0; x < na * nb; ++x)
        for (std::size_t y = 0; y < na * nb; ++y)
            t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    return from_table(std::move(t));
}

} // namespace hopfinv

#endif
