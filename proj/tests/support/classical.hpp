#pragma once

// An independent brute-force computation of classical second group
// cohomology H^2(B, L) with trivial action, used only as an oracle. It
// shares nothing with the library's Smith-form machinery: cocycles and
// coboundaries are enumerated as explicit tables and classes are
// compared by subtraction.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gmpxx.h"
#include "rrbtk/finite_group.hpp"

namespace classical {

struct H2Group {
    long order = 0;
    std::multiset<long> element_orders;
};

/// All normalized 2-cochains B x B -> L as flat vectors over the
/// non-identity pairs, filtered by the classical cocycle identity
///   f(b2, b3) - f(b1 b2, b3) + f(b1, b2 b3) - f(b1, b2) = 0.
inline H2Group classical_h2(const rrbtk::FiniteGroup& b, const rrbtk::FiniteGroup& l) {
    const int nb = b.order(), nl = l.order();
    const int e = b.identity();
    std::vector<int> free_b;
    for (int x = 0; x < nb; ++x)
        if (x != e) free_b.push_back(x);
    const int slots = static_cast<int>(free_b.size() * free_b.size());

    auto full = [&](const std::vector<int>& v) {
        std::vector<std::vector<int>> f(nb, std::vector<int>(nb, l.identity()));
        int t = 0;
        for (int x : free_b)
            for (int y : free_b) f[x][y] = v[t++];
        return f;
    };
    auto is_cocycle = [&](const std::vector<int>& v) {
        auto f = full(v);
        for (int b1 = 0; b1 < nb; ++b1)
            for (int b2 = 0; b2 < nb; ++b2)
                for (int b3 = 0; b3 < nb; ++b3) {
                    int lhs = l.mul(f[b2][b3], l.inv(f[b.mul(b1, b2)][b3]));
                    lhs = l.mul(lhs, f[b1][b.mul(b2, b3)]);
                    lhs = l.mul(lhs, l.inv(f[b1][b2]));
                    if (lhs != l.identity()) return false;
                }
        return true;
    };

    std::vector<std::vector<int>> cocycles;
    std::vector<int> v(slots, l.identity());
    for (;;) {
        if (is_cocycle(v)) cocycles.push_back(v);
        int t = 0;
        while (t < slots && v[t] == nl - 1) v[t++] = 0;
        if (t == slots) break;
        ++v[t];
    }

    // Coboundaries of normalized 1-cochains g: f(b1,b2) = g(b1) + g(b2) - g(b1 b2).
    std::set<std::vector<int>> coboundaries;
    std::vector<int> g(free_b.size(), l.identity());
    for (;;) {
        std::vector<int> gg(nb, l.identity());
        for (size_t i = 0; i < free_b.size(); ++i) gg[free_b[i]] = g[i];
        std::vector<int> w;
        w.reserve(slots);
        for (int x : free_b)
            for (int y : free_b)
                w.push_back(l.mul(l.mul(gg[x], gg[y]), l.inv(gg[b.mul(x, y)])));
        coboundaries.insert(std::move(w));
        size_t t = 0;
        while (t < g.size() && g[t] == nl - 1) g[t++] = 0;
        if (t == g.size()) break;
        ++g[t];
    }

    auto sub = [&](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> d(slots);
        for (int t = 0; t < slots; ++t) d[t] = l.mul(x[t], l.inv(y[t]));
        return d;
    };
    auto canonical = [&](const std::vector<int>& x) {
        std::vector<int> best = x;
        for (const auto& c : coboundaries) best = std::min(best, sub(x, c));
        return best;
    };

    std::set<std::vector<int>> classes;
    for (const auto& z : cocycles) classes.insert(canonical(z));

    H2Group out;
    out.order = static_cast<long>(classes.size());
    std::vector<int> zero(slots, l.identity());
    for (const auto& c : classes) {
        std::vector<int> acc = c;
        long ord = 1;
        while (canonical(acc) != zero) {
            std::vector<int> next(slots);
            for (int t = 0; t < slots; ++t) next[t] = l.mul(acc[t], c[t]);
            acc = next;
            ++ord;
        }
        out.element_orders.insert(ord);
    }
    return out;
}

/// The same multiset of element orders read off a list of invariant
/// factors, by walking every tuple.
inline std::multiset<long> orders_from_factors(const std::vector<mpz_class>& factors) {
    std::vector<long> fs;
    for (const auto& f : factors) fs.push_back(f.get_si());
    std::multiset<long> out;
    std::vector<long> t(fs.size(), 0);
    for (;;) {
        long ord = 1;
        for (size_t i = 0; i < fs.size(); ++i)
            if (t[i] != 0) ord = std::lcm(ord, fs[i] / std::gcd(fs[i], t[i]));
        out.insert(ord);
        size_t i = 0;
        while (i < fs.size() && t[i] == fs[i] - 1) t[i++] = 0;
        if (i == fs.size()) break;
        ++t[i];
    }
    return out;
}

}  // namespace classical
