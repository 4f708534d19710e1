#include "rrbtk/finite_group.hpp"

#include <algorithm>
#include <numeric>

#include "rrbtk/errors.hpp"

namespace rrbtk {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string label) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw NotAGroup("empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw NotAGroup("entry out of range");
    }

    FiniteGroup g;
    g.order_ = n;
    g.table_.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.table_[i * n + j] = table[i][j];

    // Latin square
    for (int i = 0; i < n; ++i) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int j = 0; j < n; ++j) {
            if (seen_row[g.mul(i, j)]++) throw NotAGroup("repeated entry in row " + std::to_string(i));
            if (seen_col[g.mul(j, i)]++) throw NotAGroup("repeated entry in column " + std::to_string(i));
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
                    throw NotAGroup("associativity fails at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ", " + std::to_string(k) + ")");

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = g.mul(e, i) == i && g.mul(i, e) == i;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw NotAGroup("no identity element");
    g.identity_ = identity;

    g.inverses_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (g.mul(i, j) == identity && g.mul(j, i) == identity) {
                g.inverses_[i] = j;
                break;
            }
        if (g.inverses_[i] < 0) throw NotAGroup("no inverse for element " + std::to_string(i));
    }

    g.label_ = std::move(label);
    return g;
}

FiniteGroup FiniteGroup::trivial() { return from_table({{0}}, "1"); }

FiniteGroup FiniteGroup::cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return from_table(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    std::vector<std::vector<int>> t(n1 * n2, std::vector<int>(n1 * n2));
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n1; ++c)
                for (int d = 0; d < n2; ++d)
                    t[a * n2 + b][c * n2 + d] = g1.mul(a, c) * n2 + g2.mul(b, d);
    return from_table(std::move(t), g1.label() + "x" + g2.label());
}

FiniteGroup FiniteGroup::opposite(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = g.mul(j, i);
    return from_table(std::move(t), g.label() + "^op");
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5) throw TooLarge("symmetric group only supported for n <= 5");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));

    auto index_of = [&](const std::vector<int>& p) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
    };
    const int m = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<int> comp(n);
            for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = index_of(comp);
        }
    return from_table(std::move(t), "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    // indices 0..n-1 rotations, n..2n-1 reflections
    const int m = 2 * n;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            bool ri = i >= n, rj = j >= n;
            int a = i % n, b = j % n;
            int rot = ri ? (a - b % n + 2 * n) % n : (a + b) % n;
            t[i][j] = rot + (ri != rj ? n : 0);
        }
    return from_table(std::move(t), "D" + std::to_string(n));
}

bool FiniteGroup::is_abelian() const {
    for (int i = 0; i < order_; ++i)
        for (int j = i + 1; j < order_; ++j)
            if (mul(i, j) != mul(j, i)) return false;
    return true;
}

int FiniteGroup::element_order(int x) const {
    int ord = 1;
    int y = x;
    while (y != identity_) {
        y = mul(y, x);
        ++ord;
    }
    return ord;
}

std::vector<std::vector<int>> FiniteGroup::table_rows() const {
    std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) rows[i][j] = mul(i, j);
    return rows;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
    std::vector<char> in(order_, 0);
    std::vector<int> queue{identity_};
    in[identity_] = 1;
    for (int g : gens)
        if (!in[g]) {
            in[g] = 1;
            queue.push_back(g);
        }
    for (size_t i = 0; i < queue.size(); ++i)
        for (size_t j = 0; j < queue.size(); ++j) {
            int p = mul(queue[i], queue[j]);
            if (!in[p]) {
                in[p] = 1;
                queue.push_back(p);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
    std::vector<char> in(order_, 0);
    for (int x : elems) {
        if (x < 0 || x >= order_ || in[x]) return false;
        in[x] = 1;
    }
    if (!in[identity_]) return false;
    for (int x : elems)
        for (int y : elems)
            if (!in[mul(x, y)]) return false;
    return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& subgroup) const {
    std::vector<char> in(order_, 0);
    for (int x : subgroup) in[x] = 1;
    for (int g = 0; g < order_; ++g)
        for (int x : subgroup)
            if (!in[conj(g, x)]) return false;
    return true;
}

std::vector<std::vector<int>> FiniteGroup::cosets(const std::vector<int>& subgroup) const {
    std::vector<int> coset_of(order_, -1);
    std::vector<std::vector<int>> out;
    for (int g = 0; g < order_; ++g) {
        if (coset_of[g] >= 0) continue;
        std::vector<int> cs;
        for (int x : subgroup) {
            int y = mul(g, x);
            coset_of[y] = static_cast<int>(out.size());
            cs.push_back(y);
        }
        std::sort(cs.begin(), cs.end());
        out.push_back(std::move(cs));
    }
    return out;
}

std::vector<int> FiniteGroup::elements_by_decreasing_order() const {
    std::vector<int> elems(order_);
    std::iota(elems.begin(), elems.end(), 0);
    std::stable_sort(elems.begin(), elems.end(),
                     [&](int a, int b) { return element_order(a) > element_order(b); });
    return elems;
}

GroupHom GroupHom::make(FiniteGroup domain, FiniteGroup codomain, std::vector<int> image) {
    if (static_cast<int>(image.size()) != domain.order())
        throw NotAHomomorphism("image array has wrong length");
    for (int v : image)
        if (v < 0 || v >= codomain.order()) throw NotAHomomorphism("image out of range");
    for (int x = 0; x < domain.order(); ++x)
        for (int y = 0; y < domain.order(); ++y)
            if (image[domain.mul(x, y)] != codomain.mul(image[x], image[y]))
                throw NotAHomomorphism("multiplicativity fails at (" + std::to_string(x) + ", " +
                                       std::to_string(y) + ")");
    return GroupHom{std::move(domain), std::move(codomain), std::move(image)};
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
    std::vector<int> im(g.order());
    std::iota(im.begin(), im.end(), 0);
    return GroupHom{g, g, std::move(im)};
}

GroupHom GroupHom::trivial(const FiniteGroup& domain, const FiniteGroup& codomain) {
    return GroupHom{domain, codomain, std::vector<int>(domain.order(), codomain.identity())};
}

bool GroupHom::is_injective() const {
    std::vector<char> seen(codomain.order(), 0);
    for (int v : image)
        if (seen[v]++) return false;
    return true;
}

bool GroupHom::is_surjective() const {
    std::vector<char> seen(codomain.order(), 0);
    int count = 0;
    for (int v : image)
        if (!seen[v]) {
            seen[v] = 1;
            ++count;
        }
    return count == codomain.order();
}

std::vector<int> GroupHom::kernel_elements() const {
    std::vector<int> out;
    for (int x = 0; x < domain.order(); ++x)
        if (image[x] == codomain.identity()) out.push_back(x);
    return out;
}

std::vector<int> GroupHom::image_elements() const {
    std::vector<char> seen(codomain.order(), 0);
    for (int v : image) seen[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < codomain.order(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

GroupAction GroupAction::make(FiniteGroup actor, FiniteGroup space,
                              std::vector<std::vector<int>> perms, Variance variance) {
    if (static_cast<int>(perms.size()) != actor.order())
        throw NotAnAction("one permutation required per actor element");
    for (const auto& p : perms) {
        if (static_cast<int>(p.size()) != space.order()) throw NotAnAction("permutation has wrong length");
        std::vector<char> seen(space.order(), 0);
        for (int v : p) {
            if (v < 0 || v >= space.order() || seen[v]) throw NotAnAction("not a permutation");
            seen[v] = 1;
        }
        for (int x = 0; x < space.order(); ++x)
            for (int y = 0; y < space.order(); ++y)
                if (p[space.mul(x, y)] != space.mul(p[x], p[y]))
                    throw NotAnAction("permutation is not an automorphism of the space");
    }
    for (int x = 0; x < space.order(); ++x)
        if (perms[actor.identity()][x] != x) throw NotAnAction("identity must act trivially");
    for (int g1 = 0; g1 < actor.order(); ++g1)
        for (int g2 = 0; g2 < actor.order(); ++g2)
            for (int x = 0; x < space.order(); ++x) {
                int lhs = perms[actor.mul(g1, g2)][x];
                int rhs = variance == Variance::Hom ? perms[g1][perms[g2][x]]
                                                    : perms[g2][perms[g1][x]];
                if (lhs != rhs) throw NotAnAction("composition law fails");
            }
    return GroupAction{std::move(actor), std::move(space), std::move(perms), variance};
}

GroupAction GroupAction::trivial(const FiniteGroup& actor, const FiniteGroup& space,
                                 Variance variance) {
    std::vector<int> id(space.order());
    std::iota(id.begin(), id.end(), 0);
    return GroupAction{actor, space, std::vector<std::vector<int>>(actor.order(), id), variance};
}

GroupAction GroupAction::adjoint(const FiniteGroup& g) {
    std::vector<std::vector<int>> perms(g.order(), std::vector<int>(g.order()));
    for (int a = 0; a < g.order(); ++a)
        for (int x = 0; x < g.order(); ++x) perms[a][x] = g.conj(a, x);
    return GroupAction{g, g, std::move(perms), Variance::Hom};
}

bool GroupAction::is_trivial() const {
    for (const auto& p : perms)
        for (int x = 0; x < static_cast<int>(p.size()); ++x)
            if (p[x] != x) return false;
    return true;
}

std::vector<int> generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> have{g.identity()};
    for (int x : g.elements_by_decreasing_order()) {
        if (static_cast<int>(have.size()) == g.order()) break;
        if (std::binary_search(have.begin(), have.end(), x)) continue;
        gens.push_back(x);
        have = g.generated_subgroup(gens);
    }
    return gens;
}

namespace {

// Extends a partial map defined on generator images to a full homomorphism
// by closing under products; returns false on conflict.
bool close_hom(const FiniteGroup& dom, const FiniteGroup& cod,
               const std::vector<int>& gens, const std::vector<int>& imgs,
               std::vector<int>& map_out, long& budget) {
    std::vector<int> map(dom.order(), -1);
    std::vector<int> known;
    auto set = [&](int x, int v) {
        if (map[x] >= 0) return map[x] == v;
        map[x] = v;
        known.push_back(x);
        return true;
    };
    if (!set(dom.identity(), cod.identity())) return false;
    for (size_t i = 0; i < gens.size(); ++i)
        if (!set(gens[i], imgs[i])) return false;
    for (size_t i = 0; i < known.size(); ++i)
        for (size_t j = 0; j < known.size(); ++j) {
            if (--budget < 0) throw SearchBudgetExceeded();
            int x = known[i], y = known[j];
            if (!set(dom.mul(x, y), cod.mul(map[x], map[y]))) return false;
        }
    if (static_cast<int>(known.size()) != dom.order()) return false;  // gens do not generate
    map_out = std::move(map);
    return true;
}

std::vector<std::vector<int>> search_homs(const FiniteGroup& g1, const FiniteGroup& g2,
                                          bool bijective_only, long budget) {
    const auto gens = generating_set(g1);
    std::vector<std::vector<int>> found;
    std::vector<int> imgs(gens.size());

    // Candidate images per generator; for isomorphisms the element order must match.
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int ord = g1.element_order(gens[i]);
        for (int y = 0; y < g2.order(); ++y) {
            if (bijective_only ? g2.element_order(y) == ord : ord % g2.element_order(y) == 0)
                candidates[i].push_back(y);
        }
    }

    std::vector<int> map;
    auto rec = [&](auto&& self, size_t depth) -> void {
        if (depth == gens.size()) {
            if (close_hom(g1, g2, gens, imgs, map, budget)) {
                if (bijective_only) {
                    std::vector<char> seen(g2.order(), 0);
                    for (int v : map)
                        if (seen[v]++) return;
                    if (g1.order() != g2.order()) return;
                }
                found.push_back(map);
            }
            return;
        }
        for (int y : candidates[depth]) {
            imgs[depth] = y;
            self(self, depth + 1);
        }
    };
    if (gens.empty()) {
        if (close_hom(g1, g2, gens, imgs, map, budget))
            if (!bijective_only || g2.order() == 1) found.push_back(map);
    } else {
        rec(rec, 0);
    }
    return found;
}

}  // namespace

std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& g1, const FiniteGroup& g2,
                                                long budget) {
    return search_homs(g1, g2, /*bijective_only=*/false, budget);
}

std::vector<std::vector<int>> all_isomorphisms(const FiniteGroup& g1, const FiniteGroup& g2,
                                               long budget) {
    if (g1.order() != g2.order()) return {};
    return search_homs(g1, g2, /*bijective_only=*/true, budget);
}

std::vector<std::vector<int>> automorphism_group(const FiniteGroup& g, long budget) {
    return all_isomorphisms(g, g, budget);
}

}  // namespace rrbtk
