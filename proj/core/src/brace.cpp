#include "rrbtk/brace.hpp"

#include <algorithm>
#include <numeric>

#include "rrbtk/errors.hpp"

namespace rrbtk {

SkewLeftBrace SkewLeftBrace::make(FiniteGroup dot, FiniteGroup circ) {
    if (dot.order() != circ.order()) throw NotABrace(-1, -1, -1);
    if (dot.identity() != circ.identity()) throw NotABrace(dot.identity(), circ.identity(), -1);
    const int n = dot.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = circ.mul(a, dot.mul(b, c));
                int rhs = dot.mul(dot.mul(circ.mul(a, b), dot.inv(a)), circ.mul(a, c));
                if (lhs != rhs) throw NotABrace(a, b, c);
            }
    return SkewLeftBrace{std::move(dot), std::move(circ)};
}

GroupAction SkewLeftBrace::lambda_action() const {
    const int n = order();
    std::vector<std::vector<int>> perms(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) perms[a][b] = lambda(a, b);
    return GroupAction::make(circ, dot, std::move(perms), Variance::Hom);
}

SkewLeftBrace brace_new(std::vector<std::vector<int>> dot_table,
                        std::vector<std::vector<int>> circ_table) {
    auto dot = FiniteGroup::from_table(std::move(dot_table), "dot");
    auto circ = FiniteGroup::from_table(std::move(circ_table), "circ");
    return SkewLeftBrace::make(std::move(dot), std::move(circ));
}

SkewLeftBrace induced_brace(const RRBGroup& rrb) {
    auto desc = descendent_group(rrb);
    try {
        return SkewLeftBrace::make(rrb.H, std::move(desc));
    } catch (const NotABrace& e) {
        throw InternalInvariantViolation(std::string("descendent pair is not a brace: ") +
                                         e.what());
    }
}

RRBGroup rrb_from_brace(const SkewLeftBrace& b) {
    std::vector<int> r(b.order());
    std::iota(r.begin(), r.end(), 0);
    return RRBGroup::make(b.dot, b.circ, b.lambda_action(), std::move(r));
}

YBESolution ybe_solution(const SkewLeftBrace& b) {
    const int n = b.order();
    YBESolution sol{n, std::vector<std::vector<std::pair<int, int>>>(
                           n, std::vector<std::pair<int, int>>(n))};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int u = b.lambda(x, y);
            int v = b.circ.mul(b.circ.inv(u), b.circ.mul(x, y));
            sol.r[x][y] = {u, v};
        }

    // Braid equation on triples.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto [a1, b1] = sol.r[x][y];
                auto [a2, c1] = sol.r[b1][z];
                auto [a3, b3] = sol.r[a1][a2];
                // lhs = (r x id)(id x r)(r x id)(x,y,z) = (a3, b3, c1)
                auto [p1, q1] = sol.r[y][z];
                auto [p2, s1] = sol.r[x][p1];
                auto [p3, q3] = sol.r[s1][q1];
                // rhs = (id x r)(r x id)(id x r)(x,y,z) = (p2, p3, q3)
                if (a3 != p2 || b3 != p3 || c1 != q3)
                    throw SolutionCheckFailed("braid equation at (" + std::to_string(x) + ", " +
                                              std::to_string(y) + ", " + std::to_string(z) + ")");
            }

    // Bijectivity of r on pairs.
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [u, v] = sol.r[x][y];
            if (seen[u * n + v]++) throw SolutionCheckFailed("r is not bijective");
        }
    // Non-degeneracy.
    for (int x = 0; x < n; ++x) {
        std::vector<char> s1(n, 0), s2(n, 0);
        for (int y = 0; y < n; ++y) {
            if (s1[sol.r[x][y].first]++) throw SolutionCheckFailed("left component degenerate");
            if (s2[sol.r[y][x].second]++) throw SolutionCheckFailed("right component degenerate");
        }
    }
    return sol;
}

BraceHom BraceHom::make(SkewLeftBrace source, SkewLeftBrace target, std::vector<int> image) {
    GroupHom::make(source.dot, target.dot, image);
    GroupHom::make(source.circ, target.circ, image);
    return BraceHom{std::move(source), std::move(target), std::move(image)};
}

BraceHom brace_hom_from_rrb_hom(const RRBHom& h) {
    return BraceHom::make(induced_brace(h.source), induced_brace(h.target), h.psi.image);
}

GoodTriplet GoodTriplet::trivial(const SkewLeftBrace& m, const FiniteGroup& i) {
    return GoodTriplet{m, i, GroupAction::trivial(m.circ, i, Variance::Hom),
                       GroupAction::trivial(m.dot, i, Variance::AntiHom),
                       GroupAction::trivial(m.circ, i, Variance::AntiHom)};
}

GoodTriplet good_triplet_verify(const SkewLeftBrace& m, const FiniteGroup& i, GroupAction xi,
                                GroupAction zeta, GroupAction eps) {
    if (!i.is_abelian()) throw NotAbelian();
    if (!xi.actor.same_table(m.circ) || xi.variance != Variance::Hom ||
        !zeta.actor.same_table(m.dot) || zeta.variance != Variance::AntiHom ||
        !eps.actor.same_table(m.circ) || eps.variance != Variance::AntiHom ||
        !xi.space.same_table(i) || !zeta.space.same_table(i) || !eps.space.same_table(i))
        throw NotAnAction("triplet actors/variances do not match the brace");

    const int n = m.order();
    for (int m1 = 0; m1 < n; ++m1)
        for (int m2 = 0; m2 < n; ++m2)
            for (int y = 0; y < i.order(); ++y) {
                int md = m.dot.mul(m1, m2);
                int lhs1 = i.mul(xi.apply(md, eps.apply(md, y)), zeta.apply(m2, y));
                int rhs1 = i.mul(zeta.apply(m2, xi.apply(m1, eps.apply(m1, y))),
                                 xi.apply(m2, eps.apply(m2, y)));
                if (lhs1 != rhs1)
                    throw NotGoodTriplet(1, "(" + std::to_string(m1) + ", " + std::to_string(m2) +
                                                ", " + std::to_string(y) + ")");
                int sub = m.dot.mul(m.dot.inv(m1), m.circ.mul(m1, m2));
                int lhs2 = zeta.apply(sub, xi.apply(m1, y));
                int rhs2 = xi.apply(m1, zeta.apply(m2, y));
                if (lhs2 != rhs2)
                    throw NotGoodTriplet(2, "(" + std::to_string(m1) + ", " + std::to_string(m2) +
                                                ", " + std::to_string(y) + ")");
            }
    return GoodTriplet{m, i, std::move(xi), std::move(zeta), std::move(eps)};
}

namespace {

// The three cocycle condition values at a triple; all must equal 1.
std::array<int, 3> cocycle_conditions(const GoodTriplet& t, const BraceCocyclePair& p, int m1,
                                      int m2, int m3) {
    const auto& M = t.m;
    const auto& I = t.i;
    auto G = [&](int a, int b) { return p.g[a][b]; };
    auto F = [&](int a, int b) { return p.f[a][b]; };
    auto mul = [&](std::initializer_list<int> xs) {
        int acc = I.identity();
        for (int x : xs) acc = I.mul(acc, x);
        return acc;
    };

    int c1 = mul({G(m2, m3), I.inv(G(M.dot.mul(m1, m2), m3)), G(m1, M.dot.mul(m2, m3)),
                  I.inv(t.zeta.apply(m3, G(m1, m2)))});

    int c12 = M.circ.mul(m1, m2);
    int c123 = M.circ.mul(c12, m3);
    int inner = t.eps.apply(m3, t.xi.apply_inverse(c12, F(m1, m2)));
    int c2 = mul({t.xi.apply(m1, F(m2, m3)), I.inv(F(c12, m3)), F(m1, M.circ.mul(m2, m3)),
                  I.inv(t.xi.apply(c123, inner))});

    int m1i = M.dot.inv(m1);
    int c13 = M.circ.mul(m1, m3);
    int c3 = mul({t.xi.apply(m1, G(m2, m3)), t.zeta.apply(c13, G(m1, m1i)),
                  I.inv(t.zeta.apply(c13, G(c12, m1i))), I.inv(G(M.dot.mul(c12, m1i), c13)),
                  I.inv(t.zeta.apply(M.dot.mul(m1i, c13), F(m1, m2))), F(m1, M.dot.mul(m2, m3)),
                  I.inv(F(m1, m3))});
    return {c1, c2, c3};
}

// Slot bookkeeping for the (g, f) pair over non-degenerate pairs.
struct PairLayout {
    int n;  // brace order
    int id;
    std::vector<int> pair_index;  // (m1*n+m2) -> slot or -1
    std::vector<std::pair<int, int>> pairs;

    explicit PairLayout(const SkewLeftBrace& m) : n(m.order()), id(m.identity()) {
        pair_index.assign(static_cast<size_t>(n) * n, -1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != id && b != id) {
                    pair_index[a * n + b] = static_cast<int>(pairs.size());
                    pairs.emplace_back(a, b);
                }
    }
    int count() const { return static_cast<int>(pairs.size()); }
};

BraceCocyclePair values_to_pair(const PairLayout& lay, int i_identity,
                                const std::vector<int>& values) {
    BraceCocyclePair p;
    p.g.assign(lay.n, std::vector<int>(lay.n, i_identity));
    p.f.assign(lay.n, std::vector<int>(lay.n, i_identity));
    for (int k = 0; k < lay.count(); ++k) {
        auto [a, b] = lay.pairs[k];
        p.g[a][b] = values[k];
        p.f[a][b] = values[lay.count() + k];
    }
    return p;
}

std::vector<int> pair_to_values(const PairLayout& lay, const BraceCocyclePair& p) {
    std::vector<int> values(2 * lay.count());
    for (int k = 0; k < lay.count(); ++k) {
        auto [a, b] = lay.pairs[k];
        values[k] = p.g[a][b];
        values[lay.count() + k] = p.f[a][b];
    }
    return values;
}

struct BraceLinearization {
    PairLayout lay;
    std::shared_ptr<const AbelianDecomposition> idec;
    SlotSpace c1, c2, c3;
    ZMat d1, d2;

    explicit BraceLinearization(const GoodTriplet& t) : lay(t.m) {
        idec = std::make_shared<AbelianDecomposition>(AbelianDecomposition::of(t.i));
        const int n = lay.n;
        c1 = SlotSpace::make(
            std::vector<std::shared_ptr<const AbelianDecomposition>>(n - 1, idec));
        c2 = SlotSpace::make(
            std::vector<std::shared_ptr<const AbelianDecomposition>>(2 * lay.count(), idec));
        c3 = SlotSpace::make(
            std::vector<std::shared_ptr<const AbelianDecomposition>>(3 * n * n * n, idec));

        d1 = linearize(c1, c2, [&](const std::vector<int>& theta_v) {
            std::vector<int> theta(n, t.i.identity());
            int at = 0;
            for (int m = 0; m < n; ++m)
                if (m != lay.id) theta[m] = theta_v[at++];
            auto p = brace_coboundary(t, theta);
            return pair_to_values(lay, p);
        });
        d2 = linearize(c2, c3, [&](const std::vector<int>& values) {
            auto p = values_to_pair(lay, t.i.identity(), values);
            std::vector<int> out;
            out.reserve(3 * n * n * n);
            for (int m1 = 0; m1 < n; ++m1)
                for (int m2 = 0; m2 < n; ++m2)
                    for (int m3 = 0; m3 < n; ++m3) {
                        auto c = cocycle_conditions(t, p, m1, m2, m3);
                        out.push_back(c[0]);
                        out.push_back(c[1]);
                        out.push_back(c[2]);
                    }
            return out;
        });
    }
};

}  // namespace

bool brace_pair_is_cocycle(const GoodTriplet& t, const BraceCocyclePair& p) {
    const int n = t.m.order(), id = t.m.identity(), e = t.i.identity();
    for (int a = 0; a < n; ++a) {
        if (p.g[a][id] != e || p.g[id][a] != e || p.f[a][id] != e || p.f[id][a] != e)
            return false;
    }
    for (int m1 = 0; m1 < n; ++m1)
        for (int m2 = 0; m2 < n; ++m2)
            for (int m3 = 0; m3 < n; ++m3) {
                auto c = cocycle_conditions(t, p, m1, m2, m3);
                if (c[0] != e || c[1] != e || c[2] != e) return false;
            }
    return true;
}

BraceCocyclePair brace_coboundary(const GoodTriplet& t, const std::vector<int>& theta) {
    const int n = t.m.order();
    const auto& I = t.i;
    BraceCocyclePair p;
    p.g.assign(n, std::vector<int>(n));
    p.f.assign(n, std::vector<int>(n));
    for (int m1 = 0; m1 < n; ++m1)
        for (int m2 = 0; m2 < n; ++m2) {
            int md = t.m.dot.mul(m1, m2);
            p.g[m1][m2] =
                I.mul(I.mul(t.xi.apply(md, I.inv(theta[md])),
                            t.zeta.apply(m2, t.xi.apply(m1, theta[m1]))),
                      t.xi.apply(m2, theta[m2]));
            int mc = t.m.circ.mul(m1, m2);
            p.f[m1][m2] =
                I.mul(I.mul(I.inv(theta[mc]), t.eps.apply(m2, theta[m1])), theta[m2]);
        }
    return p;
}

bool brace_pair_is_coboundary(const GoodTriplet& t, const BraceCocyclePair& p) {
    BraceLinearization lin(t);
    ZVec v = lin.c2.encode(pair_to_values(lin.lay, p));
    return lattice_contains(coboundary_lattice(lin.d1, lin.c2.moduli()), v);
}

BraceH2Result brace_h2(const GoodTriplet& t) {
    BraceLinearization lin(t);
    auto sub = cochain_cohomology(lin.d1, lin.d2, lin.c2.moduli(), lin.c3.moduli());
    BraceH2Result res;
    res.factors = sub.factors;
    res.order = sub.order;
    for (const auto& rep : sub.representative_coords) {
        auto values = lin.c2.decode(rep);
        res.representatives.push_back(values_to_pair(lin.lay, t.i.identity(), values));
    }
    return res;
}

BraceExtension BraceExtension::make(SkewLeftBrace kernel, SkewLeftBrace total,
                                    SkewLeftBrace quot, BraceHom incl, BraceHom proj) {
    if (!incl.source.dot.same_table(kernel.dot) || !incl.target.dot.same_table(total.dot) ||
        !proj.source.dot.same_table(total.dot) || !proj.target.dot.same_table(quot.dot))
        throw NotAnExtension("component domains do not match");
    if (!kernel.is_trivial() || !kernel.dot.is_abelian())
        throw NotAnExtension("kernel must be a trivial brace on an abelian group");
    std::vector<char> seen(total.order(), 0);
    for (int x : incl.image)
        if (seen[x]++) throw NotAnExtension("inclusion is not injective");
    std::vector<char> hit(quot.order(), 0);
    for (int x = 0; x < total.order(); ++x) hit[proj.image[x]] = 1;
    for (int a = 0; a < quot.order(); ++a)
        if (!hit[a]) throw NotAnExtension("projection is not surjective");
    for (int x = 0; x < total.order(); ++x) {
        bool in_img = seen[x] != 0;
        bool in_ker = proj.image[x] == quot.identity();
        if (in_img != in_ker) throw NotAnExtension("image of inclusion differs from kernel");
    }
    return BraceExtension{std::move(kernel), std::move(total), std::move(quot), std::move(incl),
                          std::move(proj)};
}

std::vector<int> canonical_section(const BraceExtension& e) {
    std::vector<int> s(e.quot.order(), -1);
    for (int x = 0; x < e.total.order(); ++x)
        if (s[e.proj.image[x]] < 0) s[e.proj.image[x]] = x;
    s[e.quot.identity()] = e.total.identity();
    return s;
}

GoodTriplet brace_extension_triplet(const BraceExtension& e) {
    auto s = canonical_section(e);
    const int ni = e.kernel.order();
    std::vector<int> from_total(e.total.order(), -1);
    for (int y = 0; y < ni; ++y) from_total[e.incl.image[y]] = y;
    auto pull = [&](int x) {
        if (from_total[x] < 0)
            throw InternalInvariantViolation("triplet action escapes the kernel");
        return from_total[x];
    };
    const auto& E = e.total;
    std::vector<std::vector<int>> xi(e.quot.order(), std::vector<int>(ni));
    std::vector<std::vector<int>> zeta(e.quot.order(), std::vector<int>(ni));
    std::vector<std::vector<int>> eps(e.quot.order(), std::vector<int>(ni));
    for (int m = 0; m < e.quot.order(); ++m)
        for (int y = 0; y < ni; ++y) {
            int ey = e.incl.image[y];
            xi[m][y] = pull(E.lambda(s[m], ey));
            zeta[m][y] = pull(E.dot.mul(E.dot.mul(E.dot.inv(s[m]), ey), s[m]));
            eps[m][y] = pull(E.circ.mul(E.circ.mul(E.circ.inv(s[m]), ey), s[m]));
        }
    return good_triplet_verify(
        e.quot, e.kernel.dot,
        GroupAction::make(e.quot.circ, e.kernel.dot, std::move(xi), Variance::Hom),
        GroupAction::make(e.quot.dot, e.kernel.dot, std::move(zeta), Variance::AntiHom),
        GroupAction::make(e.quot.circ, e.kernel.dot, std::move(eps), Variance::AntiHom));
}

BraceCocyclePair brace_extension_cocycle(const BraceExtension& e, const std::vector<int>& s) {
    const int n = e.quot.order();
    for (int a = 0; a < n; ++a)
        if (s[a] < 0 || s[a] >= e.total.order() || e.proj.image[s[a]] != a)
            throw NotAnExtension("not a section of the projection");
    if (s[e.quot.identity()] != e.total.identity())
        throw NotAnExtension("section is not normalized");

    std::vector<int> from_total(e.total.order(), -1);
    for (int y = 0; y < e.kernel.order(); ++y) from_total[e.incl.image[y]] = y;
    auto pull = [&](int x) {
        if (from_total[x] < 0) throw NotAnExtension("cocycle value escapes the kernel");
        return from_total[x];
    };

    const auto& E = e.total;
    BraceCocyclePair p;
    p.g.assign(n, std::vector<int>(n));
    p.f.assign(n, std::vector<int>(n));
    for (int m1 = 0; m1 < n; ++m1)
        for (int m2 = 0; m2 < n; ++m2) {
            p.g[m1][m2] = pull(E.dot.mul(E.dot.inv(s[e.quot.dot.mul(m1, m2)]),
                                         E.dot.mul(s[m1], s[m2])));
            p.f[m1][m2] = pull(E.dot.mul(E.dot.inv(s[e.quot.circ.mul(m1, m2)]),
                                         E.circ.mul(s[m1], s[m2])));
        }
    if (!brace_pair_is_cocycle(brace_extension_triplet(e), p))
        throw NotACocycle("extension cocycle fails the cocycle conditions");
    return p;
}

}  // namespace rrbtk
