#include "rrbtk/extension.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "rrbtk/errors.hpp"

namespace rrbtk {

namespace {

bool same_rrb(const RRBGroup& x, const RRBGroup& y) {
    return x.H.same_table(y.H) && x.G.same_table(y.G) && x.phi.perms == y.phi.perms &&
           x.R == y.R;
}

std::vector<int> inverse_lookup(const GroupHom& h) {
    std::vector<int> back(h.codomain.order(), -1);
    for (int x = 0; x < h.domain.order(); ++x) back[h.image[x]] = x;
    return back;
}

int pull(const std::vector<int>& back, int x, const char* what) {
    if (back[x] < 0)
        throw NotAnExtension(std::string(what) + " left the embedded kernel");
    return back[x];
}

// Fibers of a surjection, each sorted ascending.
std::vector<std::vector<int>> fibers(const GroupHom& p) {
    std::vector<std::vector<int>> out(p.codomain.order());
    for (int x = 0; x < p.domain.order(); ++x) out[p.image[x]].push_back(x);
    return out;
}

bool table_equal_modules(const RRBModule& m1, const RRBModule& m2) {
    return m1.nu.perms == m2.nu.perms && m1.mu.perms == m2.mu.perms &&
           m1.sigma.perms == m2.sigma.perms && m1.f == m2.f;
}

}  // namespace

RRBExtension RRBExtension::verify(RRBGroup kernel, RRBGroup total, RRBGroup quot, RRBHom incl,
                                  RRBHom proj) {
    if (!same_rrb(incl.source, kernel) || !same_rrb(incl.target, total))
        throw NotAnExtension("embedding endpoints do not match kernel/total");
    if (!same_rrb(proj.source, total) || !same_rrb(proj.target, quot))
        throw NotAnExtension("projection endpoints do not match total/quotient");
    if (!incl.psi.is_injective() || !incl.eta.is_injective())
        throw NotAnExtension("not an embedding: a component is not injective");
    if (!proj.psi.is_surjective() || !proj.eta.is_surjective())
        throw NotAnExtension("not an epimorphism: a component is not surjective");

    auto im_h = incl.psi.image_elements();
    auto im_g = incl.eta.image_elements();
    auto ker_h = proj.psi.kernel_elements();
    auto ker_g = proj.eta.kernel_elements();
    std::sort(im_h.begin(), im_h.end());
    std::sort(im_g.begin(), im_g.end());
    if (im_h != ker_h || im_g != ker_g)
        throw NotAnExtension("not exact: image of embedding differs from projection kernel");

    bool abelian = kernel.H.is_abelian() && kernel.G.is_abelian() && kernel.phi_is_trivial();
    auto z = center(total);
    auto subset = [](const std::vector<int>& small, const std::vector<int>& big) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    bool central = subset(im_h, z.h_part) && subset(im_g, z.g_part);
    auto k_of_h = inverse_lookup(incl.psi);
    auto l_of_g = inverse_lookup(incl.eta);
    return RRBExtension{std::move(kernel), std::move(total),   std::move(quot),
                        std::move(incl),   std::move(proj),    abelian,
                        central,           std::move(k_of_h), std::move(l_of_g)};
}

SectionPair any_section(const RRBExtension& e) {
    SectionPair s;
    for (const auto& fib : fibers(e.proj.psi)) s.sH.push_back(fib.front());
    for (const auto& fib : fibers(e.proj.eta)) s.sG.push_back(fib.front());
    s.sH[e.quot.H.identity()] = e.total.H.identity();
    s.sG[e.quot.G.identity()] = e.total.G.identity();
    return s;
}

SectionPair another_section(const RRBExtension& e) {
    SectionPair s = any_section(e);
    auto fh = fibers(e.proj.psi);
    auto fg = fibers(e.proj.eta);
    for (int a = 0; a < e.quot.H.order(); ++a) {
        if (a == e.quot.H.identity() || fh[a].size() < 2) continue;
        for (int x : fh[a])
            if (x != s.sH[a]) {
                s.sH[a] = x;
                break;
            }
    }
    for (int b = 0; b < e.quot.G.order(); ++b) {
        if (b == e.quot.G.identity() || fg[b].size() < 2) continue;
        for (int x : fg[b])
            if (x != s.sG[b]) {
                s.sG[b] = x;
                break;
            }
    }
    return s;
}

RRBModule action_from_extension(const RRBExtension& e, const SectionPair& s) {
    if (!e.abelian) throw NotAbelian();
    const auto& H = e.total.H;
    const auto& G = e.total.G;
    const auto& K = e.kernel.H;
    const auto& L = e.kernel.G;
    const auto& A = e.quot.H;
    const auto& B = e.quot.G;
    const auto& i1 = e.incl.psi.image;
    const auto& i2 = e.incl.eta.image;

    std::vector<std::vector<int>> nu(B.order(), std::vector<int>(K.order()));
    std::vector<std::vector<int>> mu(A.order(), std::vector<int>(K.order()));
    std::vector<std::vector<int>> sig(B.order(), std::vector<int>(L.order()));
    std::vector<std::vector<int>> f(L.order(), std::vector<int>(A.order()));
    for (int b = 0; b < B.order(); ++b)
        for (int k = 0; k < K.order(); ++k)
            nu[b][k] = pull(e.k_of_h, e.total.phi.apply(s.sG[b], i1[k]), "nu");
    for (int a = 0; a < A.order(); ++a)
        for (int k = 0; k < K.order(); ++k)
            mu[a][k] = pull(e.k_of_h, H.mul(H.mul(H.inv(s.sH[a]), i1[k]), s.sH[a]), "mu");
    for (int b = 0; b < B.order(); ++b)
        for (int l = 0; l < L.order(); ++l)
            sig[b][l] = pull(e.l_of_g, G.mul(G.mul(G.inv(s.sG[b]), i2[l]), s.sG[b]), "sigma");
    for (int l = 0; l < L.order(); ++l)
        for (int a = 0; a < A.order(); ++a)
            f[l][a] = pull(e.k_of_h,
                           H.mul(H.inv(s.sH[a]), e.total.phi.apply(i2[l], s.sH[a])), "f");

    return RRBModule::make(e.quot, e.kernel,
                           GroupAction::make(B, K, std::move(nu), Variance::Hom),
                           GroupAction::make(A, K, std::move(mu), Variance::AntiHom),
                           GroupAction::make(B, L, std::move(sig), Variance::AntiHom),
                           std::move(f));
}

RRBModule action_from_extension(const RRBExtension& e) {
    return action_from_extension(e, any_section(e));
}

RRBCochain2 cocycle_from_extension(const RRBExtension& e, const SectionPair& s,
                                   const RRBModule& m) {
    if (!e.abelian) throw NotAbelian();
    const auto& H = e.total.H;
    const auto& G = e.total.G;
    const auto& A = e.quot.H;
    const auto& B = e.quot.G;

    RRBCochain2 z = zero_cochain2(m);
    for (int a1 = 0; a1 < A.order(); ++a1)
        for (int a2 = 0; a2 < A.order(); ++a2)
            z.tau1[a1][a2] = pull(
                e.k_of_h,
                H.mul(H.inv(s.sH[A.mul(a1, a2)]), H.mul(s.sH[a1], s.sH[a2])), "tau1");
    for (int b1 = 0; b1 < B.order(); ++b1)
        for (int b2 = 0; b2 < B.order(); ++b2)
            z.tau2[b1][b2] = pull(
                e.l_of_g,
                G.mul(G.inv(s.sG[B.mul(b1, b2)]), G.mul(s.sG[b1], s.sG[b2])), "tau2");
    for (int a = 0; a < A.order(); ++a) {
        for (int b = 0; b < B.order(); ++b)
            z.rho[a][b] = pull(e.k_of_h,
                               H.mul(H.inv(s.sH[m.beta(b, a)]),
                                     e.total.phi.apply(s.sG[b], s.sH[a])), "rho");
        z.chi[a] = pull(e.l_of_g, G.mul(G.inv(s.sG[m.T(a)]), e.total.R[s.sH[a]]), "chi");
    }
    if (!is_cocycle2(m, z))
        throw NotACocycle("section data does not satisfy the degree-2 conditions");
    return z;
}

RRBCochain2 cocycle_from_extension(const RRBExtension& e, const SectionPair& s) {
    return cocycle_from_extension(e, s, action_from_extension(e));
}

RRBExtension extension_from_cocycle(const RRBModule& m, const RRBCochain2& z) {
    if (!is_cocycle2(m, z)) throw NotACocycle("degree-2 conditions fail");
    const auto& A = m.A();
    const auto& B = m.B();
    const auto& K = m.K();
    const auto& L = m.L();
    const int nk = K.order();
    const int nl = L.order();
    auto enc_h = [nk](int a, int k) { return a * nk + k; };
    auto enc_g = [nl](int b, int l) { return b * nl + l; };

    std::vector<std::vector<int>> th(A.order() * nk, std::vector<int>(A.order() * nk));
    for (int a1 = 0; a1 < A.order(); ++a1)
        for (int k1 = 0; k1 < nk; ++k1)
            for (int a2 = 0; a2 < A.order(); ++a2)
                for (int k2 = 0; k2 < nk; ++k2)
                    th[enc_h(a1, k1)][enc_h(a2, k2)] =
                        enc_h(A.mul(a1, a2),
                              K.mul(K.mul(m.mu.apply(a2, k1), k2), z.tau1[a1][a2]));
    auto H = FiniteGroup::from_table(std::move(th), "ext:" + A.label() + "*" + K.label());

    std::vector<std::vector<int>> tg(B.order() * nl, std::vector<int>(B.order() * nl));
    for (int b1 = 0; b1 < B.order(); ++b1)
        for (int l1 = 0; l1 < nl; ++l1)
            for (int b2 = 0; b2 < B.order(); ++b2)
                for (int l2 = 0; l2 < nl; ++l2)
                    tg[enc_g(b1, l1)][enc_g(b2, l2)] =
                        enc_g(B.mul(b1, b2),
                              L.mul(L.mul(m.sigma.apply(b2, l1), l2), z.tau2[b1][b2]));
    auto G = FiniteGroup::from_table(std::move(tg), "ext:" + B.label() + "*" + L.label());

    std::vector<std::vector<int>> perms(G.order(), std::vector<int>(H.order()));
    for (int b = 0; b < B.order(); ++b)
        for (int l = 0; l < nl; ++l)
            for (int a = 0; a < A.order(); ++a)
                for (int k = 0; k < nk; ++k)
                    perms[enc_g(b, l)][enc_h(a, k)] =
                        enc_h(m.beta(b, a),
                              K.mul(z.rho[a][b], m.nu.apply(b, K.mul(m.f[l][a], k))));
    auto phi = GroupAction::make(G, H, std::move(perms), Variance::Hom);

    std::vector<int> r(H.order());
    for (int a = 0; a < A.order(); ++a)
        for (int k = 0; k < nk; ++k)
            r[enc_h(a, k)] =
                enc_g(m.T(a), L.mul(z.chi[a], m.S(m.nu.apply_inverse(m.T(a), k))));
    auto total = RRBGroup::make(H, G, std::move(phi), std::move(r));

    std::vector<int> i1(nk), i2(nl), p1(H.order()), p2(G.order());
    for (int k = 0; k < nk; ++k) i1[k] = enc_h(A.identity(), k);
    for (int l = 0; l < nl; ++l) i2[l] = enc_g(B.identity(), l);
    for (int a = 0; a < A.order(); ++a)
        for (int k = 0; k < nk; ++k) p1[enc_h(a, k)] = a;
    for (int b = 0; b < B.order(); ++b)
        for (int l = 0; l < nl; ++l) p2[enc_g(b, l)] = b;

    RRBHom incl = RRBHom::make(m.coeff, total, GroupHom::make(K, H, std::move(i1)),
                               GroupHom::make(L, G, std::move(i2)));
    RRBHom proj = RRBHom::make(total, m.base, GroupHom::make(H, A, std::move(p1)),
                               GroupHom::make(G, B, std::move(p2)));
    return RRBExtension::verify(m.coeff, std::move(total), m.base, std::move(incl),
                                std::move(proj));
}

SectionPair canonical_section(const RRBModule& m, const RRBExtension& e) {
    SectionPair s;
    const int nk = m.K().order();
    const int nl = m.L().order();
    if (e.total.H.order() != m.A().order() * nk || e.total.G.order() != m.B().order() * nl)
        throw NotAnExtension("extension does not carry product coordinates");
    for (int a = 0; a < m.A().order(); ++a) s.sH.push_back(a * nk + m.K().identity());
    for (int b = 0; b < m.B().order(); ++b) s.sG.push_back(b * nl + m.L().identity());
    return s;
}

namespace {

// Builds the map pair determined by kernel-valued corrections g, h:
// eta(sH1(a) i(k)) = sH2(a) i(k g(a)); returns empty on failure of any
// morphism or compatibility requirement.
std::optional<EquivalenceWitness> witness_from_corrections(
    const RRBExtension& e1, const RRBExtension& e2, const SectionPair& s1,
    const SectionPair& s2, const std::vector<int>& g, const std::vector<int>& h) {
    const auto& H1 = e1.total.H;
    const auto& G1 = e1.total.G;
    const auto& H2 = e2.total.H;
    const auto& G2 = e2.total.G;
    const auto& K = e1.kernel.H;
    const auto& L = e1.kernel.G;

    std::vector<int> eta(H1.order()), zeta(G1.order());
    for (int a = 0; a < e1.quot.H.order(); ++a)
        for (int k = 0; k < K.order(); ++k) {
            int x = H1.mul(s1.sH[a], e1.incl.psi.image[k]);
            eta[x] = H2.mul(s2.sH[a], e2.incl.psi.image[K.mul(k, g[a])]);
        }
    for (int b = 0; b < e1.quot.G.order(); ++b)
        for (int l = 0; l < L.order(); ++l) {
            int x = G1.mul(s1.sG[b], e1.incl.eta.image[l]);
            zeta[x] = G2.mul(s2.sG[b], e2.incl.eta.image[L.mul(l, h[b])]);
        }

    for (int x = 0; x < H1.order(); ++x)
        for (int y = 0; y < H1.order(); ++y)
            if (eta[H1.mul(x, y)] != H2.mul(eta[x], eta[y])) return std::nullopt;
    for (int x = 0; x < G1.order(); ++x)
        for (int y = 0; y < G1.order(); ++y)
            if (zeta[G1.mul(x, y)] != G2.mul(zeta[x], zeta[y])) return std::nullopt;
    for (int x = 0; x < H1.order(); ++x)
        if (zeta[e1.total.R[x]] != e2.total.R[eta[x]]) return std::nullopt;
    for (int y = 0; y < G1.order(); ++y)
        for (int x = 0; x < H1.order(); ++x)
            if (eta[e1.total.phi.apply(y, x)] != e2.total.phi.apply(zeta[y], eta[x]))
                return std::nullopt;
    return EquivalenceWitness{std::move(eta), std::move(zeta)};
}

}  // namespace

EquivalenceReport equivalent(const RRBExtension& e1, const RRBExtension& e2,
                             bool cross_validate, long budget) {
    if (!same_rrb(e1.kernel, e2.kernel) || !same_rrb(e1.quot, e2.quot))
        throw NotAnExtension("kernel or quotient data differ");
    if (!e1.abelian || !e2.abelian) throw NotAbelian();

    RRBModule m = action_from_extension(e1);
    RRBModule m2 = action_from_extension(e2);
    if (!table_equal_modules(m, m2)) throw ActionMismatch();

    SectionPair s1 = any_section(e1);
    SectionPair s2 = any_section(e2);
    RRBCochain2 z1 = cocycle_from_extension(e1, s1, m);
    RRBCochain2 z2 = cocycle_from_extension(e2, s2, m);

    Linearization lin(m);
    ZVec v1 = lin.encode2(z1);
    ZVec v2 = lin.encode2(z2);
    ZVec diff(v1.size());
    for (size_t i = 0; i < v1.size(); ++i) diff[i] = v1[i] - v2[i];
    bool eq = lattice_contains(lin.coboundary2_lattice(), diff);

    EquivalenceReport rep;
    rep.equivalent = eq;
    if (eq) {
        // Recover a degree-1 correction with d1(theta) matching the
        // difference, then assemble the explicit map pair.
        const auto& d1m = lin.d1_matrix();
        auto mod2 = lin.c2().moduli();
        const int n = lin.c2().dim;
        const int p = lin.c1().dim;
        ZMat gens;
        for (int j = 0; j < p; ++j) {
            ZVec row(n);
            for (int i = 0; i < n; ++i) row[i] = d1m[i][j];
            gens.push_back(std::move(row));
        }
        for (int i = 0; i < n; ++i) {
            ZVec row(n, 0);
            row[i] = mod2[i];
            gens.push_back(std::move(row));
        }
        auto sol = lattice_solve(gens, diff);
        if (sol.empty())
            throw InternalInvariantViolation("coboundary membership without a preimage");
        ZVec tcoords(sol[0].begin(), sol[0].begin() + p);
        for (int sign = 0; sign < 2 && !rep.witness; ++sign) {
            ZVec c = tcoords;
            if (sign) {
                for (auto& x : c) x = -x;
            }
            RRBCochain1 theta = lin.decode1(c);
            rep.witness = witness_from_corrections(e1, e2, s1, s2, theta.theta1, theta.theta2);
        }
        if (!rep.witness)
            throw InternalInvariantViolation("cohomologous cocycles without a witness");
    }

    if (cross_validate) {
        const auto& K = m.K();
        const auto& L = m.L();
        const int na = m.A().order();
        const int nb = m.B().order();
        double space = 1;
        for (int i = 1; i < na; ++i) space *= K.order();
        for (int i = 1; i < nb; ++i) space *= L.order();
        if (space > static_cast<double>(budget)) throw SearchBudgetExceeded();

        bool found = false;
        std::vector<int> g(na, K.identity()), h(nb, L.identity());
        // Odometer over all correction pairs.
        std::vector<int*> cells;
        std::vector<int> limits;
        for (int a = 0; a < na; ++a)
            if (a != m.A().identity()) {
                cells.push_back(&g[a]);
                limits.push_back(K.order());
            }
        for (int b = 0; b < nb; ++b)
            if (b != m.B().identity()) {
                cells.push_back(&h[b]);
                limits.push_back(L.order());
            }
        bool done = false;
        while (!done && !found) {
            if (witness_from_corrections(e1, e2, s1, s2, g, h)) found = true;
            size_t i = 0;
            for (; i < cells.size(); ++i) {
                if (++*cells[i] < limits[i]) break;
                *cells[i] = 0;
            }
            if (i == cells.size()) done = true;
        }
        if (found != eq)
            throw InternalInvariantViolation("equivalence paths disagree");
    }
    return rep;
}

std::vector<RRBExtension> enumerate_ext(const RRBModule& m, long max_classes) {
    CohomologyResult r2 = h2(m);
    if (r2.order > max_classes) throw TooLarge("too many extension classes");

    Linearization lin(m);
    std::vector<ZVec> gen_coords;
    for (const auto& rep : r2.reps2) gen_coords.push_back(lin.encode2(rep));

    std::vector<RRBExtension> out;
    std::vector<int> counter(r2.factors.size(), 0);
    bool done = false;
    while (!done) {
        ZVec coords(lin.c2().dim, 0);
        for (size_t i = 0; i < counter.size(); ++i)
            for (int j = 0; j < lin.c2().dim; ++j) coords[j] += counter[i] * gen_coords[i][j];
        out.push_back(extension_from_cocycle(m, lin.decode2(coords)));
        size_t i = 0;
        for (; i < counter.size(); ++i) {
            if (mpz_class(++counter[i]) < r2.factors[i]) break;
            counter[i] = 0;
        }
        if (i == counter.size()) done = true;
    }
    return out;
}

RRBExtension semidirect(const RRBModule& m) {
    RRBExtension e = extension_from_cocycle(m, zero_cochain2(m));
    // The canonical section pair must be a morphism of RRB groups —
    // the construction splits.
    SectionPair s = canonical_section(m, e);
    RRBHom::make(m.base, e.total, GroupHom::make(m.A(), e.total.H, s.sH),
                 GroupHom::make(m.B(), e.total.G, s.sG));
    return e;
}

namespace {

// Enumerates homomorphic lifts of the identity through a surjection:
// sections s with s(1) = 1, s(x y) = s(x) s(y), found by backtracking
// over fibers in index order with partial multiplicativity pruning.
void hom_sections(const FiniteGroup& quot, const FiniteGroup& total,
                  const std::vector<std::vector<int>>& fib, std::vector<int>& s,
                  std::vector<char>& set, int next, long& nodes, long budget,
                  const std::function<bool(const std::vector<int>&)>& accept, bool& stop) {
    if (stop) return;
    while (next < quot.order() && set[next]) ++next;
    if (next == quot.order()) {
        if (accept(s)) stop = true;
        return;
    }
    for (int cand : fib[next]) {
        if (++nodes > budget) throw SearchBudgetExceeded();
        s[next] = cand;
        set[next] = 1;
        bool ok = true;
        for (int x = 0; ok && x < quot.order(); ++x) {
            if (!set[x]) continue;
            for (int y = 0; ok && y < quot.order(); ++y) {
                if (!set[y]) continue;
                int xy = quot.mul(x, y);
                if (set[xy] && s[xy] != total.mul(s[x], s[y])) ok = false;
            }
        }
        if (ok)
            hom_sections(quot, total, fib, s, set, next + 1, nodes, budget, accept, stop);
        set[next] = 0;
        if (stop) return;
    }
}

}  // namespace

SplitReport split_classify(const RRBExtension& e, long budget) {
    auto fh = fibers(e.proj.psi);
    auto fg = fibers(e.proj.eta);
    const auto& A = e.quot.H;
    const auto& B = e.quot.G;

    SplitReport rep;
    long nodes = 0;
    std::vector<int> sh(A.order()), sg(B.order());
    std::vector<char> seth(A.order(), 0), setg(B.order(), 0);
    sh[A.identity()] = e.total.H.identity();
    seth[A.identity()] = 1;
    sg[B.identity()] = e.total.G.identity();
    setg[B.identity()] = 1;

    bool stop_outer = false;
    auto accept_h = [&](const std::vector<int>& cand_h) {
        // For each homomorphic H-section, search a compatible G-section.
        std::vector<int> sg2 = sg;
        std::vector<char> setg2 = setg;
        bool stop_inner = false;
        auto accept_g = [&](const std::vector<int>& cand_g) {
            for (int x = 0; x < A.order(); ++x)
                if (e.total.R[cand_h[x]] != cand_g[e.quot.R[x]]) return false;
            for (int b = 0; b < B.order(); ++b)
                for (int a = 0; a < A.order(); ++a)
                    if (e.total.phi.apply(cand_g[b], cand_h[a]) !=
                        cand_h[e.quot.phi.apply(b, a)])
                        return false;
            rep.split = true;
            rep.section = SectionPair{cand_h, cand_g};
            return true;
        };
        hom_sections(B, e.total.G, fg, sg2, setg2, 0, nodes, budget, accept_g, stop_inner);
        return rep.split;
    };
    hom_sections(A, e.total.H, fh, sh, seth, 0, nodes, budget, accept_h, stop_outer);

    if (e.abelian) {
        // Cross-check: split iff the cocycle class vanishes.
        RRBModule m = action_from_extension(e);
        Linearization lin(m);
        bool trivial_class = lin.is_coboundary2(cocycle_from_extension(e, any_section(e), m));
        if (trivial_class != rep.split)
            throw InternalInvariantViolation("split search disagrees with the class test");
    }
    return rep;
}

}  // namespace rrbtk
