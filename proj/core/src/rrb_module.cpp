#include "rrbtk/rrb_module.hpp"

#include <string>

#include "rrbtk/errors.hpp"

namespace rrbtk {

namespace {

std::string pair_witness(int x, int y) {
    return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

}  // namespace

RRBModule RRBModule::make(RRBGroup base, RRBGroup coeff, GroupAction nu, GroupAction mu,
                          GroupAction sigma, std::vector<std::vector<int>> f) {
    if (!coeff.phi_is_trivial())
        throw NotAModule(0, "coefficient quadruple must have trivial action");
    if (!coeff.H.is_abelian() || !coeff.G.is_abelian())
        throw NotAModule(0, "coefficient groups must be abelian");

    if (!nu.actor.same_table(base.G) || !nu.space.same_table(coeff.H) ||
        nu.variance != Variance::Hom)
        throw NotAModule(1, "nu must be a covariant action of B on K");
    if (!mu.actor.same_table(base.H) || !mu.space.same_table(coeff.H) ||
        mu.variance != Variance::AntiHom)
        throw NotAModule(1, "mu must be a contravariant action of A on K");
    if (!sigma.actor.same_table(base.G) || !sigma.space.same_table(coeff.G) ||
        sigma.variance != Variance::AntiHom)
        throw NotAModule(2, "sigma must be a contravariant action of B on L");

    const auto& A = base.H;
    const auto& B = base.G;
    const auto& K = coeff.H;
    const auto& L = coeff.G;
    if (static_cast<int>(f.size()) != L.order())
        throw NotAModule(3, "f must have one row per element of L");
    for (const auto& row : f) {
        if (static_cast<int>(row.size()) != A.order())
            throw NotAModule(3, "f row has wrong length");
        for (int v : row)
            if (v < 0 || v >= K.order()) throw NotAModule(3, "f value out of range");
    }

    // (3a) f(-, a) is a homomorphism L -> K.
    for (int l1 = 0; l1 < L.order(); ++l1)
        for (int l2 = 0; l2 < L.order(); ++l2)
            for (int a = 0; a < A.order(); ++a)
                if (f[L.mul(l1, l2)][a] != K.mul(f[l1][a], f[l2][a]))
                    throw NotAModule(3, "f not multiplicative in l at " + pair_witness(l1, l2));
    // (3b) f(l, -) is a mu-derivation.
    for (int l = 0; l < L.order(); ++l)
        for (int a1 = 0; a1 < A.order(); ++a1)
            for (int a2 = 0; a2 < A.order(); ++a2)
                if (f[l][A.mul(a1, a2)] != K.mul(mu.apply(a2, f[l][a1]), f[l][a2]))
                    throw NotAModule(3, "f not a derivation at " + pair_witness(a1, a2));
    // (4) S(nu^{-1}_{T(a)}(mu_a(k)) nu^{-1}_{T(a)}(f(S(k), a))) = sigma_{T(a)}(S(k)).
    for (int a = 0; a < A.order(); ++a)
        for (int k = 0; k < K.order(); ++k) {
            int ta = base.R[a];
            int lhs = coeff.R[K.mul(nu.apply_inverse(ta, mu.apply(a, k)),
                                    nu.apply_inverse(ta, f[coeff.R[k]][a]))];
            int rhs = sigma.apply(ta, coeff.R[k]);
            if (lhs != rhs) throw NotAModule(4, pair_witness(a, k));
        }
    // (5) nu_b(mu_a(k)) = mu_{beta_b(a)}(nu_b(k)).
    for (int a = 0; a < A.order(); ++a)
        for (int b = 0; b < B.order(); ++b)
            for (int k = 0; k < K.order(); ++k)
                if (nu.apply(b, mu.apply(a, k)) !=
                    mu.apply(base.phi.apply(b, a), nu.apply(b, k)))
                    throw NotAModule(5, pair_witness(a, b) + " on k = " + std::to_string(k));

    return RRBModule{std::move(base), std::move(coeff), std::move(nu), std::move(mu),
                     std::move(sigma), std::move(f)};
}

RRBModule RRBModule::trivial(RRBGroup base, RRBGroup coeff) {
    auto nu = GroupAction::trivial(base.G, coeff.H, Variance::Hom);
    auto mu = GroupAction::trivial(base.H, coeff.H, Variance::AntiHom);
    auto sigma = GroupAction::trivial(base.G, coeff.G, Variance::AntiHom);
    std::vector<std::vector<int>> f(coeff.G.order(),
                                    std::vector<int>(base.H.order(), coeff.H.identity()));
    return make(std::move(base), std::move(coeff), std::move(nu), std::move(mu),
                std::move(sigma), std::move(f));
}

bool RRBModule::is_central() const {
    if (!nu.is_trivial() || !mu.is_trivial() || !sigma.is_trivial()) return false;
    for (const auto& row : f)
        for (int v : row)
            if (v != coeff.H.identity()) return false;
    return true;
}

}  // namespace rrbtk
