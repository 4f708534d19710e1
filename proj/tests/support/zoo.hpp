#pragma once

// A small zoo of verified modules used across the tests: the base and
// coefficient data stay at order <= 4 and each nontrivial case twists
// exactly one of the four structure maps.

#include <string>
#include <utility>
#include <vector>

#include "rrbtk/rrb.hpp"
#include "rrbtk/rrb_module.hpp"

namespace zoo {

inline rrbtk::RRBGroup trivial_rrb(rrbtk::FiniteGroup h, rrbtk::FiniteGroup g) {
    auto phi = rrbtk::GroupAction::trivial(g, h, rrbtk::Variance::Hom);
    std::vector<int> r(h.order(), g.identity());
    return rrbtk::RRBGroup::make(std::move(h), std::move(g), std::move(phi), std::move(r));
}

/// (Z2, Z2, trivial action, identity operator).
inline rrbtk::RRBGroup base_z2_id() {
    auto z2 = rrbtk::FiniteGroup::cyclic(2);
    auto phi = rrbtk::GroupAction::trivial(z2, z2, rrbtk::Variance::Hom);
    return rrbtk::RRBGroup::make(z2, z2, phi, {0, 1});
}

/// (Z2, Z2, trivial action, trivial operator).
inline rrbtk::RRBGroup base_z2_trivial_t() {
    auto z2 = rrbtk::FiniteGroup::cyclic(2);
    auto phi = rrbtk::GroupAction::trivial(z2, z2, rrbtk::Variance::Hom);
    return rrbtk::RRBGroup::make(z2, z2, phi, {0, 0});
}

/// (Z3, Z2, inversion action, trivial operator).
inline rrbtk::RRBGroup base_z3_inversion() {
    auto z3 = rrbtk::FiniteGroup::cyclic(3);
    auto z2 = rrbtk::FiniteGroup::cyclic(2);
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}};
    auto phi = rrbtk::GroupAction::make(z2, z3, perms, rrbtk::Variance::Hom);
    return rrbtk::RRBGroup::make(z3, z2, phi, {0, 0, 0});
}

/// All-trivial module on order-2 data; T = S = id (bijective).
inline rrbtk::RRBModule mod_trivial_z2() {
    auto z2 = rrbtk::FiniteGroup::cyclic(2);
    auto phi = rrbtk::GroupAction::trivial(z2, z2, rrbtk::Variance::Hom);
    rrbtk::RRBGroup coeff = rrbtk::RRBGroup::make(z2, z2, phi, {0, 1});
    return rrbtk::RRBModule::trivial(base_z2_id(), coeff);
}

/// Trivial Z3 coefficients over the inversion base.
inline rrbtk::RRBModule mod_z3_base_trivial() {
    return rrbtk::RRBModule::trivial(
        base_z3_inversion(),
        trivial_rrb(rrbtk::FiniteGroup::cyclic(3), rrbtk::FiniteGroup::cyclic(3)));
}

/// sigma twisted: L = Z3 inverted by the generator of B; everything
/// else trivial (T trivial keeps condition 4 satisfied).
inline rrbtk::RRBModule mod_sigma_twisted() {
    rrbtk::RRBGroup base = base_z2_trivial_t();
    rrbtk::RRBGroup coeff =
        trivial_rrb(rrbtk::FiniteGroup::cyclic(3), rrbtk::FiniteGroup::cyclic(3));
    auto nu = rrbtk::GroupAction::trivial(base.G, coeff.H, rrbtk::Variance::Hom);
    auto mu = rrbtk::GroupAction::trivial(base.H, coeff.H, rrbtk::Variance::AntiHom);
    std::vector<std::vector<int>> sperm = {{0, 1, 2}, {0, 2, 1}};
    auto sigma = rrbtk::GroupAction::make(base.G, coeff.G, sperm, rrbtk::Variance::AntiHom);
    std::vector<std::vector<int>> f(3, std::vector<int>(2, 0));
    return rrbtk::RRBModule::make(base, coeff, nu, mu, sigma, f);
}

/// nu twisted: K = L = Z3, S = id, nu_1 = inversion; condition 4 then
/// forces sigma_1 = inversion as well. T = S = id (bijective).
inline rrbtk::RRBModule mod_nu_twisted() {
    rrbtk::RRBGroup base = base_z2_id();
    auto z3 = rrbtk::FiniteGroup::cyclic(3);
    auto triv3 = rrbtk::GroupAction::trivial(z3, z3, rrbtk::Variance::Hom);
    rrbtk::RRBGroup coeff = rrbtk::RRBGroup::make(z3, z3, triv3, {0, 1, 2});
    std::vector<std::vector<int>> invperm = {{0, 1, 2}, {0, 2, 1}};
    auto nu = rrbtk::GroupAction::make(base.G, coeff.H, invperm, rrbtk::Variance::Hom);
    auto mu = rrbtk::GroupAction::trivial(base.H, coeff.H, rrbtk::Variance::AntiHom);
    auto sigma = rrbtk::GroupAction::make(base.G, coeff.G, invperm, rrbtk::Variance::AntiHom);
    std::vector<std::vector<int>> f(3, std::vector<int>(2, 0));
    return rrbtk::RRBModule::make(base, coeff, nu, mu, sigma, f);
}

/// mu twisted: K = L = Z3, T = S = id, mu_1 = inversion; condition 4
/// forces sigma_1 = inversion.
inline rrbtk::RRBModule mod_mu_twisted() {
    rrbtk::RRBGroup base = base_z2_id();
    auto z3 = rrbtk::FiniteGroup::cyclic(3);
    auto triv3 = rrbtk::GroupAction::trivial(z3, z3, rrbtk::Variance::Hom);
    rrbtk::RRBGroup coeff = rrbtk::RRBGroup::make(z3, z3, triv3, {0, 1, 2});
    std::vector<std::vector<int>> invperm = {{0, 1, 2}, {0, 2, 1}};
    auto nu = rrbtk::GroupAction::trivial(base.G, coeff.H, rrbtk::Variance::Hom);
    auto mu = rrbtk::GroupAction::make(base.H, coeff.H, invperm, rrbtk::Variance::AntiHom);
    auto sigma = rrbtk::GroupAction::make(base.G, coeff.G, invperm, rrbtk::Variance::AntiHom);
    std::vector<std::vector<int>> f(3, std::vector<int>(2, 0));
    return rrbtk::RRBModule::make(base, coeff, nu, mu, sigma, f);
}

/// f twisted: order-2 data with trivial operators and f(l, a) = k0
/// exactly on the nontrivial pair.
inline rrbtk::RRBModule mod_f_twisted() {
    rrbtk::RRBGroup base = base_z2_trivial_t();
    auto z2 = rrbtk::FiniteGroup::cyclic(2);
    rrbtk::RRBGroup coeff = trivial_rrb(z2, z2);
    auto nu = rrbtk::GroupAction::trivial(base.G, coeff.H, rrbtk::Variance::Hom);
    auto mu = rrbtk::GroupAction::trivial(base.H, coeff.H, rrbtk::Variance::AntiHom);
    auto sigma = rrbtk::GroupAction::trivial(base.G, coeff.G, rrbtk::Variance::AntiHom);
    std::vector<std::vector<int>> f = {{0, 0}, {0, 1}};
    return rrbtk::RRBModule::make(base, coeff, nu, mu, sigma, f);
}

inline std::vector<std::pair<std::string, rrbtk::RRBModule>> all_modules() {
    return {{"trivial-z2", mod_trivial_z2()},     {"z3-base-trivial", mod_z3_base_trivial()},
            {"sigma-twisted", mod_sigma_twisted()}, {"nu-twisted", mod_nu_twisted()},
            {"mu-twisted", mod_mu_twisted()},     {"f-twisted", mod_f_twisted()}};
}

}  // namespace zoo
