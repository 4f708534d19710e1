#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rrbtk/bridge.hpp"
#include "rrbtk/errors.hpp"
#include "zoo.hpp"

using namespace rrbtk;

namespace {

bool same_action(const RRBModule& a, const RRBModule& b) {
    return a.nu.perms == b.nu.perms && a.mu.perms == b.mu.perms &&
           a.sigma.perms == b.sigma.perms && a.f == b.f;
}

std::vector<RRBCochain2> all_class_reps(const RRBModule& m) {
    Linearization lin(m);
    CohomologyResult r = h2(m);
    std::vector<RRBCochain2> out;
    std::vector<long> counter(r.factors.size(), 0);
    const auto mods = lin.c2().moduli();
    for (;;) {
        ZVec v(lin.c2().dim, 0);
        for (size_t i = 0; i < counter.size(); ++i) {
            ZVec g = lin.encode2(r.reps2[i]);
            for (size_t t = 0; t < v.size(); ++t) v[t] += counter[i] * g[t];
        }
        for (size_t t = 0; t < v.size(); ++t) {
            v[t] %= mods[t];
            if (v[t] < 0) v[t] += mods[t];
        }
        out.push_back(lin.decode2(v));
        size_t i = 0;
        while (i < counter.size() && counter[i] == r.factors[i].get_si() - 1) counter[i++] = 0;
        if (i == counter.size()) break;
        ++counter[i];
    }
    return out;
}

}  // namespace

TEST_CASE("brace extensions survive the lift round trip") {
    for (int p : {2, 3}) {
        CAPTURE(p);
        BraceExtension w = zp2_brace_extension(p);
        CHECK(!w.total.is_trivial());
        RRBExtension lifted = lift_brace_extension(w);
        BraceExtension back = induced_brace_extension(lifted);
        CHECK(back.total.dot.same_table(w.total.dot));
        CHECK(back.total.circ.same_table(w.total.circ));
        CHECK(back.incl.image == w.incl.image);
        CHECK(back.proj.image == w.proj.image);
    }
}

TEST_CASE("the witness class has no preimage") {
    for (int p : {2, 3}) {
        CAPTURE(p);
        PiSurjectivityReport rep = pi_non_surjectivity_check(p);
        CHECK(rep.rrb_extension_count == (p == 2 ? 2 : 3));
        CHECK(rep.all_induced_totals_trivial);
        CHECK(!rep.witness_total_trivial);
        CHECK(!rep.witness_attained);
    }
}

TEST_CASE("module to triplet and back") {
    for (const auto* which : {"trivial-z2", "nu-twisted", "mu-twisted"}) {
        RRBModule m = std::string(which) == "trivial-z2"   ? zoo::mod_trivial_z2()
                      : std::string(which) == "nu-twisted" ? zoo::mod_nu_twisted()
                                                           : zoo::mod_mu_twisted();
        CAPTURE(which);
        GoodTriplet t = triplet_from_module(m);
        RRBModule back = recover_rrb_action(m.base, m.coeff, t);
        CHECK(same_action(back, m));
    }
    // T is not bijective for the trivial-operator base.
    CHECK_THROWS_AS(recover_rrb_action(zoo::mod_sigma_twisted().base,
                                       zoo::mod_sigma_twisted().coeff,
                                       triplet_from_module(zoo::mod_sigma_twisted())),
                    NotBijective);
}

TEST_CASE("the closed form for eps matches conjugation in the total") {
    for (const auto* which : {"trivial-z2", "mu-twisted"}) {
        RRBModule m = std::string(which) == "trivial-z2" ? zoo::mod_trivial_z2()
                                                         : zoo::mod_mu_twisted();
        CAPTURE(which);
        RRBExtension sd = semidirect(m);
        CHECK_NOTHROW(epsilon_from_action(m, sd));
    }
}

TEST_CASE("class map sends cocycles to cocycles and zero to a coboundary") {
    for (const auto& [name, m] : zoo::all_modules()) {
        CAPTURE(name);
        GoodTriplet t = triplet_from_module(m);
        BraceCocyclePair pz = lambda_pi_psi(m, zero_cochain2(m));
        CHECK(brace_pair_is_coboundary(t, pz));
        for (const auto& z : h2(m).reps2) CHECK(brace_pair_is_cocycle(t, lambda_pi_psi(m, z)));
    }
}

TEST_CASE("class map is additive on generator pairs") {
    int modules_with_pairs = 0;
    for (const auto& [name, m] : zoo::all_modules()) {
        CAPTURE(name);
        Linearization lin(m);
        CohomologyResult r = h2(m);
        if (r.reps2.empty()) continue;
        ++modules_with_pairs;
        const auto mods = lin.c2().moduli();
        const auto& K = m.K();
        const int n = m.A().order();
        for (size_t i = 0; i < r.reps2.size(); ++i)
            for (size_t j = 0; j < r.reps2.size(); ++j) {
                ZVec vi = lin.encode2(r.reps2[i]);
                ZVec vj = lin.encode2(r.reps2[j]);
                ZVec v(vi.size());
                for (size_t t = 0; t < v.size(); ++t) v[t] = (vi[t] + vj[t]) % mods[t];
                BraceCocyclePair pi = lambda_pi_psi(m, r.reps2[i]);
                BraceCocyclePair pj = lambda_pi_psi(m, r.reps2[j]);
                BraceCocyclePair ps = lambda_pi_psi(m, lin.decode2(v));
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y) {
                        CHECK(ps.g[x][y] == K.mul(pi.g[x][y], pj.g[x][y]));
                        CHECK(ps.f[x][y] == K.mul(pi.f[x][y], pj.f[x][y]));
                    }
            }
    }
    CHECK(modules_with_pairs >= 3);
}

TEST_CASE("bijective instance: the class map is a bijection onto brace classes") {
    RRBModule m = zoo::mod_trivial_z2();
    GoodTriplet t = triplet_from_module(m);
    CohomologyResult r = h2(m);
    BraceH2Result b = brace_h2(t);
    CHECK(r.order == b.order);
    auto reps = all_class_reps(m);
    REQUIRE(mpz_class(static_cast<long>(reps.size())) == r.order);
    const auto& K = m.K();
    // Distinct classes map to distinct classes: the difference of the
    // images never cobounds.
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = 0; j < reps.size(); ++j) {
            BraceCocyclePair pi = lambda_pi_psi(m, reps[i]);
            BraceCocyclePair pj = lambda_pi_psi(m, reps[j]);
            BraceCocyclePair diff;
            diff.g.assign(2, std::vector<int>(2));
            diff.f.assign(2, std::vector<int>(2));
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) {
                    diff.g[x][y] = K.mul(pi.g[x][y], K.inv(pj.g[x][y]));
                    diff.f[x][y] = K.mul(pi.f[x][y], K.inv(pj.f[x][y]));
                }
            CHECK(brace_pair_is_coboundary(t, diff) == (i == j));
        }
}

TEST_CASE("induced brace extensions of enumerated extensions verify") {
    for (const auto& e : enumerate_ext(zoo::mod_trivial_z2())) {
        BraceExtension be = induced_brace_extension(e);
        CHECK(be.kernel.is_trivial());
        CHECK(be.quot.is_trivial());
    }
}
