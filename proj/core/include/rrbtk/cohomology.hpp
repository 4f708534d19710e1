#pragma once

#include <utility>
#include <vector>

#include "rrbtk/abelian.hpp"
#include "rrbtk/rrb_module.hpp"

namespace rrbtk {

/// Degree-1 cochain: theta1: A -> K, theta2: B -> L, both 1 at identity.
struct RRBCochain1 {
    std::vector<int> theta1;
    std::vector<int> theta2;
};

/// Degree-2 cochain (tau1, tau2, rho, chi), vanishing on degenerate
/// tuples. rho is indexed rho[a][b].
struct RRBCochain2 {
    std::vector<std::vector<int>> tau1;  // A x A -> K
    std::vector<std::vector<int>> tau2;  // B x B -> L
    std::vector<std::vector<int>> rho;   // A x B -> K
    std::vector<int> chi;                // A -> L
};

/// Degree-3 cochain (the codomain of d2); gamma1 indexed [a][b1][b2],
/// gamma2 indexed [a1][a2][b], gamma3 indexed [a1][a2].
struct RRBCochain3 {
    std::vector<std::vector<std::vector<int>>> c1;      // A^3 -> K
    std::vector<std::vector<std::vector<int>>> c2;      // B^3 -> L
    std::vector<std::vector<std::vector<int>>> gamma1;  // A x B^2 -> K
    std::vector<std::vector<std::vector<int>>> gamma2;  // A^2 x B -> K
    std::vector<std::vector<int>> gamma3;               // A^2 -> L
};

RRBCochain1 zero_cochain1(const RRBModule& m);
RRBCochain2 zero_cochain2(const RRBModule& m);
bool is_zero2(const RRBModule& m, const RRBCochain2& z);
bool is_zero3(const RRBModule& m, const RRBCochain3& w);

/// The degree-0 cochain group K x_{(nu,mu,sigma,f)} L.
std::vector<std::pair<int, int>> c0_fixed_set(const RRBModule& m);

/// d0(k,l) = (a -> mu_a(k) k^{-1}, b -> sigma_b(l) l^{-1}); requires
/// (k, l) in the degree-0 group.
RRBCochain1 d0(const RRBModule& m, int k, int l);

RRBCochain2 d1(const RRBModule& m, const RRBCochain1& c);
RRBCochain3 d2(const RRBModule& m, const RRBCochain2& z);

/// Simplified differentials for the all-trivial-action (central) case;
/// throw NotCentralModule otherwise.
RRBCochain2 d1_central(const RRBModule& m, const RRBCochain1& c);
RRBCochain3 d2_central(const RRBModule& m, const RRBCochain2& z);

bool is_cocycle2(const RRBModule& m, const RRBCochain2& z, bool central = false);

/// The shared linearization of the complex: coordinates for C^1, C^2,
/// C^3 over non-degenerate tuples, plus the matrices of d1 and d2.
class Linearization {
public:
    explicit Linearization(const RRBModule& m, bool central = false);

    const RRBModule& module() const { return *m_; }
    const SlotSpace& c1() const { return c1_; }
    const SlotSpace& c2() const { return c2_; }
    const ZMat& d1_matrix() const { return d1m_; }
    const ZMat& d2_matrix() const { return d2m_; }
    const std::vector<mpz_class>& c3_moduli() const { return mod3_; }

    ZVec encode1(const RRBCochain1& c) const;
    RRBCochain1 decode1(const ZVec& v) const;
    ZVec encode2(const RRBCochain2& z) const;
    RRBCochain2 decode2(const ZVec& v) const;

    /// Row basis of the lattice of 2-cocycle coordinate vectors.
    const ZMat& cocycle2_lattice() const;
    /// Row basis of im(d1) + (coordinate orders).
    const ZMat& coboundary2_lattice() const;

    bool is_coboundary2(const RRBCochain2& z) const;

private:
    std::vector<int> values_from_1(const RRBCochain1& c) const;
    RRBCochain1 values_to_1(const std::vector<int>& vals) const;
    std::vector<int> values_from_2(const RRBCochain2& z) const;
    RRBCochain2 values_to_2(const std::vector<int>& vals) const;

    const RRBModule* m_;
    bool central_;
    SlotSpace c1_, c2_, c3_;
    ZMat d1m_, d2m_;
    std::vector<mpz_class> mod3_;
    mutable ZMat zlat_, blat_;
};

struct CohomologyResult {
    int degree = 0;
    std::vector<mpz_class> factors;
    mpz_class order = 1;
    // Degree 0: the fixed pairs themselves.
    std::vector<std::pair<int, int>> h0_elements;
    std::vector<RRBCochain1> reps1;
    std::vector<RRBCochain2> reps2;
};

CohomologyResult h0(const RRBModule& m);
CohomologyResult h1(const RRBModule& m);
CohomologyResult h2(const RRBModule& m);
/// Central-complex H^2; requires an all-trivial action quadruple.
CohomologyResult h2_central(const RRBModule& m);

/// Brute-force recomputation of |H^1| or |H^2| by enumerating cochains;
/// throws TooLarge when the cochain space exceeds `limit` points.
mpz_class h_order_by_enumeration(const RRBModule& m, int degree, bool central = false,
                                 long limit = 1 << 16);

}  // namespace rrbtk
