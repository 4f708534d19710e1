#pragma once

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <vector>

#include "rrbtk/finite_group.hpp"

namespace rrbtk {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;  // row-major

ZMat zmat_identity(int n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ...
/// vinv is V^{-1}, tracked alongside for basis-change bookkeeping.
struct SmithForm {
    ZMat u, d, v, vinv;
    std::vector<mpz_class> diagonal() const;
    int rank() const;
};

SmithForm smith_normal_form(const ZMat& a);

/// Basis (rows) of { x in Z^n : A x = 0 } for an m x n matrix A
/// acting on column vectors.
ZMat integer_kernel_basis(const ZMat& a);

/// Rows of `gens` span a sublattice of Z^n; returns an independent
/// row basis (row count = lattice rank).
ZMat lattice_row_basis(const ZMat& gens, int n);

/// Does v lie in the row span of `basis` over Z?
bool lattice_contains(const ZMat& basis, const ZVec& v);

/// Solves y * basis = v over Z; empty result means no solution.
std::vector<ZVec> lattice_solve(const ZMat& basis, const ZVec& v);

/// Structure of L/M for full-rank lattices M <= L <= Z^n.
/// Factors d1 | d2 | ... keep only entries > 1; generators[i] is a lift
/// to Z^n of a generator of the i-th cyclic factor.
struct QuotientStructure {
    std::vector<mpz_class> factors;
    ZMat generators;
    mpz_class order() const;
};

QuotientStructure lattice_quotient(const ZMat& l_basis, const ZMat& m_gens);

/// Decomposition of a finite abelian group into cyclic factors with
/// invariant factors d1 | d2 | ... (ascending). Coordinates satisfy
/// g = gen_1^{c_1} * ... * gen_r^{c_r}.
class AbelianDecomposition {
public:
    /// Throws NotAbelian if the group is not abelian.
    static AbelianDecomposition of(const FiniteGroup& g);

    const FiniteGroup& group() const { return group_; }
    const std::vector<int>& invariant_factors() const { return factors_; }
    const std::vector<int>& generators() const { return generators_; }
    int rank() const { return static_cast<int>(factors_.size()); }

    const std::vector<int>& to_coords(int x) const { return coords_[x]; }
    int from_coords(const std::vector<int>& c) const;

private:
    FiniteGroup group_ = FiniteGroup::trivial();
    std::vector<int> factors_;
    std::vector<int> generators_;
    std::vector<std::vector<int>> coords_;
};

/// A homomorphism between finite abelian groups, as a matrix on the
/// cyclic coordinates: target coords = matrix * source coords.
struct FinAbHom {
    AbelianDecomposition source;
    AbelianDecomposition target;
    ZMat matrix;  // rank(target) x rank(source)

    static FinAbHom from_group_hom(const GroupHom& h);
    int operator()(int x) const;
};

/// A product of finite abelian groups ("slots"), flattened to one
/// integer coordinate vector. The common currency of all cohomology
/// computations: a cochain is one value per slot.
struct SlotSpace {
    std::vector<std::shared_ptr<const AbelianDecomposition>> slots;
    std::vector<int> offsets;
    int dim = 0;

    static SlotSpace make(std::vector<std::shared_ptr<const AbelianDecomposition>> slots);

    ZVec encode(const std::vector<int>& values) const;
    /// Reduces coordinates modulo the factor orders and maps back to
    /// group elements.
    std::vector<int> decode(const ZVec& coords) const;
    std::vector<mpz_class> moduli() const;
    mpz_class total_order() const;
};

/// Matrix (cod.dim x dom.dim) of a map that is additive on coordinates,
/// built by evaluating on one-generator inputs.
ZMat linearize(const SlotSpace& dom, const SlotSpace& cod,
               const std::function<std::vector<int>(const std::vector<int>&)>& eval);

/// Visits every value tuple of the slot space (use only when
/// total_order is small).
void for_each_tuple(const SlotSpace& space,
                    const std::function<void(const std::vector<int>&)>& visit);

/// ker(d2)/im(d1) for consecutive linearized differentials, where the
/// middle cochain group has per-coordinate orders `mod_cur` and the
/// next one `mod_next`. Representative lifts are coordinates in the
/// middle group.
struct SubquotientResult {
    std::vector<mpz_class> factors;
    ZMat representative_coords;
    mpz_class order;
};

SubquotientResult cochain_cohomology(const ZMat& d1, const ZMat& d2,
                                     const std::vector<mpz_class>& mod_cur,
                                     const std::vector<mpz_class>& mod_next);

/// Lattice of coboundaries im(d1) + diag(mod) as a row basis; for
/// membership tests.
ZMat coboundary_lattice(const ZMat& d1, const std::vector<mpz_class>& mod_cur);

struct CokernelInfo {
    mpz_class kernel_order;
    mpz_class image_order;
    std::vector<mpz_class> cokernel_factors;  // entries > 1 only
    mpz_class cokernel_order() const;
};

/// Kernel/image orders and cokernel invariant factors of a map between
/// finite abelian groups.
CokernelInfo finab_cokernel(const FinAbHom& h);

}  // namespace rrbtk
