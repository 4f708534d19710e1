#include "rrbtk/abelian.hpp"

#include <algorithm>
#include <numeric>

#include "rrbtk/errors.hpp"

namespace rrbtk {

ZMat zmat_identity(int n) {
    ZMat m(n, ZVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
    const int m = static_cast<int>(a.size());
    const int k = m ? static_cast<int>(a[0].size()) : 0;
    const int n = k ? static_cast<int>(b[0].size()) : 0;
    ZMat c(m, ZVec(n, 0));
    for (int i = 0; i < m; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

std::vector<mpz_class> SmithForm::diagonal() const {
    std::vector<mpz_class> out;
    const int m = static_cast<int>(d.size());
    const int n = m ? static_cast<int>(d[0].size()) : 0;
    for (int i = 0; i < std::min(m, n); ++i) out.push_back(d[i][i]);
    return out;
}

int SmithForm::rank() const {
    int r = 0;
    for (const auto& x : diagonal())
        if (x != 0) ++r;
    return r;
}

SmithForm smith_normal_form(const ZMat& input) {
    const int m = static_cast<int>(input.size());
    const int n = m ? static_cast<int>(input[0].size()) : 0;
    ZMat a = input;
    ZMat u = zmat_identity(m), v = zmat_identity(n), vinv = zmat_identity(n);

    auto row_sub = [&](int i, int j, const mpz_class& q) {  // row i -= q * row j
        for (int c = 0; c < n; ++c) a[i][c] -= q * a[j][c];
        for (int c = 0; c < m; ++c) u[i][c] -= q * u[j][c];
    };
    auto col_sub = [&](int i, int j, const mpz_class& q) {  // col i -= q * col j
        for (int r = 0; r < m; ++r) a[r][i] -= q * a[r][j];
        for (int r = 0; r < n; ++r) v[r][i] -= q * v[r][j];
        for (int c = 0; c < n; ++c) vinv[j][c] += q * vinv[i][c];
    };
    auto row_swap = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
        std::swap(vinv[i], vinv[j]);
    };
    auto row_negate = [&](int i) {
        for (int c = 0; c < n; ++c) a[i][c] = -a[i][c];
        for (int c = 0; c < m; ++c) u[i][c] = -u[i][c];
    };

    const int bound = std::min(m, n);
    for (bool dirty = true; dirty;) {
        dirty = false;
        for (int t = 0; t < bound; ++t) {
            // Move a minimal nonzero entry of the trailing block to (t,t)
            // and clear its row and column; repeat until clean.
            for (;;) {
                int pi = -1, pj = -1;
                for (int i = t; i < m; ++i)
                    for (int j = t; j < n; ++j)
                        if (a[i][j] != 0 &&
                            (pi < 0 || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0)) {
                            pi = i;
                            pj = j;
                        }
                if (pi < 0) break;
                if (pi != t) row_swap(pi, t);
                if (pj != t) col_swap(pj, t);
                bool clean = true;
                for (int i = t + 1; i < m; ++i)
                    if (a[i][t] != 0) {
                        mpz_class q;
                        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                        row_sub(i, t, q);
                        if (a[i][t] != 0) clean = false;
                    }
                for (int j = t + 1; j < n; ++j)
                    if (a[t][j] != 0) {
                        mpz_class q;
                        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                        col_sub(j, t, q);
                        if (a[t][j] != 0) clean = false;
                    }
                if (clean) break;
            }
            if (a[t][t] < 0) row_negate(t);
        }
        // Enforce the divisibility chain d_t | d_{t+1}.
        for (int t = 0; t + 1 < bound; ++t)
            if (a[t + 1][t + 1] != 0 && (a[t][t] == 0 || a[t + 1][t + 1] % a[t][t] != 0)) {
                row_sub(t, t + 1, -1);
                dirty = true;
            }
    }

    return SmithForm{std::move(u), std::move(a), std::move(v), std::move(vinv)};
}

ZMat integer_kernel_basis(const ZMat& a) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    if (n == 0) return {};
    SmithForm s = smith_normal_form(a);
    const int r = s.rank();
    ZMat basis;
    for (int k = r; k < n; ++k) {
        ZVec row(n);
        for (int i = 0; i < n; ++i) row[i] = s.v[i][k];
        basis.push_back(std::move(row));
    }
    return basis;
}

ZMat lattice_row_basis(const ZMat& gens, int n) {
    if (gens.empty()) return {};
    SmithForm s = smith_normal_form(gens);
    const int r = s.rank();
    ZMat basis;
    for (int i = 0; i < r; ++i) {
        ZVec row(n);
        for (int j = 0; j < n; ++j) row[j] = s.d[i][i] * s.vinv[i][j];
        basis.push_back(std::move(row));
    }
    return basis;
}

std::vector<ZVec> lattice_solve(const ZMat& basis, const ZVec& v) {
    const int k = static_cast<int>(basis.size());
    const int n = static_cast<int>(v.size());
    if (k == 0) {
        for (const auto& x : v)
            if (x != 0) return {};
        return {ZVec{}};
    }
    // Solve B^T x = v for x in Z^k.
    ZMat bt(n, ZVec(k));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) bt[i][j] = basis[j][i];
    SmithForm s = smith_normal_form(bt);
    const int r = s.rank();
    ZVec ub(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ub[i] += s.u[i][j] * v[j];
    ZVec z(k, 0);
    for (int i = 0; i < n; ++i) {
        if (i < r) {
            if (ub[i] % s.d[i][i] != 0) return {};
            z[i] = ub[i] / s.d[i][i];
        } else if (ub[i] != 0) {
            return {};
        }
    }
    ZVec x(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) x[i] += s.v[i][j] * z[j];
    return {x};
}

bool lattice_contains(const ZMat& basis, const ZVec& v) {
    return !lattice_solve(basis, v).empty();
}

mpz_class QuotientStructure::order() const {
    mpz_class o = 1;
    for (const auto& f : factors) o *= f;
    return o;
}

QuotientStructure lattice_quotient(const ZMat& l_basis, const ZMat& m_gens) {
    const int n = static_cast<int>(l_basis.size());
    // Express each generator of M in the basis of L.
    ZMat c;
    for (const auto& g : m_gens) {
        auto sol = lattice_solve(l_basis, g);
        if (sol.empty())
            throw InternalInvariantViolation("quotient numerator does not contain denominator");
        c.push_back(std::move(sol[0]));
    }
    if (n == 0) return {};
    SmithForm s = smith_normal_form(c);
    auto diag = s.diagonal();
    diag.resize(n, 0);
    QuotientStructure q;
    for (int i = 0; i < n; ++i) {
        if (diag[i] == 0) throw InternalInvariantViolation("quotient is not finite");
        if (diag[i] == 1) continue;
        q.factors.push_back(diag[i]);
        // Generator of the i-th cyclic factor: row i of V^{-1} in basis
        // coordinates, mapped back to the ambient lattice.
        ZVec amb(static_cast<size_t>(l_basis[0].size()), 0);
        for (int j = 0; j < n; ++j)
            for (size_t t = 0; t < amb.size(); ++t) amb[t] += s.vinv[i][j] * l_basis[j][t];
        q.generators.push_back(std::move(amb));
    }
    return q;
}

namespace {

// Picks a maximal-order element, splits off the cyclic factor it
// generates, and recurses on a complement found by subgroup search.
void decompose_rec(const FiniteGroup& g, const std::vector<int>& elems,
                   std::vector<int>& gens, std::vector<int>& orders) {
    if (elems.size() == 1) return;
    int best = -1, best_ord = 0;
    for (int x : elems) {
        int o = g.element_order(x);
        if (o > best_ord) {
            best = x;
            best_ord = o;
        }
    }
    gens.push_back(best);
    orders.push_back(best_ord);
    auto cyc = g.generated_subgroup({best});
    const int target = static_cast<int>(elems.size()) / best_ord;

    std::vector<int> complement;
    auto meets_only_trivially = [&](const std::vector<int>& s) {
        for (int x : s)
            if (x != g.identity() && std::binary_search(cyc.begin(), cyc.end(), x)) return false;
        return true;
    };
    auto dfs = [&](auto&& self, const std::vector<int>& s, size_t from) -> bool {
        if (static_cast<int>(s.size()) == target) {
            complement = s;
            return true;
        }
        for (size_t i = from; i < elems.size(); ++i) {
            int x = elems[i];
            if (std::binary_search(s.begin(), s.end(), x)) continue;
            auto gens_s = s;
            gens_s.push_back(x);
            auto s2 = g.generated_subgroup(gens_s);
            if (static_cast<int>(s2.size()) > target || target % static_cast<int>(s2.size()) != 0)
                continue;
            if (!meets_only_trivially(s2)) continue;
            if (self(self, s2, i + 1)) return true;
        }
        return false;
    };
    if (!dfs(dfs, {g.identity()}, 0))
        throw InternalInvariantViolation("no complement for a maximal cyclic factor");
    decompose_rec(g, complement, gens, orders);
}

}  // namespace

AbelianDecomposition AbelianDecomposition::of(const FiniteGroup& g) {
    if (!g.is_abelian()) throw NotAbelian();
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);

    std::vector<int> gens, orders;
    decompose_rec(g, all, gens, orders);
    // Max order came out first; the invariant-factor convention wants
    // the chain ascending.
    std::reverse(gens.begin(), gens.end());
    std::reverse(orders.begin(), orders.end());

    AbelianDecomposition d;
    d.group_ = g;
    d.factors_ = orders;
    d.generators_ = gens;
    d.coords_.assign(g.order(), {});

    const int r = static_cast<int>(gens.size());
    std::vector<int> c(r, 0);
    int filled = 0;
    for (;;) {
        int elem = g.identity();
        for (int i = 0; i < r; ++i)
            for (int p = 0; p < c[i]; ++p) elem = g.mul(elem, gens[i]);
        if (!d.coords_[elem].empty() || (elem == g.identity() && filled > 0))
            throw InternalInvariantViolation("cyclic factors are not independent");
        d.coords_[elem] = c;
        ++filled;
        int i = 0;
        while (i < r && ++c[i] == orders[i]) c[i++] = 0;
        if (i == r) break;
    }
    if (filled != g.order())
        throw InternalInvariantViolation("cyclic factors do not cover the group");
    if (r == 0) d.coords_[g.identity()] = {};
    return d;
}

int AbelianDecomposition::from_coords(const std::vector<int>& c) const {
    int elem = group_.identity();
    for (int i = 0; i < rank(); ++i) {
        int e = ((c[i] % factors_[i]) + factors_[i]) % factors_[i];
        for (int p = 0; p < e; ++p) elem = group_.mul(elem, generators_[i]);
    }
    return elem;
}

FinAbHom FinAbHom::from_group_hom(const GroupHom& h) {
    auto src = AbelianDecomposition::of(h.domain);
    auto tgt = AbelianDecomposition::of(h.codomain);
    ZMat mat(tgt.rank(), ZVec(src.rank(), 0));
    for (int j = 0; j < src.rank(); ++j) {
        const auto& tc = tgt.to_coords(h(src.generators()[j]));
        for (int i = 0; i < tgt.rank(); ++i) mat[i][j] = tc[i];
    }
    return FinAbHom{std::move(src), std::move(tgt), std::move(mat)};
}

int FinAbHom::operator()(int x) const {
    const auto& sc = source.to_coords(x);
    std::vector<int> tc(target.rank(), 0);
    for (int i = 0; i < target.rank(); ++i) {
        mpz_class acc = 0;
        for (int j = 0; j < source.rank(); ++j) acc += matrix[i][j] * sc[j];
        acc %= target.invariant_factors()[i];
        tc[i] = static_cast<int>(mpz_class((acc + target.invariant_factors()[i]) %
                                           target.invariant_factors()[i])
                                     .get_si());
    }
    return target.from_coords(tc);
}

SlotSpace SlotSpace::make(std::vector<std::shared_ptr<const AbelianDecomposition>> slots) {
    SlotSpace s;
    s.slots = std::move(slots);
    for (const auto& d : s.slots) {
        s.offsets.push_back(s.dim);
        s.dim += d->rank();
    }
    return s;
}

ZVec SlotSpace::encode(const std::vector<int>& values) const {
    ZVec out(dim, 0);
    for (size_t i = 0; i < slots.size(); ++i) {
        const auto& c = slots[i]->to_coords(values[i]);
        for (int j = 0; j < slots[i]->rank(); ++j) out[offsets[i] + j] = c[j];
    }
    return out;
}

std::vector<int> SlotSpace::decode(const ZVec& coords) const {
    std::vector<int> out(slots.size());
    for (size_t i = 0; i < slots.size(); ++i) {
        std::vector<int> c(slots[i]->rank());
        for (int j = 0; j < slots[i]->rank(); ++j) {
            mpz_class d = slots[i]->invariant_factors()[j];
            mpz_class v = ((coords[offsets[i] + j] % d) + d) % d;
            c[j] = static_cast<int>(v.get_si());
        }
        out[i] = slots[i]->from_coords(c);
    }
    return out;
}

std::vector<mpz_class> SlotSpace::moduli() const {
    std::vector<mpz_class> out;
    for (const auto& d : slots)
        for (int f : d->invariant_factors()) out.push_back(f);
    return out;
}

mpz_class SlotSpace::total_order() const {
    mpz_class o = 1;
    for (const auto& m : moduli()) o *= m;
    return o;
}

ZMat linearize(const SlotSpace& dom, const SlotSpace& cod,
               const std::function<std::vector<int>(const std::vector<int>&)>& eval) {
    ZMat m(cod.dim, ZVec(dom.dim, 0));
    std::vector<int> values(dom.slots.size());
    for (size_t i = 0; i < dom.slots.size(); ++i) values[i] = dom.slots[i]->group().identity();
    for (size_t i = 0; i < dom.slots.size(); ++i) {
        for (int j = 0; j < dom.slots[i]->rank(); ++j) {
            values[i] = dom.slots[i]->generators()[j];
            ZVec col = cod.encode(eval(values));
            for (int r = 0; r < cod.dim; ++r) m[r][dom.offsets[i] + j] = col[r];
            values[i] = dom.slots[i]->group().identity();
        }
    }
    return m;
}

void for_each_tuple(const SlotSpace& space,
                    const std::function<void(const std::vector<int>&)>& visit) {
    const size_t k = space.slots.size();
    std::vector<int> values(k, 0);
    if (k == 0) {
        visit(values);
        return;
    }
    std::vector<int> idx(k, 0);
    for (;;) {
        visit(values);
        size_t i = 0;
        while (i < k) {
            if (++idx[i] < space.slots[i]->group().order()) {
                values[i] = idx[i];
                break;
            }
            idx[i] = 0;
            values[i] = 0;
            ++i;
        }
        if (i == k) break;
    }
}

ZMat coboundary_lattice(const ZMat& d1, const std::vector<mpz_class>& mod_cur) {
    const int n = static_cast<int>(mod_cur.size());
    ZMat gens;
    if (!d1.empty()) {
        const int p = static_cast<int>(d1[0].size());
        for (int j = 0; j < p; ++j) {
            ZVec row(n);
            for (int i = 0; i < n; ++i) row[i] = d1[i][j];
            gens.push_back(std::move(row));
        }
    }
    for (int i = 0; i < n; ++i) {
        ZVec row(n, 0);
        row[i] = mod_cur[i];
        gens.push_back(std::move(row));
    }
    return lattice_row_basis(gens, n);
}

SubquotientResult cochain_cohomology(const ZMat& d1, const ZMat& d2,
                                     const std::vector<mpz_class>& mod_cur,
                                     const std::vector<mpz_class>& mod_next) {
    const int n = static_cast<int>(mod_cur.size());
    const int m = static_cast<int>(mod_next.size());

    // Cocycle lattice: x with d2 x ≡ 0 modulo the next-degree orders.
    ZMat z_gens;
    if (m == 0 || n == 0) {
        for (int i = 0; i < n; ++i) {
            ZVec row(n, 0);
            row[i] = 1;
            z_gens.push_back(std::move(row));
        }
    } else {
        ZMat aug(m, ZVec(n + m, 0));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) aug[i][j] = d2[i][j];
            aug[i][n + i] = mod_next[i];
        }
        for (const auto& k : integer_kernel_basis(aug)) {
            ZVec row(k.begin(), k.begin() + n);
            z_gens.push_back(std::move(row));
        }
        for (int i = 0; i < n; ++i) {
            ZVec row(n, 0);
            row[i] = mod_cur[i];
            z_gens.push_back(std::move(row));
        }
    }
    ZMat z_basis = lattice_row_basis(z_gens, n);

    ZMat b_gens;
    if (!d1.empty() && !d1[0].empty()) {
        const int p = static_cast<int>(d1[0].size());
        for (int j = 0; j < p; ++j) {
            ZVec row(n);
            for (int i = 0; i < n; ++i) row[i] = d1[i][j];
            b_gens.push_back(std::move(row));
        }
    }
    for (int i = 0; i < n; ++i) {
        ZVec row(n, 0);
        row[i] = mod_cur[i];
        b_gens.push_back(std::move(row));
    }

    auto q = lattice_quotient(z_basis, b_gens);
    SubquotientResult res;
    res.factors = std::move(q.factors);
    res.representative_coords = std::move(q.generators);
    res.order = 1;
    for (const auto& f : res.factors) res.order *= f;
    return res;
}

mpz_class CokernelInfo::cokernel_order() const {
    mpz_class o = 1;
    for (const auto& f : cokernel_factors) o *= f;
    return o;
}

CokernelInfo finab_cokernel(const FinAbHom& h) {
    const int mt = h.target.rank(), ms = h.source.rank();
    ZMat aug(mt, ZVec(ms + mt, 0));
    for (int i = 0; i < mt; ++i) {
        for (int j = 0; j < ms; ++j) aug[i][j] = h.matrix[i][j];
        aug[i][ms + i] = h.target.invariant_factors()[i];
    }
    auto diag = smith_normal_form(aug).diagonal();

    CokernelInfo info;
    mpz_class coker = 1;
    for (int i = 0; i < mt; ++i) {
        mpz_class d = i < static_cast<int>(diag.size()) ? diag[i] : 0;
        if (d == 0) throw InternalInvariantViolation("cokernel of a finite map is infinite");
        if (d > 1) info.cokernel_factors.push_back(d);
        coker *= d;
    }
    mpz_class src_order = 1, tgt_order = 1;
    for (int f : h.source.invariant_factors()) src_order *= f;
    for (int f : h.target.invariant_factors()) tgt_order *= f;
    info.image_order = tgt_order / coker;
    info.kernel_order = src_order / info.image_order;
    return info;
}

}  // namespace rrbtk
