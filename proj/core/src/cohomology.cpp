#include "rrbtk/cohomology.hpp"

#include <memory>

#include "rrbtk/errors.hpp"

namespace rrbtk {

namespace {

// Descendent product on A: a1 . beta_{T(a1)}(a2).
int circ_base(const RRBModule& m, int a1, int a2) {
    return m.A().mul(a1, m.beta(m.T(a1), a2));
}

void check_shape1(const RRBModule& m, const RRBCochain1& c) {
    if (static_cast<int>(c.theta1.size()) != m.A().order() ||
        static_cast<int>(c.theta2.size()) != m.B().order())
        throw BadDocument("degree-1 cochain has wrong shape");
}

void check_shape2(const RRBModule& m, const RRBCochain2& z) {
    const int na = m.A().order();
    const int nb = m.B().order();
    bool ok = static_cast<int>(z.tau1.size()) == na &&
              static_cast<int>(z.tau2.size()) == nb &&
              static_cast<int>(z.rho.size()) == na &&
              static_cast<int>(z.chi.size()) == na;
    if (ok)
        for (const auto& row : z.tau1) ok = ok && static_cast<int>(row.size()) == na;
    if (ok)
        for (const auto& row : z.tau2) ok = ok && static_cast<int>(row.size()) == nb;
    if (ok)
        for (const auto& row : z.rho) ok = ok && static_cast<int>(row.size()) == nb;
    if (!ok) throw BadDocument("degree-2 cochain has wrong shape");
}

// delta^1 of chi: A -> L with respect to the descendent product on A
// and the action sigma_{T(-)}.
int delta1_chi(const RRBModule& m, const std::vector<int>& chi, int a1, int a2) {
    const auto& L = m.L();
    return L.mul(L.mul(chi[a2], L.inv(chi[circ_base(m, a1, a2)])),
                 m.sigma.apply(m.T(a2), chi[a1]));
}

// Classical inhomogeneous 2-coboundary of a 1-cochain t on a group g
// with a (possibly trivial) right-style action act(x, -).
int classical_d1(const FiniteGroup& g, const FiniteGroup& vals, const GroupAction& act,
                 const std::vector<int>& t, int x1, int x2) {
    return vals.mul(vals.mul(t[x2], vals.inv(t[g.mul(x1, x2)])), act.apply(x2, t[x1]));
}

// Classical 3-coboundary of a 2-cochain t: the alternating sum with the
// action on the first term pattern t(x2,x3) t(x1x2,x3)^{-1} t(x1,x2x3)
// act_{x3}(t(x1,x2))^{-1}.
int classical_d2(const FiniteGroup& g, const FiniteGroup& vals, const GroupAction& act,
                 const std::vector<std::vector<int>>& t, int x1, int x2, int x3) {
    int r = vals.mul(t[x2][x3], vals.inv(t[g.mul(x1, x2)][x3]));
    r = vals.mul(r, t[x1][g.mul(x2, x3)]);
    r = vals.mul(r, vals.inv(act.apply(x3, t[x1][x2])));
    return r;
}

std::shared_ptr<const AbelianDecomposition> shared_decomposition(const FiniteGroup& g) {
    return std::make_shared<AbelianDecomposition>(AbelianDecomposition::of(g));
}

std::vector<int> nonidentity(const FiniteGroup& g) {
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x)
        if (x != g.identity()) out.push_back(x);
    return out;
}

std::vector<int> flatten3(const RRBModule& m, const RRBCochain3& w) {
    std::vector<int> out;
    for (const auto& plane : w.c1)
        for (const auto& row : plane) out.insert(out.end(), row.begin(), row.end());
    for (const auto& plane : w.c2)
        for (const auto& row : plane) out.insert(out.end(), row.begin(), row.end());
    for (const auto& plane : w.gamma1)
        for (const auto& row : plane) out.insert(out.end(), row.begin(), row.end());
    for (const auto& plane : w.gamma2)
        for (const auto& row : plane) out.insert(out.end(), row.begin(), row.end());
    for (const auto& row : w.gamma3) out.insert(out.end(), row.begin(), row.end());
    (void)m;
    return out;
}

}  // namespace

RRBCochain1 zero_cochain1(const RRBModule& m) {
    return RRBCochain1{std::vector<int>(m.A().order(), m.K().identity()),
                       std::vector<int>(m.B().order(), m.L().identity())};
}

RRBCochain2 zero_cochain2(const RRBModule& m) {
    const int na = m.A().order();
    const int nb = m.B().order();
    RRBCochain2 z;
    z.tau1.assign(na, std::vector<int>(na, m.K().identity()));
    z.tau2.assign(nb, std::vector<int>(nb, m.L().identity()));
    z.rho.assign(na, std::vector<int>(nb, m.K().identity()));
    z.chi.assign(na, m.L().identity());
    return z;
}

bool is_zero2(const RRBModule& m, const RRBCochain2& z) {
    const int ek = m.K().identity();
    const int el = m.L().identity();
    for (const auto& row : z.tau1)
        for (int v : row)
            if (v != ek) return false;
    for (const auto& row : z.tau2)
        for (int v : row)
            if (v != el) return false;
    for (const auto& row : z.rho)
        for (int v : row)
            if (v != ek) return false;
    for (int v : z.chi)
        if (v != el) return false;
    return true;
}

bool is_zero3(const RRBModule& m, const RRBCochain3& w) {
    const int ek = m.K().identity();
    const int el = m.L().identity();
    for (const auto& plane : w.c1)
        for (const auto& row : plane)
            for (int v : row)
                if (v != ek) return false;
    for (const auto& plane : w.c2)
        for (const auto& row : plane)
            for (int v : row)
                if (v != el) return false;
    for (const auto& plane : w.gamma1)
        for (const auto& row : plane)
            for (int v : row)
                if (v != ek) return false;
    for (const auto& plane : w.gamma2)
        for (const auto& row : plane)
            for (int v : row)
                if (v != ek) return false;
    for (const auto& row : w.gamma3)
        for (int v : row)
            if (v != el) return false;
    return true;
}

std::vector<std::pair<int, int>> c0_fixed_set(const RRBModule& m) {
    std::vector<std::pair<int, int>> out;
    const auto& A = m.A();
    const auto& B = m.B();
    for (int k = 0; k < m.K().order(); ++k)
        for (int l = 0; l < m.L().order(); ++l) {
            bool ok = true;
            for (int a = 0; ok && a < A.order(); ++a) {
                // f(sigma_b(l), a) = f(l, a) for all a, b.
                for (int b = 0; ok && b < B.order(); ++b)
                    if (m.f[m.sigma.apply(b, l)][a] != m.f[l][a]) ok = false;
                if (ok && m.sigma.apply(m.T(a), l) != l) ok = false;
                if (ok && m.S(m.mu.apply(a, k)) != m.S(k)) ok = false;
            }
            for (int b = 0; ok && b < B.order(); ++b)
                if (m.nu.apply(b, k) != k) ok = false;
            if (ok) out.emplace_back(k, l);
        }
    return out;
}

RRBCochain1 d0(const RRBModule& m, int k, int l) {
    for (int b = 0; b < m.B().order(); ++b) {
        if (m.nu.apply(b, k) != k) throw NotInC0();
        for (int a = 0; a < m.A().order(); ++a)
            if (m.f[m.sigma.apply(b, l)][a] != m.f[l][a]) throw NotInC0();
    }
    for (int a = 0; a < m.A().order(); ++a) {
        if (m.sigma.apply(m.T(a), l) != l) throw NotInC0();
        if (m.S(m.mu.apply(a, k)) != m.S(k)) throw NotInC0();
    }
    RRBCochain1 c = zero_cochain1(m);
    for (int a = 0; a < m.A().order(); ++a)
        c.theta1[a] = m.K().mul(m.mu.apply(a, k), m.K().inv(k));
    for (int b = 0; b < m.B().order(); ++b)
        c.theta2[b] = m.L().mul(m.sigma.apply(b, l), m.L().inv(l));
    return c;
}

RRBCochain2 d1(const RRBModule& m, const RRBCochain1& c) {
    check_shape1(m, c);
    const auto& A = m.A();
    const auto& B = m.B();
    const auto& K = m.K();
    const auto& L = m.L();
    RRBCochain2 z = zero_cochain2(m);
    for (int a1 = 0; a1 < A.order(); ++a1)
        for (int a2 = 0; a2 < A.order(); ++a2)
            z.tau1[a1][a2] = classical_d1(A, K, m.mu, c.theta1, a1, a2);
    for (int b1 = 0; b1 < B.order(); ++b1)
        for (int b2 = 0; b2 < B.order(); ++b2)
            z.tau2[b1][b2] = classical_d1(B, L, m.sigma, c.theta2, b1, b2);
    for (int a = 0; a < A.order(); ++a) {
        for (int b = 0; b < B.order(); ++b) {
            int inner = K.mul(m.f[c.theta2[b]][a], c.theta1[a]);
            z.rho[a][b] = K.mul(m.nu.apply(b, inner), K.inv(c.theta1[m.beta(b, a)]));
        }
        z.chi[a] = L.mul(m.S(m.nu.apply_inverse(m.T(a), c.theta1[a])),
                         L.inv(c.theta2[m.T(a)]));
    }
    return z;
}

RRBCochain3 d2(const RRBModule& m, const RRBCochain2& z) {
    check_shape2(m, z);
    const auto& A = m.A();
    const auto& B = m.B();
    const auto& K = m.K();
    const auto& L = m.L();
    const int na = A.order();
    const int nb = B.order();

    RRBCochain3 w;
    w.c1.assign(na, std::vector<std::vector<int>>(na, std::vector<int>(na, K.identity())));
    w.c2.assign(nb, std::vector<std::vector<int>>(nb, std::vector<int>(nb, L.identity())));
    w.gamma1.assign(na, std::vector<std::vector<int>>(nb, std::vector<int>(nb, K.identity())));
    w.gamma2.assign(na, std::vector<std::vector<int>>(na, std::vector<int>(nb, K.identity())));
    w.gamma3.assign(na, std::vector<int>(na, L.identity()));

    for (int a1 = 0; a1 < na; ++a1)
        for (int a2 = 0; a2 < na; ++a2)
            for (int a3 = 0; a3 < na; ++a3)
                w.c1[a1][a2][a3] = classical_d2(A, K, m.mu, z.tau1, a1, a2, a3);
    for (int b1 = 0; b1 < nb; ++b1)
        for (int b2 = 0; b2 < nb; ++b2)
            for (int b3 = 0; b3 < nb; ++b3)
                w.c2[b1][b2][b3] = classical_d2(B, L, m.sigma, z.tau2, b1, b2, b3);

    for (int a = 0; a < na; ++a)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int b2 = 0; b2 < nb; ++b2) {
                int r = z.rho[a][B.mul(b1, b2)];
                r = K.mul(r, m.nu.apply(B.mul(b1, b2), m.f[z.tau2[b1][b2]][a]));
                r = K.mul(r, K.inv(z.rho[m.beta(b2, a)][b1]));
                r = K.mul(r, K.inv(m.nu.apply(b1, z.rho[a][b2])));
                w.gamma1[a][b1][b2] = r;
            }

    for (int a1 = 0; a1 < na; ++a1)
        for (int a2 = 0; a2 < na; ++a2)
            for (int b = 0; b < nb; ++b) {
                int r = z.rho[A.mul(a1, a2)][b];
                r = K.mul(r, m.nu.apply(b, z.tau1[a1][a2]));
                r = K.mul(r, K.inv(m.mu.apply(m.beta(b, a2), z.rho[a1][b])));
                r = K.mul(r, K.inv(z.rho[a2][b]));
                r = K.mul(r, K.inv(z.tau1[m.beta(b, a1)][m.beta(b, a2)]));
                w.gamma2[a1][a2][b] = r;
            }

    for (int a1 = 0; a1 < na; ++a1)
        for (int a2 = 0; a2 < na; ++a2) {
            int t1 = m.T(a1);
            int circ = circ_base(m, a1, a2);
            int inner = z.rho[a2][t1];
            inner = K.mul(inner, z.tau1[a1][m.beta(t1, a2)]);
            inner = K.mul(inner, m.nu.apply(t1, m.f[z.chi[a1]][a2]));
            int r = m.S(m.nu.apply_inverse(m.T(circ), inner));
            r = L.mul(r, L.inv(z.tau2[t1][m.T(a2)]));
            r = L.mul(r, L.inv(delta1_chi(m, z.chi, a1, a2)));
            w.gamma3[a1][a2] = r;
        }
    return w;
}

RRBCochain2 d1_central(const RRBModule& m, const RRBCochain1& c) {
    if (!m.is_central()) throw NotCentralModule();
    check_shape1(m, c);
    const auto& A = m.A();
    const auto& B = m.B();
    const auto& K = m.K();
    const auto& L = m.L();
    RRBCochain2 z = zero_cochain2(m);
    for (int a1 = 0; a1 < A.order(); ++a1)
        for (int a2 = 0; a2 < A.order(); ++a2)
            z.tau1[a1][a2] = K.mul(K.mul(c.theta1[a2], K.inv(c.theta1[A.mul(a1, a2)])),
                                   c.theta1[a1]);
    for (int b1 = 0; b1 < B.order(); ++b1)
        for (int b2 = 0; b2 < B.order(); ++b2)
            z.tau2[b1][b2] = L.mul(L.mul(c.theta2[b2], L.inv(c.theta2[B.mul(b1, b2)])),
                                   c.theta2[b1]);
    for (int a = 0; a < A.order(); ++a) {
        for (int b = 0; b < B.order(); ++b)
            z.rho[a][b] = K.mul(c.theta1[a], K.inv(c.theta1[m.beta(b, a)]));
        z.chi[a] = L.mul(m.S(c.theta1[a]), L.inv(c.theta2[m.T(a)]));
    }
    return z;
}

RRBCochain3 d2_central(const RRBModule& m, const RRBCochain2& z) {
    if (!m.is_central()) throw NotCentralModule();
    check_shape2(m, z);
    const auto& A = m.A();
    const auto& B = m.B();
    const auto& K = m.K();
    const auto& L = m.L();
    const int na = A.order();
    const int nb = B.order();

    RRBCochain3 w;
    w.c1.assign(na, std::vector<std::vector<int>>(na, std::vector<int>(na, K.identity())));
    w.c2.assign(nb, std::vector<std::vector<int>>(nb, std::vector<int>(nb, L.identity())));
    w.gamma1.assign(na, std::vector<std::vector<int>>(nb, std::vector<int>(nb, K.identity())));
    w.gamma2.assign(na, std::vector<std::vector<int>>(na, std::vector<int>(nb, K.identity())));
    w.gamma3.assign(na, std::vector<int>(na, L.identity()));

    auto d2_plain = [](const FiniteGroup& g, const FiniteGroup& vals,
                       const std::vector<std::vector<int>>& t, int x1, int x2, int x3) {
        int r = vals.mul(t[x2][x3], vals.inv(t[g.mul(x1, x2)][x3]));
        r = vals.mul(r, t[x1][g.mul(x2, x3)]);
        return vals.mul(r, vals.inv(t[x1][x2]));
    };
    for (int a1 = 0; a1 < na; ++a1)
        for (int a2 = 0; a2 < na; ++a2)
            for (int a3 = 0; a3 < na; ++a3)
                w.c1[a1][a2][a3] = d2_plain(A, K, z.tau1, a1, a2, a3);
    for (int b1 = 0; b1 < nb; ++b1)
        for (int b2 = 0; b2 < nb; ++b2)
            for (int b3 = 0; b3 < nb; ++b3)
                w.c2[b1][b2][b3] = d2_plain(B, L, z.tau2, b1, b2, b3);

    for (int a = 0; a < na; ++a)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int b2 = 0; b2 < nb; ++b2)
                w.gamma1[a][b1][b2] =
                    K.mul(K.mul(z.rho[a][B.mul(b1, b2)], K.inv(z.rho[m.beta(b2, a)][b1])),
                          K.inv(z.rho[a][b2]));

    for (int a1 = 0; a1 < na; ++a1)
        for (int a2 = 0; a2 < na; ++a2)
            for (int b = 0; b < nb; ++b) {
                int r = K.mul(z.rho[A.mul(a1, a2)][b], K.inv(z.rho[a1][b]));
                r = K.mul(r, K.inv(z.rho[a2][b]));
                r = K.mul(r, z.tau1[a1][a2]);
                r = K.mul(r, K.inv(z.tau1[m.beta(b, a1)][m.beta(b, a2)]));
                w.gamma2[a1][a2][b] = r;
            }

    for (int a1 = 0; a1 < na; ++a1)
        for (int a2 = 0; a2 < na; ++a2) {
            int t1 = m.T(a1);
            int circ = circ_base(m, a1, a2);
            int r = m.S(K.mul(z.rho[a2][t1], z.tau1[a1][m.beta(t1, a2)]));
            r = L.mul(r, L.inv(z.tau2[t1][m.T(a2)]));
            int dchi = L.mul(L.mul(z.chi[a2], L.inv(z.chi[circ])), z.chi[a1]);
            r = L.mul(r, L.inv(dchi));
            w.gamma3[a1][a2] = r;
        }
    return w;
}

bool is_cocycle2(const RRBModule& m, const RRBCochain2& z, bool central) {
    RRBCochain3 w = central ? d2_central(m, z) : d2(m, z);
    return is_zero3(m, w);
}

Linearization::Linearization(const RRBModule& m, bool central) : m_(&m), central_(central) {
    if (central && !m.is_central()) throw NotCentralModule();
    auto kdec = shared_decomposition(m.K());
    auto ldec = shared_decomposition(m.L());
    const auto as = nonidentity(m.A());
    const auto bs = nonidentity(m.B());
    const int na = m.A().order();
    const int nb = m.B().order();

    std::vector<std::shared_ptr<const AbelianDecomposition>> s1;
    for (size_t i = 0; i < as.size(); ++i) s1.push_back(kdec);
    for (size_t i = 0; i < bs.size(); ++i) s1.push_back(ldec);
    c1_ = SlotSpace::make(std::move(s1));

    std::vector<std::shared_ptr<const AbelianDecomposition>> s2;
    for (size_t i = 0; i < as.size() * as.size(); ++i) s2.push_back(kdec);
    for (size_t i = 0; i < bs.size() * bs.size(); ++i) s2.push_back(ldec);
    for (size_t i = 0; i < as.size() * bs.size(); ++i) s2.push_back(kdec);
    for (size_t i = 0; i < as.size(); ++i) s2.push_back(ldec);
    c2_ = SlotSpace::make(std::move(s2));

    std::vector<std::shared_ptr<const AbelianDecomposition>> s3;
    for (int i = 0; i < na * na * na; ++i) s3.push_back(kdec);
    for (int i = 0; i < nb * nb * nb; ++i) s3.push_back(ldec);
    for (int i = 0; i < na * nb * nb; ++i) s3.push_back(kdec);
    for (int i = 0; i < na * na * nb; ++i) s3.push_back(kdec);
    for (int i = 0; i < na * na; ++i) s3.push_back(ldec);
    c3_ = SlotSpace::make(std::move(s3));
    mod3_ = c3_.moduli();

    d1m_ = linearize(c1_, c2_, [this](const std::vector<int>& vals) {
        RRBCochain1 c = values_to_1(vals);
        RRBCochain2 z = central_ ? rrbtk::d1_central(*m_, c) : rrbtk::d1(*m_, c);
        return values_from_2(z);
    });
    d2m_ = linearize(c2_, c3_, [this](const std::vector<int>& vals) {
        RRBCochain2 z = values_to_2(vals);
        RRBCochain3 w = central_ ? rrbtk::d2_central(*m_, z) : rrbtk::d2(*m_, z);
        return flatten3(*m_, w);
    });
}

ZVec Linearization::encode1(const RRBCochain1& c) const {
    check_shape1(*m_, c);
    return c1_.encode(values_from_1(c));
}

RRBCochain1 Linearization::decode1(const ZVec& v) const { return values_to_1(c1_.decode(v)); }

ZVec Linearization::encode2(const RRBCochain2& z) const {
    check_shape2(*m_, z);
    return c2_.encode(values_from_2(z));
}

RRBCochain2 Linearization::decode2(const ZVec& v) const { return values_to_2(c2_.decode(v)); }

const ZMat& Linearization::cocycle2_lattice() const {
    if (zlat_.empty()) {
        auto mod2 = c2_.moduli();
        const int n = c2_.dim;
        const int p = c3_.dim;
        ZMat gens;
        ZMat aug(p, ZVec(n + p, 0));
        for (int i = 0; i < p; ++i) {
            for (int j = 0; j < n; ++j) aug[i][j] = d2m_[i][j];
            aug[i][n + i] = mod3_[i];
        }
        for (const auto& k : integer_kernel_basis(aug))
            gens.emplace_back(k.begin(), k.begin() + n);
        for (int i = 0; i < n; ++i) {
            ZVec row(n, 0);
            row[i] = mod2[i];
            gens.push_back(std::move(row));
        }
        zlat_ = lattice_row_basis(gens, n);
    }
    return zlat_;
}

const ZMat& Linearization::coboundary2_lattice() const {
    if (blat_.empty()) blat_ = coboundary_lattice(d1m_, c2_.moduli());
    return blat_;
}

bool Linearization::is_coboundary2(const RRBCochain2& z) const {
    return lattice_contains(coboundary2_lattice(), encode2(z));
}

std::vector<int> Linearization::values_from_1(const RRBCochain1& c) const {
    std::vector<int> vals;
    for (int a : nonidentity(m_->A())) vals.push_back(c.theta1[a]);
    for (int b : nonidentity(m_->B())) vals.push_back(c.theta2[b]);
    return vals;
}

RRBCochain1 Linearization::values_to_1(const std::vector<int>& vals) const {
    RRBCochain1 c = zero_cochain1(*m_);
    size_t i = 0;
    for (int a : nonidentity(m_->A())) c.theta1[a] = vals[i++];
    for (int b : nonidentity(m_->B())) c.theta2[b] = vals[i++];
    return c;
}

std::vector<int> Linearization::values_from_2(const RRBCochain2& z) const {
    std::vector<int> vals;
    const auto as = nonidentity(m_->A());
    const auto bs = nonidentity(m_->B());
    for (int a1 : as)
        for (int a2 : as) vals.push_back(z.tau1[a1][a2]);
    for (int b1 : bs)
        for (int b2 : bs) vals.push_back(z.tau2[b1][b2]);
    for (int a : as)
        for (int b : bs) vals.push_back(z.rho[a][b]);
    for (int a : as) vals.push_back(z.chi[a]);
    return vals;
}

RRBCochain2 Linearization::values_to_2(const std::vector<int>& vals) const {
    RRBCochain2 z = zero_cochain2(*m_);
    const auto as = nonidentity(m_->A());
    const auto bs = nonidentity(m_->B());
    size_t i = 0;
    for (int a1 : as)
        for (int a2 : as) z.tau1[a1][a2] = vals[i++];
    for (int b1 : bs)
        for (int b2 : bs) z.tau2[b1][b2] = vals[i++];
    for (int a : as)
        for (int b : bs) z.rho[a][b] = vals[i++];
    for (int a : as) z.chi[a] = vals[i++];
    return z;
}

CohomologyResult h0(const RRBModule& m) {
    CohomologyResult res;
    res.degree = 0;
    res.h0_elements = c0_fixed_set(m);
    // The fixed pairs form a subgroup of K x L; report its structure.
    std::vector<std::vector<int>> table;
    const int n = static_cast<int>(res.h0_elements.size());
    auto index_of = [&](int k, int l) {
        for (int i = 0; i < n; ++i)
            if (res.h0_elements[i] == std::make_pair(k, l)) return i;
        throw InternalInvariantViolation("degree-0 fixed set is not closed");
    };
    table.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[i][j] = index_of(m.K().mul(res.h0_elements[i].first, res.h0_elements[j].first),
                                   m.L().mul(res.h0_elements[i].second, res.h0_elements[j].second));
    auto dec = AbelianDecomposition::of(FiniteGroup::from_table(table, "H0"));
    for (int d : dec.invariant_factors())
        if (d > 1) res.factors.push_back(d);
    res.order = n;
    return res;
}

CohomologyResult h1(const RRBModule& m) {
    Linearization lin(m);
    // d0 linearized over the degree-0 subgroup is awkward; instead quotient
    // the 1-cocycle lattice by the lattice spanned by all d0 images.
    auto mod1 = lin.c1().moduli();
    const int n = lin.c1().dim;
    const int p = lin.c2().dim;
    ZMat aug(p, ZVec(n + p, 0));
    auto mod2 = lin.c2().moduli();
    const auto& d1m = lin.d1_matrix();
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = d1m[i][j];
        aug[i][n + i] = mod2[i];
    }
    ZMat z_gens;
    for (const auto& k : integer_kernel_basis(aug)) z_gens.emplace_back(k.begin(), k.begin() + n);
    for (int i = 0; i < n; ++i) {
        ZVec row(n, 0);
        row[i] = mod1[i];
        z_gens.push_back(std::move(row));
    }
    ZMat z_basis = lattice_row_basis(z_gens, n);

    ZMat b_gens;
    for (const auto& [k, l] : c0_fixed_set(m)) b_gens.push_back(lin.encode1(d0(m, k, l)));
    for (int i = 0; i < n; ++i) {
        ZVec row(n, 0);
        row[i] = mod1[i];
        b_gens.push_back(std::move(row));
    }
    auto q = lattice_quotient(z_basis, lattice_row_basis(b_gens, n));

    CohomologyResult res;
    res.degree = 1;
    res.factors = q.factors;
    res.order = q.order();
    for (const auto& g : q.generators) res.reps1.push_back(lin.decode1(g));
    return res;
}

namespace {

CohomologyResult h2_impl(const RRBModule& m, bool central) {
    Linearization lin(m, central);
    auto sub = cochain_cohomology(lin.d1_matrix(), lin.d2_matrix(), lin.c2().moduli(),
                                  lin.c3_moduli());
    CohomologyResult res;
    res.degree = 2;
    res.factors = sub.factors;
    res.order = sub.order;
    for (const auto& g : sub.representative_coords) res.reps2.push_back(lin.decode2(g));
    return res;
}

}  // namespace

CohomologyResult h2(const RRBModule& m) { return h2_impl(m, false); }

CohomologyResult h2_central(const RRBModule& m) { return h2_impl(m, true); }

mpz_class h_order_by_enumeration(const RRBModule& m, int degree, bool central, long limit) {
    Linearization lin(m, central);
    const SlotSpace& dom = (degree == 1) ? lin.c1() : lin.c2();
    if (dom.total_order() > limit)
        throw TooLarge("cochain space too large for enumeration");

    if (degree == 1) {
        long cocycles = 0;
        for_each_tuple(lin.c1(), [&](const std::vector<int>& vals) {
            RRBCochain1 c = zero_cochain1(m);
            size_t i = 0;
            for (int a = 0; a < m.A().order(); ++a)
                if (a != m.A().identity()) c.theta1[a] = vals[i++];
            for (int b = 0; b < m.B().order(); ++b)
                if (b != m.B().identity()) c.theta2[b] = vals[i++];
            RRBCochain2 z = central ? d1_central(m, c) : d1(m, c);
            if (is_zero2(m, z)) ++cocycles;
        });
        long boundaries = 0;
        std::vector<std::vector<int>> seen;
        for (const auto& [k, l] : c0_fixed_set(m)) {
            RRBCochain1 c = d0(m, k, l);
            std::vector<int> flat = c.theta1;
            flat.insert(flat.end(), c.theta2.begin(), c.theta2.end());
            bool fresh = true;
            for (const auto& s : seen)
                if (s == flat) {
                    fresh = false;
                    break;
                }
            if (fresh) {
                seen.push_back(std::move(flat));
                ++boundaries;
            }
        }
        return mpz_class(cocycles) / mpz_class(boundaries);
    }

    long cocycles = 0;
    for_each_tuple(lin.c2(), [&](const std::vector<int>& vals) {
        RRBCochain2 z = lin.decode2(lin.c2().encode(vals));
        RRBCochain3 w = central ? d2_central(m, z) : d2(m, z);
        if (is_zero3(m, w)) ++cocycles;
    });
    // Count distinct coboundaries = |C^1| / |ker d1|.
    long ker = 0;
    if (lin.c1().total_order() > limit)
        throw TooLarge("cochain space too large for enumeration");
    for_each_tuple(lin.c1(), [&](const std::vector<int>& vals) {
        RRBCochain1 c = zero_cochain1(m);
        size_t i = 0;
        for (int a = 0; a < m.A().order(); ++a)
            if (a != m.A().identity()) c.theta1[a] = vals[i++];
        for (int b = 0; b < m.B().order(); ++b)
            if (b != m.B().identity()) c.theta2[b] = vals[i++];
        RRBCochain2 z = central ? d1_central(m, c) : d1(m, c);
        if (is_zero2(m, z)) ++ker;
    });
    mpz_class boundaries = lin.c1().total_order() / ker;
    return mpz_class(cocycles) / boundaries;
}

}  // namespace rrbtk
