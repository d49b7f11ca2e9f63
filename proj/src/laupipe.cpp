#include "laupipe/laupipe.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "wittcore/hatwitt.hpp"

namespace laupipe {

using exactalg::errkind;
using exactalg::fail;
using exactalg::GroebnerBasis;
using exactalg::Mono;
using exactalg::MonOrder;
using exactalg::require;
using wittcore::HatWitt;
using wittcore::witt_law;
using wittcore::WittLaw;
using wittcore::WittVec;

namespace {

using SPoly = MPoly<Fq>;
using SWitt = WittVec<SPoly>;

Fq fzero(const FqCtx* F) { return Fq(F, 0); }

SPoly svar(const FqCtx* F, int arity, int i) {
    return SPoly::variable(arity, MonOrder::grevlex, i, fzero(F));
}

// Symbolic Witt block of n consecutive variables starting at `offset`.
SWitt sym_block(const WittLaw* law, const FqCtx* F, int arity, int offset) {
    std::vector<SPoly> e;
    for (int k = 0; k < law->n; ++k) e.push_back(svar(F, arity, offset + k));
    return SWitt(law, std::move(e));
}

SWitt sconst(const FqCtx*, int arity, const WElem& c) {
    std::vector<SPoly> e;
    for (const Fq& x : c.entries())
        e.push_back(SPoly::constant(arity, MonOrder::grevlex, x));
    return SWitt(c.law(), std::move(e));
}

// Sum of c_i * blocks[i] for a column of W_n coefficients.
SWitt lin_comb(const std::vector<WElem>& col, const std::vector<SWitt>& blocks,
               const FqCtx* F, int arity) {
    SWitt acc = sconst(F, arity, col[0]) * blocks[0];
    for (size_t i = 1; i < col.size(); ++i)
        acc += sconst(F, arity, col[i]) * blocks[i];
    return acc;
}

void push_components(std::vector<MPoly<Fq>>& eqs, const SWitt& w) {
    for (const SPoly& c : w.entries())
        if (!c.is_zero()) eqs.push_back(c);
}

// Embed a W_n(F_q) vector into W_n(A).
WittVec<TAElem> w_embed(const TestAlgebra& A, const WElem& c) {
    std::vector<TAElem> e;
    for (const Fq& x : c.entries()) e.push_back(A.embed(x));
    return WittVec<TAElem>(c.law(), std::move(e));
}

void dedupe(std::vector<MPoly<Fq>>& eqs) {
    std::set<std::string> seen;
    std::vector<MPoly<Fq>> out;
    for (auto& e : eqs)
        if (seen.insert(e.str()).second) out.push_back(std::move(e));
    eqs = std::move(out);
}

}  // namespace

// --- adjoint route -------------------------------------------------------------

ZinkDualPresentation lau_dual_adjoint(const DisplayDatum& D) {
    const int d = D.d, dp = D.dprime, n = D.n;
    const FqCtx* F = D.field;
    auto order = semidisplay::adjoint_basis(d, dp);
    std::vector<int> pos(size_t(d) * d, -1);
    for (size_t k = 0; k < order.size(); ++k)
        pos[size_t(order[k].first) * d + order[k].second] = int(k);
    const int arity = d * d * n;

    std::vector<SWitt> Y;
    for (int k = 0; k < d * d; ++k)
        Y.push_back(sym_block(D.law, F, arity, k * n));

    ZinkDualPresentation Z;
    Z.route = "adjoint";
    Z.coord_units = order;
    Z.pres.field = F;
    Z.pres.blocks.assign(size_t(d) * d, n);
    Z.d = d;
    Z.dprime = dp;
    Z.n = n;
    for (size_t k = 0; k < order.size(); ++k) {
        auto [a, b] = order[k];
        // eta(Ad_U(E_ab)) with Ad_U(E_ab) = sum_{ij} U_ia (U^-1)_bj E_ij.
        std::vector<WElem> col(size_t(d) * d, D.U[0][0]);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                col[size_t(pos[size_t(i) * d + j])] = D.U[i][a] * D.Uinv[b][j];
        SWitt eta_ad = lin_comb(col, Y, F, arity);
        int w = (a < dp ? 1 : 0) - (b < dp ? 1 : 0);
        SWitt eq = (w == 1)
                       ? Y[k].frob() - eta_ad
                       : Y[k] - eta_ad.versch().p_pow_mult(-w);
        push_components(Z.pres.eqs, eq);
    }
    dedupe(Z.pres.eqs);
    return Z;
}

// --- Cond_x / Cond_y route -------------------------------------------------------

ZinkDualPresentation lau_dual_zink(const Semidisplay& S) {
    const int d = S.d, dp = S.dprime, n = S.n;
    const FqCtx* F = S.field;
    const int arity = d * n;        // eta coordinates
    const int wide = arity + n;     // plus the symbolic Witt vector a

    std::vector<SWitt> Y;
    for (int j = 0; j < d; ++j)
        Y.push_back(sym_block(S.law, F, wide, j * n));
    SWitt Aw = sym_block(S.law, F, wide, arity);

    auto f_col = [&](int j) {
        return j < dp ? S.f_cols[j] : semidisplay::f_on_L(S, j - dp);
    };

    std::vector<MPoly<Fq>> wide_eqs;
    // Cond_x: eta(F(e_j)) = F(eta(e_j)) on every basis vector.
    for (int j = 0; j < d; ++j)
        push_components(wide_eqs, lin_comb(f_col(j), Y, F, wide) - Y[size_t(j)].frob());
    // Cond_y on the L-basis: eta(e_l) = V(eta(F_1(e_l))).
    for (int l = 0; l < d - dp; ++l)
        push_components(wide_eqs,
                        Y[size_t(dp + l)] -
                            lin_comb(S.f1_cols[size_t(l)], Y, F, wide).versch());
    // Cond_y on V(a) e_t for symbolic a: V(a) eta(e_t) = V(a eta(F(e_t))).
    for (int t = 0; t < dp; ++t)
        push_components(wide_eqs,
                        Aw.versch() * Y[size_t(t)] -
                            (Aw * lin_comb(f_col(t), Y, F, wide)).versch());

    // Extract coefficients of the a-monomials: each coefficient must vanish
    // identically, giving equations in the eta variables alone.
    ZinkDualPresentation Z;
    Z.route = "zink";
    Z.pres.field = F;
    Z.pres.blocks.assign(size_t(d), n);
    Z.d = d;
    Z.dprime = dp;
    Z.n = n;
    for (const auto& weq : wide_eqs) {
        std::map<Mono, MPoly<Fq>> by_alpha;
        for (const auto& [m, c] : weq.terms()) {
            Mono am(m.begin() + arity, m.end());
            Mono em(m.begin(), m.begin() + arity);
            auto it = by_alpha.find(am);
            if (it == by_alpha.end())
                it = by_alpha
                         .emplace(am, MPoly<Fq>(arity, MonOrder::grevlex,
                                                fzero(F)))
                         .first;
            it->second +=
                MPoly<Fq>::monomial(arity, MonOrder::grevlex, em, c);
        }
        for (auto& [am, poly] : by_alpha)
            if (!poly.is_zero()) Z.pres.eqs.push_back(std::move(poly));
    }
    dedupe(Z.pres.eqs);
    return Z;
}

// --- economic route --------------------------------------------------------------

ZinkDualPresentation economic_presentation(const Semidisplay& S) {
    const int d = S.d, dp = S.dprime, n = S.n, dl = d - dp;
    const FqCtx* F = S.field;
    const int arity = dp * n;

    std::vector<SWitt> G;
    for (int t = 0; t < dp; ++t) G.push_back(sym_block(S.law, F, arity, t * n));

    ZinkDualPresentation Z;
    Z.route = "economic";
    Z.pres.field = F;
    Z.pres.blocks.assign(size_t(dp), n);
    Z.d = d;
    Z.dprime = dp;
    Z.n = n;
    for (int t = 0; t < dp; ++t) {
        // phi_TT column t and phi_LT column t come from F(e_t).
        std::vector<WElem> tt, lt;
        for (int i = 0; i < dp; ++i) tt.push_back(S.f_cols[size_t(t)][size_t(i)]);
        for (int l = 0; l < dl; ++l)
            lt.push_back(S.f_cols[size_t(t)][size_t(dp + l)]);

        SWitt rhs = lin_comb(tt, G, F, arity);
        // sum_{i>=1} V^i( g( phi_TL phi_LL^{i-1} phi_LT (e_t) ) ).
        std::vector<WElem> lvec = lt;  // in the L-coordinates
        for (int i = 1; i <= n - 1 && dl > 0; ++i) {
            if (i > 1) {
                // apply phi_LL once more: column l of phi_LL is the bottom
                // part of F_1(e_{dp+l}).
                std::vector<WElem> next(size_t(dl),
                                        WElem::zero(S.law, fzero(F)));
                for (int l = 0; l < dl; ++l)
                    for (int m = 0; m < dl; ++m)
                        next[size_t(m)] +=
                            S.f1_cols[size_t(l)][size_t(dp + m)] * lvec[size_t(l)];
                lvec = std::move(next);
            }
            // apply phi_TL and pair with g.
            std::vector<WElem> tvec(size_t(dp), WElem::zero(S.law, fzero(F)));
            for (int l = 0; l < dl; ++l)
                for (int s = 0; s < dp; ++s)
                    tvec[size_t(s)] += S.f1_cols[size_t(l)][size_t(s)] * lvec[size_t(l)];
            rhs += lin_comb(tvec, G, F, arity).versch_pow(i);
        }
        push_components(Z.pres.eqs, G[size_t(t)].frob() - rhs);
    }
    dedupe(Z.pres.eqs);
    Z.elimination = {{"eliminated", "h"},
                     {"rule", "h = sum_i V^i g phi_TL phi_LL^(i-1)"}};
    return Z;
}

// --- elimination to g_1 ------------------------------------------------------------

ZinkDualPresentation eliminate_to_g1(const ZinkDualPresentation& P) {
    require(P.route == "adjoint", errkind::domain_mismatch,
            "g_1 elimination needs an adjoint-route presentation");
    const int d = P.d, dp = P.dprime, n = P.n;
    const FqCtx* F = P.pres.field;
    const int ng1 = dp * (d - dp);
    const int keep = ng1 * n, total = d * d * n, elim = total - keep;

    // Reorder scalars so the eliminated variables are lex-largest.
    std::vector<int> newidx(size_t(total), 0);
    for (int s = 0; s < total; ++s)
        newidx[size_t(s)] = s < keep ? elim + s : s - keep;

    std::vector<MPoly<Fq>> lex_eqs;
    for (const auto& e : P.pres.eqs) {
        MPoly<Fq> f(total, MonOrder::lex, fzero(F));
        for (const auto& [m, c] : e.terms()) {
            Mono pm(size_t(total), 0);
            for (int s = 0; s < total; ++s) pm[size_t(newidx[size_t(s)])] = m[size_t(s)];
            f += MPoly<Fq>::monomial(total, MonOrder::lex, pm, c);
        }
        lex_eqs.push_back(std::move(f));
    }
    GroebnerBasis gb = exactalg::groebner(lex_eqs, MonOrder::lex);

    // Solvable position: every eliminated variable must lead some basis
    // element whose leading monomial otherwise involves only kept variables.
    for (int v = 0; v < elim; ++v) {
        bool ok = false;
        for (const auto& g : gb.gens) {
            if (g.is_zero()) continue;
            const Mono& lm = g.leading().first;
            if (lm[size_t(v)] == 0) continue;
            bool pure = true;
            for (int u = 0; u < elim && pure; ++u)
                if (u != v && lm[size_t(u)] > 0) pure = false;
            if (pure) { ok = true; break; }
        }
        require(ok, errkind::elimination_failed,
                "eliminated eta variable not solvable from the ideal");
    }

    ZinkDualPresentation Z;
    Z.route = "adjoint";
    Z.pres.field = F;
    Z.pres.blocks.assign(size_t(ng1), n);
    Z.d = d;
    Z.dprime = dp;
    Z.n = n;
    Z.coord_units.assign(P.coord_units.begin(), P.coord_units.begin() + ng1);
    for (const auto& g : gb.gens) {
        bool kept_only = true;
        for (const auto& [m, c] : g.terms())
            for (int v = 0; v < elim && kept_only; ++v)
                if (m[size_t(v)] > 0) kept_only = false;
        if (!kept_only) continue;
        MPoly<Fq> f(keep, MonOrder::grevlex, fzero(F));
        for (const auto& [m, c] : g.terms()) {
            Mono sm(m.begin() + elim, m.end());
            f += MPoly<Fq>::monomial(keep, MonOrder::grevlex, sm, c);
        }
        if (!f.is_zero()) Z.pres.eqs.push_back(std::move(f));
    }
    require(grpscheme::order_exponent(Z.pres) ==
                grpscheme::order_exponent(P.pres),
            errkind::elimination_failed,
            "elimination to g_1 changed the group order");
    Z.elimination = {{"kept_blocks", ng1}, {"eliminated_blocks", d * d - ng1}};
    return Z;
}

// --- truncated Zink complex ---------------------------------------------------------

namespace {

// (1 - Phi) on a C^{-1} tuple: Phi(V(a) (x) e_t) = a (x) F(e_t) on the
// T part and Phi(h (x) e_l) = F(h) (x) F_1(e_l) on the L part.
std::vector<HatWitt> one_minus_phi(const Semidisplay& S, const TestAlgebra& A,
                                   const std::vector<HatWitt>& xi) {
    const int d = S.d, dp = S.dprime;
    std::vector<HatWitt> out;
    for (int i = 0; i < d; ++i) {
        HatWitt acc = xi[size_t(i)];
        for (int t = 0; t < dp; ++t) {
            if (xi[size_t(t)].is_zero()) continue;
            std::map<int, TAElem> down;
            for (const auto& [k, v] : xi[size_t(t)].support()) {
                require(k > 0, errkind::internal,
                        "C^-1 element with nonzero 0-th T component");
                down[k - 1] = v;
            }
            HatWitt at(&A, std::move(down));
            acc = acc - wittcore::witt_hat_mul(
                            w_embed(A, S.f_cols[size_t(t)][size_t(i)]), at);
        }
        for (int l = 0; l < d - dp; ++l) {
            if (xi[size_t(dp + l)].is_zero()) continue;
            acc = acc - wittcore::witt_hat_mul(
                            w_embed(A, S.f1_cols[size_t(l)][size_t(i)]),
                            xi[size_t(dp + l)].frob());
        }
        out.push_back(acc);
    }
    return out;
}

// All C^{-1} tuples with support < M: L components free, T components with
// vanishing 0-th coordinate.
std::vector<std::vector<HatWitt>> cminus_tuples(const Semidisplay& S,
                                                const TestAlgebra& A, int M,
                                                long budget) {
    std::vector<HatWitt> all = wittcore::hat_enumerate(&A, S.n, M, budget);
    std::vector<HatWitt> tlist;
    for (const auto& h : all)
        if (h.entry(0).is_zero()) tlist.push_back(h);
    double count = 1;
    for (int j = 0; j < S.d; ++j)
        count *= double(j < S.dprime ? tlist.size() : all.size());
    require(count <= double(budget), errkind::budget_exceeded,
            "truncated Zink domain too large");
    std::vector<std::vector<HatWitt>> tuples{{}};
    for (int j = 0; j < S.d; ++j) {
        const auto& lst = j < S.dprime ? tlist : all;
        std::vector<std::vector<HatWitt>> next;
        for (const auto& t : tuples)
            for (const auto& h : lst) {
                auto u = t;
                u.push_back(h);
                next.push_back(std::move(u));
            }
        tuples = std::move(next);
    }
    return tuples;
}

long coker_at(const Semidisplay& S, const TestAlgebra& A, int M, long budget) {
    long c0 = 1;
    {
        long per = long(wittcore::hat_enumerate(&A, S.n, M, budget).size());
        for (int j = 0; j < S.d; ++j) {
            c0 *= per;
            require(c0 <= budget, errkind::budget_exceeded,
                    "C^0 truncation too large");
        }
    }
    // Image of a larger domain truncation, intersected with C^0_M.
    auto domain = cminus_tuples(S, A, M + S.n, budget);
    std::set<std::vector<HatWitt>> image;
    for (const auto& xi : domain) {
        auto img = one_minus_phi(S, A, xi);
        bool small = true;
        for (const auto& h : img)
            if (h.support_bound() > M) { small = false; break; }
        if (small) image.insert(std::move(img));
    }
    require(c0 % long(image.size()) == 0, errkind::internal,
            "image size does not divide |C^0_M|");
    return c0 / long(image.size());
}

}  // namespace

TruncatedZinkResult zink_complex_truncated(const Semidisplay& S,
                                           const TestAlgebra& A, int M,
                                           long budget) {
    TruncatedZinkResult r;
    r.algebra = A.name();
    r.M = M;
    long ker = 0;
    for (const auto& xi : cminus_tuples(S, A, M, budget)) {
        auto img = one_minus_phi(S, A, xi);
        bool zero = true;
        for (const auto& h : img)
            if (!h.is_zero()) { zero = false; break; }
        if (zero) ++ker;
    }
    r.kernel_size = ker;
    r.coker_size = coker_at(S, A, M, budget);
    r.stabilized = (coker_at(S, A, M + 1, budget) == r.coker_size);
    return r;
}

// --- BP pairs -----------------------------------------------------------------------

BPPair bp_sample(uint64_t seed, int d, int dprime, int n, const FqCtx* field) {
    const WittLaw* law = witt_law(field->p, n);
    exactalg::Rng rng(seed);
    long q = field->q();
    auto rand_w = [&]() {
        std::vector<Fq> e;
        for (int t = 0; t < n; ++t)
            e.push_back(Fq::from_index(field, int(rng.below(q))));
        return WElem(law, std::move(e));
    };
    auto invertible = [&](const WMatrix& m) {
        try {
            semidisplay::wmat_inv(m);
            return true;
        } catch (const exactalg::math_error&) {
            return false;
        }
    };
    for (;;) {
        BPPair pair;
        pair.n = n;
        pair.d = d;
        pair.dprime = dprime;
        pair.field = field;
        pair.law = law;
        pair.h = semidisplay::wmat_zero(law, field, d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                WElem x = rand_w();
                if (i < dprime && j >= dprime) x = x.versch();  // h_12 in I_n
                pair.h[i][j] = x;
            }
        if (!invertible(pair.h)) continue;
        pair.g = semidisplay::wmat_zero(law, field, d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                bool bi = i >= dprime, bj = j >= dprime;
                if (!bi && bj) {
                    // g_12: any V-preimage of h_12; components shift down,
                    // top component free.
                    std::vector<Fq> e;
                    for (int k = 0; k + 1 < n; ++k)
                        e.push_back(pair.h[i][j].entry(k + 1));
                    e.push_back(Fq::from_index(field, int(rng.below(q))));
                    pair.g[i][j] = WElem(law, std::move(e));
                } else {
                    // g_ij = p^{i-j} F(h_ij), block exponents in {0, 1}.
                    WElem x = pair.h[i][j].frob();
                    if (bi && !bj) x = x.p_mult();
                    pair.g[i][j] = x;
                }
            }
        if (invertible(pair.g)) return pair;
    }
}

bool bp_member(const BPPair& pair) {
    const int d = pair.d, dp = pair.dprime;
    try {
        semidisplay::wmat_inv(pair.g);
        semidisplay::wmat_inv(pair.h);
    } catch (const exactalg::math_error&) {
        return false;
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            bool bi = i >= dp, bj = j >= dp;
            if (!bi && bj) {
                if (pair.h[i][j] != pair.g[i][j].versch()) return false;
            } else {
                WElem x = pair.h[i][j].frob();
                if (bi && !bj) x = x.p_mult();
                if (pair.g[i][j] != x) return false;
            }
        }
    return true;
}

// --- equivariance ------------------------------------------------------------------

bool equivariance_check(const DisplayDatum& D, const BPPair& pair,
                        long budget) {
    const int d = D.d, dp = D.dprime, n = D.n;
    const FqCtx* F = D.field;
    WMatrix ginv, hinv;
    try {
        ginv = semidisplay::wmat_inv(pair.g);
        hinv = semidisplay::wmat_inv(pair.h);
    } catch (const exactalg::math_error&) {
        return false;
    }
    WMatrix Up = semidisplay::wmat_mul(semidisplay::wmat_mul(pair.h, D.U), ginv);
    DisplayDatum Dp;
    try {
        Dp = DisplayDatum::make(n, d, dp, F, Up);
    } catch (const exactalg::math_error&) {
        return false;
    }
    auto P0 = lau_dual_adjoint(D);
    auto P1 = lau_dual_adjoint(Dp);
    auto order = P0.coord_units;
    std::vector<int> pos(size_t(d) * d, -1);
    for (size_t k = 0; k < order.size(); ++k)
        pos[size_t(order[k].first) * d + order[k].second] = int(k);

    for (const TestAlgebra* A : exactalg::zoo(F->p)) {
        std::vector<std::vector<TAElem>> s0, s1;
        try {
            s0 = grpscheme::solution_points(P0.pres, *A, budget);
            s1 = grpscheme::solution_points(P1.pres, *A, budget);
        } catch (const exactalg::math_error& e) {
            if (e.kind == errkind::budget_exceeded) continue;
            throw;
        }
        if (s0.size() != s1.size()) return false;
        std::set<std::vector<TAElem>> target(s0.begin(), s0.end());
        std::set<std::vector<TAElem>> seen;
        for (const auto& pt : s1) {
            // read the eta' blocks of the point
            std::vector<WittVec<TAElem>> blocks;
            for (int k = 0; k < d * d; ++k)
                blocks.emplace_back(
                    D.law, std::vector<TAElem>(pt.begin() + k * n,
                                               pt.begin() + (k + 1) * n));
            // transported point: eta(E_ab) = eta'(h E_ab h^{-1})
            std::vector<TAElem> tpt;
            tpt.reserve(pt.size());
            std::vector<WittVec<TAElem>> tblocks(
                size_t(d) * d, WittVec<TAElem>::zero(D.law, A->zero()));
            for (size_t k = 0; k < order.size(); ++k) {
                auto [a, b] = order[k];
                auto acc = WittVec<TAElem>::zero(D.law, A->zero());
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        acc += w_embed(*A, pair.h[i][a] * hinv[b][j]) *
                               blocks[size_t(pos[size_t(i) * d + j])];
                tblocks[k] = acc;
            }
            for (const auto& blk : tblocks)
                tpt.insert(tpt.end(), blk.entries().begin(),
                           blk.entries().end());
            if (!target.count(tpt)) return false;
            if (!seen.insert(tpt).second) return false;  // not injective
        }
    }
    return true;
}

// --- restricted-Lie pairs and the full analysis -------------------------------------

PLinearPair plinear_of_presentation(const EqGroupPresentation& pres) {
    for (int k : pres.blocks)
        require(k == 1, errkind::domain_mismatch,
                "restricted-Lie pair extraction needs n = 1 blocks");
    const int r = pres.arity();
    const FqCtx* F = pres.field;
    GroebnerBasis gb = exactalg::groebner(pres.eqs);
    PLinearPair pair;
    pair.r = r;
    pair.c.assign(size_t(r), std::vector<Fq>(size_t(r), fzero(F)));
    for (int j = 0; j < r; ++j) {
        MPoly<Fq> yj = svar(F, r, j);
        require(exactalg::normal_form(yj, gb.gens) == yj,
                errkind::domain_mismatch,
                "presentation collapses a coordinate");
        MPoly<Fq> nf = exactalg::normal_form(yj.pow(F->p), gb.gens);
        for (const auto& [m, c] : nf.terms()) {
            require(exactalg::mono_deg(m) == 1, errkind::domain_mismatch,
                    "normal form of y^p is not linear");
            for (int i = 0; i < r; ++i)
                if (m[size_t(i)] == 1) pair.c[size_t(i)][size_t(j)] = c;
        }
    }
    return pair;
}

namespace {

// The restricted-Lie pair of the Cartier dual of the Zink group of an
// n = 1 semidisplay: y_t^p = sum_s (phi_TT)_st y_s on the T coordinates.
PLinearPair pair_of_semidisplay(const Semidisplay& S) {
    require(S.n == 1, errkind::domain_mismatch, "pair extraction needs n = 1");
    PLinearPair pair;
    pair.r = S.dprime;
    pair.c.assign(size_t(S.dprime),
                  std::vector<Fq>(size_t(S.dprime), fzero(S.field)));
    for (int j = 0; j < S.dprime; ++j)
        for (int i = 0; i < S.dprime; ++i)
            pair.c[size_t(i)][size_t(j)] = S.f_cols[size_t(j)][size_t(i)].entry(0);
    return pair;
}

}  // namespace

LauAnalysis analyze_lau(const DisplayDatum& D) {
    LauAnalysis R;
    Semidisplay ad = semidisplay::adjoint_semidisplay(D);
    R.adjoint = lau_dual_adjoint(D);
    R.zink = lau_dual_zink(ad);
    R.economic = economic_presentation(ad);

    R.order_exponent = grpscheme::order_exponent(R.adjoint.pres);
    long oz = grpscheme::order_exponent(R.zink.pres);
    long oe = grpscheme::order_exponent(R.economic.pres);
    R.lie_dim = grpscheme::primitive_dimension(R.adjoint.pres);

    bool agree = (R.order_exponent == oz && R.order_exponent == oe);
    for (const TestAlgebra* A : exactalg::zoo(D.field->p)) {
        if (!agree) break;
        std::vector<std::vector<TAElem>> sa, sz, se;
        try {
            sa = grpscheme::solution_points(R.adjoint.pres, *A);
            sz = grpscheme::solution_points(R.zink.pres, *A);
            se = grpscheme::solution_points(R.economic.pres, *A);
        } catch (const exactalg::math_error& e) {
            if (e.kind == errkind::budget_exceeded) continue;
            throw;
        }
        agree = (sa == sz) && (sa.size() == se.size());
    }
    R.routes_agree = agree;

    long expect = long(D.n) * D.dprime * (D.d - D.dprime);
    require(R.order_exponent == expect, errkind::internal,
            "Lau dual order exponent differs from n d'(d-d')");
    require(R.lie_dim == D.dprime * (D.d - D.dprime), errkind::internal,
            "Lau dual Lie dimension differs from d'(d-d')");
    R.dual_report = grpscheme::smoothness_report(R.adjoint.pres, D.n);

    R.lie_tensor_ok = true;
    if (D.n == 1) {
        PLinearPair dual_pair =
            plinear_of_presentation(eliminate_to_g1(R.adjoint).pres);
        PLinearPair t = grpscheme::b_tensor(
            pair_of_semidisplay(semidisplay::semidisplay_of_display(D)),
            pair_of_semidisplay(semidisplay::semidisplay_of_display(
                semidisplay::dual_display(D))));
        R.lie_tensor_ok = (dual_pair.r == t.r && dual_pair.c == t.c);
    }
    return R;
}

nlohmann::json LauAnalysis::to_json() const {
    return {{"order_exponent", order_exponent},
            {"lie_dimension", lie_dim},
            {"routes_agree", routes_agree},
            {"lie_tensor_ok", lie_tensor_ok},
            {"dual_cosmooth", dual_report.n_cosmooth},
            {"dual_cosmooth_rank", dual_report.n_cosmooth_rank},
            {"adjoint_equations", int(adjoint.pres.eqs.size())},
            {"zink_equations", int(zink.pres.eqs.size())},
            {"economic_equations", int(economic.pres.eqs.size())}};
}

}  // namespace laupipe
