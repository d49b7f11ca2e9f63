#pragma once

// The Lau group pipeline: Cartier-dual presentations of the Zink group of a
// semidisplay (three routes: adjoint equations, the Cond_x/Cond_y system,
// and the economic T-only presentation), elimination to the g_1 block, the
// truncated Zink complex oracle, BP display-group pairs and equivariance,
// and the aggregate analysis report.

#include <string>
#include <vector>

#include "grpscheme/presentation.hpp"
#include "semidisplay/semidisplay.hpp"

namespace laupipe {

using exactalg::Fq;
using exactalg::FqCtx;
using exactalg::MPoly;
using exactalg::TAElem;
using exactalg::TestAlgebra;
using grpscheme::EqGroupPresentation;
using grpscheme::GroupSchemeReport;
using grpscheme::PLinearPair;
using semidisplay::DisplayDatum;
using semidisplay::Semidisplay;
using semidisplay::WElem;
using semidisplay::WMatrix;

struct ZinkDualPresentation {
    EqGroupPresentation pres;
    std::string route;  // "adjoint" | "zink" | "economic"
    int d = 0, dprime = 0, n = 0;  // type of the source datum
    // For the adjoint route: the matrix-unit pair behind each block, g_1
    // block coordinates first.
    std::vector<std::pair<int, int>> coord_units;
    nlohmann::json elimination;  // record when reduced to fewer coordinates
};

// Equations eta(x) -> W_n with F(eta(x)) = eta(Ad_U x) on g_1 and
// eta(x) = p^{-i} V(eta(Ad_U x)) on g_i, i <= 0, in the adjoint basis order
// (g_1 first).  Key-example cocharacter: weights (1,..,1,0,..,0) with d'
// ones.
ZinkDualPresentation lau_dual_adjoint(const DisplayDatum& D);

// Cond_x / Cond_y presentation of the Cartier dual of the Zink group:
// coordinates eta(e_1..e_d), Cond_x on every basis vector, Cond_y on the
// L-basis and symbolically on V(a) e_t with a running over Witt-coordinate
// generators (coefficient extraction in the a-variables).
ZinkDualPresentation lau_dual_zink(const Semidisplay& S);

// T-only presentation: g(e_t) with
// F(g(x)) = g(phi_TT x) + sum_i V^i(g(phi_TL phi_LL^{i-1} phi_LT x)).
ZinkDualPresentation economic_presentation(const Semidisplay& S);

// Lexicographic elimination of the non-g_1 coordinates of an adjoint-route
// presentation; errors with elimination_failed unless every eliminated
// variable is solvable from the elimination ideal and the order is
// preserved.
ZinkDualPresentation eliminate_to_g1(const ZinkDualPresentation& P);

struct TruncatedZinkResult {
    std::string algebra;
    int M = 0;
    long kernel_size = 0;  // |ker(1 - Phi)| on the truncated domain
    long coker_size = 0;   // |C^0_M| / |Im(1 - Phi) cap C^0_M|
    bool stabilized = false;
};
// Exhaustive truncation of the Zink complex C^{-1} --(1-Phi)--> C^0 over an
// enumerable test algebra, with hat-Witt support < M.
TruncatedZinkResult zink_complex_truncated(const Semidisplay& S,
                                           const TestAlgebra& A, int M,
                                           long budget = 4'000'000);

struct BPPair {
    int n = 0, d = 0, dprime = 0;
    const FqCtx* field = nullptr;
    const wittcore::WittLaw* law = nullptr;
    WMatrix g, h;
};
// Sample a member of the BP graph: h invertible with h_12 in I_n,
// g_ij = p^{i-j} F(h_ij) for j <= i, g_12 a solution of h_12 = V(g_12).
BPPair bp_sample(uint64_t seed, int d, int dprime, int n, const FqCtx* field);
bool bp_member(const BPPair& pair);

// True iff eta |-> eta o Ad_h transports the solution set of
// lau_dual_adjoint(h U g^{-1}) bijectively onto that of lau_dual_adjoint(U)
// over every zoo algebra.
bool equivariance_check(const DisplayDatum& D, const BPPair& pair,
                        long budget = 5'000'000);

// The restricted-Lie pair of an n=1 presentation whose equations reduce
// every y_j^p to a linear form (via normal forms against a Groebner basis).
PLinearPair plinear_of_presentation(const EqGroupPresentation& pres);

struct LauAnalysis {
    ZinkDualPresentation adjoint, zink, economic;
    bool routes_agree = false;
    long order_exponent = -1;
    long lie_dim = -1;
    GroupSchemeReport dual_report;
    bool lie_tensor_ok = false;  // n = 1 only; true otherwise vacuously
    nlohmann::json to_json() const;
};
// Full analysis: all three routes, zoo-wide agreement, order/Lie laws,
// cosmoothness of the dual, and (n = 1) the Lie tensor decomposition.
LauAnalysis analyze_lau(const DisplayDatum& D);

}  // namespace laupipe
