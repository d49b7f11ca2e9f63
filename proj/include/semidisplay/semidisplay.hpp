#pragma once

// Rigidified n-truncated semidisplays and displays in block-matrix form,
// their tensor product and unit, duality of displays, free graded modules
// over the n-truncated Witt frame, the truncation Pi_a, and the adjoint
// datum attached to a display and the standard cocharacter.
//
// Conventions (fixed once, used everywhere):
//  * P = W_n^d with the ordered basis e_1..e_d; T = first d' basis vectors,
//    L = last d-d'; Q = I_n*T + W_n*L.
//  * A semidisplay is stored as d x d' F-columns (full length n, images of
//    the T-basis under F) and d x (d-d') F1-columns (images of the L-basis
//    under F1, well-defined mod J_n; stored as length-n vectors with the
//    top slot zero).
//  * A rigidified display of type (d,d') is U in GL(d, W_n); its
//    semidisplay keeps the first d' columns and truncates the rest.

#include <functional>
#include <string>
#include <vector>

#include "exactalg/common.hpp"
#include "exactalg/fq.hpp"
#include "json.hpp"
#include "wittcore/wittvec.hpp"

namespace semidisplay {

using exactalg::Fq;
using exactalg::FqCtx;
using exactalg::Rng;
using wittcore::WittLaw;
using wittcore::WittVec;

using WElem = WittVec<Fq>;
using WMatrix = std::vector<std::vector<WElem>>;  // row-major

// --- Witt matrix helpers -----------------------------------------------------

WMatrix wmat_zero(const WittLaw* law, const FqCtx* F, int rows, int cols);
WMatrix wmat_identity(const WittLaw* law, const FqCtx* F, int d);
WMatrix wmat_mul(const WMatrix& a, const WMatrix& b);
WMatrix wmat_add(const WMatrix& a, const WMatrix& b);
WMatrix wmat_transpose(const WMatrix& a);
bool wmat_eq(const WMatrix& a, const WMatrix& b);
// Inverse over the local ring W_n(F_q); errors with not_unit if the mod-V
// reduction is singular.
WMatrix wmat_inv(const WMatrix& a);
// The mod-V reduction (matrix of 0-th Witt components).
std::vector<std::vector<Fq>> wmat_res(const WMatrix& a);

// --- displays and semidisplays ----------------------------------------------

struct DisplayDatum {
    int n = 0, d = 0, dprime = 0;
    const FqCtx* field = nullptr;
    const WittLaw* law = nullptr;
    WMatrix U, Uinv;  // U * Uinv == identity, certified at construction

    static DisplayDatum make(int n, int d, int dprime, const FqCtx* field,
                             WMatrix U);
};

struct Semidisplay {
    int n = 0, d = 0, dprime = 0;  // T = first dprime coordinates
    const FqCtx* field = nullptr;
    const WittLaw* law = nullptr;
    // f_cols[j] (j < dprime): F(e_j), a length-d column of W_n entries.
    // f1_cols[j] (j < d-dprime): F1(e_{dprime+j}) mod J_n, top slots zero.
    std::vector<std::vector<WElem>> f_cols;
    std::vector<std::vector<WElem>> f1_cols;
};

// Deterministic random element of GL(d, W_n(F_q)).
DisplayDatum random_display(uint64_t seed, int n, int d, int dprime,
                            const FqCtx* field);

Semidisplay semidisplay_of_display(const DisplayDatum& D);
Semidisplay unit_semidisplay(int n, const FqCtx* field);
Semidisplay tensor_semidisplays(const Semidisplay& a, const Semidisplay& b);
// Dual display: weights complemented, structure map the inverse-transpose
// conjugated by the block swap; type becomes (d, d-d').
DisplayDatum dual_display(const DisplayDatum& D);

// F(e) for an L-basis vector: p * (lift of the F1 column), well-defined.
std::vector<WElem> f_on_L(const Semidisplay& S, int l);

// --- graded modules over the truncated Witt frame ----------------------------

struct GradedModuleDatum {
    std::vector<int> weights;  // in {0,1}, sorted descending
    const FqCtx* field = nullptr;
    const WittLaw* law = nullptr;
    WMatrix f;  // structure map M^sigma -> M^tau in the summand basis
};

// Weights in {0,1} only; errors with weight_out_of_range otherwise
// (including the all-weights-1 normalization rejection for d > 0).
Semidisplay semidisplay_of_graded(const GradedModuleDatum& M);

// Pi_a: clip weights above a, recording the transition power of t.
struct PiAResult {
    std::vector<int> weights;
    std::vector<int> t_powers;  // per summand, i - a for clipped ones else 0
};
PiAResult pi_a(const std::vector<int>& weights, int a);

// --- the n-truncated Witt frame ----------------------------------------------

// Degree-i elements are pairs (a, a') with a = p^{-i} F(a') for i <= 0 and
// a' = p^{i-1} V(a) for i > 0.
struct FrameElement {
    int degree = 0;
    WElem a, ap;  // u-side and t-side coordinates
};

// For i <= 0 supply a' and derive a; for i > 0 supply a and derive a'.
FrameElement frame_make(int i, const WElem& w);
FrameElement frame_mul(const FrameElement& x, const FrameElement& y);
FrameElement frame_add(const FrameElement& x, const FrameElement& y);
WElem frame_sigma(const FrameElement& x);  // u = 1 projection
WElem frame_tau(const FrameElement& x);    // t = 1 projection

// Generic Lau frame built from an abstract (F, V) pair on W_n; randomized
// axiom checks at construction (errors with axiom_violation).
struct GenericFrame {
    std::function<WElem(const WElem&)> F, V;
    const WittLaw* law = nullptr;
    const FqCtx* field = nullptr;

    static GenericFrame make(const WittLaw* law, const FqCtx* field,
                             std::function<WElem(const WElem&)> F,
                             std::function<WElem(const WElem&)> V,
                             uint64_t check_seed = 7);
    FrameElement make_element(int i, const WElem& w) const;
    FrameElement mul(const FrameElement& x, const FrameElement& y) const;
};

// --- adjoint datum ------------------------------------------------------------

// The semidisplay of type (d^2, d'(d-d')) attached to U and the standard
// cocharacter: P = W_n tensor gl(d), T-part = the upper-right block g_1,
// F(x) = Ad_U(x) on g_1, F1(x) = p^{-i} Ad_U(x) on g_i for i <= 0.
Semidisplay adjoint_semidisplay(const DisplayDatum& D);

// gl(d) index bookkeeping for the cocharacter weights: pairs (a,b) with
// weight w_a - w_b where w = (1,..,1,0,..,0) with d' ones.  Returns the
// basis order used by adjoint_semidisplay: g_1 pairs first, then the rest
// row-major.
std::vector<std::pair<int, int>> adjoint_basis(int d, int dprime);

// --- dimension audit -----------------------------------------------------------

// Coordinate counts of the presentation schemes, computed from the block
// shape descriptors (number of scalar coordinates of each Witt entry).
long dim_sdisp_rig(int n, int d, int dprime);
long dim_h_group(int n, int d, int dprime);
long dim_disp_rig(int n, int d);
long dim_bp_group(int n, int d, int dprime);

// --- serialization -------------------------------------------------------------

nlohmann::json wmat_to_json(const WMatrix& m);
nlohmann::json display_to_json(const DisplayDatum& D);
nlohmann::json semidisplay_to_json(const Semidisplay& S);

}  // namespace semidisplay
