#pragma once

// Finite commutative group schemes presented equationally inside products
// of truncated Witt groups: a presentation is a list of coordinate blocks
// (a block of length k is one W_k-valued coordinate) plus polynomial
// equations over a finite base field.  The group law on points is
// blockwise Witt addition.  Orders, Lie dimensions, F/V-kernels,
// exactness of complexes, smoothness reports, the A_{P,phi} construction
// and brute-force duality oracles live here.

#include <string>
#include <vector>

#include "exactalg/groebner.hpp"
#include "exactalg/testalgebra.hpp"
#include "json.hpp"
#include "wittcore/wittvec.hpp"

namespace grpscheme {

using exactalg::Fq;
using exactalg::FqCtx;
using exactalg::MPoly;
using exactalg::TAElem;
using exactalg::TestAlgebra;

struct EqGroupPresentation {
    const FqCtx* field = nullptr;   // base field of the equations
    std::vector<int> blocks;        // Witt lengths; sum = coordinate count
    std::vector<MPoly<Fq>> eqs;     // vanish at the origin

    int arity() const {
        int a = 0;
        for (int b : blocks) a += b;
        return a;
    }
};

// A homomorphism G' -> G between presentations, given by polynomials over
// the common base field expressing the target coordinates in the source
// coordinates.
struct SubstitutionHom {
    std::vector<MPoly<Fq>> images;  // size = target arity, vars = source
};

struct ComplexOfGroups {
    EqGroupPresentation Gp, G, Gpp;  // G' -> G -> G''
    SubstitutionHom f, h;            // with h o f = 0
};

// P with a p-linear endomorphism phi(e_j) = sum_i c[i][j] e_i.
struct PLinearPair {
    int r = 0;
    std::vector<std::vector<Fq>> c;  // r x r
};

struct GroupSchemeReport {
    long order_exponent = -1;   // order = p^order_exponent; -1 = not finite
    long lie_dim = -1;
    int f_kill_order = -1;      // smallest m with F^m = 0 on G; -1 = none
    bool n_smooth = false;
    long n_smooth_rank = -1;
    bool n_cosmooth = false;
    long n_cosmooth_rank = -1;
    std::string diagnostics;
};

// --- construction -----------------------------------------------------------

// A_{P,phi}: r scalar coordinates y_j with equations y_j^p - sum_i c_ij y_i.
EqGroupPresentation a_group(const PLinearPair& pair, const FqCtx* field);

// Presentation with extra equations appended.
EqGroupPresentation kernel_of_linear(const EqGroupPresentation& pres,
                                     const std::vector<MPoly<Fq>>& conditions);

// Kernel of a substitution homomorphism G' -> G: append the image
// polynomials to G''s equations.
EqGroupPresentation kernel_of_hom(const EqGroupPresentation& src,
                                  const SubstitutionHom& f);

// The homs F^m and V^m as coordinate substitutions (blockwise p-power /
// blockwise shift on the ambient Witt modules).
SubstitutionHom frobenius_hom(const EqGroupPresentation& pres, int m);
SubstitutionHom verschiebung_hom(const EqGroupPresentation& pres, int m);

// --- points -----------------------------------------------------------------

bool is_solution(const EqGroupPresentation& pres,
                 const std::vector<TAElem>& pt, const TestAlgebra& A);
std::vector<std::vector<TAElem>> solution_points(
    const EqGroupPresentation& pres, const TestAlgebra& A,
    long budget = 5'000'000);
// Blockwise Witt addition / negation of points.
std::vector<TAElem> add_points(const EqGroupPresentation& pres,
                               const std::vector<TAElem>& x,
                               const std::vector<TAElem>& y);
std::vector<TAElem> neg_point(const EqGroupPresentation& pres,
                              const std::vector<TAElem>& x);

// --- invariants -------------------------------------------------------------

// log_p of the coordinate-ring rank over the base field; errors with
// not_finite when the quotient is infinite, internal when not a p-power.
long order_exponent(const EqGroupPresentation& pres);
long lie_dimension(const EqGroupPresentation& pres);
// Dimension over the base field of the space of primitive elements of the
// coordinate Hopf algebra, i.e. the Lie dimension of the Cartier dual.
long primitive_dimension(const EqGroupPresentation& pres);
bool killed_by_Fm(const EqGroupPresentation& pres, int m);

// |Ker h| * |Ker f| == |G'| in exponents.
bool exactness(const ComplexOfGroups& cx);

GroupSchemeReport smoothness_report(const EqGroupPresentation& pres, int n);

// --- B(R) category oracles --------------------------------------------------

PLinearPair b_tensor(const PLinearPair& a, const PLinearPair& b);
// All matrices C over the field with C * c' = c * C^[p] (entrywise p-power).
std::vector<std::vector<std::vector<Fq>>> b_hom(const PLinearPair& a,
                                                const PLinearPair& b,
                                                long budget = 2'000'000);

// --- brute-force duality oracles --------------------------------------------

struct BiadditiveCount {
    long unrestricted = 0;  // biadditive maps into units over R~
    long frobenius_killed = 0;
};
BiadditiveCount biadditive_bruteforce(const EqGroupPresentation& A1,
                                      const EqGroupPresentation& A2,
                                      const TestAlgebra& R,
                                      long budget = 2'000'000);

// Points of the Cartier dual over R~: group-like elements of the
// coordinate ring tensored with R~, under the coproduct induced by the
// ambient blockwise Witt addition.
std::vector<std::vector<TAElem>> grouplike_points(
    const EqGroupPresentation& pres, const TestAlgebra& R,
    long budget = 2'000'000);

// --- serialization ----------------------------------------------------------

nlohmann::json presentation_to_json(const EqGroupPresentation& pres);
nlohmann::json report_to_json(const GroupSchemeReport& rep);

}  // namespace grpscheme
