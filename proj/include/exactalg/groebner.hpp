#pragma once

// Buchberger's algorithm over F_q, normal forms, quotient dimensions,
// tangent (Lie) dimensions, and exhaustive point enumeration over test
// algebras.  Everything here is exact; budgets guard the combinatorial
// enumerations.

#include <vector>

#include "exactalg/fq.hpp"
#include "exactalg/mpoly.hpp"
#include "exactalg/testalgebra.hpp"

namespace exactalg {

struct GroebnerBasis {
    MonOrder ord = MonOrder::grevlex;
    std::vector<MPoly<Fq>> gens;  // reduced: monic, auto-reduced, sorted
};

// Reduced Groebner basis of the ideal generated by `gens`.
// `budget` caps the number of S-polynomial reductions.
GroebnerBasis groebner(const std::vector<MPoly<Fq>>& gens,
                       MonOrder ord = MonOrder::grevlex,
                       long budget = 2'000'000);

// Full normal form of f against a (not necessarily Groebner) divisor list.
MPoly<Fq> normal_form(const MPoly<Fq>& f, const std::vector<MPoly<Fq>>& G);

// True iff f lies in the ideal presented by gb.
bool in_ideal(const MPoly<Fq>& f, const GroebnerBasis& gb);

// Dimension of F_q[x]/I as a vector space; -1 if infinite.
long quotient_dim(const GroebnerBasis& gb);

// The standard-monomial basis (finite case only).
std::vector<Mono> standard_monomials(const GroebnerBasis& gb);

// Dimension of the kernel of the matrix of linear parts of equations that
// vanish at the origin (the tangent space of the solution scheme at 0).
long tangent_dim(const std::vector<MPoly<Fq>>& eqs, int arity);

// All solutions of the system over A^arity, sorted.  Backtracks over the
// variables in the given assignment order (identity when empty), checking
// each equation as soon as all of its variables are assigned; the budget
// bounds the number of visited search nodes.
std::vector<std::vector<TAElem>> enumerate_points(
    const std::vector<MPoly<Fq>>& eqs, const TestAlgebra& A, int arity,
    long budget = 5'000'000, const std::vector<int>& order = {});

// Evaluate an F_p-coefficient polynomial at a test-algebra point.
TAElem eval_at(const MPoly<Fq>& f, const std::vector<TAElem>& pt,
               const TestAlgebra& A);

// Normal form against divisors with leading coefficient 1, over any
// commutative coefficient ring element type T (used for reductions of
// test-algebra-coefficient polynomials against a monic Groebner basis).
template <class T>
MPoly<T> reduce_monic(MPoly<T> f, const std::vector<MPoly<T>>& G) {
    MPoly<T> r(f.arity(), f.order(), f.proto());
    while (!f.is_zero()) {
        const auto& lt = f.leading();
        bool reduced = false;
        for (const MPoly<T>& g : G) {
            if (g.is_zero()) continue;
            const auto& glt = g.leading();
            if (!mono_divides(glt.first, lt.first)) continue;
            // reduce: f -= (lt / glt) * g  (leading coeff of g is 1)
            f -= g.term_mul(mono_div(lt.first, glt.first), lt.second);
            reduced = true;
            break;
        }
        if (!reduced) {
            r += MPoly<T>::monomial(f.arity(), f.order(), lt.first, lt.second);
            f -= MPoly<T>::monomial(f.arity(), f.order(), lt.first, lt.second);
        }
    }
    return r;
}

}  // namespace exactalg
