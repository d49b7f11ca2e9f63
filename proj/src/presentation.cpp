#include "grpscheme/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "exactalg/common.hpp"

namespace grpscheme {

using exactalg::errkind;
using exactalg::fail;
using exactalg::GroebnerBasis;
using exactalg::Mono;
using exactalg::MonOrder;
using exactalg::require;
using wittcore::witt_law;
using wittcore::WittVec;

namespace {

Fq fzero(const FqCtx* F) { return Fq(F, 0); }

MPoly<Fq> var(const FqCtx* F, int arity, int i) {
    return MPoly<Fq>::variable(arity, MonOrder::grevlex, i, fzero(F));
}

long log_p_exact(long v, int p) {
    long e = 0;
    while (v > 1) {
        require(v % p == 0, errkind::internal, "group order is not a p-power");
        v /= p;
        ++e;
    }
    return e;
}

}  // namespace

EqGroupPresentation a_group(const PLinearPair& pair, const FqCtx* field) {
    EqGroupPresentation pres;
    pres.field = field;
    pres.blocks.assign(size_t(pair.r), 1);
    for (int j = 0; j < pair.r; ++j) {
        MPoly<Fq> eq = var(field, pair.r, j).pow(field->p);
        for (int i = 0; i < pair.r; ++i)
            eq -= var(field, pair.r, i).scaled(pair.c[size_t(i)][size_t(j)]);
        pres.eqs.push_back(eq);
    }
    return pres;
}

EqGroupPresentation kernel_of_linear(const EqGroupPresentation& pres,
                                     const std::vector<MPoly<Fq>>& conditions) {
    EqGroupPresentation r = pres;
    for (const auto& c : conditions)
        if (!c.is_zero()) r.eqs.push_back(c);
    return r;
}

EqGroupPresentation kernel_of_hom(const EqGroupPresentation& src,
                                  const SubstitutionHom& f) {
    return kernel_of_linear(src, f.images);
}

SubstitutionHom frobenius_hom(const EqGroupPresentation& pres, int m) {
    long pm = 1;
    for (int i = 0; i < m; ++i) pm *= pres.field->p;
    SubstitutionHom h;
    for (int i = 0; i < pres.arity(); ++i)
        h.images.push_back(var(pres.field, pres.arity(), i).pow(pm));
    return h;
}

SubstitutionHom verschiebung_hom(const EqGroupPresentation& pres, int m) {
    SubstitutionHom h;
    int off = 0;
    for (int k : pres.blocks) {
        for (int j = 0; j < k; ++j) {
            if (j >= m)
                h.images.push_back(var(pres.field, pres.arity(), off + j - m));
            else
                h.images.push_back(MPoly<Fq>(pres.arity(), MonOrder::grevlex,
                                             fzero(pres.field)));
        }
        off += k;
    }
    return h;
}

bool is_solution(const EqGroupPresentation& pres,
                 const std::vector<TAElem>& pt, const TestAlgebra& A) {
    for (const auto& eq : pres.eqs)
        if (!exactalg::eval_at(eq, pt, A).is_zero()) return false;
    return true;
}

std::vector<std::vector<TAElem>> solution_points(
    const EqGroupPresentation& pres, const TestAlgebra& A, long budget) {
    // Assign Witt components 0 of every block first, then components 1,
    // and so on: the V-shaped equations of the dual presentations then
    // become checkable (and prune) one component layer at a time.
    std::vector<int> offsets;
    int off = 0, maxk = 0;
    for (int k : pres.blocks) {
        offsets.push_back(off);
        off += k;
        maxk = std::max(maxk, k);
    }
    std::vector<int> order;
    for (int c = 0; c < maxk; ++c)
        for (size_t b = 0; b < pres.blocks.size(); ++b)
            if (c < pres.blocks[b]) order.push_back(offsets[b] + c);
    return exactalg::enumerate_points(pres.eqs, A, pres.arity(), budget,
                                      order);
}

std::vector<TAElem> add_points(const EqGroupPresentation& pres,
                               const std::vector<TAElem>& x,
                               const std::vector<TAElem>& y) {
    require(int(x.size()) == pres.arity() && int(y.size()) == pres.arity(),
            errkind::domain_mismatch, "point arity mismatch");
    std::vector<TAElem> out;
    int off = 0;
    for (int k : pres.blocks) {
        const wittcore::WittLaw* law = witt_law(pres.field->p, k);
        WittVec<TAElem> a(law, {x.begin() + off, x.begin() + off + k});
        WittVec<TAElem> b(law, {y.begin() + off, y.begin() + off + k});
        WittVec<TAElem> s = a + b;
        out.insert(out.end(), s.entries().begin(), s.entries().end());
        off += k;
    }
    return out;
}

std::vector<TAElem> neg_point(const EqGroupPresentation& pres,
                              const std::vector<TAElem>& x) {
    std::vector<TAElem> out;
    int off = 0;
    for (int k : pres.blocks) {
        const wittcore::WittLaw* law = witt_law(pres.field->p, k);
        WittVec<TAElem> a(law, {x.begin() + off, x.begin() + off + k});
        WittVec<TAElem> s = -a;
        out.insert(out.end(), s.entries().begin(), s.entries().end());
        off += k;
    }
    return out;
}

long order_exponent(const EqGroupPresentation& pres) {
    if (pres.arity() == 0) return 0;
    GroebnerBasis gb = exactalg::groebner(pres.eqs);
    long qd = exactalg::quotient_dim(gb);
    require(qd >= 0, errkind::not_finite,
            "presentation is not finite over the base field");
    return log_p_exact(qd, pres.field->p);
}

long lie_dimension(const EqGroupPresentation& pres) {
    return exactalg::tangent_dim(pres.eqs, pres.arity());
}

bool killed_by_Fm(const EqGroupPresentation& pres, int m) {
    GroebnerBasis gb = exactalg::groebner(pres.eqs);
    require(exactalg::quotient_dim(gb) >= 0, errkind::not_finite,
            "F-kill test needs a finite presentation");
    long pm = 1;
    for (int i = 0; i < m; ++i) pm *= pres.field->p;
    for (int i = 0; i < pres.arity(); ++i) {
        MPoly<Fq> f = var(pres.field, pres.arity(), i).pow(pm);
        if (!exactalg::normal_form(f, gb.gens).is_zero()) return false;
    }
    return true;
}

bool exactness(const ComplexOfGroups& cx) {
    long eG1 = order_exponent(cx.Gp);
    long ekf = order_exponent(kernel_of_hom(cx.Gp, cx.f));
    long ekh = order_exponent(kernel_of_hom(cx.G, cx.h));
    return ekh + ekf == eG1;
}

namespace {

// Is the map identically zero on the solution set?
bool hom_is_zero_on(const EqGroupPresentation&, const SubstitutionHom& h,
                    const GroebnerBasis& gb) {
    for (const auto& img : h.images)
        if (!exactalg::normal_form(img, gb.gens).is_zero()) return false;
    return true;
}

// Exactness of G --a--> G --b--> G in order exponents, given e = e(G).
bool two_step_exact(const EqGroupPresentation& pres, const SubstitutionHom& a,
                    const SubstitutionHom& b, long e) {
    long eka = order_exponent(kernel_of_hom(pres, a));
    long ekb = order_exponent(kernel_of_hom(pres, b));
    return eka + ekb == e;
}

}  // namespace

GroupSchemeReport smoothness_report(const EqGroupPresentation& pres, int n) {
    GroupSchemeReport rep;
    std::ostringstream diag;
    long e = order_exponent(pres);
    rep.order_exponent = e;
    rep.lie_dim = lie_dimension(pres);

    GroebnerBasis gb = exactalg::groebner(pres.eqs);
    for (long m = 1; m <= std::max<long>(e, 1); ++m) {
        if (killed_by_Fm(pres, int(m))) {
            rep.f_kill_order = int(m);
            break;
        }
    }

    bool divisible = (e % n == 0);
    long r = divisible ? e / n : -1;
    if (!divisible) diag << "order exponent " << e << " not divisible by n=" << n << "; ";

    // n-cosmooth: order p^(nr), killed by V^n, V-complexes exact.
    bool cos_ok = divisible;
    if (cos_ok && !hom_is_zero_on(pres, verschiebung_hom(pres, n), gb)) {
        cos_ok = false;
        diag << "not killed by V^" << n << "; ";
    }
    for (int m = 1; cos_ok && m < n; ++m) {
        if (!two_step_exact(pres, verschiebung_hom(pres, m),
                            verschiebung_hom(pres, n - m), e)) {
            cos_ok = false;
            diag << "V^" << m << "/V^" << (n - m) << " complex not exact; ";
        }
    }
    rep.n_cosmooth = cos_ok;
    rep.n_cosmooth_rank = cos_ok ? r : -1;

    // n-smooth: order p^(nr), killed by F^n, F-complexes exact.
    bool sm_ok = divisible && rep.f_kill_order != -1 && rep.f_kill_order <= n;
    if (divisible && !sm_ok) diag << "not killed by F^" << n << "; ";
    for (int m = 1; sm_ok && m < n; ++m) {
        if (!two_step_exact(pres, frobenius_hom(pres, m),
                            frobenius_hom(pres, n - m), e)) {
            sm_ok = false;
            diag << "F^" << m << "/F^" << (n - m) << " complex not exact; ";
        }
    }
    rep.n_smooth = sm_ok;
    rep.n_smooth_rank = sm_ok ? r : -1;
    rep.diagnostics = diag.str();
    return rep;
}

PLinearPair b_tensor(const PLinearPair& a, const PLinearPair& b) {
    PLinearPair t;
    t.r = a.r * b.r;
    t.c.assign(size_t(t.r), std::vector<Fq>(size_t(t.r)));
    for (int i = 0; i < a.r; ++i)
        for (int ip = 0; ip < b.r; ++ip)
            for (int j = 0; j < a.r; ++j)
                for (int jp = 0; jp < b.r; ++jp)
                    t.c[size_t(i * b.r + ip)][size_t(j * b.r + jp)] =
                        a.c[size_t(i)][size_t(j)] * b.c[size_t(ip)][size_t(jp)];
    return t;
}

std::vector<std::vector<std::vector<Fq>>> b_hom(const PLinearPair& a,
                                                const PLinearPair& b,
                                                long budget) {
    require(a.r > 0 && b.r > 0, errkind::domain_mismatch, "empty pair");
    const FqCtx* F = a.c[0][0].ctx();
    int cells = a.r * b.r;
    long q = F->q();
    double total = 1;
    for (int i = 0; i < cells; ++i) total *= double(q);
    require(total <= double(budget), errkind::budget_exceeded,
            "b_hom enumeration too large");

    std::vector<std::vector<std::vector<Fq>>> out;
    std::vector<int> digits(size_t(cells), 0);
    for (;;) {
        std::vector<std::vector<Fq>> C(size_t(a.r),
                                       std::vector<Fq>(size_t(b.r)));
        for (int i = 0; i < a.r; ++i)
            for (int j = 0; j < b.r; ++j)
                C[size_t(i)][size_t(j)] =
                    Fq::from_index(F, digits[size_t(i * b.r + j)]);
        // condition: C * c_b = c_a * C^[p]
        bool ok = true;
        for (int i = 0; ok && i < a.r; ++i)
            for (int j = 0; ok && j < b.r; ++j) {
                Fq lhs = fzero(F), rhs = fzero(F);
                for (int k = 0; k < b.r; ++k)
                    lhs += C[size_t(i)][size_t(k)] * b.c[size_t(k)][size_t(j)];
                for (int k = 0; k < a.r; ++k)
                    rhs += a.c[size_t(i)][size_t(k)] *
                           C[size_t(k)][size_t(j)].pow(F->p);
                ok = (lhs == rhs);
            }
        if (ok) out.push_back(std::move(C));
        int pos = 0;
        while (pos < cells && ++digits[size_t(pos)] == q) digits[size_t(pos++)] = 0;
        if (pos == cells) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force duality oracles
// ---------------------------------------------------------------------------

namespace {

// Shift a polynomial's variables into a wider ring at `offset`.
MPoly<Fq> widen(const MPoly<Fq>& f, int arity, int offset) {
    std::map<Mono, Fq> acc;
    for (const auto& [m, c] : f.terms()) {
        Mono w(size_t(arity), 0);
        for (size_t i = 0; i < m.size(); ++i) w[size_t(offset) + i] = m[i];
        acc[w] = c;
    }
    return MPoly<Fq>::from_map(arity, f.order(), f.proto(), acc);
}

// Map an Fq-coefficient polynomial into a TAElem-coefficient one.
MPoly<TAElem> to_algebra(const MPoly<Fq>& f, const TestAlgebra& A) {
    std::map<Mono, TAElem> acc;
    for (const auto& [m, c] : f.terms()) acc.emplace(m, A.embed(c));
    return MPoly<TAElem>::from_map(f.arity(), f.order(), A.zero(), acc);
}

// Blockwise Witt addition polynomials: coordinates of x + x', where x sits
// at `off1` and x' at `off2` in a ring with `arity` variables.
std::vector<MPoly<Fq>> addition_polys(const EqGroupPresentation& pres,
                                      int arity, int off1, int off2) {
    std::vector<MPoly<Fq>> out;
    int off = 0;
    for (int k : pres.blocks) {
        const wittcore::WittLaw* law = witt_law(pres.field->p, k);
        std::vector<MPoly<Fq>> xa, xb;
        for (int j = 0; j < k; ++j) {
            xa.push_back(var(pres.field, arity, off1 + off + j));
            xb.push_back(var(pres.field, arity, off2 + off + j));
        }
        WittVec<MPoly<Fq>> wa(law, xa), wb(law, xb);
        WittVec<MPoly<Fq>> s = wa + wb;
        for (const auto& e : s.entries()) out.push_back(e);
        off += k;
    }
    return out;
}

struct DualBasis {
    GroebnerBasis gb;
    std::vector<Mono> monos;  // standard monomials, constant first
};

DualBasis dual_basis(const EqGroupPresentation& pres) {
    DualBasis d;
    d.gb = exactalg::groebner(pres.eqs);
    d.monos = exactalg::standard_monomials(d.gb);
    std::sort(d.monos.begin(), d.monos.end(), [](const Mono& a, const Mono& b) {
        return exactalg::mono_cmp(a, b, MonOrder::grevlex) < 0;
    });
    require(!d.monos.empty() && exactalg::mono_deg(d.monos[0]) == 0,
            errkind::internal, "standard monomials lack the constant");
    return d;
}

}  // namespace

BiadditiveCount biadditive_bruteforce(const EqGroupPresentation& A1,
                                      const EqGroupPresentation& A2,
                                      const TestAlgebra& R, long budget) {
    require(A1.field == A2.field, errkind::domain_mismatch, "field mismatch");
    DualBasis d1 = dual_basis(A1), d2 = dual_basis(A2);
    int a1 = A1.arity(), a2 = A2.arity();
    int p = A1.field->p;

    // Coefficient slots: (nonconstant monomial of Q1) x (nonconstant of Q2).
    std::vector<std::pair<Mono, Mono>> slots;
    for (size_t i = 1; i < d1.monos.size(); ++i)
        for (size_t j = 1; j < d2.monos.size(); ++j)
            slots.push_back({d1.monos[i], d2.monos[j]});
    double total = 1;
    for (size_t i = 0; i < slots.size(); ++i) total *= double(R.size());
    require(total <= double(budget), errkind::budget_exceeded,
            "biadditive enumeration too large");

    // Two check rings: (x, x', y) for slot-1 additivity and (x, y, y') for
    // slot-2 additivity.  Reducers are the monic equation ideals of each
    // variable copy, mapped into R-coefficients.
    struct Check {
        int arity;
        std::vector<MPoly<TAElem>> reducers;
        std::vector<MPoly<Fq>> sum;  // addition-law coordinates of the doubled slot
        int dup_off;                 // offset of the duplicated slot's copy
    };
    auto build_check = [&](bool first_slot) {
        Check c;
        c.arity = first_slot ? 2 * a1 + a2 : a1 + 2 * a2;
        auto push_ideal = [&](const EqGroupPresentation&,
                              const DualBasis& d, int off) {
            for (const auto& g : d.gb.gens)
                c.reducers.push_back(to_algebra(widen(g, c.arity, off), R));
        };
        if (first_slot) {
            push_ideal(A1, d1, 0);
            push_ideal(A1, d1, a1);
            push_ideal(A2, d2, 2 * a1);
            c.sum = addition_polys(A1, c.arity, 0, a1);
            c.dup_off = a1;
        } else {
            push_ideal(A1, d1, 0);
            push_ideal(A2, d2, a1);
            push_ideal(A2, d2, a1 + a2);
            c.sum = addition_polys(A2, c.arity, a1, a1 + a2);
            c.dup_off = a1 + a2;
        }
        return c;
    };
    Check c1 = build_check(true), c2 = build_check(false);

    // u(x, y) as a polynomial in a given check ring, with the x-monomial at
    // offset ox and the y-monomial at offset oy, optionally substituting the
    // coordinate images in `subx`/`suby` (empty = plain variables).
    auto build_u = [&](const std::vector<TAElem>& coeffs, int arity, int ox,
                       int oy) {
        std::map<Mono, TAElem> acc;
        acc.emplace(Mono(size_t(arity), 0), R.one());
        for (size_t s = 0; s < slots.size(); ++s) {
            if (coeffs[s].is_zero()) continue;
            Mono m(size_t(arity), 0);
            for (int i = 0; i < a1; ++i) m[size_t(ox + i)] = slots[s].first[size_t(i)];
            for (int i = 0; i < a2; ++i) m[size_t(oy + i)] = slots[s].second[size_t(i)];
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, coeffs[s]);
            else
                it->second += coeffs[s];
        }
        return MPoly<TAElem>::from_map(arity, MonOrder::grevlex, R.zero(), acc);
    };
    // u with the duplicated slot replaced by the addition-law polynomials.
    auto build_u_sum = [&](const std::vector<TAElem>& coeffs, const Check& c,
                           bool first_slot) {
        MPoly<TAElem> acc = MPoly<TAElem>::constant(c.arity, MonOrder::grevlex,
                                                    R.one());
        std::vector<MPoly<TAElem>> sum_ta;
        for (const auto& f : c.sum) sum_ta.push_back(to_algebra(f, R));
        for (size_t s = 0; s < slots.size(); ++s) {
            if (coeffs[s].is_zero()) continue;
            const Mono& mdup = first_slot ? slots[s].first : slots[s].second;
            const Mono& mfix = first_slot ? slots[s].second : slots[s].first;
            int fix_off = first_slot ? 2 * a1 : 0;
            int fix_ar = first_slot ? a2 : a1;
            MPoly<TAElem> term = MPoly<TAElem>::constant(
                c.arity, MonOrder::grevlex, coeffs[s]);
            for (int i = 0; i < int(mdup.size()); ++i)
                for (int e = 0; e < mdup[size_t(i)]; ++e) term *= sum_ta[size_t(i)];
            Mono wide(size_t(c.arity), 0);
            for (int i = 0; i < fix_ar; ++i) wide[size_t(fix_off + i)] = mfix[size_t(i)];
            term = term.term_mul(wide, R.one());
            acc += term;
        }
        return acc;
    };

    BiadditiveCount count;
    std::vector<long> digits(slots.size(), 0);
    for (;;) {
        std::vector<TAElem> coeffs;
        for (long dgt : digits) coeffs.push_back(R.from_index(dgt));
        // slot-1 additivity: u(x+x', y) = u(x, y) u(x', y)
        MPoly<TAElem> lhs1 = build_u_sum(coeffs, c1, true);
        MPoly<TAElem> rhs1 =
            build_u(coeffs, c1.arity, 0, 2 * a1) * build_u(coeffs, c1.arity, a1, 2 * a1);
        bool ok = exactalg::reduce_monic(lhs1 - rhs1, c1.reducers).is_zero();
        if (ok) {
            MPoly<TAElem> lhs2 = build_u_sum(coeffs, c2, false);
            MPoly<TAElem> rhs2 =
                build_u(coeffs, c2.arity, 0, a1) * build_u(coeffs, c2.arity, 0, a1 + a2);
            ok = exactalg::reduce_monic(lhs2 - rhs2, c2.reducers).is_zero();
        }
        if (ok) {
            ++count.unrestricted;
            bool killed = true;
            for (const auto& cf : coeffs)
                if (!cf.pow(p).is_zero()) {
                    killed = false;
                    break;
                }
            if (killed) ++count.frobenius_killed;
        }
        size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == R.size()) digits[pos++] = 0;
        if (pos == digits.size()) break;
        if (slots.empty()) break;
    }
    return count;
}

namespace {

// Coproduct structure constants over the base field: Delta(m_b) =
// sum_{(a1,a2)} D[b][a1][a2] m_{a1} (x) m_{a2}, computed in the doubled
// ring modulo both copies of the equation ideal.
std::vector<std::vector<std::vector<Fq>>> coproduct_constants(
    const EqGroupPresentation& pres, const DualBasis& d) {
    int a = pres.arity();
    size_t nb = d.monos.size();
    int arity2 = 2 * a;
    std::vector<MPoly<Fq>> reducers;
    for (const auto& g : d.gb.gens) {
        reducers.push_back(widen(g, arity2, 0));
        reducers.push_back(widen(g, arity2, a));
    }
    std::vector<MPoly<Fq>> sum = addition_polys(pres, arity2, 0, a);

    auto mono_index = [&](const Mono& m) -> long {
        for (size_t i = 0; i < nb; ++i)
            if (d.monos[i] == m) return long(i);
        return -1;
    };

    std::vector<std::vector<std::vector<Fq>>> D(
        nb, std::vector<std::vector<Fq>>(nb, std::vector<Fq>(nb, fzero(pres.field))));
    for (size_t b = 0; b < nb; ++b) {
        MPoly<Fq> delta = MPoly<Fq>::constant(arity2, MonOrder::grevlex,
                                              Fq(pres.field, 1));
        for (int i = 0; i < a; ++i)
            for (int e = 0; e < d.monos[b][size_t(i)]; ++e) delta *= sum[size_t(i)];
        delta = exactalg::reduce_monic(delta, reducers);
        for (const auto& [m, c] : delta.terms()) {
            Mono m1(size_t(a), 0), m2(size_t(a), 0);
            for (int i = 0; i < a; ++i) {
                m1[size_t(i)] = m[size_t(i)];
                m2[size_t(i)] = m[size_t(a + i)];
            }
            long i1 = mono_index(m1), i2 = mono_index(m2);
            require(i1 >= 0 && i2 >= 0, errkind::internal,
                    "coproduct term outside the standard basis");
            D[b][size_t(i1)][size_t(i2)] += c;
        }
    }
    return D;
}

}  // namespace

long primitive_dimension(const EqGroupPresentation& pres) {
    if (pres.arity() == 0) return 0;
    DualBasis d = dual_basis(pres);
    size_t nb = d.monos.size();
    auto D = coproduct_constants(pres, d);
    // c = sum_{b>=1} u_b m_b is primitive iff the mixed part of Delta(c)
    // vanishes: sum_b u_b D[b][i1][i2] = 0 for all nonconstant i1, i2.
    // The answer is the nullity of that linear system over the base field.
    std::vector<std::vector<Fq>> rows;
    for (size_t i1 = 1; i1 < nb; ++i1)
        for (size_t i2 = 1; i2 < nb; ++i2) {
            std::vector<Fq> row;
            bool nonzero = false;
            for (size_t b = 1; b < nb; ++b) {
                row.push_back(D[b][i1][i2]);
                nonzero = nonzero || !D[b][i1][i2].is_zero();
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    size_t cols = nb - 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t piv = rows.size();
        for (size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) { piv = r; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        Fq inv = rows[rank][col].inv();
        for (size_t c = 0; c < cols; ++c) rows[rank][c] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Fq f = rows[r][col];
            for (size_t c = 0; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return long(cols - rank);
}

std::vector<std::vector<TAElem>> grouplike_points(
    const EqGroupPresentation& pres, const TestAlgebra& R, long budget) {
    DualBasis d = dual_basis(pres);
    size_t nb = d.monos.size();
    double total = 1;
    for (size_t i = 1; i < nb; ++i) total *= double(R.size());
    require(total <= double(budget), errkind::budget_exceeded,
            "grouplike enumeration too large");

    auto D = coproduct_constants(pres, d);

    std::vector<std::vector<TAElem>> out;
    std::vector<long> digits(nb - 1, 0);
    for (;;) {
        std::vector<TAElem> u;
        u.push_back(R.one());  // counit condition: coefficient of 1 is 1
        for (long dgt : digits) u.push_back(R.from_index(dgt));
        bool ok = true;
        for (size_t i1 = 0; ok && i1 < nb; ++i1)
            for (size_t i2 = 0; ok && i2 < nb; ++i2) {
                TAElem lhs = R.zero();
                for (size_t b = 0; b < nb; ++b) {
                    const Fq& c = D[b][i1][i2];
                    if (!c.is_zero()) lhs += u[b] * R.embed(c);
                }
                ok = (lhs == u[i1] * u[i2]);
            }
        if (ok) out.push_back(u);
        size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == R.size()) digits[pos++] = 0;
        if (pos == digits.size()) break;
        if (digits.empty()) break;
    }
    return out;
}

nlohmann::json presentation_to_json(const EqGroupPresentation& pres) {
    nlohmann::json j;
    j["field"] = {{"p", pres.field->p}, {"degree", pres.field->k}};
    j["blocks"] = pres.blocks;
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& e : pres.eqs) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [m, c] : e.terms())
            terms.push_back({{"mono", m}, {"coeff", {c.coord(0), c.coord(1)}}});
        eqs.push_back(terms);
    }
    j["equations"] = eqs;
    return j;
}

nlohmann::json report_to_json(const GroupSchemeReport& rep) {
    return nlohmann::json{{"order_exponent", rep.order_exponent},
                          {"lie_dim", rep.lie_dim},
                          {"f_kill_order", rep.f_kill_order},
                          {"n_smooth", rep.n_smooth},
                          {"n_smooth_rank", rep.n_smooth_rank},
                          {"n_cosmooth", rep.n_cosmooth},
                          {"n_cosmooth_rank", rep.n_cosmooth_rank},
                          {"diagnostics", rep.diagnostics}};
}

}  // namespace grpscheme
