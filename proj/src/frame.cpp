#include "semidisplay/semidisplay.hpp"

namespace semidisplay {

using exactalg::errkind;
using exactalg::require;

// Defining relations of the graded frame ring: a degree-i element is a pair
// (a u^i, a' t^{-i}) subject to a = p^{-i} F(a') for i <= 0 and
// a' = p^{i-1} V(a) for i > 0 (so t u = p).

static void check_relation(const FrameElement& x) {
    if (x.degree <= 0) {
        require(x.a == x.ap.frob().p_pow_mult(-x.degree),
                errkind::invalid_frame_element,
                "frame relation a = p^{-i} F(a') violated");
    } else {
        require(x.ap == x.a.versch().p_pow_mult(x.degree - 1),
                errkind::invalid_frame_element,
                "frame relation a' = p^{i-1} V(a) violated");
    }
}

FrameElement frame_make(int i, const WElem& w) {
    FrameElement e;
    e.degree = i;
    if (i <= 0) {
        e.ap = w;
        e.a = w.frob().p_pow_mult(-i);
    } else {
        e.a = w;
        e.ap = w.versch().p_pow_mult(i - 1);
    }
    return e;
}

FrameElement frame_mul(const FrameElement& x, const FrameElement& y) {
    FrameElement r;
    r.degree = x.degree + y.degree;
    r.a = x.a * y.a;
    r.ap = x.ap * y.ap;
    check_relation(r);
    return r;
}

FrameElement frame_add(const FrameElement& x, const FrameElement& y) {
    require(x.degree == y.degree, errkind::domain_mismatch,
            "frame addition needs equal degrees");
    FrameElement r;
    r.degree = x.degree;
    r.a = x.a + y.a;
    r.ap = x.ap + y.ap;
    check_relation(r);
    return r;
}

WElem frame_sigma(const FrameElement& x) { return x.a; }
WElem frame_tau(const FrameElement& x) { return x.ap; }

// --- generic frame -------------------------------------------------------------

GenericFrame GenericFrame::make(const WittLaw* law, const FqCtx* field,
                                std::function<WElem(const WElem&)> F,
                                std::function<WElem(const WElem&)> V,
                                uint64_t check_seed) {
    GenericFrame fr;
    fr.law = law;
    fr.field = field;
    fr.F = std::move(F);
    fr.V = std::move(V);

    // Randomized axiom checks: F is a ring endomorphism, V is additive,
    // F(V(x)) = p x, and x V(y) = V(F(x) y).
    Rng rng(check_seed);
    long q = 1;
    for (int i = 0; i < field->k; ++i) q *= field->p;
    auto rand_w = [&]() {
        std::vector<Fq> e;
        for (int t = 0; t < law->n; ++t)
            e.push_back(Fq::from_index(field, int(rng.below(q))));
        return WElem(law, std::move(e));
    };
    for (int trial = 0; trial < 8; ++trial) {
        WElem x = rand_w(), y = rand_w();
        require(fr.F(x + y) == fr.F(x) + fr.F(y) &&
                    fr.F(x * y) == fr.F(x) * fr.F(y),
                errkind::axiom_violation, "frame F is not a ring map");
        require(fr.V(x + y) == fr.V(x) + fr.V(y), errkind::axiom_violation,
                "frame V is not additive");
        require(fr.F(fr.V(x)) == x.p_mult(), errkind::axiom_violation,
                "frame axiom F(V(x)) = p x fails");
        require(x * fr.V(y) == fr.V(fr.F(x) * y), errkind::axiom_violation,
                "frame projection formula fails");
    }
    return fr;
}

FrameElement GenericFrame::make_element(int i, const WElem& w) const {
    FrameElement e;
    e.degree = i;
    if (i <= 0) {
        e.ap = w;
        e.a = F(w);
        for (int t = 0; t < -i; ++t) e.a = e.a.p_mult();
    } else {
        e.a = w;
        e.ap = V(w);
        for (int t = 0; t < i - 1; ++t) e.ap = e.ap.p_mult();
    }
    return e;
}

FrameElement GenericFrame::mul(const FrameElement& x,
                               const FrameElement& y) const {
    FrameElement r;
    r.degree = x.degree + y.degree;
    r.a = x.a * y.a;
    r.ap = x.ap * y.ap;
    return r;
}

}  // namespace semidisplay
