#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "grpscheme/presentation.hpp"
#include "wittcore/wittlaw.hpp"

using namespace exactalg;
using namespace grpscheme;

int main(int argc, char** argv) {
    wittcore::set_cache_dir(".witt_cache");
    return doctest::Context(argc, argv).run();
}

static EqGroupPresentation alpha_p(const FqCtx* F) {
    PLinearPair pr{1, {{Fq(F, 0)}}};
    return a_group(pr, F);
}

static EqGroupPresentation etale_p(const FqCtx* F) {
    PLinearPair pr{1, {{Fq(F, 1)}}};
    return a_group(pr, F);
}

TEST_CASE("A_{P,phi} anchors") {
    const FqCtx* F2 = fq_ctx(2);
    auto alpha = alpha_p(F2);
    CHECK(order_exponent(alpha) == 1);
    CHECK(lie_dimension(alpha) == 1);
    CHECK(killed_by_Fm(alpha, 1));
    auto mu = etale_p(F2);
    CHECK(order_exponent(mu) == 1);
    CHECK(lie_dimension(mu) == 0);
    CHECK(!killed_by_Fm(mu, 3));
    PLinearPair w2{2, {{Fq(F2, 0), Fq(F2, 1)}, {Fq(F2, 0), Fq(F2, 0)}}};
    auto g2 = a_group(w2, F2);
    CHECK(order_exponent(g2) == 2);
    CHECK(!killed_by_Fm(g2, 1));
    CHECK(killed_by_Fm(g2, 2));
}

TEST_CASE("smoothness reports") {
    const FqCtx* F2 = fq_ctx(2);
    auto rep = smoothness_report(alpha_p(F2), 1);
    CHECK(rep.n_smooth);
    CHECK(rep.n_cosmooth);
    CHECK(rep.n_smooth_rank == 1);
    auto repmu = smoothness_report(etale_p(F2), 1);
    CHECK(repmu.n_cosmooth);
    CHECK(!repmu.n_smooth);
}

TEST_CASE("primitive dimension = Lie of the Cartier dual") {
    const FqCtx* F2 = fq_ctx(2);
    // alpha_p is self-dual: primitives 1-dimensional.
    CHECK(primitive_dimension(alpha_p(F2)) == 1);
    // Etale Z/p: dual mu_p, Lie dimension 1.
    CHECK(primitive_dimension(etale_p(F2)) == 1);
    const FqCtx* F3 = fq_ctx(3);
    CHECK(primitive_dimension(alpha_p(F3)) == 1);
    CHECK(primitive_dimension(etale_p(F3)) == 1);
    // Product of two etale Z/p factors: dual mu_p x mu_p, Lie dimension 2.
    PLinearPair two{2, {{Fq(F2, 1), Fq(F2, 0)}, {Fq(F2, 0), Fq(F2, 1)}}};
    CHECK(primitive_dimension(a_group(two, F2)) == 2);
}

TEST_CASE("b_hom / b_tensor") {
    const FqCtx* F2 = fq_ctx(2);
    PLinearPair ap{1, {{Fq(F2, 0)}}};
    PLinearPair one{1, {{Fq(F2, 1)}}};
    CHECK(b_hom(ap, ap).size() == 2);  // End(alpha_p)(F_2) = F_2
    CHECK(b_hom(one, ap).size() == 1);
    PLinearPair w2{2, {{Fq(F2, 0), Fq(F2, 1)}, {Fq(F2, 0), Fq(F2, 0)}}};
    CHECK(b_tensor(w2, ap).r == 2);
    CHECK(order_exponent(a_group(b_tensor(w2, ap), F2)) == 2);
}

TEST_CASE("biadditive counts (frozen anchors)") {
    const FqCtx* F2 = fq_ctx(2);
    auto alpha = alpha_p(F2);
    auto cnt = biadditive_bruteforce(alpha, alpha, *ta_named(2, "F2"));
    CHECK(cnt.unrestricted == 2);
    CHECK(cnt.frobenius_killed == 1);
    auto cnt2 =
        biadditive_bruteforce(alpha, alpha, *ta_named(2, "F2[e]/(e^2)"));
    CHECK(cnt2.unrestricted == 4);
    CHECK(cnt2.frobenius_killed == 2);
}

TEST_CASE("grouplike points of the dual") {
    const FqCtx* F2 = fq_ctx(2);
    auto gl = grouplike_points(etale_p(F2), *ta_named(2, "F2[e]/(e^2)"));
    CHECK(gl.size() == 2);
    CHECK(grouplike_points(alpha_p(F2), *ta_named(2, "F2")).size() == 1);
    CHECK(grouplike_points(alpha_p(F2), *ta_named(2, "F2[e]/(e^2)")).size() ==
          2);
}

TEST_CASE("exactness of the V-complex") {
    const FqCtx* F2 = fq_ctx(2);
    auto alpha = alpha_p(F2);
    // alpha_p --V--> W2^(F) --proj0--> alpha_p is exact.
    EqGroupPresentation w2f;
    w2f.field = F2;
    w2f.blocks = {2};
    w2f.eqs = {MPoly<Fq>::variable(2, MonOrder::grevlex, 0, Fq(F2, 0)).pow(2),
               MPoly<Fq>::variable(2, MonOrder::grevlex, 1, Fq(F2, 0)).pow(2)};
    CHECK(order_exponent(w2f) == 2);
    ComplexOfGroups cx;
    cx.Gp = alpha;
    cx.G = w2f;
    cx.Gpp = alpha;
    cx.f.images = {MPoly<Fq>(1, MonOrder::grevlex, Fq(F2, 0)),
                   MPoly<Fq>::variable(1, MonOrder::grevlex, 0, Fq(F2, 0))};
    cx.h.images = {MPoly<Fq>::variable(2, MonOrder::grevlex, 0, Fq(F2, 0))};
    CHECK(exactness(cx));
    // Zero maps alpha -> alpha -> 0: not exact in the middle.
    ComplexOfGroups bad;
    bad.Gp = bad.G = alpha;
    bad.Gpp = EqGroupPresentation{F2, {}, {}};
    bad.f.images = {MPoly<Fq>(1, MonOrder::grevlex, Fq(F2, 0))};
    bad.h.images = {};
    CHECK(!exactness(bad));
}

TEST_CASE("solution points form groups") {
    const FqCtx* F2 = fq_ctx(2);
    auto alpha = alpha_p(F2);
    const TestAlgebra* A = ta_named(2, "F2[e,d]/(e^2,d^2,ed)");
    auto pts = solution_points(alpha, *A);
    CHECK(pts.size() == 4);  // square-zero elements
    for (const auto& x : pts)
        for (const auto& y : pts) {
            auto s = add_points(alpha, x, y);
            CHECK(is_solution(alpha, s, *A));
            CHECK(is_solution(alpha, neg_point(alpha, x), *A));
        }
}
