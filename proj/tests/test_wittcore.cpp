#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "wittcore/hatwitt.hpp"
#include "wittcore/wittlaw.hpp"
#include "wittcore/wittvec.hpp"

using namespace exactalg;
using namespace wittcore;

int main(int argc, char** argv) {
    set_cache_dir(".witt_cache");
    return doctest::Context(argc, argv).run();
}

TEST_CASE("structure law cache round-trip") {
    const WittLaw* cached = witt_law(2, 2);
    WittLaw fresh = gen_witt_law_fresh(2, 2);
    REQUIRE(cached != nullptr);
    CHECK(cached->p == fresh.p);
    CHECK(cached->n == fresh.n);
    for (int i = 0; i < 2; ++i) {
        CHECK(cached->S[size_t(i)] == fresh.S[size_t(i)]);
        CHECK(cached->P[size_t(i)] == fresh.P[size_t(i)]);
        CHECK(cached->N[size_t(i)] == fresh.N[size_t(i)]);
    }
}

TEST_CASE("W_2(F_2) anchor values") {
    const WittLaw* L = witt_law(2, 2);
    const FqCtx* F2 = fq_ctx(2);
    Fq one(F2, 1), zero(F2, 0);
    // [1] + [1] = (0, 1): the carry into the second component.
    auto a = WittVec<Fq>::teich(L, one);
    auto s = a + a;
    CHECK(s.entry(0) == zero);
    CHECK(s.entry(1) == one);
    // 2 = V(1) in W_2(F_2).
    CHECK(WittVec<Fq>::from_int(L, zero, 2) ==
          WittVec<Fq>::one(L, zero).versch());
}

TEST_CASE("ring axioms and F/V over the zoo") {
    for (int p : {2, 3})
        for (int n : {1, 2, 3}) {
            const WittLaw* L = witt_law(p, n);
            for (const TestAlgebra* A : zoo(p)) {
                Rng rng(uint64_t(42 * p + n));
                for (int s = 0; s < 25; ++s) {
                    auto re = [&]() {
                        std::vector<TAElem> es;
                        for (int i = 0; i < n; ++i)
                            es.push_back(A->from_index(
                                long(rng.below(uint64_t(A->size())))));
                        return WittVec<TAElem>(L, es);
                    };
                    auto x = re(), y = re(), z = re();
                    CHECK((x + y) + z == x + (y + z));
                    CHECK(x * (y + z) == x * y + x * z);
                    CHECK((x - x).is_zero());
                    CHECK(x.versch().frob() == x.p_mult());
                    CHECK(x.frob().versch() == x.p_mult());
                    CHECK(x.frob_pow(2) == x.frob().frob());
                }
            }
        }
}

TEST_CASE("unit inverse in W_n") {
    const WittLaw* L3 = witt_law(3, 3);
    const FqCtx* F9 = fq_ctx(3, 2);
    WittVec<Fq> u(L3, {Fq(F9, 1, 1), Fq(F9, 2, 0), Fq(F9, 0, 2)});
    REQUIRE(u.is_unit());
    CHECK(u * u.inv() == WittVec<Fq>::one(L3, u.entry(0)));
    WittVec<Fq> nonunit(L3, {Fq(F9, 0), Fq(F9, 1), Fq(F9, 0)});
    CHECK(!nonunit.is_unit());
    CHECK_THROWS_AS(nonunit.inv(), math_error);
}

TEST_CASE("ideals I_n and J_n") {
    const WittLaw* L = witt_law(2, 3);
    const FqCtx* F2 = fq_ctx(2);
    Fq one(F2, 1), zero(F2, 0);
    WittVec<Fq> v(L, {zero, one, one});
    CHECK(v.in_I());
    CHECK(!v.in_J());
    WittVec<Fq> j(L, {zero, zero, one});
    CHECK(j.in_J());
    // p * x depends only on x mod J: x and x + j have equal p-multiples.
    WittVec<Fq> x(L, {one, one, zero});
    CHECK(x.p_mult() == (x + j).p_mult());
}

TEST_CASE("Artin-Hasse exponential and lambda") {
    auto g2 = artin_hasse_coeffs(2, 8);
    CHECK(g2[0] == 1);  // constant term of the AH series
    const TestAlgebra* A = ta_named(2, "F2[e]/(e^3)");
    TAElem e = A->basis(1);
    // lambda([a]) = AH(a) evaluated at t = 1.
    HatWitt h = HatWitt::single(A, 0, e);
    CHECK(lambda_eval(h) == artin_hasse_at_one(e));
    // lambda is a homomorphism from hat-Witt addition to units.
    HatWitt k = HatWitt::single(A, 1, e * e);
    CHECK(lambda_eval(h + k) == lambda_eval(h) * lambda_eval(k));
}

TEST_CASE("hat-Witt group structure") {
    const TestAlgebra* A = ta_named(3, "F3[e]/(e^3)");
    TAElem e = A->basis(1);
    HatWitt h = HatWitt::single(A, 0, e);
    HatWitt three = h + h + h;
    // p-fold sum = V(F(x)): support shifts up.
    CHECK(three == h.frob().versch());
    CHECK((h - h).is_zero());
    CHECK((-h + h).is_zero());
    // Associativity with mixed supports.
    HatWitt a = HatWitt::single(A, 0, e);
    HatWitt b = HatWitt::single(A, 1, e * e);
    HatWitt c = HatWitt::single(A, 2, e);
    CHECK((a + b) + c == a + (b + c));
}

TEST_CASE("module action and Cartier pairing") {
    const TestAlgebra* A = ta_named(2, "F2[e]/(e^3)");
    const WittLaw* L = witt_law(2, 2);
    TAElem e = A->basis(1);
    WittVec<TAElem> w(L, {e, A->one()});
    WittVec<TAElem> u(L, {A->one(), e});
    HatWitt y = HatWitt::single(A, 0, e);
    // Module law: (x x') . y = x . (x' . y).
    CHECK(witt_hat_mul(w * u, y) == witt_hat_mul(w, witt_hat_mul(u, y)));
    // Pairing biadditivity and adjunctions.
    HatWitt y2 = HatWitt::single(A, 1, e * e);
    CHECK(cartier_pairing(w, y + y2) ==
          cartier_pairing(w, y) * cartier_pairing(w, y2));
    CHECK(cartier_pairing(w + u, y) ==
          cartier_pairing(w, y) * cartier_pairing(u, y));
    CHECK(cartier_pairing(w.frob(), y) == cartier_pairing(w, y.versch()));
    CHECK(cartier_pairing(w.versch(), y) == cartier_pairing(w, y.frob()));
}

TEST_CASE("hat-Witt enumeration") {
    const TestAlgebra* A = ta_named(2, "F2[e]/(e^2)");
    // Support < 2, kill order 1: coordinates in (e) = {0, e}: 4 elements.
    auto all = hat_enumerate(A, 1, 2);
    CHECK(all.size() == 4);
    // Closed under addition.
    for (const auto& x : all)
        for (const auto& y : all) {
            HatWitt s = x + y;
            bool found = false;
            for (const auto& z : all)
                if (z == s) found = true;
            CHECK(found);
        }
}
