#include "exactalg/fq.hpp"

#include <vector>

#include "exactalg/integer.hpp"

namespace exactalg {

const FqCtx* fq_ctx(int p, int k) {
    require(is_prime(p), errkind::not_prime, "p must be prime");
    require(k == 1 || k == 2, errkind::domain_mismatch,
            "only F_p and F_{p^2} are supported");
    // Fixed irreducible quadratics: t^2+t+1 (p=2), t^2+1 (p=3), t^2+2 (p=5).
    static std::vector<FqCtx> pool;
    FqCtx want{p, k, 0, 0};
    if (k == 2) {
        switch (p) {
            case 2: want.c0 = 1; want.c1 = 1; break;
            case 3: want.c0 = 1; want.c1 = 0; break;
            case 5: want.c0 = 2; want.c1 = 0; break;
            default:
                fail(errkind::domain_mismatch,
                     "no fixed quadratic irreducible for this prime");
        }
    }
    for (const FqCtx& c : pool)
        if (c == want) return &c;
    pool.reserve(64);  // pointers must stay stable; pool is tiny in practice
    require(pool.size() < 64, errkind::internal, "fq context pool exhausted");
    pool.push_back(want);
    return &pool.back();
}

Fq Fq::pow(long e) const {
    require(e >= 0, errkind::domain_mismatch, "negative exponent");
    Fq r(ctx_, 1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Fq Fq::inv() const {
    require(!is_zero(), errkind::not_unit, "inverse of zero");
    return pow(ctx_->q() - 2);
}

std::string Fq::str() const {
    if (ctx_->k == 1) return std::to_string(c_[0]);
    return std::to_string(c_[0]) + "+" + std::to_string(c_[1]) + "t";
}

}  // namespace exactalg
