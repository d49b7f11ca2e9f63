#pragma once

// Small finite fields F_q with q = p or p^2 for the primes the artifact
// uses (2, 3, 5).  Quadratic extensions are F_p[t]/(t^2 + c1 t + c0) with a
// fixed irreducible per prime.  Elements are coordinate pairs mod p.

#include <array>
#include <cstdint>
#include <string>

#include "exactalg/common.hpp"

namespace exactalg {

struct FqCtx {
    int p = 2;
    int k = 1;       // extension degree, 1 or 2
    int c0 = 0;      // t^2 = -(c0 + c1 t) when k == 2
    int c1 = 0;

    int q() const { int r = 1; for (int i = 0; i < k; ++i) r *= p; return r; }
    bool operator==(const FqCtx& o) const {
        return p == o.p && k == o.k && c0 == o.c0 && c1 == o.c1;
    }
};

// Interned contexts so that element values can hold a stable pointer.
const FqCtx* fq_ctx(int p, int k = 1);

class Fq {
  public:
    Fq() : ctx_(nullptr), c_{0, 0} {}
    Fq(const FqCtx* ctx, long v) : ctx_(ctx), c_{norm(v, ctx->p), 0} {}
    Fq(const FqCtx* ctx, long v0, long v1)
        : ctx_(ctx), c_{norm(v0, ctx->p), norm(v1, ctx->p)} {
        require(ctx->k == 2 || c_[1] == 0, errkind::domain_mismatch,
                "nontrivial second coordinate in a prime field");
    }

    const FqCtx* ctx() const { return ctx_; }
    int coord(int i) const { return c_[i]; }
    bool is_zero() const { return c_[0] == 0 && c_[1] == 0; }
    bool is_one() const { return c_[0] == 1 && c_[1] == 0; }

    friend Fq operator+(const Fq& a, const Fq& b) {
        a.check(b);
        return Fq(a.ctx_, a.c_[0] + b.c_[0], a.c_[1] + b.c_[1]);
    }
    friend Fq operator-(const Fq& a, const Fq& b) {
        a.check(b);
        int p = a.ctx_->p;
        return Fq(a.ctx_, a.c_[0] - b.c_[0] + p, a.c_[1] - b.c_[1] + p);
    }
    friend Fq operator*(const Fq& a, const Fq& b) {
        a.check(b);
        const FqCtx* F = a.ctx_;
        long p = F->p;
        long lo = (long)a.c_[0] * b.c_[0];
        if (F->k == 1) return Fq(F, lo);
        // (a0 + a1 t)(b0 + b1 t), with t^2 = -(c0 + c1 t).
        long cross = (long)a.c_[0] * b.c_[1] + (long)a.c_[1] * b.c_[0];
        long hi = (long)a.c_[1] * b.c_[1];
        long v0 = lo - hi * F->c0;
        long v1 = cross - hi * F->c1;
        return Fq(F, ((v0 % p) + p) % p, ((v1 % p) + p) % p);
    }
    Fq operator-() const {
        return Fq(ctx_, ctx_->p - c_[0], ctx_->p - c_[1]);
    }
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }
    bool operator==(const Fq& o) const {
        return c_[0] == o.c_[0] && c_[1] == o.c_[1];
    }
    bool operator!=(const Fq& o) const { return !(*this == o); }

    Fq pow(long e) const;
    Fq inv() const;

    // Enumeration index in [0, q): element <-> c0 + p*c1.
    int index() const { return c_[0] + ctx_->p * c_[1]; }
    static Fq from_index(const FqCtx* ctx, int idx) {
        return Fq(ctx, idx % ctx->p, idx / ctx->p);
    }

    std::string str() const;

  private:
    static int norm(long v, int p) { return int(((v % p) + p) % p); }
    void check(const Fq& o) const {
        require(ctx_ == o.ctx_, errkind::domain_mismatch,
                "finite field context mismatch");
    }

    const FqCtx* ctx_;
    std::array<int, 2> c_;
};

// Ring-exemplar helpers used by generic code (see mpoly.hpp / wittvec.hpp):
// build constants in the same domain as an existing element.
inline Fq ring_zero(const Fq& x) { return Fq(x.ctx(), 0); }
inline Fq ring_one(const Fq& x) { return Fq(x.ctx(), 1); }
inline Fq ring_from_int(const Fq& x, long v) { return Fq(x.ctx(), v); }
inline int ring_char(const Fq& x) { return x.ctx()->p; }
inline bool ring_is_zero(const Fq& x) { return x.is_zero(); }

}  // namespace exactalg
