#pragma once

// Truncated p-typical Witt vectors W_n(R) over a characteristic-p entry
// ring R (finite field, test algebra, or polynomial ring over those).
// Ring laws are evaluated through the universal integral structure
// polynomials; Frobenius is the componentwise p-th power (valid in
// characteristic p), Verschiebung is the shift, and p = F o V.

#include <string>
#include <vector>

#include "exactalg/common.hpp"
#include "exactalg/fq.hpp"
#include "exactalg/testalgebra.hpp"
#include "wittcore/wittlaw.hpp"

namespace exactalg {
inline Fq ring_inv(const Fq& x) { return x.inv(); }
inline TAElem ring_inv(const TAElem& x) {
    require(x.is_unit(), errkind::not_unit, "test algebra element not a unit");
    const TestAlgebra* A = x.algebra();
    for (long i = 0; i < A->size(); ++i) {
        TAElem c = A->from_index(i);
        if (x * c == A->one()) return c;
    }
    fail(errkind::not_unit, "unit without inverse");  // unreachable
}
}  // namespace exactalg

namespace wittcore {

using exactalg::errkind;
using exactalg::require;

template <class E>
class WittVec {
  public:
    WittVec() : law_(nullptr) {}
    WittVec(const WittLaw* law, std::vector<E> entries)
        : law_(law), a_(std::move(entries)) {
        require(int(a_.size()) == law->n, errkind::domain_mismatch,
                "witt vector length mismatch");
        require(ring_char(a_[0]) == law->p, errkind::domain_mismatch,
                "entry ring characteristic differs from p");
    }

    static WittVec zero(const WittLaw* law, const E& exemplar) {
        return WittVec(law, std::vector<E>(law->n, ring_zero(exemplar)));
    }
    static WittVec one(const WittLaw* law, const E& exemplar) {
        std::vector<E> v(law->n, ring_zero(exemplar));
        v[0] = ring_one(exemplar);
        return WittVec(law, std::move(v));
    }
    // Teichmueller representative [a] = (a, 0, ..., 0).
    static WittVec teich(const WittLaw* law, const E& a) {
        std::vector<E> v(law->n, ring_zero(a));
        v[0] = a;
        return WittVec(law, std::move(v));
    }
    static WittVec from_int(const WittLaw* law, const E& exemplar, long k) {
        WittVec r = zero(law, exemplar);
        WittVec o = one(law, exemplar);
        long m = k >= 0 ? k : -k;
        for (long i = 0; i < m; ++i) r = r + o;
        return k >= 0 ? r : -r;
    }

    const WittLaw* law() const { return law_; }
    int n() const { return law_->n; }
    int p() const { return law_->p; }
    const E& entry(int i) const { return a_[i]; }
    const std::vector<E>& entries() const { return a_; }
    bool is_zero() const {
        for (const E& x : a_)
            if (!ring_is_zero(x)) return false;
        return true;
    }

    friend WittVec operator+(const WittVec& x, const WittVec& y) {
        x.check(y);
        return x.binary_law(y, x.law_->S);
    }
    friend WittVec operator*(const WittVec& x, const WittVec& y) {
        x.check(y);
        return x.binary_law(y, x.law_->P);
    }
    WittVec operator-() const {
        std::vector<E> r;
        for (const auto& Ni : law_->N) r.push_back(Ni.eval_modp(a_, a_[0]));
        return WittVec(law_, std::move(r));
    }
    friend WittVec operator-(const WittVec& x, const WittVec& y) {
        return x + (-y);
    }
    WittVec& operator+=(const WittVec& o) { return *this = *this + o; }
    WittVec& operator-=(const WittVec& o) { return *this = *this - o; }
    WittVec& operator*=(const WittVec& o) { return *this = *this * o; }
    bool operator==(const WittVec& o) const {
        if (int(a_.size()) != int(o.a_.size())) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] == o.a_[i])) return false;
        return true;
    }
    bool operator!=(const WittVec& o) const { return !(*this == o); }

    // Frobenius: componentwise p-th power (entry ring has characteristic p).
    WittVec frob() const {
        std::vector<E> r;
        for (const E& x : a_) r.push_back(entry_pow(x, law_->p));
        return WittVec(law_, std::move(r));
    }
    // Verschiebung as an endomap of W_n: shift in a zero, drop the top slot.
    WittVec versch() const {
        std::vector<E> r(a_.size(), ring_zero(a_[0]));
        for (size_t i = 0; i + 1 < a_.size(); ++i) r[i + 1] = a_[i];
        return WittVec(law_, std::move(r));
    }
    // Multiplication by p: V(F(x)) = F(V(x)).
    WittVec p_mult() const { return versch().frob(); }
    WittVec p_pow_mult(int k) const {
        WittVec r = *this;
        for (int i = 0; i < k; ++i) r = r.p_mult();
        return r;
    }
    WittVec frob_pow(int k) const {
        WittVec r = *this;
        for (int i = 0; i < k; ++i) r = r.frob();
        return r;
    }
    WittVec versch_pow(int k) const {
        WittVec r = *this;
        for (int i = 0; i < k; ++i) r = r.versch();
        return r;
    }

    // Integral Frobenius oracle W_n -> W_{n-1} via the lifted polynomials.
    WittVec frob_via_lift(const WittLaw* target_law) const {
        require(target_law->p == law_->p && target_law->n == law_->n - 1,
                errkind::domain_mismatch, "frobenius lift target mismatch");
        std::vector<E> r;
        for (const auto& Fi : law_->Fr) r.push_back(Fi.eval_modp(a_, a_[0]));
        return WittVec(target_law, std::move(r));
    }

    // Truncation W_n -> W_m, m <= n.
    WittVec truncate(const WittLaw* target_law) const {
        require(target_law->p == law_->p && target_law->n <= law_->n,
                errkind::domain_mismatch, "truncation target mismatch");
        std::vector<E> r(a_.begin(), a_.begin() + target_law->n);
        return WittVec(target_law, std::move(r));
    }

    // Membership in the standard ideals I_n = Ker(W_n -> W_1) and
    // J_n = Ker(W_n -> W_{n-1}) = V^{n-1} W_1.
    bool in_I() const { return ring_is_zero(a_[0]); }
    bool in_J() const {
        for (size_t i = 0; i + 1 < a_.size(); ++i)
            if (!ring_is_zero(a_[i])) return false;
        return true;
    }

    bool is_unit() const;  // defined below, needs ring_inv on E
    WittVec inv() const;

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < a_.size(); ++i) {
            if (i) s += ", ";
            s += entry_str(a_[i]);
        }
        return s + ")";
    }

  private:
    void check(const WittVec& o) const {
        require(law_ == o.law_, errkind::domain_mismatch,
                "witt vector law mismatch");
    }
    WittVec binary_law(const WittVec& y,
                       const std::vector<exactalg::MPoly<exactalg::ZZ>>& fam) const {
        std::vector<E> vals = a_;
        vals.insert(vals.end(), y.a_.begin(), y.a_.end());
        std::vector<E> r;
        for (const auto& f : fam) r.push_back(f.eval_modp(vals, a_[0]));
        return WittVec(law_, std::move(r));
    }
    static E entry_pow(const E& x, long e) {
        E r = ring_one(x);
        for (long i = 0; i < e; ++i) r = r * x;
        return r;
    }
    template <class T>
    static std::string entry_str(const T& x) {
        return x.str();
    }

    const WittLaw* law_;
    std::vector<E> a_;
};

// A truncated Witt vector is a unit iff its first entry is a unit; the
// inverse is found by the triangular affine solve: the i-th component of
// a*b is affine in b_i with slope a_0^(p^i).
template <class E>
bool WittVec<E>::is_unit() const {
    if constexpr (std::is_same_v<E, exactalg::Fq>)
        return !a_[0].is_zero();
    else
        return a_[0].is_unit();
}

template <class E>
WittVec<E> WittVec<E>::inv() const {
    require(is_unit(), errkind::not_unit, "witt vector is not a unit");
    const E zero = ring_zero(a_[0]);
    const E one = ring_one(a_[0]);
    std::vector<E> b(a_.size(), zero);
    WittVec target = WittVec::one(law_, a_[0]);
    for (size_t i = 0; i < a_.size(); ++i) {
        b[i] = zero;
        E g0 = (*this * WittVec(law_, b)).entry(int(i));
        b[i] = one;
        E g1 = (*this * WittVec(law_, b)).entry(int(i));
        E slope = g1 - g0;
        b[i] = (target.entry(int(i)) - g0) * exactalg::ring_inv(slope);
    }
    WittVec r(law_, std::move(b));
    require(*this * r == target, errkind::internal, "witt inverse check failed");
    return r;
}

}  // namespace wittcore
