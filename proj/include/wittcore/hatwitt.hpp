#pragma once

// The F-nilpotent part of the big Witt ring ("hat" Witt vectors) over a
// finite test algebra, together with the Artin-Hasse exponential and the
// Cartier duality pairing.
//
// Arithmetic goes through the Artin-Hasse embedding into the group of
// power series with constant term 1:
//   x = (x_0, x_1, ...)  |-->  prod_i E(x_i, t^(p^i)),
// where E(a, t) = exp(sum_j a^(p^j) t^(p^j) / p^j) has p-integral
// coefficients gamma_k: [t^k] E(a, t) = gamma_k a^k.  Sums are computed by
// multiplying series and peeling components back off; the pairing
// <x, y> = lambda(x * y) with lambda(f) = f(1) expands to the closed form
//   <x, y> = prod_{i, j} E1(y_i^(p^j) * x_j^(p^i)),  E1(a) = E(a, 1).

#include <map>
#include <string>
#include <vector>

#include "exactalg/testalgebra.hpp"
#include "wittcore/wittvec.hpp"

namespace wittcore {

using exactalg::TAElem;
using exactalg::TestAlgebra;

// gamma_0..gamma_N of the Artin-Hasse series for prime p, reduced mod p.
// Each coefficient is certified p-integral over Q before reduction.
std::vector<int> artin_hasse_coeffs(int p, int N);

// E(a, 1) = sum_k gamma_k a^k for nilpotent a (finite sum).
TAElem artin_hasse_at_one(const TAElem& a);

// Truncated power series over a test algebra, constant term arbitrary.
struct TASeries {
    const TestAlgebra* A = nullptr;
    std::vector<TAElem> c;  // c[k] = coefficient of t^k; size = N + 1

    int prec() const { return int(c.size()) - 1; }
    static TASeries one(const TestAlgebra* A, int N);
    friend TASeries operator*(const TASeries& f, const TASeries& g);
    // Inverse of a series with unit constant term.
    TASeries inverse() const;
    TAElem at_one() const;
    bool is_one() const;
};

// E(a, t^(p^i)) truncated at degree N; a must be nilpotent.
TASeries ah_factor(const TAElem& a, int p, int i, int N);

class HatWitt {
  public:
    HatWitt() : A_(nullptr), p_(0) {}
    // Entries must be nilpotent; zero entries are dropped.
    HatWitt(const TestAlgebra* A, std::map<int, TAElem> supp);

    static HatWitt zero(const TestAlgebra* A) { return HatWitt(A, {}); }
    static HatWitt single(const TestAlgebra* A, int i, const TAElem& a);

    const TestAlgebra* algebra() const { return A_; }
    int p() const { return p_; }
    const std::map<int, TAElem>& support() const { return supp_; }
    bool is_zero() const { return supp_.empty(); }
    // Largest index in the support plus one (0 for the zero element).
    int support_bound() const {
        return supp_.empty() ? 0 : supp_.rbegin()->first + 1;
    }
    // Smallest m with every entry^(p^m) = 0 (the F-nilpotence order).
    int kill_order() const;
    TAElem entry(int i) const;

    friend HatWitt operator+(const HatWitt& x, const HatWitt& y);
    HatWitt operator-() const;
    friend HatWitt operator-(const HatWitt& x, const HatWitt& y) {
        return x + (-y);
    }
    bool operator==(const HatWitt& o) const { return supp_ == o.supp_; }
    bool operator!=(const HatWitt& o) const { return !(*this == o); }
    bool operator<(const HatWitt& o) const { return supp_ < o.supp_; }

    HatWitt frob() const;    // componentwise p-th power
    HatWitt versch() const;  // shift support up by one
    HatWitt frob_pow(int k) const;
    HatWitt versch_pow(int k) const;

    std::string str() const;

  private:
    const TestAlgebra* A_;
    int p_;
    std::map<int, TAElem> supp_;
};

// Artin-Hasse embedding, truncated at degree N.
TASeries ah_embed(const HatWitt& x, int N);

// Decompose a series back into a hat Witt vector; errors with
// precision_too_small if a nonzero tail remains within the precision.
HatWitt ah_decompose(const TASeries& f);

// lambda(embed(x)) = value of the embedding series at t = 1.
TAElem lambda_eval(const HatWitt& x);

// Product of a length-n Witt vector with a hat Witt vector, via
// x * y = sum_i V^i([y_i] * F^i(x)).
HatWitt witt_hat_mul(const WittVec<TAElem>& x, const HatWitt& y);

// Cartier pairing <x, y> = lambda(x * y), a unit congruent to 1 mod
// nilpotents.  Closed form, no series arithmetic.
TAElem cartier_pairing(const WittVec<TAElem>& x, const HatWitt& y);

// All hat Witt vectors over A with support in [0, M) and entries killed by
// F^n (i.e. a^(p^n) = 0).  Errors with budget_exceeded past `budget`.
std::vector<HatWitt> hat_enumerate(const TestAlgebra* A, int n, int M,
                                   long budget = 4'000'000);

}  // namespace wittcore
