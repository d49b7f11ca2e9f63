#include "wittcore/hatwitt.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "exactalg/common.hpp"
#include "exactalg/integer.hpp"

namespace wittcore {

using exactalg::errkind;
using exactalg::fail;
using exactalg::QQ;
using exactalg::require;
using exactalg::ZZ;

std::vector<int> artin_hasse_coeffs(int p, int N) {
    static std::map<int, std::vector<int>> memo;  // per prime, grows as needed
    static std::mutex mutex;
    std::lock_guard<std::mutex> lk(mutex);
    auto& cached = memo[p];
    if (int(cached.size()) > N) return {cached.begin(), cached.begin() + N + 1};

    // S(t) = sum_{p^j <= N} t^(p^j) / p^j, then E = exp(S) term by term.
    std::vector<QQ> S(N + 1, QQ(0));
    ZZ pj(1);
    for (long deg = 1; deg <= N; deg *= p) {
        S[deg] = QQ(1) / QQ(pj);
        pj *= p;
        if (deg > N / p) break;
    }
    std::vector<QQ> E(N + 1, QQ(0)), term(N + 1, QQ(0));
    E[0] = term[0] = QQ(1);
    for (int m = 1; m <= N; ++m) {
        // term <- term * S / m; S has no constant term, so lowest degree m.
        std::vector<QQ> next(N + 1, QQ(0));
        for (int i = 0; i <= N; ++i) {
            if (term[i] == 0) continue;
            for (long d = 1; i + d <= N; d *= p) {
                if (S[d] != 0) next[i + d] += term[i] * S[d];
                if (d > N / p) break;
            }
        }
        for (auto& v : next) v /= m;
        term = std::move(next);
        for (int i = 0; i <= N; ++i) E[i] += term[i];
    }

    std::vector<int> out(N + 1, 0);
    for (int k = 0; k <= N; ++k) {
        QQ v = E[k];
        v.canonicalize();
        ZZ den = v.get_den();
        require(den % p != 0, errkind::axiom_violation,
                "artin-hasse coefficient not p-integral");
        // num * den^{-1} mod p
        long num = mpz_fdiv_ui(v.get_num().get_mpz_t(), p);
        long dm = mpz_fdiv_ui(den.get_mpz_t(), p);
        long dinv = 1;
        for (long e = 0; e < p - 2; ++e) dinv = (dinv * dm) % p;
        out[k] = int((num * dinv) % p);
    }
    if (int(cached.size()) <= N) cached = out;
    return out;
}

TAElem artin_hasse_at_one(const TAElem& a) {
    require(a.is_nilpotent(), errkind::domain_mismatch,
            "artin-hasse argument must be nilpotent");
    const TestAlgebra* A = a.algebra();
    int e = A->nil_exponent();
    std::vector<int> g = artin_hasse_coeffs(A->p(), e);
    TAElem acc = A->zero(), pw = A->one();
    for (int k = 0; k < e; ++k) {
        if (g[k]) acc += pw * ring_from_int(pw, g[k]);
        pw *= a;
        if (pw.is_zero()) break;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Series helpers
// ---------------------------------------------------------------------------

TASeries TASeries::one(const TestAlgebra* A, int N) {
    TASeries f{A, std::vector<TAElem>(N + 1, A->zero())};
    f.c[0] = A->one();
    return f;
}

TASeries operator*(const TASeries& f, const TASeries& g) {
    require(f.A == g.A && f.prec() == g.prec(), errkind::domain_mismatch,
            "series mismatch");
    TASeries h{f.A, std::vector<TAElem>(f.c.size(), f.A->zero())};
    int N = f.prec();
    for (int i = 0; i <= N; ++i) {
        if (f.c[i].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (g.c[j].is_zero()) continue;
            h.c[i + j] += f.c[i] * g.c[j];
        }
    }
    return h;
}

TASeries TASeries::inverse() const {
    require(c[0].is_unit(), errkind::not_unit,
            "series constant term not a unit");
    TAElem u = exactalg::ring_inv(c[0]);
    TASeries g{A, std::vector<TAElem>(c.size(), A->zero())};
    g.c[0] = u;
    int N = prec();
    for (int k = 1; k <= N; ++k) {
        TAElem s = A->zero();
        for (int j = 0; j < k; ++j) s += g.c[j] * c[k - j];
        g.c[k] = -(u * s);
    }
    return g;
}

TAElem TASeries::at_one() const {
    TAElem s = A->zero();
    for (const TAElem& v : c) s += v;
    return s;
}

bool TASeries::is_one() const {
    if (!(c[0] == A->one())) return false;
    for (size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return false;
    return true;
}

TASeries ah_factor(const TAElem& a, int p, int i, int N) {
    require(a.is_nilpotent(), errkind::domain_mismatch,
            "hat witt entry must be nilpotent");
    const TestAlgebra* A = a.algebra();
    TASeries f = TASeries::one(A, N);
    std::vector<int> g = artin_hasse_coeffs(p, N);
    long step = 1;
    for (int j = 0; j < i; ++j) step *= p;
    TAElem pw = A->one();
    for (int k = 1; k * step <= N; ++k) {
        pw *= a;
        if (pw.is_zero()) break;
        if (g[k]) f.c[size_t(k) * step] = pw * ring_from_int(pw, g[k]);
    }
    return f;
}

// ---------------------------------------------------------------------------
// HatWitt
// ---------------------------------------------------------------------------

HatWitt::HatWitt(const TestAlgebra* A, std::map<int, TAElem> supp)
    : A_(A), p_(A->p()), supp_(std::move(supp)) {
    for (auto it = supp_.begin(); it != supp_.end();) {
        require(it->first >= 0, errkind::weight_out_of_range,
                "negative support index");
        if (it->second.is_zero()) {
            it = supp_.erase(it);
        } else {
            require(it->second.is_nilpotent(), errkind::domain_mismatch,
                    "hat witt entries must be nilpotent");
            ++it;
        }
    }
}

HatWitt HatWitt::single(const TestAlgebra* A, int i, const TAElem& a) {
    std::map<int, TAElem> m;
    m.emplace(i, a);
    return HatWitt(A, std::move(m));
}

int HatWitt::kill_order() const {
    int m = 0;
    for (const auto& [i, a] : supp_) {
        TAElem x = a;
        int k = 0;
        while (!x.is_zero()) {
            x = x.pow(p_);
            ++k;
        }
        m = std::max(m, k);
    }
    return m;
}

TAElem HatWitt::entry(int i) const {
    auto it = supp_.find(i);
    return it == supp_.end() ? A_->zero() : it->second;
}

HatWitt HatWitt::frob() const {
    std::map<int, TAElem> m;
    for (const auto& [i, a] : supp_) m.emplace(i, a.pow(p_));
    return HatWitt(A_, std::move(m));
}

HatWitt HatWitt::versch() const {
    std::map<int, TAElem> m;
    for (const auto& [i, a] : supp_) m.emplace(i + 1, a);
    return HatWitt(A_, std::move(m));
}

HatWitt HatWitt::frob_pow(int k) const {
    HatWitt r = *this;
    for (int i = 0; i < k; ++i) r = r.frob();
    return r;
}

HatWitt HatWitt::versch_pow(int k) const {
    HatWitt r = *this;
    for (int i = 0; i < k; ++i) r = r.versch();
    return r;
}

std::string HatWitt::str() const {
    if (supp_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, a] : supp_) {
        if (!first) os << " + ";
        first = false;
        os << "V^" << i << "[" << a.str() << "]";
    }
    return os.str();
}

TASeries ah_embed(const HatWitt& x, int N) {
    TASeries f = TASeries::one(x.algebra(), N);
    for (const auto& [i, a] : x.support())
        f = f * ah_factor(a, x.p(), i, N);
    return f;
}

HatWitt ah_decompose(const TASeries& f) {
    const TestAlgebra* A = f.A;
    int p = A->p();
    int N = f.prec();
    require(f.c[0] == A->one(), errkind::constant_term_nonzero,
            "series to decompose must have constant term 1");
    TASeries rem = f;
    std::map<int, TAElem> supp;
    for (long d = 1, i = 0; d <= N; d *= p, ++i) {
        TAElem z = rem.c[size_t(d)];
        if (!z.is_zero()) {
            require(z.is_nilpotent(), errkind::domain_mismatch,
                    "non-nilpotent component in decomposition");
            supp.emplace(int(i), z);
            rem = rem * ah_factor(z, p, int(i), N).inverse();
        }
        if (d > N / p) break;
    }
    require(rem.is_one(), errkind::precision_too_small,
            "series precision too small for decomposition");
    return HatWitt(A, std::move(supp));
}

namespace {

// Conservative cap on the degree of any nonzero coefficient of a product of
// `factors` Artin-Hasse embeddings with support below M over an algebra of
// nilpotency exponent e:  factors * (e-1) * (1 + p + ... + p^(M-1)).
long precision_bound(const TestAlgebra* A, int M, int factors) {
    long e = A->nil_exponent();
    long geom = 0, pw = 1;
    for (int i = 0; i < M; ++i) {
        geom += pw;
        pw *= A->p();
    }
    long N = factors * (e - 1) * geom;
    return N < 1 ? 1 : N;
}

HatWitt via_series(const HatWitt& x, const HatWitt& y, bool negate_y) {
    const TestAlgebra* A = x.algebra();
    int M = std::max(x.support_bound(), y.support_bound());
    long N = precision_bound(A, M, 2);
    const long cap = 1 << 16;
    for (;; N *= 2) {
        try {
            TASeries fy = ah_embed(y, int(N));
            if (negate_y) fy = fy.inverse();
            return ah_decompose(ah_embed(x, int(N)) * fy);
        } catch (const exactalg::math_error& e) {
            if (e.kind != errkind::precision_too_small || N > cap) throw;
        }
    }
}

}  // namespace

HatWitt operator+(const HatWitt& x, const HatWitt& y) {
    require(x.algebra() == y.algebra(), errkind::domain_mismatch,
            "hat witt algebra mismatch");
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    return via_series(x, y, false);
}

HatWitt HatWitt::operator-() const {
    if (is_zero()) return *this;
    return via_series(HatWitt::zero(A_), *this, true);
}

TAElem lambda_eval(const HatWitt& x) {
    const TestAlgebra* A = x.algebra();
    TAElem r = A->one();
    for (const auto& [i, a] : x.support()) r *= artin_hasse_at_one(a);
    return r;
}

HatWitt witt_hat_mul(const WittVec<TAElem>& x, const HatWitt& y) {
    const TestAlgebra* A = y.algebra();
    require(!x.entries().empty() && x.entries()[0].algebra() == A,
            errkind::domain_mismatch, "witt/hat algebra mismatch");
    require(x.p() == y.p(), errkind::domain_mismatch, "prime mismatch");
    int p = x.p(), n = x.n();
    HatWitt acc = HatWitt::zero(A);
    for (const auto& [i, yi] : y.support()) {
        // V^i([y_i] * F^i(x)): entry at slot i+j is y_i^(p^j) * x_j^(p^i).
        std::map<int, TAElem> term;
        long pi = 1;
        for (int k = 0; k < i; ++k) pi *= p;
        TAElem ypow = yi;  // y_i^(p^j), j = 0 to start
        for (int j = 0; j < n; ++j) {
            TAElem v = ypow * x.entry(j).pow(pi);
            if (!v.is_zero()) term.emplace(i + j, v);
            ypow = ypow.pow(p);
            if (ypow.is_zero()) break;
        }
        acc = acc + HatWitt(A, std::move(term));
    }
    return acc;
}

TAElem cartier_pairing(const WittVec<TAElem>& x, const HatWitt& y) {
    const TestAlgebra* A = y.algebra();
    require(!x.entries().empty() && x.entries()[0].algebra() == A,
            errkind::domain_mismatch, "witt/hat algebra mismatch");
    require(x.p() == y.p(), errkind::domain_mismatch, "prime mismatch");
    int p = x.p(), n = x.n();
    TAElem r = A->one();
    for (const auto& [i, yi] : y.support()) {
        long pi = 1;
        for (int k = 0; k < i; ++k) pi *= p;
        TAElem ypow = yi;
        for (int j = 0; j < n; ++j) {
            TAElem arg = ypow * x.entry(j).pow(pi);
            if (!arg.is_zero()) r *= artin_hasse_at_one(arg);
            ypow = ypow.pow(p);
            if (ypow.is_zero()) break;
        }
    }
    return r;
}

std::vector<HatWitt> hat_enumerate(const TestAlgebra* A, int n, int M,
                                   long budget) {
    // Valid entries: a with a^(p^n) = 0.
    long pn = 1;
    for (int i = 0; i < n; ++i) pn *= A->p();
    std::vector<TAElem> K;
    for (long idx = 0; idx < A->size(); ++idx) {
        TAElem a = A->from_index(idx);
        if (a.pow(pn).is_zero()) K.push_back(a);
    }
    double total = 1;
    for (int i = 0; i < M; ++i) total *= double(K.size());
    require(total <= double(budget), errkind::budget_exceeded,
            "hat witt enumeration too large");
    std::vector<HatWitt> out;
    std::vector<size_t> digits(size_t(M), 0);
    for (;;) {
        std::map<int, TAElem> supp;
        for (int i = 0; i < M; ++i)
            if (!K[digits[size_t(i)]].is_zero()) supp.emplace(i, K[digits[size_t(i)]]);
        out.push_back(HatWitt(A, std::move(supp)));
        int pos = 0;
        while (pos < M && ++digits[size_t(pos)] == K.size()) digits[size_t(pos++)] = 0;
        if (pos == M) break;
    }
    return out;
}

}  // namespace wittcore
