#pragma once

// Sparse multivariate polynomials over an exact coefficient ring R.
// R is used through free functions found by ADL:
//   ring_zero(x), ring_one(x), ring_from_int(x, v), ring_char(x),
//   ring_is_zero(x)
// plus operators + - * and unary -.  Supported instantiations here are
// ZZ (big integers), Fq (finite fields) and TAElem (test-algebra elements).

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "exactalg/common.hpp"
#include "exactalg/integer.hpp"

namespace exactalg {

// Ring hooks for ZZ.
inline ZZ ring_zero(const ZZ&) { return ZZ(0); }
inline ZZ ring_one(const ZZ&) { return ZZ(1); }
inline ZZ ring_from_int(const ZZ&, long v) { return ZZ(v); }
inline int ring_char(const ZZ&) { return 0; }
inline bool ring_is_zero(const ZZ& x) { return x == 0; }

using Mono = std::vector<int>;  // exponent vector, length = arity

enum class MonOrder { grevlex, lex };

inline int mono_deg(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Returns negative/zero/positive as a </==/> b in the given order.
inline int mono_cmp(const Mono& a, const Mono& b, MonOrder ord) {
    if (ord == MonOrder::grevlex) {
        int da = mono_deg(a), db = mono_deg(b);
        if (da != db) return da < db ? -1 : 1;
        for (int i = int(a.size()) - 1; i >= 0; --i)
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        return 0;
    }
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Mono mono_div(const Mono& a, const Mono& b) {  // a / b, b | a assumed
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

template <class R>
class MPoly {
  public:
    using Term = std::pair<Mono, R>;

    MPoly() : arity_(0), ord_(MonOrder::grevlex), proto_{} {}
    MPoly(int arity, MonOrder ord, const R& proto)
        : arity_(arity), ord_(ord), proto_(ring_zero(proto)) {}

    static MPoly constant(int arity, MonOrder ord, const R& c) {
        MPoly f(arity, ord, c);
        if (!ring_is_zero(c)) f.terms_.push_back({Mono(arity, 0), c});
        return f;
    }
    static MPoly variable(int arity, MonOrder ord, int i, const R& proto) {
        MPoly f(arity, ord, proto);
        Mono m(arity, 0);
        m[i] = 1;
        f.terms_.push_back({m, ring_one(proto)});
        return f;
    }
    static MPoly monomial(int arity, MonOrder ord, const Mono& m, const R& c) {
        MPoly f(arity, ord, c);
        if (!ring_is_zero(c)) f.terms_.push_back({m, c});
        return f;
    }

    int arity() const { return arity_; }
    MonOrder order() const { return ord_; }
    const R& proto() const { return proto_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Term& leading() const {
        require(!terms_.empty(), errkind::internal, "leading term of zero");
        return terms_.front();
    }

    // Re-sort under a different monomial order (same ring, same arity).
    MPoly with_order(MonOrder ord) const {
        MPoly r(arity_, ord, proto_);
        r.terms_ = terms_;
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [ord](const Term& a, const Term& b) {
                      return mono_cmp(a.first, b.first, ord) > 0;
                  });
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check(b);
        return merge(a, b, false);
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        a.check(b);
        return merge(a, b, true);
    }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check(b);
        std::map<Mono, R> acc;  // keyed by exponent vector (any total order)
        for (const Term& s : a.terms_)
            for (const Term& t : b.terms_) {
                Mono m = mono_mul(s.first, t.first);
                R c = s.second * t.second;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(c));
                else
                    it->second = it->second + c;
            }
        return from_map(a.arity_, a.ord_, a.proto_, acc);
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const R& c) const {
        MPoly r(arity_, ord_, proto_);
        for (const Term& t : terms_) {
            R v = t.second * c;
            if (!ring_is_zero(v)) r.terms_.push_back({t.first, v});
        }
        return r;
    }

    MPoly term_mul(const Mono& m, const R& c) const {
        MPoly r(arity_, ord_, proto_);
        for (const Term& t : terms_) {
            R v = t.second * c;
            if (!ring_is_zero(v)) r.terms_.push_back({mono_mul(t.first, m), v});
        }
        return r;
    }

    MPoly pow(long e) const {
        require(e >= 0, errkind::domain_mismatch, "negative exponent");
        MPoly r = constant(arity_, ord_, ring_one(proto_));
        MPoly b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    bool operator==(const MPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].first != o.terms_[i].first ||
                !(terms_[i].second == o.terms_[i].second))
                return false;
        return true;
    }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    int total_degree() const {
        int d = 0;
        for (const Term& t : terms_) d = std::max(d, mono_deg(t.first));
        return d;
    }

    R constant_term() const {
        for (const Term& t : terms_)
            if (mono_deg(t.first) == 0) return t.second;
        return ring_zero(proto_);
    }

    // Coefficient of x_i in the degree-1 part.
    R linear_coeff(int i) const {
        for (const Term& t : terms_)
            if (mono_deg(t.first) == 1 && t.first[i] == 1) return t.second;
        return ring_zero(proto_);
    }

    // Generic evaluation / substitution into a (possibly different) ring T.
    // cmap takes a coefficient in R to T; vals[i] substitutes variable i.
    template <class T, class CMap>
    T eval_with(const std::vector<T>& vals, const T& exemplar,
                CMap cmap) const {
        require(int(vals.size()) == arity_, errkind::domain_mismatch,
                "substitution arity mismatch");
        T acc = ring_zero(exemplar);
        for (const Term& t : terms_) {
            T v = cmap(t.second);
            for (int i = 0; i < arity_; ++i)
                for (int e = 0; e < t.first[i]; ++e) v = v * vals[i];
            acc = acc + v;
        }
        return acc;
    }

    // Evaluation into a characteristic-p ring: coefficients reduce mod p.
    template <class T>
    T eval_modp(const std::vector<T>& vals, const T& exemplar) const
        requires std::is_same_v<R, ZZ>
    {
        int p = ring_char(exemplar);
        require(p > 0, errkind::domain_mismatch,
                "eval_modp target must have positive characteristic");
        return eval_with(vals, exemplar, [&](const ZZ& c) {
            ZZ r = c % p;
            long v = r.get_si();
            if (v < 0) v += p;
            return ring_from_int(exemplar, v);
        });
    }

    // Substitution within the same ring.
    MPoly subst(const std::vector<MPoly>& vals) const {
        MPoly ex(vals.empty() ? arity_ : vals[0].arity(),
                 vals.empty() ? ord_ : vals[0].order(), proto_);
        return eval_with(vals, ex, [&](const R& c) {
            return constant(ex.arity_, ex.ord_, c);
        });
    }

    std::string str(const std::string& stem = "x") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const Term& t : terms_) {
            if (!first) os << " + ";
            first = false;
            os << coeff_str(t.second);
            for (int i = 0; i < arity_; ++i) {
                if (t.first[i] == 0) continue;
                os << "*" << stem << i;
                if (t.first[i] > 1) os << "^" << t.first[i];
            }
        }
        return os.str();
    }

    // Internal: construct from accumulated map, dropping zeros.
    static MPoly from_map(int arity, MonOrder ord, const R& proto,
                          const std::map<Mono, R>& acc) {
        MPoly r(arity, ord, proto);
        for (const auto& [m, c] : acc)
            if (!ring_is_zero(c)) r.terms_.push_back({m, c});
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [ord](const Term& a, const Term& b) {
                      return mono_cmp(a.first, b.first, ord) > 0;
                  });
        return r;
    }

  private:
    void check(const MPoly& o) const {
        require(arity_ == o.arity_ && ord_ == o.ord_, errkind::domain_mismatch,
                "polynomial ring mismatch");
    }

    static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
        MPoly r(a.arity_, a.ord_, a.proto_);
        size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int c;
            if (i >= a.terms_.size())
                c = -1;
            else if (j >= b.terms_.size())
                c = 1;
            else
                c = mono_cmp(a.terms_[i].first, b.terms_[j].first, a.ord_);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                const auto& t = b.terms_[j++];
                R v = subtract ? -t.second : t.second;
                if (!ring_is_zero(v)) r.terms_.push_back({t.first, v});
            } else {
                R v = subtract ? R(a.terms_[i].second - b.terms_[j].second)
                               : R(a.terms_[i].second + b.terms_[j].second);
                if (!ring_is_zero(v)) r.terms_.push_back({a.terms_[i].first, v});
                ++i, ++j;
            }
        }
        return r;
    }

    template <class S>
    static std::string coeff_str(const S& c) {
        if constexpr (std::is_same_v<S, ZZ>)
            return c.get_str();
        else
            return c.str();
    }

    int arity_;
    MonOrder ord_;
    R proto_;
    std::vector<Term> terms_;
};

// Ring hooks so MPoly<R> itself can be a coefficient/entry domain
// (e.g. Witt vectors with polynomial entries).
template <class R>
MPoly<R> ring_zero(const MPoly<R>& f) {
    return MPoly<R>(f.arity(), f.order(), f.proto());
}
template <class R>
MPoly<R> ring_one(const MPoly<R>& f) {
    return MPoly<R>::constant(f.arity(), f.order(), ring_one(f.proto()));
}
template <class R>
MPoly<R> ring_from_int(const MPoly<R>& f, long v) {
    return MPoly<R>::constant(f.arity(), f.order(),
                              ring_from_int(f.proto(), v));
}
template <class R>
int ring_char(const MPoly<R>& f) {
    return ring_char(f.proto());
}
template <class R>
bool ring_is_zero(const MPoly<R>& f) {
    return f.is_zero();
}

// Exact division of an integer polynomial by an integer.
MPoly<ZZ> exact_div(const MPoly<ZZ>& f, const ZZ& k);

}  // namespace exactalg
