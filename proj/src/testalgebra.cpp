#include "exactalg/testalgebra.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "exactalg/integer.hpp"

namespace exactalg {

namespace {

std::vector<int> vec_add(const std::vector<int>& a, const std::vector<int>& b,
                         int p) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

std::vector<int> vec_scale(const std::vector<int>& a, int s, int p) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * s) % p;
    return r;
}

}  // namespace

TestAlgebra::TestAlgebra(std::string name, int p, int dim,
                         std::vector<std::vector<std::vector<int>>> mult,
                         std::vector<int> unit, bool is_field)
    : name_(std::move(name)),
      p_(p),
      dim_(dim),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      is_field_(is_field),
      nil_exp_(dim + 1) {
    require(is_prime(p), errkind::not_prime, "p must be prime");
    // Commutativity and unit law.
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            require(mult_[i][j] == mult_[j][i], errkind::axiom_violation,
                    name_ + ": structure constants not commutative");
    for (int i = 0; i < dim_; ++i) {
        TAElem bi = basis(i);
        require(one() * bi == bi, errkind::axiom_violation,
                name_ + ": unit law fails");
    }
    // Associativity on all basis triples.
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                require((basis(i) * basis(j)) * basis(k) ==
                            basis(i) * (basis(j) * basis(k)),
                        errkind::axiom_violation,
                        name_ + ": structure constants not associative");
}

long TestAlgebra::size() const {
    long s = 1;
    for (int i = 0; i < dim_; ++i) s *= p_;
    return s;
}

TAElem TestAlgebra::zero() const {
    return TAElem(this, std::vector<int>(dim_, 0));
}

TAElem TestAlgebra::one() const { return TAElem(this, unit_); }

TAElem TestAlgebra::basis(int i) const {
    std::vector<int> c(dim_, 0);
    c[i] = 1;
    return TAElem(this, c);
}

TAElem TestAlgebra::from_index(long idx) const {
    std::vector<int> c(dim_);
    for (int i = 0; i < dim_; ++i) {
        c[i] = int(idx % p_);
        idx /= p_;
    }
    return TAElem(this, c);
}

long TestAlgebra::index_of(const TAElem& a) const {
    long idx = 0;
    for (int i = dim_ - 1; i >= 0; --i) idx = idx * p_ + a.coords()[i];
    return idx;
}

TAElem TestAlgebra::embed(const Fq& c) const {
    require(c.ctx()->k == 1 && c.ctx()->p == p_, errkind::domain_mismatch,
            "only the prime subfield embeds into every test algebra");
    TAElem r = zero();
    std::vector<int> v = vec_scale(unit_, c.coord(0), p_);
    return TAElem(this, v);
}

TAElem operator+(const TAElem& a, const TAElem& b) {
    a.check(b);
    return TAElem(a.A_, vec_add(a.c_, b.c_, a.A_->p()));
}

TAElem operator-(const TAElem& a, const TAElem& b) { return a + (-b); }

TAElem TAElem::operator-() const {
    return TAElem(A_, vec_scale(c_, A_->p() - 1, A_->p()));
}

TAElem operator*(const TAElem& a, const TAElem& b) {
    a.check(b);
    const TestAlgebra* A = a.A_;
    int p = A->p(), dim = A->dim();
    std::vector<int> r(dim, 0);
    for (int i = 0; i < dim; ++i) {
        if (!a.c_[i]) continue;
        for (int j = 0; j < dim; ++j) {
            if (!b.c_[j]) continue;
            int s = (a.c_[i] * b.c_[j]) % p;
            const std::vector<int>& row = A->mult_row(i, j);
            for (int k = 0; k < dim; ++k) r[k] = (r[k] + s * row[k]) % p;
        }
    }
    return TAElem(A, r);
}

TAElem TAElem::pow(long e) const {
    require(e >= 0, errkind::domain_mismatch, "negative exponent");
    TAElem r = A_->one(), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool TAElem::is_nilpotent() const {
    // In a commutative algebra of dimension m, nilpotent a satisfies a^m = 0.
    return pow(A_->dim()).is_zero();
}

bool TAElem::is_unit() const {
    // |A| <= 125; scan for an inverse.
    for (long i = 0; i < A_->size(); ++i)
        if ((*this * A_->from_index(i)) == A_->one()) return true;
    return false;
}

std::string TAElem::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < A_->dim(); ++i) os << (i ? "," : "") << c_[i];
    os << ")";
    return os.str();
}

namespace {

// Builders for the zoo members.

std::unique_ptr<TestAlgebra> make_fp(int p) {
    return std::make_unique<TestAlgebra>(
        "F" + std::to_string(p), p, 1,
        std::vector<std::vector<std::vector<int>>>{{{1}}},
        std::vector<int>{1}, true);
}

std::unique_ptr<TestAlgebra> make_fp2(int p) {
    // Basis {1, t} with t^2 = -(c0 + c1 t), matching fq_ctx(p, 2).
    const FqCtx* F = fq_ctx(p, 2);
    std::vector<int> tt = {(p - F->c0) % p, (p - F->c1) % p};
    std::vector<std::vector<std::vector<int>>> mult = {
        {{1, 0}, {0, 1}}, {{0, 1}, tt}};
    return std::make_unique<TestAlgebra>("F" + std::to_string(p) + "^2", p, 2,
                                         mult, std::vector<int>{1, 0}, true);
}

std::unique_ptr<TestAlgebra> make_dual_numbers(int p) {
    // Basis {1, e}, e^2 = 0.
    std::vector<std::vector<std::vector<int>>> mult = {
        {{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
    return std::make_unique<TestAlgebra>(
        "F" + std::to_string(p) + "[e]/(e^2)", p, 2, mult,
        std::vector<int>{1, 0}, false);
}

std::unique_ptr<TestAlgebra> make_e3(int p) {
    // Basis {1, e, e^2}, e^3 = 0.
    std::vector<std::vector<std::vector<int>>> mult = {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
        {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
        {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}};
    return std::make_unique<TestAlgebra>(
        "F" + std::to_string(p) + "[e]/(e^3)", p, 3, mult,
        std::vector<int>{1, 0, 0}, false);
}

std::unique_ptr<TestAlgebra> make_two_nil(int p) {
    // Basis {1, e, d}, e^2 = d^2 = ed = 0.
    std::vector<std::vector<std::vector<int>>> mult = {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
        {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}},
        {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}};
    return std::make_unique<TestAlgebra>(
        "F" + std::to_string(p) + "[e,d]/(e^2,d^2,ed)", p, 3, mult,
        std::vector<int>{1, 0, 0}, false);
}

const std::vector<std::unique_ptr<TestAlgebra>>& zoo_storage(int p) {
    static std::map<int, std::vector<std::unique_ptr<TestAlgebra>>> cache;
    auto it = cache.find(p);
    if (it == cache.end()) {
        std::vector<std::unique_ptr<TestAlgebra>> v;
        v.push_back(make_fp(p));
        v.push_back(make_fp2(p));
        v.push_back(make_dual_numbers(p));
        v.push_back(make_e3(p));
        v.push_back(make_two_nil(p));
        it = cache.emplace(p, std::move(v)).first;
    }
    return it->second;
}

}  // namespace

std::vector<const TestAlgebra*> zoo(int p) {
    std::vector<const TestAlgebra*> r;
    for (const auto& a : zoo_storage(p)) r.push_back(a.get());
    return r;
}

const TestAlgebra* ta_named(int p, const std::string& name) {
    for (const auto& a : zoo_storage(p))
        if (a->name() == name) return a.get();
    fail(errkind::domain_mismatch, "unknown test algebra: " + name);
}

const TestAlgebra* nilpotent_extension(const TestAlgebra& A, int q) {
    static std::map<std::pair<const TestAlgebra*, int>,
                    std::unique_ptr<TestAlgebra>> cache;
    auto key = std::make_pair(&A, q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.get();
    int da = A.dim(), dim = da * q;
    auto at = [&](int i, int j) { return i + da * j; };
    std::vector<std::vector<std::vector<int>>> mult(
        size_t(dim), std::vector<std::vector<int>>(
                         size_t(dim), std::vector<int>(size_t(dim), 0)));
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < q; ++j)
            for (int ip = 0; ip < da; ++ip)
                for (int jp = 0; jp < q; ++jp) {
                    if (j + jp >= q) continue;
                    const auto& row = A.mult_row(i, ip);
                    for (int t = 0; t < da; ++t)
                        mult[size_t(at(i, j))][size_t(at(ip, jp))]
                            [size_t(at(t, j + jp))] = row[size_t(t)];
                }
    std::vector<int> unit(size_t(dim), 0);
    for (int t = 0; t < da; ++t)
        unit[size_t(at(t, 0))] = A.one().coords()[size_t(t)];
    auto ext = std::make_unique<TestAlgebra>(
        A.name() + "[D]/(D^" + std::to_string(q) + ")", A.p(), dim,
        std::move(mult), std::move(unit), false);
    const TestAlgebra* out = ext.get();
    cache.emplace(key, std::move(ext));
    return out;
}

TAElem ext_embed(const TestAlgebra& C, const TestAlgebra& A,
                 const TAElem& a) {
    std::vector<int> c(size_t(C.dim()), 0);
    for (int t = 0; t < A.dim(); ++t) c[size_t(t)] = a.coords()[size_t(t)];
    return TAElem(&C, c);
}

TAElem ext_delta(const TestAlgebra& C, const TestAlgebra& A) {
    std::vector<int> c(size_t(C.dim()), 0);
    for (int t = 0; t < A.dim(); ++t)
        c[size_t(t + A.dim())] = A.one().coords()[size_t(t)];
    return TAElem(&C, c);
}

}  // namespace exactalg
