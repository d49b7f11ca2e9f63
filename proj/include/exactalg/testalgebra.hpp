#pragma once

// Finite F_p-algebras given by a basis and structure constants; the base
// rings over which all functor-of-points computations run.  The fixed zoo:
// F_p, F_{p^2}, F_p[e]/(e^2), F_p[e]/(e^3), F_p[e,d]/(e^2, d^2, ed)
// for p in {2, 3, 5}.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "exactalg/common.hpp"
#include "exactalg/fq.hpp"

namespace exactalg {

class TAElem;

class TestAlgebra {
  public:
    // mult[i][j] = coordinates of b_i * b_j; unit = coordinates of 1.
    // Associativity, commutativity and the unit law are checked.
    TestAlgebra(std::string name, int p, int dim,
                std::vector<std::vector<std::vector<int>>> mult,
                std::vector<int> unit, bool is_field);

    const std::string& name() const { return name_; }
    int p() const { return p_; }
    int dim() const { return dim_; }
    bool is_field() const { return is_field_; }
    long size() const;  // p^dim

    TAElem zero() const;
    TAElem one() const;
    TAElem basis(int i) const;
    TAElem from_index(long idx) const;       // enumeration order
    long index_of(const TAElem& a) const;
    TAElem embed(const Fq& c) const;         // prime-subfield embedding

    // Smallest e with a^e = 0 for every nilpotent a (precomputed bound).
    int nil_exponent() const { return nil_exp_; }

    const std::vector<int>& mult_row(int i, int j) const { return mult_[i][j]; }

  private:
    friend class TAElem;
    std::string name_;
    int p_, dim_;
    std::vector<std::vector<std::vector<int>>> mult_;
    std::vector<int> unit_;
    bool is_field_;
    int nil_exp_;
};

class TAElem {
  public:
    TAElem() : A_(nullptr) {}
    TAElem(const TestAlgebra* A, std::vector<int> c) : A_(A), c_(std::move(c)) {
        require(int(c_.size()) == A->dim(), errkind::domain_mismatch,
                "coordinate length mismatch");
    }

    const TestAlgebra* algebra() const { return A_; }
    const std::vector<int>& coords() const { return c_; }
    bool is_zero() const {
        for (int v : c_)
            if (v) return false;
        return true;
    }

    friend TAElem operator+(const TAElem& a, const TAElem& b);
    friend TAElem operator-(const TAElem& a, const TAElem& b);
    friend TAElem operator*(const TAElem& a, const TAElem& b);
    TAElem operator-() const;
    TAElem& operator+=(const TAElem& o) { return *this = *this + o; }
    TAElem& operator-=(const TAElem& o) { return *this = *this - o; }
    TAElem& operator*=(const TAElem& o) { return *this = *this * o; }
    bool operator==(const TAElem& o) const { return c_ == o.c_; }
    bool operator!=(const TAElem& o) const { return c_ != o.c_; }
    bool operator<(const TAElem& o) const { return c_ < o.c_; }

    TAElem pow(long e) const;
    bool is_nilpotent() const;
    bool is_unit() const;

    std::string str() const;

  private:
    void check(const TAElem& o) const {
        require(A_ == o.A_, errkind::domain_mismatch,
                "test algebra mismatch");
    }
    const TestAlgebra* A_;
    std::vector<int> c_;
};

// Ring hooks (see mpoly.hpp).
inline TAElem ring_zero(const TAElem& x) { return x.algebra()->zero(); }
inline TAElem ring_one(const TAElem& x) { return x.algebra()->one(); }
inline TAElem ring_from_int(const TAElem& x, long v) {
    const TestAlgebra* A = x.algebra();
    long p = A->p();
    v = ((v % p) + p) % p;
    TAElem r = A->zero();
    for (long i = 0; i < v; ++i) r += A->one();
    return r;
}
inline int ring_char(const TAElem& x) { return x.algebra()->p(); }
inline bool ring_is_zero(const TAElem& x) { return x.is_zero(); }

// The fixed test-algebra zoo for one prime.  Objects are interned; pointers
// remain valid for the program lifetime.
std::vector<const TestAlgebra*> zoo(int p);
// Single named member, e.g. ta("F2[e]/(e^2)").
const TestAlgebra* ta_named(int p, const std::string& name);

// A[delta]/(delta^q), interned.  Basis index (i, j) -> i + dim(A) * j, so
// basis(dim(A)) * embed of A's unit represents delta itself.  Used to probe
// kernels of the duality pairing with a generic nilpotent element: testing
// both arguments over A itself is too weak (over F_p[e]/(e^2) the element
// [e] pairs trivially with everything over the same algebra since e*e = 0).
const TestAlgebra* nilpotent_extension(const TestAlgebra& A, int q);
// The coordinatewise embedding of A into nilpotent_extension(A, q).
TAElem ext_embed(const TestAlgebra& C, const TestAlgebra& A, const TAElem& a);
// The generator delta of C = nilpotent_extension(A, q).
TAElem ext_delta(const TestAlgebra& C, const TestAlgebra& A);

}  // namespace exactalg
