#include "exactalg/groebner.hpp"

#include <algorithm>

namespace exactalg {

namespace {

MPoly<Fq> make_monic(const MPoly<Fq>& f) {
    if (f.is_zero()) return f;
    return f.scaled(f.leading().second.inv());
}

MPoly<Fq> s_poly(const MPoly<Fq>& f, const MPoly<Fq>& g) {
    const auto& lf = f.leading();
    const auto& lg = g.leading();
    Mono l = mono_lcm(lf.first, lg.first);
    MPoly<Fq> a = f.term_mul(mono_div(l, lf.first), lg.second);
    MPoly<Fq> b = g.term_mul(mono_div(l, lg.first), lf.second);
    return a - b;
}

}  // namespace

MPoly<Fq> normal_form(const MPoly<Fq>& f0, const std::vector<MPoly<Fq>>& G) {
    MPoly<Fq> f = f0;
    MPoly<Fq> r(f.arity(), f.order(), f.proto());
    while (!f.is_zero()) {
        const auto lt = f.leading();
        bool reduced = false;
        for (const MPoly<Fq>& g : G) {
            if (g.is_zero()) continue;
            const auto& glt = g.leading();
            if (!mono_divides(glt.first, lt.first)) continue;
            Fq c = lt.second * glt.second.inv();
            f -= g.term_mul(mono_div(lt.first, glt.first), c);
            reduced = true;
            break;
        }
        if (!reduced) {
            auto t = MPoly<Fq>::monomial(f.arity(), f.order(), lt.first,
                                         lt.second);
            r += t;
            f -= t;
        }
    }
    return r;
}

GroebnerBasis groebner(const std::vector<MPoly<Fq>>& gens, MonOrder ord,
                       long budget) {
    std::vector<MPoly<Fq>> G;
    for (const MPoly<Fq>& g : gens)
        if (!g.is_zero()) G.push_back(make_monic(g.with_order(ord)));

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) pairs.push_back({i, j});

    long steps = 0;
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        require(++steps <= budget, errkind::budget_exceeded,
                "groebner step budget exhausted");
        const Mono& mi = G[i].leading().first;
        const Mono& mj = G[j].leading().first;
        // Product criterion: coprime leading monomials reduce to zero.
        if (mono_lcm(mi, mj) == mono_mul(mi, mj)) continue;
        MPoly<Fq> s = normal_form(s_poly(G[i], G[j]), G);
        if (s.is_zero()) continue;
        s = make_monic(s);
        size_t k = G.size();
        G.push_back(s);
        for (size_t t = 0; t < k; ++t) pairs.push_back({t, k});
    }

    // Minimalize: process by ascending leading monomial and keep a
    // generator only if no kept leading monomial divides its own.
    std::sort(G.begin(), G.end(), [ord](const MPoly<Fq>& a,
                                        const MPoly<Fq>& b) {
        return mono_cmp(a.leading().first, b.leading().first, ord) < 0;
    });
    std::vector<MPoly<Fq>> unique;
    for (const MPoly<Fq>& g : G) {
        bool redundant = false;
        for (const MPoly<Fq>& h : unique)
            if (mono_divides(h.leading().first, g.leading().first)) {
                redundant = true;
                break;
            }
        if (!redundant) unique.push_back(g);
    }

    // Reduce tails: replace each by its normal form against the others.
    std::vector<MPoly<Fq>> reduced;
    for (size_t i = 0; i < unique.size(); ++i) {
        std::vector<MPoly<Fq>> others;
        for (size_t j = 0; j < unique.size(); ++j)
            if (j != i) others.push_back(unique[j]);
        MPoly<Fq> nf = normal_form(unique[i], others);
        if (!nf.is_zero()) reduced.push_back(make_monic(nf));
    }
    std::sort(reduced.begin(), reduced.end(),
              [ord](const MPoly<Fq>& a, const MPoly<Fq>& b) {
                  return mono_cmp(a.leading().first, b.leading().first, ord) >
                         0;
              });
    return GroebnerBasis{ord, reduced};
}

bool in_ideal(const MPoly<Fq>& f, const GroebnerBasis& gb) {
    return normal_form(f.with_order(gb.ord), gb.gens).is_zero();
}

namespace {

// Per-variable pure-power bounds from the leading monomials; empty if the
// quotient is infinite-dimensional.
bool pure_power_bounds(const GroebnerBasis& gb, int arity,
                       std::vector<int>& bound) {
    bound.assign(arity, -1);
    for (const MPoly<Fq>& g : gb.gens) {
        const Mono& m = g.leading().first;
        int var = -1, cnt = 0;
        for (int i = 0; i < arity; ++i)
            if (m[i] > 0) { var = i; ++cnt; }
        if (cnt == 1) {
            if (bound[var] < 0 || m[var] < bound[var]) bound[var] = m[var];
        }
        if (cnt == 0) { bound.assign(arity, 0); return true; }  // ideal = (1)
    }
    for (int i = 0; i < arity; ++i)
        if (bound[i] < 0) return false;
    return true;
}

void count_standard(const GroebnerBasis& gb, const std::vector<int>& bound,
                    Mono& cur, int var, long& count, std::vector<Mono>* out) {
    if (var == int(bound.size())) {
        for (const MPoly<Fq>& g : gb.gens)
            if (mono_divides(g.leading().first, cur)) return;
        ++count;
        if (out) out->push_back(cur);
        return;
    }
    for (int e = 0; e < bound[var]; ++e) {
        cur[var] = e;
        count_standard(gb, bound, cur, var + 1, count, out);
    }
    cur[var] = 0;
}

}  // namespace

long quotient_dim(const GroebnerBasis& gb) {
    if (gb.gens.empty()) return -1;  // zero ideal (caller knows arity > 0)
    int arity = gb.gens[0].arity();
    if (arity == 0) return gb.gens.empty() ? -1 : 0;
    std::vector<int> bound;
    if (!pure_power_bounds(gb, arity, bound)) return -1;
    long count = 0;
    Mono cur(arity, 0);
    count_standard(gb, bound, cur, 0, count, nullptr);
    return count;
}

std::vector<Mono> standard_monomials(const GroebnerBasis& gb) {
    require(!gb.gens.empty(), errkind::not_finite,
            "zero ideal has no finite monomial basis");
    int arity = gb.gens[0].arity();
    std::vector<int> bound;
    require(pure_power_bounds(gb, arity, bound), errkind::not_finite,
            "quotient is infinite-dimensional");
    long count = 0;
    std::vector<Mono> out;
    Mono cur(arity, 0);
    count_standard(gb, bound, cur, 0, count, &out);
    return out;
}

long tangent_dim(const std::vector<MPoly<Fq>>& eqs, int arity) {
    if (eqs.empty()) return arity;

    // Gaussian elimination on the matrix of linear parts.
    std::vector<std::vector<Fq>> rows;
    for (const MPoly<Fq>& f : eqs) {
        require(ring_is_zero(f.constant_term()), errkind::constant_term_nonzero,
                "equation does not vanish at the origin");
        std::vector<Fq> row;
        for (int i = 0; i < arity; ++i) row.push_back(f.linear_coeff(i));
        rows.push_back(row);
    }
    int rank = 0;
    for (int col = 0; col < arity && rank < int(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < int(rows.size()); ++r)
            if (!rows[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        Fq inv = rows[rank][col].inv();
        for (int c = 0; c < arity; ++c) rows[rank][c] *= inv;
        for (int r = 0; r < int(rows.size()); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Fq f = rows[r][col];
            for (int c = 0; c < arity; ++c)
                rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return arity - rank;
}

TAElem eval_at(const MPoly<Fq>& f, const std::vector<TAElem>& pt,
               const TestAlgebra& A) {
    return f.eval_with(pt, A.zero(),
                       [&](const Fq& c) { return A.embed(c); });
}

std::vector<std::vector<TAElem>> enumerate_points(
    const std::vector<MPoly<Fq>>& eqs, const TestAlgebra& A, int arity,
    long budget, const std::vector<int>& order) {
    std::vector<int> ord = order;
    if (ord.empty())
        for (int i = 0; i < arity; ++i) ord.push_back(i);
    require(int(ord.size()) == arity, errkind::domain_mismatch,
            "enumeration order length mismatch");
    std::vector<int> pos(size_t(arity), -1);
    for (int i = 0; i < arity; ++i) pos[size_t(ord[i])] = i;

    // Schedule each equation at the first depth where all of its variables
    // are assigned; backtracking then prunes as early as possible.
    std::vector<std::vector<int>> sched(size_t(arity) + 1);
    for (size_t e = 0; e < eqs.size(); ++e) {
        int depth = 0;
        for (const auto& [m, c] : eqs[e].terms())
            for (size_t v = 0; v < m.size(); ++v)
                if (m[v] > 0) depth = std::max(depth, pos[v] + 1);
        sched[size_t(depth)].push_back(int(e));
    }
    for (int e : sched[0])
        if (!eqs[size_t(e)].is_zero()) return {};

    std::vector<std::vector<TAElem>> sols;
    std::vector<TAElem> pt(size_t(arity), A.zero());
    long nodes = 0;
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == arity) {
            sols.push_back(pt);
            return;
        }
        for (long v = 0; v < A.size(); ++v) {
            require(++nodes <= budget, errkind::budget_exceeded,
                    "point enumeration budget exhausted");
            pt[size_t(ord[size_t(depth)])] = A.from_index(v);
            bool ok = true;
            for (int e : sched[size_t(depth) + 1])
                if (!eval_at(eqs[size_t(e)], pt, A).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok) self(self, depth + 1);
        }
        pt[size_t(ord[size_t(depth)])] = A.zero();
    };
    if (arity == 0) {
        sols.push_back({});
    } else {
        dfs(dfs, 0);
    }
    std::sort(sols.begin(), sols.end());
    return sols;
}

}  // namespace exactalg
