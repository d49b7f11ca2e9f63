#include "semidisplay/semidisplay.hpp"

#include <algorithm>
#include <utility>

namespace semidisplay {

using exactalg::errkind;
using exactalg::fail;
using exactalg::require;

// --- Witt matrix helpers -----------------------------------------------------

WMatrix wmat_zero(const WittLaw* law, const FqCtx* F, int rows, int cols) {
    WElem z = WElem::zero(law, Fq(F, 0));
    return WMatrix(rows, std::vector<WElem>(cols, z));
}

WMatrix wmat_identity(const WittLaw* law, const FqCtx* F, int d) {
    WMatrix m = wmat_zero(law, F, d, d);
    WElem one = WElem::one(law, Fq(F, 0));
    for (int i = 0; i < d; ++i) m[i][i] = one;
    return m;
}

WMatrix wmat_mul(const WMatrix& a, const WMatrix& b) {
    size_t r = a.size(), k = b.size(), c = b[0].size();
    require(a[0].size() == k, errkind::domain_mismatch, "matrix shape mismatch");
    WMatrix out(r, std::vector<WElem>(c, a[0][0]));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) {
            WElem s = a[i][0] * b[0][j];
            for (size_t t = 1; t < k; ++t) s += a[i][t] * b[t][j];
            out[i][j] = s;
        }
    return out;
}

WMatrix wmat_add(const WMatrix& a, const WMatrix& b) {
    WMatrix out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
    return out;
}

WMatrix wmat_transpose(const WMatrix& a) {
    WMatrix out(a[0].size(), std::vector<WElem>(a.size(), a[0][0]));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
    return out;
}

bool wmat_eq(const WMatrix& a, const WMatrix& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

std::vector<std::vector<Fq>> wmat_res(const WMatrix& a) {
    std::vector<std::vector<Fq>> out;
    for (const auto& row : a) {
        std::vector<Fq> r;
        for (const auto& x : row) r.push_back(x.entry(0));
        out.push_back(std::move(r));
    }
    return out;
}

WMatrix wmat_inv(const WMatrix& a) {
    size_t d = a.size();
    require(d > 0 && a[0].size() == d, errkind::domain_mismatch,
            "inverse of a non-square matrix");
    WMatrix m = a;
    WMatrix inv = wmat_identity(a[0][0].law(), a[0][0].entry(0).ctx(), int(d));
    // Gauss-Jordan over the local ring W_n(F_q): a pivot works iff it is a
    // unit, i.e. its residue is nonzero.
    for (size_t col = 0; col < d; ++col) {
        size_t piv = d;
        for (size_t r = col; r < d; ++r)
            if (m[r][col].is_unit()) {
                piv = r;
                break;
            }
        require(piv < d, errkind::not_unit, "matrix not invertible over W_n");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        WElem pinv = m[col][col].inv();
        for (size_t j = 0; j < d; ++j) {
            m[col][j] *= pinv;
            inv[col][j] *= pinv;
        }
        for (size_t r = 0; r < d; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            WElem f = m[r][col];
            for (size_t j = 0; j < d; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// --- displays ---------------------------------------------------------------

DisplayDatum DisplayDatum::make(int n, int d, int dprime, const FqCtx* field,
                                WMatrix U) {
    require(0 <= dprime && dprime <= d, errkind::domain_mismatch,
            "type (d, d') requires 0 <= d' <= d");
    DisplayDatum D;
    D.n = n;
    D.d = d;
    D.dprime = dprime;
    D.field = field;
    D.law = U.empty() ? nullptr : U[0][0].law();
    D.Uinv = wmat_inv(U);
    D.U = std::move(U);
    require(wmat_eq(wmat_mul(D.U, D.Uinv), wmat_identity(D.law, field, d)),
            errkind::internal, "display inverse certificate failed");
    return D;
}

DisplayDatum random_display(uint64_t seed, int n, int d, int dprime,
                            const FqCtx* field) {
    const WittLaw* law = wittcore::witt_law(field->p, n);
    Rng rng(seed);
    long q = 1;
    for (int i = 0; i < field->k; ++i) q *= field->p;
    for (;;) {
        WMatrix U = wmat_zero(law, field, d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                std::vector<Fq> e;
                for (int t = 0; t < n; ++t)
                    e.push_back(Fq::from_index(field, int(rng.below(q))));
                U[i][j] = WElem(law, std::move(e));
            }
        // Invertible over W_n(F_q) iff the residue matrix is invertible.
        std::vector<std::vector<Fq>> r = wmat_res(U);
        bool ok = true;
        for (int col = 0; col < d && ok; ++col) {
            int piv = -1;
            for (int i = col; i < d; ++i)
                if (!r[i][col].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) {
                ok = false;
                break;
            }
            std::swap(r[piv], r[col]);
            Fq pi = r[col][col].inv();
            for (int j = 0; j < d; ++j) r[col][j] = r[col][j] * pi;
            for (int i = 0; i < d; ++i) {
                if (i == col) continue;
                Fq f = r[i][col];
                for (int j = 0; j < d; ++j)
                    r[i][j] = r[i][j] - f * r[col][j];
            }
        }
        if (ok) return DisplayDatum::make(n, d, dprime, field, std::move(U));
    }
}

// --- semidisplays -------------------------------------------------------------

// Canonicalize an F1 column: zero the top Witt slot (F1 is defined mod J_n).
static std::vector<WElem> clip_top(const std::vector<WElem>& col) {
    std::vector<WElem> out;
    for (const WElem& x : col) {
        std::vector<Fq> e = x.entries();
        e.back() = exactalg::ring_zero(e.back());
        out.emplace_back(x.law(), std::move(e));
    }
    return out;
}

Semidisplay semidisplay_of_display(const DisplayDatum& D) {
    Semidisplay S;
    S.n = D.n;
    S.d = D.d;
    S.dprime = D.dprime;
    S.field = D.field;
    S.law = D.law;
    for (int j = 0; j < D.dprime; ++j) {
        std::vector<WElem> col;
        for (int i = 0; i < D.d; ++i) col.push_back(D.U[i][j]);
        S.f_cols.push_back(std::move(col));
    }
    for (int j = D.dprime; j < D.d; ++j) {
        std::vector<WElem> col;
        for (int i = 0; i < D.d; ++i) col.push_back(D.U[i][j]);
        S.f1_cols.push_back(clip_top(col));
    }
    return S;
}

Semidisplay unit_semidisplay(int n, const FqCtx* field) {
    const WittLaw* law = wittcore::witt_law(field->p, n);
    Semidisplay S;
    S.n = n;
    S.d = 1;
    S.dprime = 1;
    S.field = field;
    S.law = law;
    S.f_cols.push_back({WElem::one(law, Fq(field, 0))});
    return S;
}

std::vector<WElem> f_on_L(const Semidisplay& S, int l) {
    std::vector<WElem> out;
    for (const WElem& x : S.f1_cols[l]) out.push_back(x.p_mult());
    return out;
}

Semidisplay tensor_semidisplays(const Semidisplay& a, const Semidisplay& b) {
    require(a.n == b.n && a.field == b.field, errkind::domain_mismatch,
            "tensor factors over different frames");
    Semidisplay S;
    S.n = a.n;
    S.d = a.d * b.d;
    S.dprime = a.dprime * b.dprime;
    S.field = a.field;
    S.law = a.law;

    // Basis order for P tensor P': T pairs (t, t') first, then the
    // remaining pairs (i, i') lexicographically.
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < a.dprime; ++i)
        for (int j = 0; j < b.dprime; ++j) order.push_back({i, j});
    for (int i = 0; i < a.d; ++i)
        for (int j = 0; j < b.d; ++j)
            if (i >= a.dprime || j >= b.dprime) order.push_back({i, j});
    std::vector<int> pos(size_t(a.d) * b.d, -1);
    for (size_t k = 0; k < order.size(); ++k)
        pos[size_t(order[k].first) * b.d + order[k].second] = int(k);

    auto f_col_b = [&](int j) {
        return j < b.dprime ? b.f_cols[j] : f_on_L(b, j - b.dprime);
    };

    // Kronecker product of columns, reindexed into the chosen basis order.
    auto kron = [&](const std::vector<WElem>& x, const std::vector<WElem>& y) {
        std::vector<WElem> col(size_t(a.d) * b.d, x[0]);
        for (int i = 0; i < a.d; ++i)
            for (int j = 0; j < b.d; ++j)
                col[pos[size_t(i) * b.d + j]] = x[i] * y[j];
        return col;
    };

    for (const auto& [i, j] : order) {
        bool ta = i < a.dprime, tb = j < b.dprime;
        if (ta && tb) {
            // T tensor T': F'' = F tensor F'.
            S.f_cols.push_back(kron(a.f_cols[i], b.f_cols[j]));
        } else if (ta) {
            // T tensor L': F1'' = F tensor F1'.
            S.f1_cols.push_back(
                clip_top(kron(a.f_cols[i], b.f1_cols[j - b.dprime])));
        } else if (tb) {
            // L tensor T': F1'' = F1 tensor F.
            S.f1_cols.push_back(
                clip_top(kron(a.f1_cols[i - a.dprime], b.f_cols[j])));
        } else {
            // L tensor L': F1'' = F1 tensor F (the two construction formulas agree
            // because F = p F1 on L).
            S.f1_cols.push_back(
                clip_top(kron(a.f1_cols[i - a.dprime], f_col_b(j))));
        }
    }
    return S;
}

DisplayDatum dual_display(const DisplayDatum& D) {
    // Weights are complemented, so the T and L blocks swap; in matrix terms
    // the dual structure map is the inverse transpose conjugated by the
    // block-swap permutation.
    int d = D.d, c = D.d - D.dprime;
    WMatrix it = wmat_transpose(D.Uinv);
    WMatrix out = wmat_zero(D.law, D.field, d, d);
    auto perm = [&](int i) { return i < c ? i + D.dprime : i - c; };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out[i][j] = it[perm(i)][perm(j)];
    return DisplayDatum::make(D.n, d, c, D.field, std::move(out));
}

// --- graded modules -----------------------------------------------------------

Semidisplay semidisplay_of_graded(const GradedModuleDatum& M) {
    int d = int(M.weights.size());
    require(d > 0, errkind::domain_mismatch, "empty graded module");
    for (int w : M.weights)
        require(w == 0 || w == 1, errkind::weight_out_of_range,
                "graded module weights must lie in {0,1}");
    for (int i = 0; i + 1 < d; ++i)
        require(M.weights[i] >= M.weights[i + 1], errkind::domain_mismatch,
                "weights must be sorted descending");

    // Dictionary between the graded picture and the (T, L) block form:
    // a weight-0 summand has Q-part I_n (T role, full F column) and a
    // weight-1 summand has Q-part t*M_1 = W_n (L role, F1 column).
    std::vector<int> torder, lorder;
    for (int i = 0; i < d; ++i)
        (M.weights[i] == 0 ? torder : lorder).push_back(i);
    std::vector<int> order = torder;
    order.insert(order.end(), lorder.begin(), lorder.end());

    Semidisplay S;
    S.n = M.law->n;
    S.d = d;
    S.dprime = int(torder.size());
    S.field = M.field;
    S.law = M.law;
    auto column = [&](int j) {
        std::vector<WElem> col;
        for (int i : order) col.push_back(M.f[i][j]);
        return col;
    };
    for (int j : torder) S.f_cols.push_back(column(j));
    for (int j : lorder) S.f1_cols.push_back(clip_top(column(j)));
    return S;
}

PiAResult pi_a(const std::vector<int>& weights, int a) {
    PiAResult r;
    for (int w : weights) {
        require(w >= 0, errkind::weight_out_of_range,
                "pi_a expects nonnegative weights");
        if (w > a) {
            r.weights.push_back(a);
            r.t_powers.push_back(w - a);
        } else {
            r.weights.push_back(w);
            r.t_powers.push_back(0);
        }
    }
    return r;
}

// --- adjoint datum ------------------------------------------------------------

std::vector<std::pair<int, int>> adjoint_basis(int d, int dprime) {
    std::vector<std::pair<int, int>> order;
    for (int a = 0; a < dprime; ++a)
        for (int b = dprime; b < d; ++b) order.push_back({a, b});
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (!(a < dprime && b >= dprime)) order.push_back({a, b});
    return order;
}

Semidisplay adjoint_semidisplay(const DisplayDatum& D) {
    int d = D.d, dp = D.dprime;
    auto order = adjoint_basis(d, dp);
    std::vector<int> pos(size_t(d) * d, -1);
    for (size_t k = 0; k < order.size(); ++k)
        pos[size_t(order[k].first) * d + order[k].second] = int(k);
    auto weight = [&](int a, int b) {
        return (a < dp ? 1 : 0) - (b < dp ? 1 : 0);
    };

    // Ad_U(E_ab) = U E_ab U^{-1}; entry (i,j) is U_ia * (U^{-1})_bj.
    auto ad_col = [&](int a, int b) {
        std::vector<WElem> col(size_t(d) * d, D.U[0][0]);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                col[pos[size_t(i) * d + j]] = D.U[i][a] * D.Uinv[b][j];
        return col;
    };

    Semidisplay S;
    S.n = D.n;
    S.d = d * d;
    S.dprime = dp * (d - dp);
    S.field = D.field;
    S.law = D.law;
    for (const auto& [a, b] : order) {
        int w = weight(a, b);
        std::vector<WElem> col = ad_col(a, b);
        if (w == 1) {
            // g_1: F = p^{1-1} Ad_U = Ad_U.
            S.f_cols.push_back(std::move(col));
        } else {
            // g_i, i <= 0: F1 = p^{-i} Ad_U.
            for (WElem& x : col) x = x.p_pow_mult(-w);
            S.f1_cols.push_back(clip_top(col));
        }
    }
    return S;
}

// --- dimension audit -----------------------------------------------------------

long dim_sdisp_rig(int n, int d, int dprime) {
    long dim = 0;
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) dim += (j < dprime) ? n : n - 1;
    return dim;
}

long dim_h_group(int n, int d, int dprime) {
    long dim = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            bool in_12 = (i < dprime && j >= dprime);
            dim += in_12 ? n - 1 : n;  // the (1,2) block lies in I_n
        }
    return dim;
}

long dim_disp_rig(int n, int d) { return long(n) * d * d; }

long dim_bp_group(int n, int d, int dprime) {
    // Free parameters: h_11, h_21, h_22 over W_n and g_12 over W_n with
    // h_12 = V(g_12); all remaining g blocks are determined by h.
    long dim = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!(i < dprime && j >= dprime)) dim += n;  // h_11, h_21, h_22
    dim += long(n) * dprime * (d - dprime);              // g_12
    return dim;
}

// --- serialization -------------------------------------------------------------

static nlohmann::json welem_to_json(const WElem& x) {
    nlohmann::json a = nlohmann::json::array();
    for (const Fq& c : x.entries()) a.push_back(c.str());
    return a;
}

nlohmann::json wmat_to_json(const WMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(welem_to_json(x));
        rows.push_back(r);
    }
    return rows;
}

nlohmann::json display_to_json(const DisplayDatum& D) {
    return {{"n", D.n},
            {"d", D.d},
            {"d_prime", D.dprime},
            {"p", D.field->p},
            {"q_degree", D.field->k},
            {"U", wmat_to_json(D.U)}};
}

nlohmann::json semidisplay_to_json(const Semidisplay& S) {
    auto cols = [&](const std::vector<std::vector<WElem>>& cc) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& col : cc) {
            nlohmann::json c = nlohmann::json::array();
            for (const auto& x : col) c.push_back(welem_to_json(x));
            out.push_back(c);
        }
        return out;
    };
    return {{"n", S.n},
            {"d", S.d},
            {"d_prime", S.dprime},
            {"p", S.field->p},
            {"f_columns", cols(S.f_cols)},
            {"f1_columns", cols(S.f1_cols)}};
}

}  // namespace semidisplay
