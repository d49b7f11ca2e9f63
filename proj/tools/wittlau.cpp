// Batch CLI: Witt-law cache management, exact Witt arithmetic, duality
// pairing checks, display sampling, the Lau pipeline, the truncated Zink
// complex, and the acceptance suite.  Every invocation emits one JSON
// artifact (stdout, and --out FILE when given).
//
// Exit codes: 0 all checks passed, 1 mathematical failure, 2 usage error,
// 3 budget exhaustion.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acceptance/acceptance.hpp"
#include "exactalg/testalgebra.hpp"
#include "json.hpp"
#include "laupipe/laupipe.hpp"
#include "semidisplay/semidisplay.hpp"
#include "wittcore/hatwitt.hpp"
#include "wittcore/wittlaw.hpp"

using exactalg::Fq;
using exactalg::FqCtx;
using exactalg::fq_ctx;
using exactalg::math_error;
using exactalg::TAElem;
using exactalg::TestAlgebra;
using nlohmann::json;
using semidisplay::DisplayDatum;
using semidisplay::WElem;
using wittcore::WittLaw;
using wittcore::WittVec;

namespace {

struct Emitter {
    std::string out_path;
    void emit(const json& j) const {
        std::cout << j.dump(2) << "\n";
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << j.dump(2) << "\n";
        }
    }
};

std::vector<int> parse_csv(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

WittVec<Fq> witt_from_csv(const WittLaw* law, const FqCtx* F,
                          const std::string& s, int n) {
    auto vals = parse_csv(s);
    exactalg::require(int(vals.size()) == n,
                      exactalg::errkind::domain_mismatch,
                      "expected " + std::to_string(n) + " components");
    std::vector<Fq> es;
    for (int v : vals) es.push_back(Fq::from_index(F, v));
    return WittVec<Fq>(law, es);
}

json witt_to_json(const WittVec<Fq>& w) {
    json a = json::array();
    for (int i = 0; i < w.law()->n; ++i) a.push_back(w.entry(i).str());
    return a;
}

DisplayDatum build_display(int p, int n, int d, int dprime,
                           const std::string& matrix, uint64_t seed) {
    const FqCtx* F = fq_ctx(p);
    if (matrix == "random")
        return semidisplay::random_display(seed, n, d, dprime, F);
    const WittLaw* law = wittcore::witt_law(p, n);
    if (matrix == "identity")
        return DisplayDatum::make(n, d, dprime, F,
                                  semidisplay::wmat_identity(law, F, d));
    if (matrix == "antidiagonal") {
        auto U = semidisplay::wmat_zero(law, F, d, d);
        for (int i = 0; i < d; ++i)
            U[size_t(i)][size_t(d - 1 - i)] = WElem::one(law, Fq(F, 0));
        return DisplayDatum::make(n, d, dprime, F, U);
    }
    exactalg::fail(exactalg::errkind::domain_mismatch,
                   "unknown matrix kind: " + matrix);
}

// Duality-pairing check for one (p, n, m): sampled adjunctions plus the
// exhaustive restricted-nondegeneracy scan over the zoo.
json pair_check(int p, int n, int m, int samples, uint64_t seed,
                bool& passed) {
    const WittLaw* lawn = wittcore::witt_law(p, n);
    const WittLaw* lawm = wittcore::witt_law(p, m);
    json per = json::array();
    passed = true;
    for (const TestAlgebra* A : exactalg::zoo(p)) {
        long pm = 1, pn = 1;
        for (int i = 0; i < m; ++i) pm *= p;
        for (int i = 0; i < n; ++i) pn *= p;
        std::vector<TAElem> Km, Kn;
        for (long i = 0; i < A->size(); ++i) {
            TAElem a = A->from_index(i);
            if (a.pow(pm).is_zero()) Km.push_back(a);
            if (a.pow(pn).is_zero()) Kn.push_back(a);
        }
        exactalg::Rng rng(seed ^ uint64_t(A->size()));
        long adj_ok = 0;
        for (int s = 0; s < samples; ++s) {
            std::vector<TAElem> es;
            for (int i = 0; i < n; ++i)
                es.push_back(A->from_index(long(rng.below(
                    uint64_t(A->size())))));
            WittVec<TAElem> x(lawn, es);
            // Hat entries killed by F^n keep the pairing against length-n
            // Witt vectors well defined.
            TAElem a = Kn[size_t(rng.below(uint64_t(Kn.size())))];
            auto y = wittcore::HatWitt::single(A, int(rng.below(2)), a);
            bool ok = wittcore::cartier_pairing(x.frob(), y) ==
                          wittcore::cartier_pairing(x, y.versch()) &&
                      wittcore::cartier_pairing(x.versch(), y) ==
                          wittcore::cartier_pairing(x, y.frob());
            passed = passed && ok;
            adj_ok += ok;
        }
        // Kernel scan of the restricted pairing W_n^{(F^m)} x W_m^{(F^n)}:
        // kernel points are detected against a generic nilpotent delta over
        // A[delta] (the pointwise test over A itself is too weak).
        bool left_trivial = true;
        {
            const TestAlgebra* C =
                exactalg::nilpotent_extension(*A, int(pn));
            TAElem delta = exactalg::ext_delta(*C, *A);
            std::vector<long> idx(size_t(n), 0);
            for (;;) {
                std::vector<TAElem> es;
                bool zero = true;
                for (int i = 0; i < n; ++i) {
                    const TAElem& a = Km[size_t(idx[size_t(i)])];
                    es.push_back(exactalg::ext_embed(*C, *A, a));
                    zero = zero && a.is_zero();
                }
                WittVec<TAElem> x(lawn, es);
                bool in_ker = true;
                for (int i = 0; in_ker && i < m; ++i)
                    in_ker = wittcore::cartier_pairing(
                                 x, wittcore::HatWitt::single(C, i, delta)) ==
                             C->one();
                if (in_ker != zero) left_trivial = false;
                int pos = 0;
                while (pos < n && ++idx[size_t(pos)] == long(Km.size()))
                    idx[size_t(pos++)] = 0;
                if (pos == n) break;
            }
        }
        bool right_trivial = true;
        {
            const TestAlgebra* C =
                exactalg::nilpotent_extension(*A, int(pm));
            TAElem delta = exactalg::ext_delta(*C, *A);
            std::vector<long> jdx(size_t(m), 0);
            for (;;) {
                std::map<int, TAElem> supp;
                bool zero = true;
                for (int i = 0; i < m; ++i) {
                    TAElem a = Kn[size_t(jdx[size_t(i)])];
                    if (!a.is_zero()) supp[i] = exactalg::ext_embed(*C, *A, a);
                    zero = zero && a.is_zero();
                }
                wittcore::HatWitt y(C, supp);
                bool in_ker = true;
                for (int i = 0; in_ker && i < n; ++i)
                    in_ker = wittcore::cartier_pairing(
                                 WittVec<TAElem>::teich(lawn, delta)
                                     .versch_pow(i),
                                 y) == C->one();
                if (in_ker != zero) right_trivial = false;
                int pos = 0;
                while (pos < m && ++jdx[size_t(pos)] == long(Kn.size()))
                    jdx[size_t(pos++)] = 0;
                if (pos == m) break;
            }
        }
        passed = passed && left_trivial && right_trivial;
        per.push_back({{"algebra", A->name()},
                       {"adjunction_samples_ok", adj_ok},
                       {"left_kernel_trivial", left_trivial},
                       {"right_kernel_trivial", right_trivial}});
        (void)lawm;
    }
    return per;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Witt / semidisplay / Lau group computations"};
    app.require_subcommand(1);
    Emitter em;
    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir,
                   "Witt-law cache directory (overrides WITTLAU_CACHE_DIR)");
    app.add_option("--out", em.out_path, "also write the JSON artifact here");

    int p = 2, n = 1, m = 1, d = 2, dprime = 1, k = 1, M = 4;
    int samples = 100, pairs = 10, criterion = 0;
    uint64_t seed = 1;
    std::string op = "add", xs, ys, matrix = "random", algebra, profile = "desk";

    auto* witt = app.add_subcommand("witt", "Witt-law cache and arithmetic");
    auto* witt_gen = witt->add_subcommand("gen", "generate the (p,n) law cache");
    witt_gen->add_option("--p", p, "prime")->required();
    witt_gen->add_option("--n", n, "truncation length")->required();
    auto* witt_eval = witt->add_subcommand("eval", "evaluate one Witt operation");
    witt_eval->add_option("--p", p)->required();
    witt_eval->add_option("--n", n)->required();
    witt_eval->add_option("--k", k, "field degree (F_{p^k})");
    witt_eval->add_option("--op", op, "add|mul|frob|versch|pmult|inv");
    witt_eval->add_option("--x", xs, "comma-separated components")->required();
    witt_eval->add_option("--y", ys, "second operand for add/mul");

    auto* pairc = app.add_subcommand("pair", "duality pairing checks");
    auto* pair_chk = pairc->add_subcommand("check", "adjunctions + nondegeneracy");
    pair_chk->add_option("--p", p)->required();
    pair_chk->add_option("--n", n);
    pair_chk->add_option("--m", m);
    pair_chk->add_option("--samples", samples);
    pair_chk->add_option("--seed", seed);

    auto* disp = app.add_subcommand("display", "display data");
    auto* disp_rand = disp->add_subcommand("random", "sample U in GL(d, W_n)");
    disp_rand->add_option("--p", p)->required();
    disp_rand->add_option("--n", n)->required();
    disp_rand->add_option("--d", d)->required();
    disp_rand->add_option("--dprime", dprime)->required();
    disp_rand->add_option("--seed", seed);

    auto* lau = app.add_subcommand("lau", "the Lau group pipeline");
    for (auto* sc : {lau->add_subcommand("analyze", "full three-route analysis"),
                     lau->add_subcommand("routes", "emit all three presentations"),
                     lau->add_subcommand("equivariance", "BP transport checks")}) {
        sc->add_option("--p", p)->required();
        sc->add_option("--n", n)->required();
        sc->add_option("--d", d)->required();
        sc->add_option("--dprime", dprime)->required();
        sc->add_option("--seed", seed);
        sc->add_option("--matrix", matrix, "random|identity|antidiagonal");
    }
    lau->get_subcommand("equivariance")->add_option("--pairs", pairs);

    auto* zink = app.add_subcommand("zink", "truncated Zink complex");
    auto* zink_coker = zink->add_subcommand("coker", "kernel/cokernel of 1-Phi");
    zink_coker->add_option("--p", p)->required();
    zink_coker->add_option("--n", n)->required();
    zink_coker->add_option("--d", d);
    zink_coker->add_option("--dprime", dprime);
    zink_coker->add_option("--seed", seed);
    zink_coker->add_option("--matrix", matrix, "random|identity|antidiagonal");
    zink_coker->add_option("--algebra", algebra, "zoo algebra name")->required();
    zink_coker->add_option("--M", M, "support truncation");

    auto* suite = app.add_subcommand("suite", "aggregate suites");
    auto* suite_acc = suite->add_subcommand("acceptance", "the twelve criteria");
    suite_acc->add_option("--profile", profile, "desk|quick");
    suite_acc->add_option("--criterion", criterion, "run a single criterion");

    // Let the global --cache-dir/--out appear after the subcommand too.
    for (auto* sc : app.get_subcommands({})) {
        sc->fallthrough();
        for (auto* nested : sc->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (!cache_dir.empty())
        wittcore::set_cache_dir(cache_dir);
    else if (!std::getenv("WITTLAU_CACHE_DIR"))
        wittcore::set_cache_dir(".witt_cache");

    try {
        if (witt_gen->parsed()) {
            wittcore::witt_law(p, n);
            em.emit({{"command", "witt gen"},
                     {"p", p},
                     {"n", n},
                     {"cache_file", wittcore::cache_file_path(p, n)}});
            return 0;
        }
        if (witt_eval->parsed()) {
            const FqCtx* F = fq_ctx(p, k);
            const WittLaw* law = wittcore::witt_law(p, n);
            auto x = witt_from_csv(law, F, xs, n);
            WittVec<Fq> r = x;
            if (op == "add" || op == "mul") {
                exactalg::require(!ys.empty(),
                                  exactalg::errkind::domain_mismatch,
                                  "--y required for " + op);
                auto y = witt_from_csv(law, F, ys, n);
                r = (op == "add") ? x + y : x * y;
            } else if (op == "frob")
                r = x.frob();
            else if (op == "versch")
                r = x.versch();
            else if (op == "pmult")
                r = x.p_mult();
            else if (op == "inv")
                r = x.inv();
            else
                exactalg::fail(exactalg::errkind::domain_mismatch,
                               "unknown op: " + op);
            em.emit({{"command", "witt eval"},
                     {"p", p},
                     {"n", n},
                     {"k", k},
                     {"op", op},
                     {"result", witt_to_json(r)}});
            return 0;
        }
        if (pair_chk->parsed()) {
            bool ok = false;
            json per = pair_check(p, n, m, samples, seed, ok);
            em.emit({{"command", "pair check"},
                     {"p", p},
                     {"n", n},
                     {"m", m},
                     {"seed", seed},
                     {"samples", samples},
                     {"passed", ok},
                     {"algebras", per}});
            return ok ? 0 : 1;
        }
        if (disp_rand->parsed()) {
            auto D = semidisplay::random_display(seed, n, d, dprime,
                                                 fq_ctx(p));
            json j = semidisplay::display_to_json(D);
            j["command"] = "display random";
            j["seed"] = seed;
            j["semidisplay"] =
                semidisplay::semidisplay_to_json(
                    semidisplay::semidisplay_of_display(D));
            em.emit(j);
            return 0;
        }
        if (lau->get_subcommand("analyze")->parsed()) {
            auto D = build_display(p, n, d, dprime, matrix, seed);
            auto R = laupipe::analyze_lau(D);
            json j = R.to_json();
            j["command"] = "lau analyze";
            j["display"] = semidisplay::display_to_json(D);
            j["seed"] = seed;
            em.emit(j);
            return 0;
        }
        if (lau->get_subcommand("routes")->parsed()) {
            auto D = build_display(p, n, d, dprime, matrix, seed);
            auto R = laupipe::analyze_lau(D);
            json j{{"command", "lau routes"},
                   {"seed", seed},
                   {"routes_agree", R.routes_agree},
                   {"adjoint", grpscheme::presentation_to_json(R.adjoint.pres)},
                   {"zink", grpscheme::presentation_to_json(R.zink.pres)},
                   {"economic",
                    grpscheme::presentation_to_json(R.economic.pres)}};
            em.emit(j);
            return R.routes_agree ? 0 : 1;
        }
        if (lau->get_subcommand("equivariance")->parsed()) {
            auto D = build_display(p, n, d, dprime, matrix, seed);
            bool all = true;
            json runs = json::array();
            for (int s = 0; s < pairs; ++s) {
                auto pr = laupipe::bp_sample(seed + 1 + uint64_t(s) * 7919, d,
                                             dprime, n, fq_ctx(p));
                bool member = laupipe::bp_member(pr);
                bool ok = member && laupipe::equivariance_check(D, pr);
                all = all && ok;
                runs.push_back({{"pair_seed", seed + 1 + uint64_t(s) * 7919},
                                {"member", member},
                                {"bijective", ok}});
            }
            em.emit({{"command", "lau equivariance"},
                     {"seed", seed},
                     {"pairs", pairs},
                     {"passed", all},
                     {"runs", runs}});
            return all ? 0 : 1;
        }
        if (zink_coker->parsed()) {
            const TestAlgebra* A = exactalg::ta_named(p, algebra);
            auto D = build_display(p, n, d, dprime, matrix, seed);
            auto S = semidisplay::semidisplay_of_display(D);
            auto r = laupipe::zink_complex_truncated(S, *A, M);
            em.emit({{"command", "zink coker"},
                     {"seed", seed},
                     {"algebra", r.algebra},
                     {"M", r.M},
                     {"kernel_size", r.kernel_size},
                     {"coker_size", r.coker_size},
                     {"stabilized", r.stabilized}});
            return r.kernel_size == 1 ? 0 : 1;
        }
        if (suite_acc->parsed()) {
            exactalg::require(profile == "desk" || profile == "quick",
                              exactalg::errkind::domain_mismatch,
                              "unknown profile: " + profile);
            bool quick = profile == "quick";
            std::vector<acceptance::CriterionResult> rs;
            if (criterion > 0)
                rs.push_back(acceptance::run_criterion(criterion, quick));
            else
                rs = acceptance::run_all(quick);
            bool all = true;
            for (const auto& r : rs) {
                std::cerr << "criterion " << r.id << ": "
                          << (r.passed ? "PASS" : "FAIL") << " — " << r.title
                          << " (" << r.detail << ")\n";
                all = all && r.passed;
            }
            json j = acceptance::results_to_json(rs);
            j["command"] = "suite acceptance";
            j["profile"] = profile;
            em.emit(j);
            return all ? 0 : 1;
        }
        std::cerr << "no subcommand executed\n";
        return 2;
    } catch (const math_error& e) {
        json j{{"error", e.what()}};
        em.emit(j);
        if (e.kind == exactalg::errkind::budget_exceeded ||
            e.kind == exactalg::errkind::precision_too_small)
            return 3;
        return 1;
    }
}
