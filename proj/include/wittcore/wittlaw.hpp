#pragma once

// Universal structure polynomials for length-n p-typical Witt vectors,
// generated over the integers by the ghost-component recursion
//   w_i(x) = sum_{j<=i} p^j x_j^{p^(i-j)}
// and cached to disk.  All generated families are verified against the
// ghost identities before use.

#include <string>
#include <vector>

#include "exactalg/mpoly.hpp"

namespace wittcore {

using exactalg::MPoly;
using exactalg::ZZ;

struct WittLaw {
    int p = 0;
    int n = 0;
    // S[i], P[i]: 2n variables x0..x_{n-1}, y0..y_{n-1} (addition, product).
    std::vector<MPoly<ZZ>> S;
    std::vector<MPoly<ZZ>> P;
    // N[i]: n variables (negation).
    std::vector<MPoly<ZZ>> N;
    // Fr[i], i < n-1: n variables; the integral Frobenius W_n -> W_{n-1}.
    std::vector<MPoly<ZZ>> Fr;
};

// Ghost polynomial w_i in `arity` variables, block starting at `offset`.
MPoly<ZZ> ghost_poly(int p, int i, int arity, int offset);

// Generate the law from scratch (no cache involved); verifies ghost
// compatibility of every family.
WittLaw gen_witt_law_fresh(int p, int n);

// Cached access: loads from the cache directory (env WITTLAU_CACHE_DIR or
// ".witt_cache"), generating and atomically writing the file if absent.
// The returned pointer is interned for the program lifetime.
const WittLaw* witt_law(int p, int n);

// Explicit cache control (used by the CLI).
void set_cache_dir(const std::string& dir);
std::string cache_dir();
std::string cache_file_path(int p, int n);
void save_law(const WittLaw& law, const std::string& path);
WittLaw load_law(const std::string& path);

}  // namespace wittcore
