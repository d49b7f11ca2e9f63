#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exactalg {

// Error taxonomy shared by all modules.  Each failure mode the library can
// report carries one of these kinds so callers (and the CLI exit-code
// mapping) can dispatch without string matching.
enum class errkind {
    not_divisible,
    not_prime,
    domain_mismatch,
    budget_exceeded,
    precision_too_small,
    not_unit,
    not_finite,
    constant_term_nonzero,
    weight_out_of_range,
    invalid_frame_element,
    axiom_violation,
    elimination_failed,
    internal,
};

class math_error : public std::runtime_error {
  public:
    math_error(errkind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
    errkind kind;
};

[[noreturn]] inline void fail(errkind k, const std::string& msg) {
    throw math_error(k, msg);
}

inline void require(bool cond, errkind k, const std::string& msg) {
    if (!cond) fail(k, msg);
}

// Deterministic seedable RNG (splitmix64).  All randomized suites take an
// explicit seed so runs are reproducible byte-for-byte.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound).
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

  private:
    uint64_t state_;
};

}  // namespace exactalg
