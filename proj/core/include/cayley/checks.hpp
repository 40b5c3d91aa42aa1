#ifndef CAYLEY_CHECKS_HPP
#define CAYLEY_CHECKS_HPP

#include <cstdint>
#include <vector>

#include "cayley/report.hpp"

namespace cayley {

/// End-to-end verification commands. Each builds the relevant algebraic
/// objects from scratch, evaluates every claim exactly, and returns a
/// deterministic report (failures are report entries, not exceptions;
/// exceptions signal invalid parameters).

struct P2Options {
    long degree_lo = 1;
    long degree_hi = 6;
    bool perturb_sign = false; // test hook: flips one projection sign
};
Report verify_p2(const P2Options& opts = {});

struct TwoPointsOptions {
    std::vector<std::uint64_t> primes{2, 3, 5, 7};
};
Report verify_two_points(const TwoPointsOptions& opts = {});

struct SectionOptions {
    int m = 4;
    std::vector<std::uint64_t> primes{2, 3, 5};
};
Report verify_section(const SectionOptions& opts);

struct ZeroDimOptions {
    int m = 4;
    std::vector<std::uint64_t> primes{2, 3, 5, 7};
};
Report verify_zero_dim(const ZeroDimOptions& opts);

struct RichardsonOptions {
    int m = 4;
};
Report verify_richardson(const RichardsonOptions& opts);

struct G36Options {
    std::uint64_t prime = 101;
};
Report search_g36(const G36Options& opts);

} // namespace cayley

#endif
