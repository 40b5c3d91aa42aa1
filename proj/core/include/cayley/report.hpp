#ifndef CAYLEY_REPORT_HPP
#define CAYLEY_REPORT_HPP

#include <string>
#include <vector>

namespace cayley {

/// Where a claim's expected value comes from: `reference` for values stated
/// by the result being reproduced, `derived` for values computed by an
/// independent oracle, `trivial` for values forced by definitions.
enum class Provenance { reference, derived, trivial };

const char* provenance_name(Provenance p);

struct Claim {
    std::string text;
    std::string expected;
    std::string computed;
    bool pass = false;
    Provenance provenance = Provenance::trivial;
    std::string witness; // first counterexample object, in the polynomial grammar
};

struct Timing {
    std::string label;
    double ms = 0.0;
};

/// Machine-readable verification report. Deterministic given parameters:
/// rendering with timings suppressed is byte-identical across runs.
struct Report {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Claim> claims;
    std::vector<std::string> notes;
    std::vector<Timing> timings;
    std::string version;

    bool passed() const;
    const Claim* first_failure() const;

    std::string render_text(bool with_timings = true) const;
    std::string render_json(bool with_timings = true) const;
};

} // namespace cayley

#endif
