#include "cayley/report.hpp"

#include <sstream>

#include <json.hpp>

namespace cayley {

const char* provenance_name(Provenance p) {
    switch (p) {
    case Provenance::reference: return "reference";
    case Provenance::derived: return "derived";
    case Provenance::trivial: return "trivial";
    }
    return "?";
}

bool Report::passed() const {
    for (const auto& c : claims)
        if (!c.pass) return false;
    return true;
}

const Claim* Report::first_failure() const {
    for (const auto& c : claims)
        if (!c.pass) return &c;
    return nullptr;
}

std::string Report::render_text(bool with_timings) const {
    std::ostringstream out;
    out << "check: " << check << " (v" << version << ")\n";
    for (const auto& [key, value] : params) out << "  " << key << ": " << value << "\n";
    for (const auto& c : claims) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.text
            << " | expected: " << c.expected << " | computed: " << c.computed << " ("
            << provenance_name(c.provenance) << ")";
        if (!c.pass && !c.witness.empty()) out << " | witness: " << c.witness;
        out << "\n";
    }
    for (const auto& n : notes) out << "note: " << n << "\n";
    if (with_timings)
        for (const auto& t : timings)
            out << "time: " << t.label << " " << t.ms << " ms\n";
    out << (passed() ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
    return out.str();
}

std::string Report::render_json(bool with_timings) const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["version"] = version;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params) p[key] = value;
    j["params"] = std::move(p);
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : claims) {
        nlohmann::ordered_json cj;
        cj["text"] = c.text;
        cj["expected"] = c.expected;
        cj["computed"] = c.computed;
        cj["pass"] = c.pass;
        cj["provenance"] = provenance_name(c.provenance);
        if (!c.witness.empty()) cj["witness"] = c.witness;
        j["claims"].push_back(std::move(cj));
    }
    if (!notes.empty()) j["notes"] = notes;
    if (with_timings) {
        j["timings_ms"] = nlohmann::ordered_json::object();
        for (const auto& t : timings) j["timings_ms"][t.label] = t.ms;
    }
    j["pass"] = passed();
    return j.dump(2) + "\n";
}

} // namespace cayley
