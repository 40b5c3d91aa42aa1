#include "cayley/ideal_io.hpp"

#include <sstream>

namespace cayley {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

IdealFileData parse_ideal_file(const std::string& text) {
    IdealFileData data;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        if (!have_header) {
            if (line.rfind("ring:", 0) != 0)
                throw Error("ideal file must start with a 'ring: VARS over Q|Fp' header");
            std::string rest = strip(line.substr(5));
            auto over = rest.rfind(" over ");
            if (over == std::string::npos) throw Error("ring header is missing 'over'");
            std::string vars = rest.substr(0, over);
            std::string dom = strip(rest.substr(over + 6));
            for (auto& ch : vars)
                if (ch == ',') ch = ' ';
            std::istringstream vs(vars);
            std::string v;
            while (vs >> v) data.vars.push_back(v);
            if (data.vars.empty()) throw Error("ring header names no variables");
            if (dom == "Q") {
                data.rationals = true;
            } else if (dom.size() > 1 && dom[0] == 'F') {
                data.rationals = false;
                data.prime = std::stoull(dom.substr(1));
            } else {
                throw Error("unknown coefficient domain '" + dom + "'");
            }
            have_header = true;
            continue;
        }
        data.polys.push_back(line);
    }
    if (!have_header) throw Error("ideal file has no ring header");
    return data;
}

} // namespace cayley
