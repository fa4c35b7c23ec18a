#include "walks/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace walks {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// 8-bit mask over kAllSteps order.
unsigned mask_of(const StepSet& s) {
    unsigned m = 0;
    for (int i = 0; i < 8; ++i)
        if (s.has(i)) m |= 1u << i;
    return m;
}

StepSet set_of_mask(unsigned m) {
    StepSet s;
    for (int i = 0; i < 8; ++i)
        if (m & (1u << i))
            s.set_weight(kAllSteps[static_cast<std::size_t>(i)].dx,
                         kAllSteps[static_cast<std::size_t>(i)].dy, Rat(1));
    return s;
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog file: " + path);
    std::vector<CatalogEntry> out;
    std::string line;
    int lineno = 0;
    std::map<int, bool> ids;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(t);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(strip(f));
        if (fields.size() < 3)
            throw CatalogError("line " + std::to_string(lineno) + ": expected id, steps, nature[, source]");
        CatalogEntry e;
        try {
            e.model_id = std::stoi(fields[0]);
        } catch (...) {
            throw CatalogError("line " + std::to_string(lineno) + ": bad model id");
        }
        if (ids.count(e.model_id))
            throw CatalogError("line " + std::to_string(lineno) + ": duplicate model id");
        ids[e.model_id] = true;
        std::string steps = fields[1];
        std::replace(steps.begin(), steps.end(), ';', ',');
        try {
            e.steps = parse_stepset(steps);
        } catch (const StepSetError& err) {
            throw CatalogError("line " + std::to_string(lineno) + ": " + err.what());
        }
        e.expected_nature = fields[2];
        for (std::size_t i = 3; i < fields.size(); ++i)
            e.source_note += (i > 3 ? "," : "") + fields[i];
        if (!is_nonsingular(e.steps))
            throw CatalogError("line " + std::to_string(lineno) + ": singular step set in catalog");
        out.push_back(std::move(e));
    }
    return out;
}

void save_catalog(const std::string& path, const std::vector<CatalogEntry>& entries) {
    std::ofstream out(path);
    if (!out) throw CatalogError("cannot write catalog file: " + path);
    out << "# id, step-list (';'-separated), expected-nature, source\n";
    out << "# The 74 nonsingular unweighted small-step sets up to x<->y reflection.\n";
    for (const auto& e : entries) {
        std::string steps = serialize_stepset(e.steps);
        std::replace(steps.begin(), steps.end(), ',', ';');
        out << e.model_id << ", " << steps << ", " << e.expected_nature << ", " << e.source_note
            << "\n";
    }
}

std::vector<CatalogEntry> builtin_catalog() {
    struct Known {
        const char* steps;
        const char* nature;
        const char* source;
    };
    // Three-quadrant models with published results, in their usual order.
    static const Known known[14] = {
        {"N,E,S,W", "DF", "bousquet2016square"},
        {"NE,SE,SW,NW", "DF", "bousquet2016square"},
        {"N,NE,E,SE,S,SW,W,NW", "DF", "bousquet_wallner"},
        {"NE,S,W", "alg", "bousquet21+"},
        {"N,E,SW", "alg", "bousquet21+"},
        {"N,NE,E,S,SW,W", "alg", "bousquet21+"},
        {"N,NE,E,S,W", "D-alg", "dreyfus2020nature"},
        {"NE,S,SW,W", "D-trans", "dreyfus2020nature"},
        {"N,NE,E,SW", "D-trans", "dreyfus2020nature"},
        {"N,E,S,SW,W", "D-trans", "dreyfus2020nature"},
        {"N,NE,S,SW", "?", "budd2017winding"},
        {"N,SE,S,NW", "?", "budd2017winding"},
        {"E,S,NW", "?", "winding-angle enumeration"},
        {"N,E,SE,S,W,NW", "?", "winding-angle enumeration"},
    };

    std::vector<CatalogEntry> out;
    std::map<unsigned, bool> used;  // canonical masks already assigned
    auto canon = [](unsigned m) {
        unsigned r = mask_of(set_of_mask(m).reflected_diag());
        return std::min(m, r);
    };
    int next_id = 1;
    for (const auto& k : known) {
        CatalogEntry e;
        e.model_id = next_id++;
        e.steps = parse_stepset(k.steps);
        e.expected_nature = k.nature;
        e.source_note = k.source;
        used[canon(mask_of(e.steps))] = true;
        out.push_back(std::move(e));
    }
    for (unsigned m = 1; m < 256; ++m) {
        if (canon(m) != m) continue;
        StepSet s = set_of_mask(m);
        if (!is_nonsingular(s)) continue;
        if (used.count(m)) continue;
        CatalogEntry e;
        e.model_id = next_id++;
        e.steps = s;
        e.expected_nature = "?";
        e.source_note = "generated";
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace walks
