#include "tau/check_report.hpp"

#include <sstream>

#include "json.hpp"

namespace tau {

std::string CheckReport::to_json_line() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["params"] = params;
    j["status"] = status();
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (const auto& witness : witnesses) w.push_back(witness);
    j["witnesses"] = std::move(w);
    j["duration"] = duration_seconds;
    return j.dump();
}

std::string CheckReport::to_text(std::size_t max_witnesses) const {
    std::ostringstream out;
    out << "[" << status() << "] " << name;
    if (!params.empty()) {
        out << " (";
        bool first = true;
        for (const auto& [key, value] : params) {
            if (!first) out << ", ";
            first = false;
            out << key << "=" << value;
        }
        out << ")";
    }
    out.precision(3);
    out << "  " << std::fixed << duration_seconds << "s";
    std::size_t shown = 0;
    for (const auto& witness : witnesses) {
        if (max_witnesses != 0 && shown == max_witnesses) {
            out << "\n  ... and " << (witnesses.size() - shown) << " more witnesses";
            break;
        }
        out << "\n  witness:";
        for (const auto& [key, value] : witness) out << " " << key << "=" << value;
        ++shown;
    }
    return out.str();
}

}  // namespace tau
