#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

namespace tau {

// One counterexample, as ordered key/value pairs.
using Witness = std::map<std::string, std::string>;

// Result of one verification suite. Status is derived: FAIL iff any witness
// was recorded.
struct CheckReport {
    std::string name;
    std::map<std::string, std::string> params;
    std::vector<Witness> witnesses;
    double duration_seconds = 0.0;

    bool passed() const { return witnesses.empty(); }
    const char* status() const { return witnesses.empty() ? "PASS" : "FAIL"; }

    std::string to_json_line() const;
    // Multi-line human-readable rendering; witness listing is truncated after
    // max_witnesses entries (0 = unlimited).
    std::string to_text(std::size_t max_witnesses = 20) const;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace tau
