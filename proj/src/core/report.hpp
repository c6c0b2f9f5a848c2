#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nonloc {

/// Line-oriented verifier/simulator output. `checked` and `violations`
/// feed the machine trailer and the process exit status (0 iff clean).
struct Report {
    std::vector<std::string> lines;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;

    void add(std::string line) { lines.push_back(std::move(line)); }

    bool clean() const { return violations == 0; }

    std::string body() const {
        std::string out;
        for (const auto& line : lines) {
            out += line;
            out += '\n';
        }
        return out;
    }

    std::string trailer() const {
        return "# checked=" + std::to_string(checked) +
               " violations=" + std::to_string(violations) +
               " status=" + (clean() ? "clean" : "violations");
    }
};

}  // namespace nonloc
