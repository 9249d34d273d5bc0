#ifndef BIPLANAR_REPORT_HPP
#define BIPLANAR_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

namespace biplanar {

// Accumulates named pass/fail checks; overall is their conjunction.
struct VerificationReport {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };

    std::vector<Check> checks;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }

    bool overall() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string text() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL");
            if (!c.detail.empty()) os << " (" << c.detail << ")";
            os << "\n";
        }
        os << "overall: " << (overall() ? "pass" : "FAIL") << "\n";
        return os.str();
    }
};

} // namespace biplanar

#endif
