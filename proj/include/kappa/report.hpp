#ifndef KAPPA_REPORT_HPP
#define KAPPA_REPORT_HPP

#include <string>
#include <vector>

namespace kappa {

enum class Status { Pass, Fail, Inconclusive };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "inconclusive";
    }
}

struct CheckResult {
    std::string label;
    Status status = Status::Pass;
    std::string witness;       // offending monomial / coefficient on failure
    bool informational = false; // excluded from the suite pass criterion
};

struct Report {
    std::string suite;
    std::vector<CheckResult> results;

    void add(std::string label, Status s, std::string witness = "", bool informational = false) {
        results.push_back({std::move(label), s, std::move(witness), informational});
    }
    void add(std::string label, bool ok, std::string witness = "") {
        add(std::move(label), ok ? Status::Pass : Status::Fail, std::move(witness));
    }

    bool passed() const {
        for (const auto& r : results)
            if (!r.informational && r.status != Status::Pass) return false;
        return true;
    }
    bool has_failure() const {
        for (const auto& r : results)
            if (!r.informational && r.status == Status::Fail) return true;
        return false;
    }
};

} // namespace kappa

#endif
