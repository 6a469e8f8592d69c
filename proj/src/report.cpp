#include "ospssv/report.hpp"

#include <algorithm>
#include <sstream>

namespace ospssv {

void VerificationReport::merge(const VerificationReport& other) {
    for (const auto& c : other.checks)
        checks.push_back(c);
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.status != CheckStatus::Fail; });
}

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(),
        [](const Check& c) { return c.status == CheckStatus::Fail; }));
}

std::size_t VerificationReport::skipped() const {
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(),
        [](const Check& c) { return c.status == CheckStatus::Skipped; }));
}

void VerificationReport::sort_checks() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
    nlohmann::json j;
    j["campaign"] = campaign;
    j["params"] = params;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        switch (c.status) {
        case CheckStatus::Pass: jc["status"] = "pass"; break;
        case CheckStatus::Fail: jc["status"] = "fail"; break;
        case CheckStatus::Skipped: jc["status"] = "skipped: singular parameters"; break;
        }
        if (!c.witness.empty())
            jc["witness"] = c.witness;
        arr.push_back(jc);
    }
    j["checks"] = arr;
    j["timing_ms"] = with_timing ? timing_ms : 0;
    return j;
}

std::string VerificationReport::text() const {
    std::ostringstream os;
    os << "campaign: " << campaign;
    if (!params.empty())
        os << " " << params.dump();
    os << "\n";
    for (const auto& c : checks) {
        const char* s = c.status == CheckStatus::Pass
                            ? "pass"
                            : (c.status == CheckStatus::Fail ? "FAIL" : "skipped: singular parameters");
        os << "  [" << s << "] " << c.name;
        if (!c.witness.empty())
            os << " -- " << c.witness;
        os << "\n";
    }
    os << (all_passed() ? "RESULT: pass" : "RESULT: fail") << " (" << checks.size()
       << " checks, " << failures() << " failures, " << skipped() << " skipped)\n";
    return os.str();
}

} // namespace ospssv
