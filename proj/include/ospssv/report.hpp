#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ospssv {

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness; // failure detail or skip reason

    static Check pass(std::string name) { return {std::move(name), CheckStatus::Pass, {}}; }
    static Check fail(std::string name, std::string witness) {
        return {std::move(name), CheckStatus::Fail, std::move(witness)};
    }
    static Check skipped(std::string name, std::string reason) {
        return {std::move(name), CheckStatus::Skipped, std::move(reason)};
    }
};

struct VerificationReport {
    std::string campaign;
    nlohmann::json params = nlohmann::json::object();
    std::vector<Check> checks;
    long timing_ms = 0;

    void add(Check c) { checks.push_back(std::move(c)); }
    void require(const std::string& name, bool ok, const std::string& witness = "") {
        checks.push_back(ok ? Check::pass(name) : Check::fail(name, witness));
    }
    void merge(const VerificationReport& other);

    bool all_passed() const;
    std::size_t failures() const;
    std::size_t skipped() const;

    /// Deterministic ordering of checks by name.
    void sort_checks();

    nlohmann::json to_json(bool with_timing = false) const;
    std::string text() const;
};

} // namespace ospssv
