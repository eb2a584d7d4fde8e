#include "coble_cli/certificate.hpp"

#include <sstream>

#include "coble/digest.hpp"

namespace coble::cli {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::paper: return "paper";
        case Provenance::trivial: return "trivial";
        case Provenance::derived: return "derived";
    }
    return "derived";
}

void Certificate::expect(std::string name, json expected, json actual, Provenance p) {
    const bool pass = expected == actual;
    checks_.push_back({std::move(name), std::move(expected), p, std::move(actual), pass});
}

void Certificate::require(std::string name, bool ok, Provenance p, json detail) {
    json actual = detail.is_null() ? json(ok) : json{{"holds", ok}, {"detail", std::move(detail)}};
    checks_.push_back({std::move(name), true, p, std::move(actual), ok});
}

void Certificate::merge(const Certificate& other, const std::string& prefix) {
    for (auto c : other.checks_) {
        c.name = prefix + c.name;
        checks_.push_back(std::move(c));
    }
    for (const auto& [k, v] : other.outputs_.items()) outputs_[prefix + k] = v;
}

bool Certificate::all_pass() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

json Certificate::hashed_part() const {
    json checks = json::array();
    for (const auto& c : checks_)
        checks.push_back({{"name", c.name},
                          {"expected", c.expected},
                          {"provenance", to_string(c.provenance)},
                          {"actual", c.actual},
                          {"pass", c.pass}});
    return {{"command", command_}, {"inputs", inputs_}, {"checks", checks}, {"outputs", outputs_}};
}

std::string Certificate::artifact_hash() const { return sha256_hex(hashed_part().dump()); }

json Certificate::to_json() const {
    json j = hashed_part();
    j["timing_ms"] = timing_ms_;
    j["artifact_hash"] = artifact_hash();
    return j;
}

std::string Certificate::to_text() const {
    std::ostringstream os;
    os << command_ << "  " << inputs_.dump() << "\n";
    for (const auto& c : checks_) {
        os << (c.pass ? "  PASS  " : "  FAIL  ") << c.name;
        if (!c.pass || !c.expected.is_boolean()) os << "  expected " << c.expected.dump() << " got " << c.actual.dump();
        os << "  (" << to_string(c.provenance) << ")\n";
    }
    for (const auto& [k, v] : outputs_.items()) {
        std::string s = v.dump();
        if (s.size() > 200) s = s.substr(0, 197) + "...";
        os << "  " << k << " = " << s << "\n";
    }
    os << "  " << (all_pass() ? "all checks pass" : "checks failed") << ", " << timing_ms_ << " ms, " << artifact_hash()
       << "\n";
    return os.str();
}

}  // namespace coble::cli
