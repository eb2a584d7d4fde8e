#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace coble::cli {

using nlohmann::json;

enum class Provenance { paper, trivial, derived };
std::string to_string(Provenance p);

struct CheckEntry {
    std::string name;
    json expected;
    Provenance provenance = Provenance::derived;
    json actual;
    bool pass = false;
};

class Certificate {
public:
    explicit Certificate(std::string command, json inputs = json::object())
        : command_(std::move(command)), inputs_(std::move(inputs)) {}

    // pass iff actual == expected
    void expect(std::string name, json expected, json actual, Provenance p);
    // a boolean identity; expected is true
    void require(std::string name, bool ok, Provenance p, json detail = nullptr);
    void output(const std::string& key, json value) { outputs_[key] = std::move(value); }
    void merge(const Certificate& other, const std::string& prefix);
    void set_timing(double ms) { timing_ms_ = ms; }

    bool all_pass() const;
    const std::vector<CheckEntry>& checks() const { return checks_; }
    const json& outputs() const { return outputs_; }

    // sha256 over the canonical dump of everything except timing_ms
    std::string artifact_hash() const;
    json to_json() const;
    std::string to_text() const;

private:
    json hashed_part() const;

    std::string command_;
    json inputs_;
    std::vector<CheckEntry> checks_;
    json outputs_ = json::object();
    double timing_ms_ = 0;
};

}  // namespace coble::cli
