#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spfk/core/rational.hpp"

namespace spfk {

using Params = std::map<std::string, std::int64_t>;

/// Canonical record of one identity check.
///
/// lhs_terms / rhs_terms count monomials of the canonical side for
/// polynomial-valued identities, and summands of the expansion for
/// scalar-valued ones.
struct VerificationReport {
    std::string id;
    Params params;
    std::vector<std::uint64_t> seeds;
    bool equal = false;
    std::string lhs_digest;
    std::string rhs_digest;
    std::int64_t lhs_terms = 0;
    std::int64_t rhs_terms = 0;
    std::int64_t elapsed_ms = 0;
    std::map<std::string, std::string> conventions;
    std::optional<std::pair<std::string, std::string>> counterexample;
};

/// 64-bit FNV-1a of canonical text, rendered as 16 hex digits.
inline std::string digest_of(const std::string& canonical) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : canonical) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string canonical_of(const Rational& r) { return r.to_string(); }

inline std::string canonical_of(const std::vector<Rational>& values) {
    std::string s;
    for (const auto& v : values) {
        s += v.to_string();
        s += ';';
    }
    return s;
}

template <class T>
    requires requires(const T& t) { t.canonical(); }
std::string canonical_of(const T& t) {
    return t.canonical();
}

template <class T>
    requires requires(const T& t) { t.canonical(); }
std::string canonical_of(const std::vector<T>& values) {
    std::string s;
    for (const auto& v : values) {
        s += v.canonical();
        s += '|';
    }
    return s;
}

inline constexpr std::size_t kCounterexampleLimit = 4000;

/// Fills equal / digests / counterexample from two canonical sides.
template <class T>
void record_sides(VerificationReport& report, const T& lhs, const T& rhs) {
    const std::string l = canonical_of(lhs);
    const std::string r = canonical_of(rhs);
    report.equal = (lhs == rhs);
    report.lhs_digest = digest_of(l);
    report.rhs_digest = digest_of(r);
    if (!report.equal) {
        report.counterexample = std::make_pair(l.substr(0, kCounterexampleLimit), r.substr(0, kCounterexampleLimit));
    } else {
        report.counterexample.reset();
    }
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// JSON form. Timing is optional because it is the only nondeterministic field.
inline nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing = true) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["seeds"] = r.seeds;
    j["equal"] = r.equal;
    j["lhs_digest"] = r.lhs_digest;
    j["rhs_digest"] = r.rhs_digest;
    j["lhs_terms"] = r.lhs_terms;
    j["rhs_terms"] = r.rhs_terms;
    if (!r.conventions.empty()) {
        j["conventions"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.conventions) j["conventions"][k] = v;
    }
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    if (r.counterexample) {
        j["counterexample"] = {{"lhs", r.counterexample->first}, {"rhs", r.counterexample->second}};
    }
    return j;
}

inline std::string params_string(const Params& p) {
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty()) s += ' ';
        s += k + "=" + std::to_string(v);
    }
    return s;
}

inline std::string to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << (r.equal ? "PASS " : "FAIL ") << r.id;
    if (!r.params.empty()) os << " [" << params_string(r.params) << "]";
    os << "  lhs=" << r.lhs_digest << " (" << r.lhs_terms << " terms)"
       << "  rhs=" << r.rhs_digest << " (" << r.rhs_terms << " terms)";
    for (const auto& [k, v] : r.conventions) os << "  " << k << "=" << v;
    if (r.counterexample) {
        os << "\n  lhs: " << r.counterexample->first.substr(0, 300)
           << "\n  rhs: " << r.counterexample->second.substr(0, 300);
    }
    return os.str();
}

}  // namespace spfk
