#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "spfk/identities/hyperpf_structure.hpp"
#include "spfk/identities/kernel_checks.hpp"
#include "spfk/identities/quasisym.hpp"
#include "spfk/identities/rational_identities.hpp"
#include "spfk/identities/shuffle_wick.hpp"
#include "spfk/identities/vandermonde.hpp"
#include "spfk/integrals/debruijn.hpp"

namespace spfk {

inline constexpr std::uint64_t kDefaultSeed = 42;

class unknown_identity_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters accepted by `verify`. Unset sizes fall back to per-identity defaults.
struct VerifyOptions {
    std::optional<int> n, m, k, t, N;
    std::uint64_t seed = kDefaultSeed;
    bool paranoid = false;
    CoefficientConvention convention = CoefficientConvention::Corrected;
    std::vector<int> parts;       // composition for vi
    std::vector<Rational> y;      // sample values for vandermonde
    std::vector<int> u, v;        // letter ids for chen
};

namespace detail {

using Runner = std::function<VerificationReport(const VerifyOptions&)>;

inline int points_of(const VerifyOptions& o) { return o.paranoid ? kParanoidPoints : kDefaultPoints; }

inline const std::map<std::string, Runner>& identity_registry() {
    static const std::map<std::string, Runner> registry = [] {
        std::map<std::string, Runner> r;
        for (WickVariant v : {WickVariant::PFAB, WickVariant::SDB2, WickVariant::FHAFF2, WickVariant::FHAFF1,
                              WickVariant::ODD_EVEN, WickVariant::ANTISHUFFLE, WickVariant::XIPFASHU}) {
            r[identity_id(wick_variant_name(v))] = [v](const VerifyOptions& o) {
                return verify_shuffle_wick(v, o.n.value_or(2), o.k.value_or(1), o.convention);
            };
        }
        for (HyperPfVariant v : {HyperPfVariant::COMPOSITION, HyperPfVariant::SUM, HyperPfVariant::DET_DECOMP}) {
            r[identity_id(hyperpf_variant_name(v))] = [v](const VerifyOptions& o) {
                return verify_hyperpf(v, o.m.value_or(1), o.n.value_or(2), o.seed, o.convention);
            };
        }
        r["minor"] = [](const VerifyOptions& o) {
            const int n = o.n.value_or(2);
            return verify_minor(o.m.value_or(1), o.t.value_or(n), n, o.seed);
        };
        for (RationalVariant v : {RationalVariant::SCHUR, RationalVariant::SCHUR_HYPER, RationalVariant::SUNDQUIST,
                                  RationalVariant::MEHTA1, RationalVariant::MEHTA2, RationalVariant::SUM1,
                                  RationalVariant::HAFSYM, RationalVariant::WIGNER_RANK1, RationalVariant::ARQ}) {
            r[identity_id(rational_variant_name(v))] = [v](const VerifyOptions& o) {
                const int fallback = v == RationalVariant::SCHUR_HYPER ? 1 : 2;
                const auto& primary = std::string(rational_size_key(v)) == "m" ? o.m : o.n;
                const auto& secondary = std::string(rational_size_key(v)) == "m" ? o.n : o.m;
                const int size = primary.value_or(secondary.value_or(fallback));
                return verify_rational_identity(v, size, o.seed, points_of(o), o.convention);
            };
        }
        r["vi"] = [](const VerifyOptions& o) {
            const std::vector<int> parts = o.parts.empty() ? std::vector<int>{1, 2, 3, 4} : o.parts;
            return verify_VI(parts, o.N.value_or(8), o.seed, points_of(o));
        };
        r["vi_all"] = [](const VerifyOptions& o) {
            return verify_VI_all(o.n.value_or(4), o.k.value_or(4), o.N.value_or(8), o.seed, points_of(o));
        };
        r["vandermonde"] = [](const VerifyOptions& o) {
            return verify_vandermonde_average(o.N.value_or(3), o.n.value_or(2), o.m.value_or(1), o.y, o.seed,
                                              o.convention);
        };
        r["chen"] = [](const VerifyOptions& o) {
            const std::vector<int> u = o.u.empty() && o.v.empty() ? std::vector<int>{0, 1} : o.u;
            const std::vector<int> v = o.u.empty() && o.v.empty() ? std::vector<int>{2, 3} : o.v;
            int letters = 1;
            Word wu, wv;
            for (int x : u) {
                if (x < 0) throw std::invalid_argument("chen: letters must be >= 0");
                letters = std::max(letters, x + 1);
                wu.push_back(Letter{static_cast<std::uint32_t>(x)});
            }
            for (int x : v) {
                if (x < 0) throw std::invalid_argument("chen: letters must be >= 0");
                letters = std::max(letters, x + 1);
                wv.push_back(Letter{static_cast<std::uint32_t>(x)});
            }
            SeededSampler s(o.seed);
            auto report = verify_chen(wu, wv, MonomialFamily::sample(static_cast<std::size_t>(letters), s));
            report.seeds = {o.seed};
            return report;
        };
        r["chen_batch"] = [](const VerifyOptions& o) { return verify_chen_batch(o.n.value_or(100), 8, o.seed); };
        for (DeBruijnVariant v : {DeBruijnVariant::EVEN, DeBruijnVariant::ODD, DeBruijnVariant::INTERLEAVED,
                                  DeBruijnVariant::NEW_PAIRING, DeBruijnVariant::PERM_PRODUCT,
                                  DeBruijnVariant::PERM_INTERLEAVED, DeBruijnVariant::GENERAL_DET,
                                  DeBruijnVariant::GENERAL_PERM}) {
            r["debruijn_" + identity_id(debruijn_variant_name(v))] = [v](const VerifyOptions& o) {
                return verify_debruijn(v, o.n.value_or(2), o.k.value_or(1), o.seed, o.convention);
            };
        }
        r["antipode"] = [](const VerifyOptions& o) { return verify_antipode(o.n.value_or(5), o.N.value_or(5)); };
        r["kernel_hpf_oracle"] = [](const VerifyOptions& o) {
            return verify_power_oracle(true, o.k.value_or(2), o.N.value_or(6), o.seed);
        };
        r["kernel_hhf_oracle"] = [](const VerifyOptions& o) {
            return verify_power_oracle(false, o.k.value_or(2), o.N.value_or(6), o.seed);
        };
        r["kernel_pf_det"] = [](const VerifyOptions& o) { return verify_pf_det(o.N.value_or(6), o.seed); };
        r["kernel_blocked_count"] = [](const VerifyOptions& o) { return verify_blocked_count(o.N.value_or(12)); };
        return r;
    }();
    return registry;
}

}  // namespace detail

inline std::vector<std::string> identity_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, run] : detail::identity_registry()) ids.push_back(id);
    return ids;
}

/// Runs one registered identity. Throws unknown_identity_error for an unknown id.
inline VerificationReport run_identity(const std::string& id, const VerifyOptions& options) {
    const auto& reg = detail::identity_registry();
    auto it = reg.find(id);
    if (it == reg.end()) throw unknown_identity_error("unknown identity '" + id + "'");
    return it->second(options);
}

/// One cell of the suite matrix. `measures` are the size quantities that
/// `--max key=value` caps compare against.
struct SuiteEntry {
    std::string id;
    VerifyOptions options;
    std::map<std::string, std::int64_t> measures;
};

struct SuiteConfig {
    std::uint64_t seed = kDefaultSeed;
    std::map<std::string, std::int64_t> caps;
    bool paranoid = false;
    int jobs = 1;
};

inline const std::set<std::string>& suite_cap_keys() {
    static const std::set<std::string> keys = {"size", "n", "m", "k", "t", "N", "2n", "2mn", "2kn"};
    return keys;
}

namespace detail {

inline SuiteEntry make_entry(std::string id, std::uint64_t seed, std::optional<int> n, std::optional<int> m,
                             std::optional<int> k, std::optional<int> t, std::optional<int> N, int size) {
    SuiteEntry e;
    e.id = std::move(id);
    e.options.seed = seed;
    e.options.n = n;
    e.options.m = m;
    e.options.k = k;
    e.options.t = t;
    e.options.N = N;
    e.measures["size"] = size;
    if (n) {
        e.measures["n"] = *n;
        e.measures["2n"] = 2 * *n;
    }
    if (m) e.measures["m"] = *m;
    if (k) e.measures["k"] = *k;
    if (t) e.measures["t"] = *t;
    if (N) e.measures["N"] = *N;
    if (m && n) e.measures["2mn"] = 2 * *m * *n;
    if (k && n) e.measures["2kn"] = 2 * *k * *n;
    return e;
}

}  // namespace detail

/// The default verification matrix (the acceptance matrix, all expected to pass).
inline std::vector<SuiteEntry> default_suite(const SuiteConfig& config) {
    using detail::make_entry;
    const std::uint64_t s = config.seed;
    const std::nullopt_t none = std::nullopt;
    std::vector<SuiteEntry> out;

    for (const char* id : {"pfab", "sdb2", "fhaff2", "fhaff1"})
        for (int n : {1, 2, 3}) out.push_back(make_entry(id, s, n, none, none, none, none, 2 * n));
    for (const char* id : {"odd_even", "antishuffle"})
        for (int n : {2, 3, 4, 5}) out.push_back(make_entry(id, s, n, none, none, none, none, n));
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}})
        out.push_back(make_entry("xipfashu", s, n, none, k, none, none, 2 * k * n));

    for (auto [k, d] : std::vector<std::pair<int, int>>{{2, 4}, {2, 6}, {2, 8}, {4, 4}, {4, 8}, {6, 6}}) {
        out.push_back(make_entry("kernel_hpf_oracle", s, none, none, k, none, d, d));
        out.push_back(make_entry("kernel_hhf_oracle", s, none, none, k, none, d, d));
    }
    for (int d : {2, 4, 6}) out.push_back(make_entry("kernel_pf_det", s, none, none, none, none, d, d));
    out.push_back(make_entry("kernel_blocked_count", s, none, none, none, none, 12, 12));

    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}})
        out.push_back(make_entry("composition", s, n, m, none, none, none, 2 * m * n));
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}})
        out.push_back(make_entry("sum", s, n, m, none, none, none, 2 * m * n));
    for (auto [m, t, n] : std::vector<std::tuple<int, int, int>>{{1, 1, 2}, {1, 2, 2}, {1, 2, 3}, {2, 1, 2}})
        out.push_back(make_entry("minor", s, n, m, none, t, none, 2 * m * n));
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 2}})
        out.push_back(make_entry("det_decomp", s, n, m, none, none, none, 2 * m * n));

    // Point-evaluation identities run under three seeds each.
    for (std::uint64_t ds = 0; ds < 3; ++ds) {
        const std::uint64_t ps = s + ds;
        for (int n : {1, 2, 3}) out.push_back(make_entry("schur", ps, n, none, none, none, none, 2 * n));
        for (int n : {1, 2}) out.push_back(make_entry("schur_hyper", ps, n, none, none, none, none, 4 * n));
        for (int m : {1, 2, 3}) out.push_back(make_entry("sundquist", ps, none, m, none, none, none, 2 * m));
        for (int n = 1; n <= 6; ++n) out.push_back(make_entry("mehta1", ps, n, none, none, none, none, n));
        for (int n : {1, 2}) out.push_back(make_entry("mehta2", ps, n, none, none, none, none, 2 * n));
        for (int m = 1; m <= 5; ++m) out.push_back(make_entry("sum1", ps, none, m, none, none, none, m));
        for (int n : {1, 2, 3}) out.push_back(make_entry("hafsym", ps, n, none, none, none, none, 2 * n));
        for (int n : {1, 2, 3}) out.push_back(make_entry("wigner_rank1", ps, n, none, none, none, none, 2 * n));
        for (int m : {1, 2}) out.push_back(make_entry("arq", ps, none, m, none, none, none, 2 * m));
    }

    out.push_back(make_entry("chen_batch", s, 100, none, none, none, none, 8));
    out.back().measures.erase("n");
    out.back().measures.erase("2n");
    for (const char* id : {"debruijn_even", "debruijn_interleaved", "debruijn_new_pairing", "debruijn_perm_product",
                           "debruijn_perm_interleaved"})
        for (int n : {1, 2, 3}) out.push_back(make_entry(id, s, n, none, none, none, none, 2 * n));
    for (int n : {1, 2}) out.push_back(make_entry("debruijn_odd", s, n, none, none, none, none, 2 * n + 1));
    for (const char* id : {"debruijn_general_det", "debruijn_general_perm"})
        for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 1}, {2, 2}})
            out.push_back(make_entry(id, s, n, none, k, none, none, 2 * k * n));

    for (int r = 1; r <= 4; ++r) {
        out.push_back(make_entry("vi_all", s, r, none, 4, none, 8, 8));
        out.back().measures = {{"size", 8}, {"N", 8}};
    }

    for (auto [N, n, m] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {3, 2, 1}, {3, 3, 1}, {2, 2, 2}, {3, 2, 2}})
        out.push_back(make_entry("vandermonde", s, n, m, none, none, N, 2 * m * n));

    out.push_back(make_entry("antipode", s, 5, none, none, none, 5, 5));

    for (auto& e : out) e.options.paranoid = config.paranoid;
    std::erase_if(out, [&](const SuiteEntry& e) {
        for (const auto& [key, cap] : config.caps) {
            auto it = e.measures.find(key);
            if (it != e.measures.end() && it->second > cap) return true;
        }
        return false;
    });
    return out;
}

/// Runs entries (possibly on several threads) and returns the reports in
/// identity-id order; entries sharing an id keep matrix order. A verifier
/// that throws yields a failing report carrying the error message.
inline std::vector<VerificationReport> run_entries(const std::vector<SuiteEntry>& entries, int jobs) {
    std::vector<VerificationReport> reports(entries.size());
    auto run_one = [&](std::size_t i) {
        try {
            reports[i] = run_identity(entries[i].id, entries[i].options);
        } catch (const std::exception& ex) {
            VerificationReport r;
            r.id = entries[i].id;
            r.seeds = {entries[i].options.seed};
            r.equal = false;
            r.counterexample = std::make_pair(std::string("error: ") + ex.what(), std::string());
            reports[i] = r;
        }
    };
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(entries.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < entries.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < entries.size(); i = next++) run_one(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) { return a.id < b.id; });
    return reports;
}

inline std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
    for (const auto& [key, cap] : config.caps)
        if (!suite_cap_keys().count(key)) throw std::invalid_argument("unknown cap '" + key + "'");
    return run_entries(default_suite(config), config.jobs);
}

/// Deterministic JSON array (timings omitted).
inline nlohmann::ordered_json suite_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, false));
    return arr;
}

}  // namespace spfk
