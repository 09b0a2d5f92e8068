// spfk: verify shuffle / Pfaffian / hafnian identities and evaluate tensor files.
//
// Exit codes: 0 pass, 1 identity failure, 2 usage or input error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spfk/spfk.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SPFK_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed SPFK_SEED='" << env << "'\n";
        }
    }
    return spfk::kDefaultSeed;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& part : CLI::detail::split(text, ',')) {
        if (part.empty()) continue;
        out.push_back(std::stoi(part));
    }
    return out;
}

void print_ids(std::ostream& os) {
    os << "known identities:";
    for (const auto& id : spfk::identity_ids()) os << ' ' << id;
    os << '\n';
}

struct VerifyArgs {
    std::string id;
    std::optional<int> n, m, k, t, N;
    std::uint64_t seed = 0;
    std::string format = "text";
    bool paranoid = false;
    std::string coeff = "corrected";
    std::string parts, y, u, v;
};

int run_verify(const VerifyArgs& a) {
    spfk::VerifyOptions o;
    o.n = a.n;
    o.m = a.m;
    o.k = a.k;
    o.t = a.t;
    o.N = a.N;
    o.seed = a.seed;
    o.paranoid = a.paranoid;
    o.convention = a.coeff == "paper" ? spfk::CoefficientConvention::Paper : spfk::CoefficientConvention::Corrected;
    try {
        o.parts = parse_int_list(a.parts);
        o.u = parse_int_list(a.u);
        o.v = parse_int_list(a.v);
        for (const auto& s : CLI::detail::split(a.y, ','))
            if (!s.empty()) o.y.push_back(spfk::Rational::parse(s));
    } catch (const std::exception& ex) {
        std::cerr << "error: bad list argument: " << ex.what() << '\n';
        return kExitUsage;
    }

    spfk::VerificationReport report;
    try {
        report = spfk::run_identity(a.id, o);
    } catch (const spfk::unknown_identity_error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        print_ids(std::cerr);
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
    if (a.format == "json") {
        std::cout << spfk::to_json(report).dump() << '\n';
    } else {
        std::cout << spfk::to_text(report) << '\n';
    }
    return report.equal ? kExitPass : kExitFail;
}

int run_kernel(const std::string& kind, const std::string& path) {
    try {
        const auto file = spfk::load_tensor_file(path);
        spfk::Rational value;
        if (kind == "pf" || kind == "hf") {
            if (file.order != 2) throw spfk::tensor_format_error(kind + " expects an order-2 tensor");
        }
        if (kind == "pf") {
            value = spfk::pfaffian(spfk::to_tensor<spfk::Symmetry::Alternating>(file));
        } else if (kind == "hf") {
            value = spfk::hafnian(spfk::to_tensor<spfk::Symmetry::Symmetric>(file));
        } else if (kind == "hpf") {
            value = spfk::hyperpfaffian(spfk::to_tensor<spfk::Symmetry::Alternating>(file));
        } else {
            value = spfk::hyperhafnian(spfk::to_tensor<spfk::Symmetry::Symmetric>(file));
        }
        std::cout << value.to_string() << '\n';
        return kExitPass;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
}

int run_suite_cmd(spfk::SuiteConfig config, const std::vector<std::string>& caps, bool json) {
    for (const auto& c : caps) {
        const auto eq = c.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: --max expects key=value, got '" << c << "'\n";
            return kExitUsage;
        }
        try {
            config.caps[c.substr(0, eq)] = std::stoll(c.substr(eq + 1));
        } catch (const std::exception&) {
            std::cerr << "error: bad cap value in '" << c << "'\n";
            return kExitUsage;
        }
    }
    std::vector<spfk::VerificationReport> reports;
    try {
        reports = spfk::run_suite(config);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.equal ? 1 : 0;
    if (json) {
        std::cout << spfk::suite_to_json(reports).dump(1) << '\n';
    } else {
        for (const auto& r : reports) std::cout << spfk::to_text(r) << '\n';
        std::cout << passed << "/" << reports.size() << " checks passed (seed " << config.seed << ")\n";
    }
    return passed == reports.size() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of shuffle-algebra Pfaffian and hafnian identities"};
    app.require_subcommand(1);

    VerifyArgs va;
    va.seed = default_seed();
    auto* verify = app.add_subcommand("verify", "Run one identity check");
    verify->add_option("id", va.id, "Identity id (see `spfk list`)")->required();
    verify->add_option("--n", va.n, "Size parameter n");
    verify->add_option("--m", va.m, "Size parameter m");
    verify->add_option("--k", va.k, "Block parameter k");
    verify->add_option("--t", va.t, "Row-block count t (minor)");
    verify->add_option("--N", va.N, "Variable / value count N");
    verify->add_option("--seed", va.seed, "Seed (default 42 or $SPFK_SEED)");
    verify->add_option("--format", va.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--paranoid", va.paranoid, "Use 10 evaluation points instead of 3");
    verify->add_option("--coeff", va.coeff, "Coefficient convention")->check(CLI::IsMember({"corrected", "paper"}));
    verify->add_option("--parts", va.parts, "Composition for vi, e.g. 1,2,3");
    verify->add_option("--y", va.y, "Sample values for vandermonde, e.g. 1,2,1/3");
    verify->add_option("--u", va.u, "First word for chen, as letter ids, e.g. 0,1");
    verify->add_option("--v", va.v, "Second word for chen");

    std::string kernel_kind, tensor_path;
    for (const char* kind : {"pf", "hf", "hpf", "hhf"}) {
        auto* sub = app.add_subcommand(kind, std::string("Evaluate ") + kind + " of a tensor JSON file");
        sub->add_option("file", tensor_path, "Tensor file")->required();
        sub->callback([&kernel_kind, kind] { kernel_kind = kind; });
    }

    spfk::SuiteConfig config;
    config.seed = default_seed();
    bool suite_json = false;
    std::vector<std::string> caps;
    auto* suite = app.add_subcommand("suite", "Run the full verification matrix");
    suite->add_option("--seed", config.seed, "Seed (default 42 or $SPFK_SEED)");
    suite->add_flag("--json", suite_json, "Emit a JSON array of reports");
    suite->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
    suite->add_option("--max", caps, "Size cap key=value (keys: size n m k t N 2n 2mn 2kn)");
    suite->add_flag("--paranoid", config.paranoid, "Use 10 evaluation points instead of 3");

    auto* list = app.add_subcommand("list", "List identity ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*verify) return run_verify(va);
    if (*suite) return run_suite_cmd(config, caps, suite_json);
    if (*list) {
        for (const auto& id : spfk::identity_ids()) std::cout << id << '\n';
        return kExitPass;
    }
    if (!kernel_kind.empty()) return run_kernel(kernel_kind, tensor_path);
    return kExitUsage;
}
