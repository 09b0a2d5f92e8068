#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "spfk/spfk.hpp"

using namespace spfk;

namespace {

constexpr auto kPaper = CoefficientConvention::Paper;

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace

TEST(Report, DigestIsFnv1a) {
    // FNV-1a 64 reference values.
    EXPECT_EQ(digest_of(""), "cbf29ce484222325");
    EXPECT_EQ(digest_of("a"), "af63dc4c8601ec8c");
    EXPECT_EQ(identity_id("DET_DECOMP"), "det_decomp");
}

TEST(Report, JsonShape) {
    const auto r = verify_shuffle_wick(WickVariant::PFAB, 2);
    const auto j = to_json(r);
    EXPECT_EQ(j["id"], "pfab");
    EXPECT_EQ(j["equal"], true);
    EXPECT_TRUE(j.contains("elapsed_ms"));
    EXPECT_FALSE(to_json(r, false).contains("elapsed_ms"));
    EXPECT_FALSE(j.contains("counterexample"));
    EXPECT_EQ(to_text(r).rfind("PASS pfab [n=2]", 0), 0u);
}

TEST(ShuffleWick, AcceptanceMatrix) {
    for (auto v : {WickVariant::PFAB, WickVariant::SDB2, WickVariant::FHAFF2, WickVariant::FHAFF1})
        for (int n : {1, 2, 3}) EXPECT_TRUE(verify_shuffle_wick(v, n).equal) << wick_variant_name(v) << " n=" << n;
    for (auto v : {WickVariant::ODD_EVEN, WickVariant::ANTISHUFFLE})
        for (int n : {2, 3, 4, 5}) EXPECT_TRUE(verify_shuffle_wick(v, n).equal) << wick_variant_name(v) << " n=" << n;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}})
        EXPECT_TRUE(verify_shuffle_wick(WickVariant::XIPFASHU, n, k).equal) << k << "," << n;
}

TEST(ShuffleWick, PfabSmallestCase) {
    const auto r = verify_shuffle_wick(WickVariant::PFAB, 1);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.lhs_terms, 2);  // a1 b2 - a2 b1
}

TEST(ShuffleWick, Sdb2TermCounts) {
    const auto r = verify_shuffle_wick(WickVariant::SDB2, 2);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.lhs_terms, 24);
    EXPECT_EQ(odd_double_factorial(2), 3);  // matchings in the Pfaffian
}

TEST(ShuffleWick, XipfashuFullSize) {
    const auto r = verify_shuffle_wick(WickVariant::XIPFASHU, 2, 2);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.lhs_terms, 40320);
    EXPECT_EQ(r.rhs_terms, 40320);
}

TEST(ShuffleWick, Fhaff1CoefficientErratum) {
    EXPECT_EQ(detail::matching_coefficient(2, CoefficientConvention::Corrected), q(1, 3));
    EXPECT_EQ(detail::matching_coefficient(2, kPaper), q(1, 8));
    const auto good = verify_shuffle_wick(WickVariant::FHAFF1, 2);
    const auto bad = verify_shuffle_wick(WickVariant::FHAFF1, 2, 1, kPaper);
    EXPECT_TRUE(good.equal);
    EXPECT_FALSE(bad.equal);
    ASSERT_TRUE(bad.counterexample.has_value());
    EXPECT_NE(bad.conventions.at("coefficient").find("1/8"), std::string::npos);
    // The readings already differ at n = 1: 1!! = 1 but 2!! = 2.
    EXPECT_FALSE(verify_shuffle_wick(WickVariant::FHAFF1, 1, 1, kPaper).equal);
}

TEST(ShuffleWick, Caps) {
    EXPECT_THROW(verify_shuffle_wick(WickVariant::PFAB, 5), size_cap_error);
    EXPECT_THROW(verify_shuffle_wick(WickVariant::XIPFASHU, 3, 2), size_cap_error);
    EXPECT_THROW(verify_shuffle_wick(WickVariant::PFAB, 0), std::invalid_argument);
}

TEST(ShuffleWick, Deterministic) {
    const auto a = verify_shuffle_wick(WickVariant::ODD_EVEN, 4);
    const auto b = verify_shuffle_wick(WickVariant::ODD_EVEN, 4);
    EXPECT_EQ(a.lhs_digest, b.lhs_digest);
    EXPECT_EQ(a.rhs_digest, b.rhs_digest);
}

TEST(HyperPf, CompositionCoefficient) {
    EXPECT_EQ(composition_coefficient(2, 1, CoefficientConvention::Corrected), Rational(1));
    EXPECT_EQ(composition_coefficient(2, 2, CoefficientConvention::Corrected), Rational(3));
    EXPECT_EQ(composition_coefficient(1, 3, CoefficientConvention::Corrected), Rational(1));
    EXPECT_EQ(composition_coefficient(2, 2, kPaper), q(1, 2));
}

TEST(HyperPf, AcceptanceMatrix) {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}})
        EXPECT_TRUE(verify_hyperpf(HyperPfVariant::COMPOSITION, m, n, 42).equal) << m << "," << n;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}})
        EXPECT_TRUE(verify_hyperpf(HyperPfVariant::SUM, m, n, 42).equal) << m << "," << n;
    for (auto [m, t, n] : std::vector<std::tuple<int, int, int>>{{1, 1, 2}, {1, 2, 2}, {1, 2, 3}, {2, 1, 2}})
        EXPECT_TRUE(verify_minor(m, t, n, 42).equal) << m << "," << t << "," << n;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 2}})
        EXPECT_TRUE(verify_hyperpf(HyperPfVariant::DET_DECOMP, m, n, 42).equal) << m << "," << n;
}

TEST(HyperPf, SeedsChangeDigestsNotOutcome) {
    const auto a = verify_hyperpf(HyperPfVariant::SUM, 1, 2, 1);
    const auto b = verify_hyperpf(HyperPfVariant::SUM, 1, 2, 2);
    EXPECT_TRUE(a.equal);
    EXPECT_TRUE(b.equal);
    EXPECT_NE(a.lhs_digest, b.lhs_digest);
}

TEST(HyperPf, UncorrectedReadingsFail) {
    EXPECT_FALSE(verify_hyperpf(HyperPfVariant::COMPOSITION, 2, 2, 42, kPaper).equal);
    EXPECT_FALSE(verify_hyperpf(HyperPfVariant::DET_DECOMP, 1, 2, 42, kPaper).equal);
    EXPECT_FALSE(verify_hyperpf(HyperPfVariant::DET_DECOMP, 1, 3, 42, kPaper).equal);
    // With a single row block there is only one ordering, so both readings agree.
    EXPECT_TRUE(verify_hyperpf(HyperPfVariant::DET_DECOMP, 2, 1, 42, kPaper).equal);
}

TEST(RationalIdentity, SchurSmallestCaseByHand) {
    const Rational x1(3), x2(5);
    AltTensor<Rational> a(2, 2);
    a.set({0, 1}, (x1 - x2) / (x1 + x2));
    EXPECT_EQ(pfaffian(a), q(-1, 4));
}

TEST(RationalIdentity, Sum1AndMehta1ByHand) {
    const Rational x1 = q(2, 3), x2 = q(7, 5);
    EXPECT_EQ(r_value({x1, x2}) + r_value({x2, x1}), (x1 * x2).inverse());
    EXPECT_EQ(r_value({x1, x2}) - r_value({x1}) * r_value({x2}) + r_value({x2, x1}), Rational(0));
}

TEST(RationalIdentity, AcceptanceMatrix) {
    struct Case {
        RationalVariant v;
        std::vector<int> sizes;
    };
    const std::vector<Case> cases = {
        {RationalVariant::SCHUR, {1, 2, 3}},       {RationalVariant::SUNDQUIST, {1, 2, 3}},
        {RationalVariant::MEHTA1, {1, 2, 3, 4, 5, 6}}, {RationalVariant::MEHTA2, {1, 2}},
        {RationalVariant::SUM1, {1, 2, 3, 4, 5}},   {RationalVariant::HAFSYM, {1, 2, 3}},
        {RationalVariant::WIGNER_RANK1, {1, 2, 3}}, {RationalVariant::ARQ, {1, 2}},
        {RationalVariant::SCHUR_HYPER, {1, 2}},
    };
    for (const auto& c : cases)
        for (int size : c.sizes) {
            const auto r = verify_rational_identity(c.v, size, 42);
            EXPECT_TRUE(r.equal) << rational_variant_name(c.v) << " " << size;
            EXPECT_EQ(r.seeds.size(), 3u);
        }
}

TEST(RationalIdentity, ParanoidUsesTenPoints) {
    const auto r = verify_rational_identity(RationalVariant::SCHUR, 2, 42, kParanoidPoints);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.seeds.size(), 10u);
}

TEST(RationalIdentity, CoefficientErrata) {
    EXPECT_TRUE(verify_rational_identity(RationalVariant::SCHUR_HYPER, 1, 42).equal);
    EXPECT_FALSE(verify_rational_identity(RationalVariant::SCHUR_HYPER, 1, 42, 3, kPaper).equal);
    EXPECT_FALSE(verify_rational_identity(RationalVariant::WIGNER_RANK1, 2, 42, 3, kPaper).equal);
}

TEST(RationalIdentity, Caps) {
    EXPECT_THROW(verify_rational_identity(RationalVariant::SCHUR, 4, 42), size_cap_error);
    EXPECT_THROW(verify_rational_identity(RationalVariant::MEHTA1, 7, 42), size_cap_error);
    EXPECT_THROW(verify_rational_identity(RationalVariant::SCHUR, 0, 42), std::invalid_argument);
}

TEST(Quasisym, QuasimonomialByHand) {
    const std::vector<Rational> x{Rational(1), Rational(2), Rational(3)};
    EXPECT_EQ(quasimonomial({1}, x), Rational(6));
    EXPECT_EQ(quasimonomial({1, 1}, x), Rational(11));           // e2
    EXPECT_EQ(quasimonomial({2, 1}, x), Rational(1 * 2 + 1 * 3 + 4 * 3));
    EXPECT_EQ(quasimonomial({1, 1, 1, 1}, x), Rational(0));
}

TEST(Quasisym, AllCompositions) {
    EXPECT_EQ(compositions(2, 4).size(), 16u);
    EXPECT_EQ(compositions(4, 4).size(), 256u);
    for (int r = 1; r <= 4; ++r) EXPECT_TRUE(verify_VI_all(r, 4, 8, 42).equal) << r;
    EXPECT_TRUE(verify_VI({1, 1}, 8, 42).equal);
    EXPECT_TRUE(verify_VI({1, 2, 3, 4}, 8, 42).equal);
    EXPECT_THROW(verify_VI({1, 5}, 8, 42), size_cap_error);
    EXPECT_THROW(verify_VI({1, 2}, 9, 42), size_cap_error);
}

TEST(Vandermonde, TwoPointsByHand) {
    const std::vector<Rational> y{q(1, 2), Rational(3)};
    const Rational expected = (y[0] - y[1]) * (y[0] - y[1]) / Rational(2);
    EXPECT_EQ(vandermonde_average_bruteforce(y, 2, 1), expected);
    EXPECT_EQ(vandermonde_average_hyperpf(y, 2, 1, CoefficientConvention::Corrected), expected);
    EXPECT_EQ(vandermonde_average_det(y, 2), expected);
    EXPECT_NE(vandermonde_average_hyperpf(y, 2, 1, kPaper), expected);
}

TEST(Vandermonde, SinglePointAverageIsOne) {
    const std::vector<Rational> y{Rational(2), Rational(5), q(1, 3)};
    for (int m : {1, 2, 3}) {
        EXPECT_EQ(vandermonde_average_bruteforce(y, 1, m), Rational(1));
        EXPECT_EQ(vandermonde_average_hyperpf(y, 1, m, CoefficientConvention::Corrected), Rational(1));
    }
}

TEST(Vandermonde, AcceptanceMatrix) {
    for (auto [N, n, m] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {3, 2, 1}, {3, 3, 1}, {2, 2, 2}, {3, 2, 2}}) {
        const auto r = verify_vandermonde_average(N, n, m, {}, 42);
        EXPECT_TRUE(r.equal) << N << "," << n << "," << m;
    }
    EXPECT_FALSE(verify_vandermonde_average(2, 2, 1, {}, 42, kPaper).equal);
    EXPECT_THROW(verify_vandermonde_average(3, 2, 1, {Rational(1)}, 42), std::invalid_argument);
    EXPECT_THROW(verify_vandermonde_average(3, 3, 2, {}, 42), size_cap_error);
}

TEST(Kernel, Checks) {
    EXPECT_TRUE(verify_antipode(5, 5).equal);
    for (auto [k, d] : std::vector<std::pair<int, int>>{{2, 4}, {2, 6}, {4, 8}, {6, 6}}) {
        EXPECT_TRUE(verify_power_oracle(true, k, d, 42).equal) << k << "," << d;
        EXPECT_TRUE(verify_power_oracle(false, k, d, 42).equal) << k << "," << d;
    }
    for (int d : {2, 4, 6}) EXPECT_TRUE(verify_pf_det(d, 42).equal);
    EXPECT_TRUE(verify_blocked_count(12).equal);
    EXPECT_THROW(verify_power_oracle(true, 4, 6, 42), std::invalid_argument);
}

TEST(Suite, RegistryAndLookup) {
    const auto ids = identity_ids();
    EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
    EXPECT_NE(std::find(ids.begin(), ids.end(), "pfab"), ids.end());
    EXPECT_NE(std::find(ids.begin(), ids.end(), "debruijn_even"), ids.end());
    EXPECT_THROW(run_identity("nosuch", {}), unknown_identity_error);
    VerifyOptions o;
    o.n = 2;
    EXPECT_TRUE(run_identity("fhaff1", o).equal);
    o.convention = kPaper;
    EXPECT_FALSE(run_identity("fhaff1", o).equal);
}

TEST(Suite, EveryRegisteredIdRunsWithDefaults) {
    for (const auto& id : identity_ids()) {
        VerifyOptions o;
        EXPECT_TRUE(run_identity(id, o).equal) << id;
    }
}

TEST(Suite, CapsFilterTheMatrix) {
    SuiteConfig full;
    SuiteConfig small;
    small.caps["2mn"] = 4;
    const auto all = default_suite(full);
    const auto reduced = default_suite(small);
    EXPECT_LT(reduced.size(), all.size());
    for (const auto& e : reduced) {
        auto it = e.measures.find("2mn");
        if (it != e.measures.end()) EXPECT_LE(it->second, 4);
    }
    SuiteConfig bad;
    bad.caps["bogus"] = 1;
    EXPECT_THROW(run_suite(bad), std::invalid_argument);
}

TEST(Suite, ThreadCountDoesNotChangeOutput) {
    SuiteConfig c;
    c.caps["size"] = 4;
    const auto one = suite_to_json(run_suite(c)).dump(1);
    c.jobs = 3;
    const auto three = suite_to_json(run_suite(c)).dump(1);
    EXPECT_EQ(one, three);
}

TEST(Suite, FailuresAreReportedNotThrown) {
    SuiteEntry e;
    e.id = "pfab";
    e.options.n = 9;  // beyond the cap
    const auto reports = run_entries({e}, 1);
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_FALSE(reports[0].equal);
    ASSERT_TRUE(reports[0].counterexample.has_value());
    EXPECT_EQ(reports[0].counterexample->first.rfind("error: ", 0), 0u);
}
