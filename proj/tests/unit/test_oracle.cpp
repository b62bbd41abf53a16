#include "subpart/error.hpp"
#include "subpart/oracle.hpp"

#include <doctest.h>

#include <filesystem>
#include <set>

using namespace subpart;

namespace {
std::set<std::vector<Subspace>> as_sets(const std::vector<SubspacePartition>& ps) {
    std::set<std::vector<Subspace>> out;
    for (const auto& p : ps) {
        auto m = p.members();
        std::sort(m.begin(), m.end());
        out.insert(m);
    }
    return out;
}
}  // namespace

TEST_CASE("V(2,2) with points only") {
    SearchOptions o;
    o.max_dim = 1;
    const auto ps = collect_partitions(2, 2, o);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].type().to_string() == "[1^3]");
}

TEST_CASE("56 labeled 2-spreads of V(4,2)") {
    SearchOptions o;
    o.max_dim = 2;
    o.type_filter = PartitionType({{2, 5}});
    const auto ps = collect_partitions(4, 2, o);
    CHECK(ps.size() == 56);
    CHECK(as_sets(ps).size() == 56);
    for (const auto& p : ps) CHECK(validate(p).valid);
}

TEST_CASE("V(3,2) and V(4,2) full enumeration") {
    SearchOptions o;
    o.max_dim = 2;
    const auto v3 = collect_partitions(3, 2, o);
    std::map<std::string, int> types;
    for (const auto& p : v3) {
        const auto r = validate(p);
        CHECK(r.valid);
        CHECK(check_dimension(r.type, 3));
        ++types[r.type.to_string()];
    }
    CHECK(types == std::map<std::string, int>{{"[1^7]", 1}, {"[2^1,1^4]", 7}});

    SearchOptions all4;
    const auto v4 = collect_partitions(4, 2, all4);
    CHECK(v4.size() == 1227);
    CHECK(as_sets(v4).size() == v4.size());
    std::map<std::string, int> t4;
    for (const auto& p : v4) {
        const auto r = validate(p);
        CHECK(r.valid);
        CHECK(check_dimension(r.type, 4));
        ++t4[r.type.to_string()];
    }
    CHECK(t4["[2^5]"] == 56);
    CHECK(t4["[3^1,1^8]"] == 15);
    CHECK(t4["[1^15]"] == 1);
}

TEST_CASE("search is deterministic and thread-count independent") {
    SearchOptions o;
    const auto a = collect_partitions(4, 2, o);
    const auto b = collect_partitions(4, 2, o);
    CHECK(a == b);
    o.threads = 4;
    CHECK(collect_partitions(4, 2, o) == a);
}

TEST_CASE("limits and filters") {
    SearchOptions o;
    o.count_limit = 10;
    const auto ps = collect_partitions(4, 2, o);
    CHECK(ps.size() == 10);
    SearchOptions s;
    s.size_limit = 5;
    for (const auto& p : collect_partitions(4, 2, s)) CHECK(p.size() <= 5);
    SearchOptions c;
    c.canonical_seed = true;
    c.type_filter = PartitionType({{2, 5}});
    const auto seeded = collect_partitions(4, 2, c);
    CHECK(seeded.size() >= 1);
    CHECK(seeded.size() < 56);
    SearchOptions below;
    below.below_cut = BelowCutLimit{2, 3};
    for (const auto& p : collect_partitions(4, 2, below)) CHECK(p.count(1) <= 3);
}

TEST_CASE("budgets") {
    SearchOptions o;
    o.point_budget = 100;
    CHECK_THROWS_AS(collect_partitions(7, 2, o), Error);
    SearchOptions b;
    b.node_budget = 50;
    try {
        collect_partitions(4, 2, b);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
}

TEST_CASE("checkpoint and resume reproduce the uninterrupted search") {
    const auto path = (std::filesystem::temp_directory_path() / "subpart_oracle_ck.txt").string();
    std::filesystem::remove(path);
    const auto reference = collect_partitions(4, 2, {});
    SearchOptions o;
    o.node_budget = 700;
    o.checkpoint_path = path;
    std::vector<SubspacePartition> got;
    int rounds = 0;
    for (;;) {
        try {
            const auto st = enumerate_partitions(4, 2, o, [&](const SubspacePartition& p) {
                got.push_back(p);
                return true;
            });
            CHECK(st.complete);
            CHECK(st.emitted == reference.size());
            break;
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::BudgetExceeded);
            ++rounds;
            o.resume_path = path;
            o.node_budget += 700;
        }
    }
    CHECK(rounds > 2);
    CHECK(got == reference);

    SearchOptions other;
    other.max_dim = 2;
    other.resume_path = path;
    CHECK_THROWS_AS(collect_partitions(4, 2, other), Error);
    std::filesystem::remove(path);
}

TEST_CASE("minimum sizes agree with the formula") {
    for (auto [n, t, q] : std::vector<std::tuple<int, int, int>>{{3, 2, 2}, {4, 2, 2}, {4, 3, 2}, {5, 3, 2}, {3, 2, 3}, {3, 1, 2}, {4, 1, 3}}) {
        CAPTURE(n);
        CAPTURE(t);
        CAPTURE(q);
        const auto r = min_partition_size(n, t, q);
        CHECK(BigInt(r.size) == sigma(n, t, q));
        CHECK(validate(r.witness).valid);
        CHECK(r.witness.size() == r.size);
        CHECK(r.witness.type().dims().back() == t);
    }
    CHECK_THROWS_AS(min_partition_size(3, 3, 2), Error);
}

TEST_CASE("conjecture search") {
    const auto empty = conjecture_search(4, 2, 3, 2);
    CHECK(empty.findings.empty());
    CHECK(empty.partitions == 0);
    for (auto [n, q] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}}) {
        const auto r = conjecture_search(n, q, 1, n);
        CHECK(r.asserted_failures == 0);
        CHECK(r.findings.empty());
        CHECK_FALSE(r.open_regime_reached);
        CHECK(r.partitions > 0);
        CHECK(r.stats.complete);
    }
    const auto v3 = conjecture_search(3, 3, 1, 3);
    CHECK(v3.asserted_failures == 0);
    CHECK(v3.partitions > 0);
}
