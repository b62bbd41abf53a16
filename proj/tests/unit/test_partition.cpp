#include "subpart/construct.hpp"
#include "subpart/error.hpp"
#include "subpart/partition.hpp"

#include <doctest.h>

using namespace subpart;

namespace {
PartitionType T(std::vector<PartitionType::Entry> e) { return PartitionType(std::move(e)); }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::IoError;
}
}  // namespace

TEST_CASE("partition type") {
    const auto t = T({{1, 4}, {3, 8}, {2, 1}, {1, 0}});
    CHECK(t.to_string() == "[3^8,2^1,1^4]");
    CHECK(t.dims() == std::vector<int>{1, 2, 3});
    CHECK(t.size() == 13);
    CHECK(t.count(2) == 1);
    CHECK(t.count(5) == 0);
    CHECK(T({{2, 3}, {2, 2}}) == T({{2, 5}}));
}

TEST_CASE("validate") {
    const auto f = make_field(2);
    const auto single = singleton_partition(f, 3);
    const auto r = validate(single);
    CHECK(r.valid);
    CHECK(r.type == T({{3, 1}}));

    const auto s = spread(4, 2, 2);
    const auto rs = validate(s);
    CHECK(rs.valid);
    CHECK(rs.type.to_string() == "[2^5]");
    CHECK(rs.size == 5);

    auto members = s.members();
    members.pop_back();
    const auto missing = validate(SubspacePartition(f, 4, members));
    CHECK_FALSE(missing.valid);
    REQUIRE(missing.failures.size() == 3);
    for (const auto& x : missing.failures) CHECK(x.kind == ValidationFailure::Kind::UncoveredPoint);

    members = s.members();
    members.push_back(s.members()[0]);
    members.push_back(Subspace(f, 4));
    const auto dup = validate(SubspacePartition(f, 4, members));
    CHECK_FALSE(dup.valid);
    int doubly = 0, trivial = 0;
    for (const auto& x : dup.failures) {
        doubly += x.kind == ValidationFailure::Kind::DoublyCoveredPoint;
        trivial += x.kind == ValidationFailure::Kind::TrivialMember;
        CHECK_FALSE(x.describe().empty());
    }
    CHECK(doubly == 3);
    CHECK(trivial == 1);

    members = s.members();
    members[0] = Subspace::full(f, 5);
    CHECK_FALSE(validate(SubspacePartition(f, 4, members)).valid);
}

TEST_CASE("packing and dimension conditions") {
    CHECK(check_packing(T({{2, 5}}), 4, 2));
    CHECK(check_packing(T({{3, 16}, {2, 5}}), 7, 2));
    CHECK_FALSE(check_packing(T({{2, 4}}), 4, 2));
    CHECK(check_dimension(T({{2, 5}}), 4));
    CHECK_FALSE(check_dimension(T({{3, 2}}), 5));
    CHECK(check_dimension(T({{2, 1}, {1, 4}}), 3));
    CHECK_FALSE(check_dimension(T({{3, 1}, {2, 1}}), 4));
    CHECK(check_dimension(T({{3, 1}, {1, 8}}), 4));
}

TEST_CASE("sigma") {
    CHECK(sigma(4, 2, 2) == 5);
    CHECK(sigma(3, 2, 2) == 5);
    CHECK(sigma(7, 3, 2) == 21);
    CHECK(sigma(4, 2, 3) == 10);
    CHECK(sigma(10, 3, 2) == 149);
    CHECK(sigma(5, 2, 2) == 13);
    CHECK(sigma(3, 1, 2) == 7);
    const auto sp = sigma_params(10, 3, 2);
    CHECK(sp.k == 3);
    CHECK(sp.r == 1);
    CHECK(code_of([] { sigma(3, 3, 2); }) == ErrorCode::BadRange);
    CHECK(code_of([] { sigma(3, 0, 2); }) == ErrorCode::BadRange);
}

TEST_CASE("supertail") {
    const auto p6 = refine(spread(6, 3, 2), 0, beutelspacher(3, 1, 2));
    const auto st = supertail(p6, 3);
    CHECK(st.members.size() == 5);
    CHECK(st.below == 2);
    CHECK(st.s == 3);
    CHECK(st.type.to_string() == "[2^1,1^4]");

    CHECK(code_of([] { supertail(spread(4, 2, 2), 2); }) == ErrorCode::BadCut);
    CHECK(code_of([&] { supertail(p6, 1); }) == ErrorCode::BadCut);
    CHECK(code_of([&] { supertail(p6, 4); }) == ErrorCode::BadCut);
    const auto perm = supertail(p6, 4, CutMode::Permissive);
    CHECK(perm.members.size() == 13);
    CHECK(perm.s == 0);

    const auto p7 = minimal_partition(7, 3, 2);
    const auto st7 = supertail(p7, 3);
    CHECK(st7.members.size() == 5);
    CHECK(st7.below == 2);
    CHECK(st7.members.size() + p7.count(3) == p7.size());
}

TEST_CASE("Drake-Freeman bound") {
    const auto b = drake_freeman_bound(7, 3, 2);
    CHECK(b.ell == 2);
    CHECK(b.twice_value == 37);  // 16 + 3/2 + 1 = 18.5
    CHECK(b.max_size() == 18);
    CHECK(b.admits(18));
    CHECK_FALSE(b.admits(19));

    const auto c = drake_freeman_bound(5, 2, 2);
    CHECK(c.ell == 2);
    CHECK(c.max_size() == 10);
    CHECK_FALSE(c.admits(11));

    CHECK(code_of([] { drake_freeman_bound(4, 2, 2); }) == ErrorCode::BadRange);

    // The d-members of a minimal partition form a partial spread.
    const auto bp = beutelspacher(5, 2, 2);
    CHECK(c.admits(BigInt(bp.count(2))));
}
