#include "subpart/enumerate.hpp"
#include "subpart/error.hpp"
#include "subpart/space.hpp"

#include <doctest.h>

#include <random>

using namespace subpart;

namespace {
Subspace S(const Field& f, int n, std::vector<Vector> rows) { return span(rows, n, f); }
}  // namespace

TEST_CASE("theta") {
    CHECK(theta(0, 2) == 0);
    CHECK(theta(-3, 2) == 0);
    CHECK(theta(1, 5) == 1);
    CHECK(theta(4, 2) == 15);
    CHECK(theta(3, 3) == 13);
    CHECK(theta_u64(7, 2) == 127);
}

TEST_CASE("span") {
    const auto f = make_field(2);
    CHECK(S(f, 2, {{1, 0}, {0, 1}}).dim() == 2);
    CHECK(S(f, 2, {{1, 0}, {0, 1}}) == Subspace::full(f, 2));
    CHECK(S(f, 3, {{1, 1, 0}, {1, 1, 0}}).dim() == 1);
    CHECK(S(f, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}).dim() == 2);
    CHECK(S(f, 3, {}).dim() == 0);
    const std::vector<Vector> bad = {{1, 0}};
    CHECK_THROWS_AS(span(bad, 3, f), Error);
    try {
        span(bad, 3, f);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
}

TEST_CASE("canonical RREF") {
    const auto f = make_field(3);
    const auto u = S(f, 3, {{2, 1, 0}, {0, 2, 2}});
    const auto w = S(f, 3, {{1, 2, 0}, {1, 0, 1}});
    CHECK(u == w);
    CHECK(u.pivots() == std::vector<int>{0, 1});
    CHECK(u.row(0)[0] == 1);
    CHECK(u.row(1)[1] == 1);
    CHECK(u.row(0)[1] == 0);
    CHECK(std::hash<Subspace>{}(u) == std::hash<Subspace>{}(w));
}

TEST_CASE("intersect and sum") {
    const auto f = make_field(2);
    const auto u = S(f, 3, {{1, 0, 0}, {0, 1, 0}});
    CHECK(intersect(u, u) == u);
    CHECK(intersect(S(f, 2, {{1, 0}}), S(f, 2, {{1, 1}})).dim() == 0);
    const auto w = S(f, 3, {{0, 1, 0}, {0, 0, 1}});
    CHECK(intersect(u, w) == S(f, 3, {{0, 1, 0}}));
    CHECK(sum_subspace(u, w) == Subspace::full(f, 3));
    CHECK_THROWS_AS(intersect(u, Subspace::full(f, 4)), Error);
}

TEST_CASE("containment") {
    const auto f = make_field(2);
    const auto u = S(f, 3, {{1, 1, 0}, {0, 1, 1}});
    CHECK(contains(u, Vector{0, 0, 0}));
    CHECK(contains(S(f, 2, {{1, 1}}), Vector{1, 1}));
    CHECK(contains(u, Vector{1, 0, 1}));
    CHECK_FALSE(contains(u, Vector{1, 0, 0}));
    CHECK(contains_subspace(u, S(f, 3, {{1, 0, 1}})));
    CHECK_FALSE(contains_subspace(S(f, 3, {{1, 0, 1}}), u));
}

TEST_CASE("points") {
    const auto f2 = make_field(2);
    const auto f3 = make_field(3);
    CHECK(points(Subspace(f2, 4)).empty());
    CHECK(points(S(f2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}})).size() == 3);
    const auto pts = points(S(f3, 3, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(pts.size() == 4);
    for (const auto& p : pts) CHECK(normalize(p, f3) == p);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
}

TEST_CASE("point index") {
    const auto f = make_field(3);
    const PointIndex idx(f, 3);
    CHECK(idx.size() == 13);
    CHECK(idx.point(0) == Vector{0, 0, 1});
    CHECK(idx.index_of(Vector{0, 0, 2}) == 0);
    CHECK(idx.index_of(Vector{0, 0, 0}) == PointIndex::kNone);
    for (std::size_t i = 0; i < idx.size(); ++i) CHECK(idx.index_of(idx.point(i)) == i);
}

TEST_CASE("canonicality, vector counts and the modular law over full enumeration") {
    for (int q : {2, 3}) {
        const auto f = make_field(q);
        for (int n = 1; n <= 4; ++n) {
            std::vector<Subspace> all;
            for (int d = 0; d <= n; ++d) {
                for (auto& u : all_subspaces(f, n, d)) all.push_back(std::move(u));
            }
            for (const auto& u : all) {
                const auto pts = points(u);
                CHECK(pts.size() == theta_u64(u.dim(), q));
                CHECK(span(pts, n, f) == u);
                CHECK(Subspace::from_rows(f, n, u.rows()) == u);
                CHECK(ipow(q, u.dim()) - 1 == (q - 1) * theta(u.dim(), q));
            }
            std::mt19937 rng(20240601u + static_cast<unsigned>(n * 10 + q));
            std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
            const int pairs = n <= 3 ? 0 : 400;
            auto check_pair = [&](const Subspace& a, const Subspace& b) {
                CHECK(a.dim() + b.dim() == intersect(a, b).dim() + sum_subspace(a, b).dim());
            };
            if (pairs == 0) {
                for (const auto& a : all)
                    for (const auto& b : all) check_pair(a, b);
            } else {
                for (int i = 0; i < pairs; ++i) check_pair(all[pick(rng)], all[pick(rng)]);
            }
        }
    }
}

TEST_CASE("embed") {
    const auto f = make_field(2);
    const auto u = S(f, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    CHECK(embed(u, std::vector<Element>{1, 1}) == Vector{1, 1, 1, 1});
    CHECK(embed(u, std::vector<Element>{0, 0}) == Vector{0, 0, 0, 0});
}

TEST_CASE("annihilator") {
    const auto f = make_field(3);
    const auto u = S(f, 4, {{1, 2, 0, 1}});
    const auto a = annihilator(u);
    CHECK(a.dim() == 3);
    for (int r = 0; r < a.dim(); ++r) CHECK(dot(a.row(r), u.row(0), f) == 0);
    CHECK(annihilator(a) == u);
}
