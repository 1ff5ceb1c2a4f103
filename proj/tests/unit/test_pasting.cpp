#include <doctest.h>

#include "dblcat/error.hpp"
#include "dblcat/fixtures.hpp"
#include "dblcat/pasting.hpp"
#include "oracles.hpp"

using namespace dblcat;

TEST_SUITE("pasting") {
    TEST_CASE("a 1x1 grid is its own square") {
        auto d = double_fixture("CYCLIC_QUIN");
        for (auto s : d.squares().ids()) CHECK(paste(d, PastingGrid::row({s})) == s);
    }

    TEST_CASE("identity grids") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            for (auto a : d.objects().ids()) {
                auto id = d.identities(a).square;
                CHECK(paste(d, {{id, id}, {id, id}}) == id);
                CHECK(paste(d, {{id, id, id}}) == id);
            }
            for (auto e : d.h_compose_table().entries()) {
                CHECK(paste(d, PastingGrid::row({d.id_of_h(e.first), d.id_of_h(e.second)})) == d.id_of_h(e.result));
            }
            for (auto e : d.v_compose_table().entries()) {
                CHECK(paste(d, PastingGrid::column({d.id_of_v(e.first), d.id_of_v(e.second)})) == d.id_of_v(e.result));
            }
        }
    }

    TEST_CASE("rows first equals columns first") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            oracle::for_each_2x2(d, [&](const PastingGrid& g) {
                CHECK(check_grid(d, g).ok());
                CHECK(paste(d, g) == oracle::paste_columns_first(d, g));
            });
        }
    }

    TEST_CASE("rows and columns fold") {
        auto d = double_fixture("CYCLIC_QUIN");
        auto ids = d.squares().ids();
        for (auto a : ids) {
            for (auto b : d.by_left(d.boundary(a).right)) {
                for (auto c : d.by_left(d.boundary(b).right)) {
                    CHECK(paste(d, PastingGrid::row({a, b, c})) == d.hcomp(d.hcomp(a, b), c));
                    CHECK(paste(d, PastingGrid::row({a, b, c})) == d.hcomp(a, d.hcomp(b, c)));
                }
            }
            for (auto b : d.by_top(d.boundary(a).bottom)) {
                CHECK(paste(d, PastingGrid::column({a, b})) == d.vcomp(a, b));
            }
        }
    }

    TEST_CASE("a mismatched seam gives one witness") {
        auto d = double_fixture("POS2_QUIN");
        auto a = d.id_of_v(d.v("id_P"));
        auto b = d.id_of_v(d.v("id_Q"));
        auto r = check_grid(d, PastingGrid::row({a, b}));
        CHECK(r.size() == 1);
        CHECK(r.has_family("horizontal"));
        auto col = check_grid(d, PastingGrid::column({a, b}));
        CHECK(col.size() == 1);
        CHECK(col.has_family("vertical"));
        try {
            paste(d, PastingGrid::row({a, b}));
            FAIL("expected MalformedGrid");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::MalformedGrid);
        }
    }

    TEST_CASE("empty and ragged grids are rejected") {
        auto d = double_fixture("TERMINAL");
        PastingGrid empty;
        CHECK(check_grid(d, empty).has_family("shape"));
        try {
            paste(d, empty);
            FAIL("expected MalformedGrid");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::MalformedGrid);
        }
        auto s = d.squares().ids().front();
        try {
            PastingGrid::from_rows({{s, s}, {s}});
            FAIL("expected MalformedGrid");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::MalformedGrid);
        }
    }
}
