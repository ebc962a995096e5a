#include <doctest.h>

#include <algorithm>

#include "testutil.hpp"
#include "wkb/finite_group.hpp"

using namespace wkb;

namespace {

int named(const FiniteGroup& g, const std::string& s) {
    for (int i = 0; i < g.size(); ++i)
        if (g.names[i] == s) return i;
    return -1;
}

} // namespace

TEST_SUITE("groups") {

TEST_CASE("fixtures validate") {
    for (const char* name : {"1", "Z2", "Z3", "Z4", "Z6", "Z8", "V4", "S3", "D4", "Q8"}) {
        FiniteGroup g = group_fixture(name);
        CHECK(g.validate().empty());
        CHECK(g.mul(0, 0) == 0);
    }
    CHECK(group_fixture("Z5").size() == 5);
    CHECK(group_fixture("S3").size() == 6);
    CHECK(group_fixture("D4").size() == 8);
    CHECK(group_fixture("Q8").size() == 8);
    CHECK(wkbtest::error_name([] { group_fixture("bogus"); }) == "ParseError");
    CHECK(wkbtest::error_name([] { group_fixture("Z0"); }) == "ParseError");
}

TEST_CASE("abelian flags and centers") {
    CHECK(group_fixture("Z6").is_abelian());
    CHECK(group_fixture("V4").is_abelian());
    CHECK(!group_fixture("S3").is_abelian());
    CHECK(!group_fixture("D4").is_abelian());
    CHECK(!group_fixture("Q8").is_abelian());

    CHECK(group_fixture("S3").center() == std::vector<int>{0});
    FiniteGroup q8 = group_fixture("Q8");
    CHECK(q8.center() == std::vector<int>{0, named(q8, "-1")});
    FiniteGroup d4 = group_fixture("D4");
    CHECK(d4.center() == std::vector<int>{0, named(d4, "r2")});
}

TEST_CASE("quaternion relations") {
    FiniteGroup q = group_fixture("Q8");
    int i = named(q, "i"), j = named(q, "j"), k = named(q, "k"), m = named(q, "-1");
    REQUIRE(i >= 0);
    CHECK(q.mul(i, i) == m);
    CHECK(q.mul(j, j) == m);
    CHECK(q.mul(k, k) == m);
    CHECK(q.mul(i, j) == k);
    CHECK(q.mul(j, i) == named(q, "-k"));
    CHECK(q.mul(q.mul(i, j), k) == m);
    CHECK(q.inv(i) == named(q, "-i"));
    CHECK(q.pow(i, 4) == 0);
}

TEST_CASE("inverse, power, conjugation") {
    for (const char* name : {"Z6", "S3", "D4", "Q8"}) {
        FiniteGroup g = group_fixture(name);
        for (int a = 0; a < g.size(); ++a) {
            CHECK(g.mul(a, g.inv(a)) == 0);
            CHECK(g.mul(g.inv(a), a) == 0);
            CHECK(g.pow(a, g.size()) == 0); // order divides |G|
            CHECK(g.pow(a, -1) == g.inv(a));
            for (int b = 0; b < g.size(); ++b)
                CHECK(g.conj(a, b) == g.mul(g.mul(a, b), g.inv(a)));
        }
    }
}

TEST_CASE("validate catches broken tables") {
    FiniteGroup g = group_fixture("Z3");
    g.table[1][2] = 1; // breaks cancellation
    CHECK(!g.validate().empty());

    FiniteGroup h = group_fixture("Z2");
    h.table = {{0, 1}, {1, 1}};
    CHECK(!h.validate().empty());
}

TEST_CASE("subgroup and quotient") {
    FiniteGroup q8 = group_fixture("Q8");
    std::vector<int> z = q8.center();
    FiniteGroup zg = subgroup(q8, z);
    CHECK(zg.size() == 2);
    CHECK(zg.validate().empty());
    CHECK(wkbtest::error_name([&] { subgroup(q8, {0, named(q8, "i")}); }) == "MalformedTables");
    CHECK(wkbtest::error_name([&] { subgroup(q8, {1, 2}); }) == "MalformedTables");

    Quotient qt = quotient_by(q8, z);
    CHECK(qt.q.size() == 4);
    CHECK(qt.q.validate().empty());
    CHECK(qt.q.is_abelian());
    // Q8 / center is the Klein group: every nontrivial element squares to e
    for (int a = 1; a < 4; ++a) CHECK(qt.q.mul(a, a) == 0);
    for (int a = 0; a < q8.size(); ++a) {
        CHECK(qt.proj[a] < 4);
        CHECK(qt.proj[qt.rep[qt.proj[a]]] == qt.proj[a]);
        CHECK(qt.rep[qt.proj[a]] <= a); // reps are least coset members
    }
    CHECK(qt.proj[0] == 0);
}

TEST_CASE("direct products") {
    FiniteGroup a = groups::cyclic(2);
    FiniteGroup b = groups::cyclic(3);
    FiniteGroup p = groups::direct_product(a, b);
    CHECK(p.size() == 6);
    CHECK(p.validate().empty());
    CHECK(p.is_abelian());
    FiniteGroup np = groups::direct_product(group_fixture("S3"), a);
    CHECK(np.validate().empty());
    CHECK(!np.is_abelian());
}

TEST_CASE("invariant factors of abelian groups") {
    using V = std::vector<long long>;
    CHECK(abelian_invariant_factors(group_fixture("Z4").table) == V{4});
    CHECK(abelian_invariant_factors(group_fixture("V4").table) == V{2, 2});
    CHECK(abelian_invariant_factors(group_fixture("Z6").table) == V{6});
    CHECK(abelian_invariant_factors(group_fixture("1").table) == V{});
    CHECK(abelian_invariant_factors(group_fixture("Z12").table) == V{12});

    FiniteGroup z2 = groups::cyclic(2), z4 = groups::cyclic(4), z6 = groups::cyclic(6);
    CHECK(abelian_invariant_factors(groups::direct_product(z2, z4).table) == V{2, 4});
    CHECK(abelian_invariant_factors(groups::direct_product(z2, z6).table) == V{2, 6});
    CHECK(abelian_invariant_factors(groups::direct_product(z4, z6).table) == V{2, 12});
    CHECK(abelian_invariant_factors(
              groups::direct_product(z2, groups::direct_product(z2, z2)).table) ==
          V{2, 2, 2});
}

TEST_CASE("dihedral structure") {
    FiniteGroup d4 = groups::dihedral(4);
    int r = named(d4, "r1"), s = named(d4, "sr0");
    REQUIRE(r >= 0);
    REQUIRE(s >= 0);
    CHECK(d4.pow(r, 4) == 0);
    CHECK(d4.mul(s, s) == 0);
    // s r s^{-1} = r^{-1}
    CHECK(d4.conj(s, r) == d4.inv(r));
}

}
