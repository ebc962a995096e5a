#include <doctest.h>

#include <string>
#include <vector>

#include "testutil.hpp"
#include "wkb/crossed_module.hpp"

using namespace wkb;

namespace {

bool mentions(const std::vector<std::string>& msgs, const std::string& word) {
    for (const auto& m : msgs)
        if (m.find(word) != std::string::npos) return true;
    return false;
}

// trivial action of g0 on gm1; only lawful when conjugation would be trivial
CrossedModule manual_cm(const FiniteGroup& gm1, const FiniteGroup& g0, std::vector<int> d) {
    CrossedModule cm;
    cm.gm1 = gm1;
    cm.g0 = g0;
    cm.d = std::move(d);
    cm.act.assign(g0.size(), std::vector<int>(gm1.size()));
    for (int g = 0; g < g0.size(); ++g)
        for (int h = 0; h < gm1.size(); ++h) cm.act[g][h] = h;
    return cm;
}

} // namespace

TEST_SUITE("crossed_module") {

TEST_CASE("standard constructions validate") {
    CHECK(make_g0(group_fixture("S3")).validate().empty());
    CHECK(make_g0(group_fixture("Q8")).validate().empty());
    for (int n : {2, 3, 4, 5, 6}) CHECK(make_g1(groups::cyclic(n)).validate().empty());
    CHECK(make_g1(group_fixture("V4")).validate().empty());
    CHECK(make_central(group_fixture("Q8")).validate().empty());
    CHECK(make_central(group_fixture("Z4")).validate().empty());
    CHECK(make_central(group_fixture("D4")).validate().empty());
    CHECK(make_central(group_fixture("S3")).validate().empty());

    CrossedModule c = make_central(group_fixture("Q8"));
    CHECK(c.gm1.size() == 8);
    CHECK(c.g0.size() == 4); // Q8 mod its center is the Klein group
    CHECK(c.g0.is_abelian());
    for (int a = 1; a < 4; ++a) CHECK(c.g0.mul(a, a) == 0);

    CrossedModule g0s3 = make_g0(group_fixture("S3"));
    CHECK(g0s3.gm1.size() == 1);
    CHECK(g0s3.g0.size() == 6);

    CrossedModule g1z3 = make_g1(groups::cyclic(3));
    CHECK(g1z3.g0.size() == 1);
    CHECK(g1z3.gm1.size() == 3);
}

TEST_CASE("shifted construction needs an abelian group") {
    for (const char* name : {"S3", "D4", "Q8"})
        CHECK(wkbtest::error_name([&] { make_g1(group_fixture(name)); }) == "NotAbelian");
}

TEST_CASE("manual module Z4 -> Z2 with trivial action") {
    CrossedModule cm = manual_cm(groups::cyclic(4), groups::cyclic(2), {0, 1, 0, 1});
    CHECK(cm.validate().empty());
    CHECK(cm.boundary(1) == 1);
    CHECK(cm.boundary(2) == 0);
    CHECK(cm.action(1, 3) == 3);

    // inclusion-like module Z2 -> Z4, d(1) = 2
    CrossedModule inc = manual_cm(groups::cyclic(2), groups::cyclic(4), {0, 2});
    CHECK(inc.validate().empty());
}

TEST_CASE("axiom violations are reported") {
    // S3 over the point: trivial action cannot satisfy Peiffer for nonabelian S3
    CrossedModule bad = manual_cm(group_fixture("S3"), groups::trivial(),
                                  std::vector<int>(6, 0));
    auto msgs = bad.validate();
    CHECK(!msgs.empty());
    CHECK(mentions(msgs, "Peiffer"));

    CrossedModule cm = make_central(group_fixture("Q8"));
    std::swap(cm.act[1][2], cm.act[1][3]);
    CHECK(!cm.validate().empty());

    CrossedModule range = manual_cm(groups::cyclic(4), groups::cyclic(2), {0, 1, 0, 1});
    range.d[1] = 7;
    CHECK(mentions(range.validate(), "out of range"));

    CrossedModule shape = manual_cm(groups::cyclic(4), groups::cyclic(2), {0, 1, 0, 1});
    shape.act.pop_back();
    CHECK(!shape.validate().empty());

    CrossedModule nohom = manual_cm(groups::cyclic(4), groups::cyclic(2), {0, 1, 1, 1});
    CHECK(mentions(nohom.validate(), "homomorphism"));
}

TEST_CASE("kernel of d is central, image is closed") {
    for (const char* name : {"g0:S3", "g1:Z4", "central:Q8", "central:D4", "central:S3"}) {
        CrossedModule cm = cm_fixture(name);
        REQUIRE(cm.validate().empty());
        for (int h = 0; h < cm.gm1.size(); ++h) {
            if (cm.d[h] != 0) continue;
            for (int h2 = 0; h2 < cm.gm1.size(); ++h2)
                CHECK(cm.gm1.mul(h, h2) == cm.gm1.mul(h2, h));
        }
        for (int h1 = 0; h1 < cm.gm1.size(); ++h1)
            for (int h2 = 0; h2 < cm.gm1.size(); ++h2) {
                int p = cm.g0.mul(cm.d[h1], cm.d[h2]);
                bool hit = false;
                for (int h = 0; h < cm.gm1.size() && !hit; ++h)
                    if (cm.d[h] == p) hit = true;
                CHECK(hit);
            }
    }
}

TEST_CASE("fixture parsing") {
    CHECK(cm_fixture("g0:S3").g0.size() == 6);
    CHECK(cm_fixture("g1:Z2").gm1.size() == 2);
    CHECK(cm_fixture("central:Z4").g0.size() == 1); // abelian group mod itself
    CHECK(wkbtest::error_name([] { cm_fixture("S3"); }) == "ParseError");
    CHECK(wkbtest::error_name([] { cm_fixture("weird:Z4"); }) == "ParseError");
    CHECK(wkbtest::error_name([] { cm_fixture("g1:S3"); }) == "NotAbelian");
    CHECK(wkbtest::error_name([] { cm_fixture("g0:bogus"); }) == "ParseError");
}

TEST_CASE("arrows: endpoints, composition, inverses") {
    CrossedModule cm = make_central(group_fixture("Q8"));
    wkbtest::Rng rng(404);

    for (int rep = 0; rep < 50; ++rep) {
        Arrow a{rng.uniform(0, cm.g0.size() - 1), rng.uniform(0, cm.gm1.size() - 1)};
        CHECK(arrow_dst(cm, a) == cm.g0.mul(cm.d[a.wit], a.src));

        Arrow id_s = identity_arrow(a.src);
        CHECK(arrow_dst(cm, id_s) == a.src);
        Arrow l = compose(cm, a, id_s);
        CHECK(l.src == a.src);
        CHECK(l.wit == a.wit);
        Arrow r = compose(cm, identity_arrow(arrow_dst(cm, a)), a);
        CHECK(r.src == a.src);
        CHECK(r.wit == a.wit);

        Arrow ainv = inverse_arrow(cm, a);
        CHECK(ainv.src == arrow_dst(cm, a));
        CHECK(arrow_dst(cm, ainv) == a.src);
        Arrow unit = compose(cm, ainv, a);
        CHECK(unit.src == a.src);
        CHECK(unit.wit == 0);

        // chain a then b then c, associativity of vertical composition
        Arrow b{arrow_dst(cm, a), rng.uniform(0, cm.gm1.size() - 1)};
        Arrow c{arrow_dst(cm, b), rng.uniform(0, cm.gm1.size() - 1)};
        Arrow left = compose(cm, c, compose(cm, b, a));
        Arrow right = compose(cm, compose(cm, c, b), a);
        CHECK(left.src == right.src);
        CHECK(left.wit == right.wit);
    }

    Arrow a{0, 1};
    int dst = arrow_dst(cm, a);
    Arrow off{cm.g0.mul(dst, 1), 0};
    CHECK(wkbtest::error_name([&] { compose(cm, off, a); }) == "NotComposable");
}

TEST_CASE("arrows: tensor and interchange") {
    CrossedModule cm = make_central(group_fixture("Q8"));
    wkbtest::Rng rng(405);

    for (int rep = 0; rep < 50; ++rep) {
        Arrow a{rng.uniform(0, cm.g0.size() - 1), rng.uniform(0, cm.gm1.size() - 1)};
        Arrow c{rng.uniform(0, cm.g0.size() - 1), rng.uniform(0, cm.gm1.size() - 1)};
        Arrow b{arrow_dst(cm, a), rng.uniform(0, cm.gm1.size() - 1)};
        Arrow d{arrow_dst(cm, c), rng.uniform(0, cm.gm1.size() - 1)};

        Arrow t = tensor(cm, a, c);
        CHECK(t.src == cm.g0.mul(a.src, c.src));
        CHECK(arrow_dst(cm, t) == cm.g0.mul(arrow_dst(cm, a), arrow_dst(cm, c)));

        // unit for tensor is the identity arrow at the group unit
        Arrow u = tensor(cm, identity_arrow(0), a);
        CHECK(u.src == a.src);
        CHECK(u.wit == a.wit);
        Arrow v = tensor(cm, a, identity_arrow(0));
        CHECK(v.src == a.src);
        CHECK(v.wit == a.wit);

        Arrow lhs = tensor(cm, compose(cm, b, a), compose(cm, d, c));
        Arrow rhs = compose(cm, tensor(cm, b, d), tensor(cm, a, c));
        CHECK(lhs.src == rhs.src);
        CHECK(lhs.wit == rhs.wit);
    }
}

}
