#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tricalc/tricalc.hpp"

using namespace tricalc;
using namespace tricalc::openbook;
using tricalc::core::HomologyClass;
using tricalc::core::Int;
using tricalc::core::IntMatrix;
using tricalc::core::Surface;

namespace {

Int pairing(const Surface& s, const HomologyClass& x, const HomologyClass& y) {
    IntMatrix j = core::intersection_form(s);
    Int out = 0;
    std::vector<Int> jy = j * y;
    for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * jy[i];
    return out;
}

}  // namespace

TEST_CASE("positive twist about a_1 on the torus maps b_1 to a_1 + b_1") {
    Surface torus{1, 0};
    HomologyClass a1{1, 0};
    IntMatrix t = transvection_matrix(torus, a1, 1);
    std::vector<Int> image = t * HomologyClass{0, 1};
    CHECK(image[0] == 1);
    CHECK(image[1] == 1);
    // a_1 itself is fixed
    std::vector<Int> fixed = t * a1;
    CHECK(fixed[0] == 1);
    CHECK(fixed[1] == 0);
}

TEST_CASE("twists about boundary-parallel classes act trivially on H1") {
    Surface s{1, 3};
    HomologyClass d1 = core::basis_class(s, core::d_slot(s, 0));
    CHECK(transvection_matrix(s, d1, 1).is_identity());
    CHECK(transvection_matrix(s, d1, -1).is_identity());
}

TEST_CASE("opposite twists about the same curve cancel") {
    testutil::Rng rng(301);
    for (int c = 0; c < 50; ++c) {
        Surface s{testutil::rnd(rng, 0, 3), testutil::rnd(rng, 0, 3)};
        HomologyClass curve = testutil::random_class(rng, s);
        IntMatrix plus = transvection_matrix(s, curve, 1);
        IntMatrix minus = transvection_matrix(s, curve, -1);
        REQUIRE((plus * minus).is_identity());
    }
}

TEST_CASE("transvections preserve the intersection form: T^t J T = J") {
    testutil::Rng rng(302);
    for (int c = 0; c < 200; ++c) {
        Surface s{testutil::rnd(rng, 0, 3), testutil::rnd(rng, 0, 4)};
        HomologyClass curve = testutil::random_class(rng, s, -4, 4);
        int sign = testutil::rnd(rng, 0, 1) ? 1 : -1;
        IntMatrix t = transvection_matrix(s, curve, sign);
        IntMatrix j = core::intersection_form(s);
        REQUIRE(t.transpose() * j * t == j);
    }
}

TEST_CASE("transvection rejects wrong-length classes") {
    CHECK_THROWS_AS(transvection_matrix(Surface{1, 0}, HomologyClass{1}, 1),
                    core::invariant_error);
}

TEST_CASE("monodromy action: empty word is the identity") {
    OpenBook ob{{Surface{2, 1}}, {}};
    auto act = monodromy_action(ob);
    REQUIRE(act.size() == 1);
    CHECK(act[0].is_identity());
}

TEST_CASE("monodromy action: a twist and its inverse cancel") {
    Surface page{1, 2};
    HomologyClass curve{1, 2, -1};
    OpenBook ob{{page}, {TwistLetter{0, curve, 1}, TwistLetter{0, curve, -1}}};
    CHECK(monodromy_action(ob)[0].is_identity());
}

TEST_CASE("monodromy action composes letter matrices in word order") {
    Surface page{1, 1};
    HomologyClass a1{1, 0}, b1{0, 1};
    OpenBook ob{{page}, {TwistLetter{0, a1, 1}, TwistLetter{0, b1, 1}}};
    IntMatrix expect = transvection_matrix(page, a1, 1) * transvection_matrix(page, b1, 1);
    CHECK(monodromy_action(ob)[0] == expect);
}

TEST_CASE("monodromy action is computed per page component") {
    Surface torus{1, 1};
    OpenBook ob{{torus, Surface{0, 2}},
                {TwistLetter{0, {1, 0}, 1}, TwistLetter{1, {1}, 1}, TwistLetter{0, {0, 1}, -1}}};
    auto act = monodromy_action(ob);
    REQUIRE(act.size() == 2);
    CHECK(act[0] == transvection_matrix(torus, {1, 0}, 1) *
                        transvection_matrix(torus, {0, 1}, -1));
    CHECK(act[1].is_identity());  // the binding-parallel core of the annulus
}

TEST_CASE("reversed word with flipped signs acts as the inverse") {
    testutil::Rng rng(303);
    for (int c = 0; c < 60; ++c) {
        OpenBook ob = testutil::random_book(rng);
        OpenBook rev = ob;
        rev.word = reverse_flip(ob.word);
        REQUIRE((monodromy_action(ob)[0] * monodromy_action(rev)[0]).is_identity());
    }
}

TEST_CASE("hopf stabilization of the trivial disk open book gives an annulus page") {
    OpenBook disk = testutil::disk_book();
    OpenBook st = hopf_stabilize(disk, 0, StabVariant::same_binding, 1);
    REQUIRE(st.pages.size() == 1);
    CHECK(st.pages[0] == Surface{0, 2});
    REQUIRE(st.word.size() == 1);
    CHECK(st.word[0].sign == 1);
    CHECK(st.word[0].curve.size() == 1);
}

TEST_CASE("different-bindings stabilization trades a boundary circle for genus") {
    OpenBook annulus{{Surface{0, 2}}, {}};
    OpenBook st = hopf_stabilize(annulus, 0, StabVariant::different_bindings, -1);
    CHECK(st.pages[0] == Surface{1, 1});
    REQUIRE(st.word.size() == 1);
    CHECK(st.word[0].sign == -1);
    // new curve is the fresh symplectic class a_1
    REQUIRE(st.word[0].curve.size() == 2);
    CHECK(st.word[0].curve[0] == 1);
    CHECK(st.word[0].curve[1] == 0);
}

TEST_CASE("different-bindings stabilization needs two binding circles") {
    CHECK_THROWS_AS(hopf_stabilize(testutil::disk_book(), 0, StabVariant::different_bindings, 1),
                    core::invariant_error);
}

TEST_CASE("hopf stabilization drops the page Euler characteristic by one exactly") {
    testutil::Rng rng(304);
    for (int c = 0; c < 100; ++c) {
        OpenBook ob = testutil::random_book(rng);
        StabVariant v = (ob.pages[0].boundary >= 2 && testutil::rnd(rng, 0, 1))
                            ? StabVariant::different_bindings
                            : StabVariant::same_binding;
        OpenBook st = hopf_stabilize(ob, 0, v, testutil::rnd(rng, 0, 1) ? 1 : -1);
        REQUIRE(core::surface_euler(st.pages[0]) == core::surface_euler(ob.pages[0]) - 1);
        REQUIRE(st.word.size() == ob.word.size() + 1);
    }
}

TEST_CASE("hopf stabilization leaves other page components untouched") {
    Surface torus{1, 1};
    OpenBook ob{{Surface{0, 2}, torus}, {TwistLetter{1, {1, 0}, 1}}};
    OpenBook st = hopf_stabilize(ob, 0, StabVariant::same_binding, 1);
    CHECK(st.pages[1] == torus);
    REQUIRE(st.word.size() == 2);
    CHECK(st.word[1] == ob.word[0]);
}

TEST_CASE("stabilization embeds old classes preserving intersection pairings") {
    testutil::Rng rng(305);
    for (int c = 0; c < 100; ++c) {
        Surface page{testutil::rnd(rng, 0, 2), testutil::rnd(rng, 2, 4)};
        HomologyClass x = testutil::random_class(rng, page);
        HomologyClass y = testutil::random_class(rng, page);
        for (StabVariant v : {StabVariant::same_binding, StabVariant::different_bindings}) {
            OpenBook ob{{page}, {TwistLetter{0, x, 1}, TwistLetter{0, y, 1}}};
            OpenBook st = hopf_stabilize(ob, 0, v, 1);
            const HomologyClass& ex = st.word[1].curve;  // embedded x
            const HomologyClass& ey = st.word[2].curve;  // embedded y
            REQUIRE(pairing(st.pages[0], ex, ey) == pairing(page, x, y));
        }
    }
}

TEST_CASE("compatible: the mirror word matches across the identification") {
    Surface page{1, 2};
    OpenBook ob{{page}, {TwistLetter{0, {1, 0, 2}, 1}}};
    OpenBook mirror = ob;
    mirror.word = reverse_flip(ob.word);
    CHECK(compatible(ob, mirror, {{0, 0}}));
    // gluing flips orientation, so a book is self-compatible only when its
    // action squares to the identity
    CHECK_FALSE(compatible(ob, ob, {{0, 0}}));
    OpenBook trivial{{page}, {}};
    CHECK(compatible(trivial, trivial, {{0, 0}}));
}

TEST_CASE("compatible: page parameters must match") {
    CHECK_FALSE(compatible(testutil::disk_book(), OpenBook{{Surface{0, 2}}, {}}, {{0, 0}}));
    // the force flag skips words, never pages
    CHECK_FALSE(compatible(testutil::disk_book(), OpenBook{{Surface{0, 2}}, {}}, {{0, 0}}, true));
}

TEST_CASE("compatible: canceling word matches the empty word") {
    Surface page{1, 1};
    HomologyClass curve{1, 1};
    OpenBook cancel{{page}, {TwistLetter{0, curve, 1}, TwistLetter{0, curve, -1}}};
    OpenBook empty{{page}, {}};
    CHECK(compatible(cancel, empty, {{0, 0}}));
}

TEST_CASE("compatible: force bypasses a genuine word mismatch") {
    Surface page{1, 1};
    OpenBook twisted{{page}, {TwistLetter{0, {1, 0}, 1}}};
    OpenBook empty{{page}, {}};
    CHECK_FALSE(compatible(twisted, empty, {{0, 0}}));
    CHECK(compatible(twisted, empty, {{0, 0}}, true));
}

TEST_CASE("compatible is symmetric under swapping with the reversed pairing") {
    testutil::Rng rng(306);
    for (int c = 0; c < 60; ++c) {
        OpenBook ob1 = testutil::random_book(rng);
        OpenBook ob2 = ob1;
        if (testutil::rnd(rng, 0, 1)) {
            ob2.word = reverse_flip(ob1.word);  // compatible by construction
        } else {
            ob2 = testutil::random_book(rng);  // usually incompatible
        }
        bool fwd = ob1.pages[0] == ob2.pages[0] && compatible(ob1, ob2, {{0, 0}});
        bool bwd = ob1.pages[0] == ob2.pages[0] && compatible(ob2, ob1, {{0, 0}});
        REQUIRE(fwd == bwd);
    }
}

TEST_CASE("closed pages are rejected") {
    OpenBook bad{{Surface{1, 0}}, {}};
    CHECK_THROWS_AS(check_open_book(bad), core::invariant_error);
}
