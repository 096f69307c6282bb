#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "dycklat/covering.hpp"
#include "dycklat/errors.hpp"
#include "dycklat/involution.hpp"
#include "dycklat/poset.hpp"
#include "dycklat/stats.hpp"

using namespace dycklat;

namespace {

bool in_d1(const DyckPath& p) {
    return !p.empty() && p.trailing_up_run() == 1 && p.trailing_down_run() >= 2;
}

}  // namespace

TEST_CASE("classify_p1 golden cases") {
    auto ii = classify_p1(DyckPath::parse("UUUDDD"));
    REQUIRE(ii.has_value());
    CHECK(ii->tag == PhiCase::CaseII);
    CHECK(ii->k == 3);

    CHECK_FALSE(classify_p1(DyckPath::parse("UUDDUD")).has_value());

    auto iv = classify_p1(DyckPath::parse("UUDUDD"));
    REQUIRE(iv.has_value());
    CHECK(iv->tag == PhiCase::CaseIV);
    CHECK(iv->k == 1);
    REQUIRE(iv->components.size() == 2);
    CHECK(iv->components[0].empty());
    CHECK(iv->components[1].word() == "UD");

    auto iii = classify_p1(DyckPath::parse("UDUUDD"));
    REQUIRE(iii.has_value());
    CHECK(iii->tag == PhiCase::CaseIII);
    CHECK(iii->k == 2);
    CHECK(iii->prefix.word() == "UD");
}

TEST_CASE("sharp inserts UD on the last peak") {
    CHECK(sharp(DyckPath::parse("UD")).word() == "UUDD");
    CHECK(sharp(DyckPath::parse("UDUD")).word() == "UDUUDD");
    CHECK(sharp(DyckPath::parse("UUDD")).word() == "UUUDDD");
    CHECK_THROWS_AS(sharp(DyckPath{}), BadShape);
}

TEST_CASE("phi table for n = 3 with case tags") {
    PhiTable t = build_phi_table(3);
    const std::map<std::string, std::pair<std::string, PhiCase>> golden = {
        {"UUUDDD", {"UDUDUD", PhiCase::CaseII}},
        {"UUDUDD", {"UUDUDD", PhiCase::CaseIV}},
        {"UUDDUD", {"UDUUDD", PhiCase::Inverse}},
        {"UDUUDD", {"UUDDUD", PhiCase::CaseIII}},
        {"UDUDUD", {"UUUDDD", PhiCase::Inverse}},
    };
    for (const auto& [w, expect] : golden) {
        DyckPath p = DyckPath::parse(w);
        CHECK(t.apply(p).word() == expect.first);
        CHECK(t.tag_of(p) == expect.second);
    }
}

TEST_CASE("phi is an involution transporting (s,t) to (t,s)") {
    PhiFamily fam(9);
    for (int k = 1; k <= 9; ++k) CHECK(fam.phi(pyramid_path(k)) == sawtooth(k));
    CHECK(fam.phi(DyckPath::parse("UD")) == DyckPath::parse("UD"));
    CHECK_THROWS_AS(fam.phi(pyramid_path(10)), TableMissing);

    for (int n = 0; n <= 9; ++n)
        for (const DyckPath& p : enumerate_paths(n)) {
            DyckPath q = fam.phi(p);
            CHECK(q.semilength() == n);
            CHECK(fam.phi(q) == p);
            CHECK(stat_s(q) == stat_t(p));
            CHECK(stat_t(q) == stat_s(p));
        }
}

TEST_CASE("phi preserves the pyramid statistics") {
    PhiFamily fam(9);
    for (int n = 0; n <= 9; ++n)
        for (const DyckPath& p : enumerate_paths(n)) {
            PyramidCounts a = pyramid_counts(p);
            PyramidCounts b = pyramid_counts(fam.phi(p));
            CHECK(a.asymmetric == b.asymmetric);
            CHECK(a.symmetric_weight_sum == b.symmetric_weight_sum);
        }
}

TEST_CASE("tag partition and image structure") {
    PhiFamily fam(9);
    for (int n = 2; n <= 9; ++n) {
        const PhiTable& t = fam.table(n);
        std::set<std::string> d1, d1_image;
        for (const DyckPath& p : t.paths) {
            PhiCase tag = t.tag_of(p);
            // Rule tags are exactly the P1 membership test.
            CHECK((tag != PhiCase::Inverse) == classify_p1(p).has_value());
            // Case iv is exactly D1 (trailing up run 1, trailing down run >= 2).
            CHECK((tag == PhiCase::CaseIV) == in_d1(p));
            if (in_d1(p)) {
                d1.insert(p.word());
                d1_image.insert(t.apply(p).word());
            }
            // Rules other than iv map out of P1; iv stays inside D1.
            if (tag == PhiCase::CaseII || tag == PhiCase::CaseIII || tag == PhiCase::CaseV)
                CHECK(t.tag_of(t.apply(p)) == PhiCase::Inverse);
            if (tag == PhiCase::CaseIV) CHECK(in_d1(t.apply(p)));
        }
        CHECK(d1 == d1_image);  // phi(D1) = D1 as a set
    }
}

TEST_CASE("phi is not an anti-automorphism of the order") {
    PhiFamily fam(6);
    bool found = false;
    for (int n = 3; n <= 6 && !found; ++n) {
        PosetGraph g = build_hasse(n, CoveringRelation::restricted());
        for (VertexId u = 0; u < g.vertices.size() && !found; ++u)
            for (VertexId v : g.up_edges[u]) {
                DyckPath a = fam.phi(g.vertices[u]);
                DyckPath b = fam.phi(g.vertices[v]);
                if (!leq(g, a, b) && !leq(g, b, a)) {
                    found = true;
                    break;
                }
            }
    }
    CHECK(found);
}

TEST_CASE("bistatistic tally is symmetric in s and t") {
    for (int n = 0; n <= 10; ++n) {
        auto tally = tally_bistatistic(n);
        for (std::size_t s = 0; s < tally.size(); ++s)
            for (std::size_t t = 0; t < tally.size(); ++t) CHECK(tally[s][t] == tally[t][s]);
    }
}
