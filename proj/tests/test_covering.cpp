#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "dycklat/covering.hpp"
#include "dycklat/dyck_path.hpp"
#include "dycklat/errors.hpp"
#include "dycklat/stats.hpp"

using namespace dycklat;

namespace {

std::set<std::string> words(const std::vector<DyckPath>& v) {
    std::set<std::string> out;
    for (const DyckPath& p : v) out.insert(p.word());
    return out;
}

std::vector<int> heights(const DyckPath& p) {
    std::vector<int> h(static_cast<std::size_t>(p.length()));
    for (int i = 0; i < p.length(); ++i) h[static_cast<std::size_t>(i)] = p.height_after(i);
    return h;
}

}  // namespace

TEST_CASE("successor golden cases") {
    CHECK(words(successors(DyckPath::parse("UDUDUD"), CoveringRelation::restricted())) ==
          std::set<std::string>{"UUDDUD", "UDUUDD"});
    for (int n = 1; n <= 8; ++n) {
        CHECK(successors(pyramid_path(n), CoveringRelation::restricted()).empty());
        CHECK(successors(pyramid_path(n), CoveringRelation::tamari()).empty());
        CHECK(predecessors(sawtooth(n), CoveringRelation::restricted()).empty());
        CHECK(predecessors(pyramid_path(n), CoveringRelation::restricted()).size() ==
              static_cast<std::size_t>(n - 1));
    }

    unsigned long long total4 = 0;
    for (const DyckPath& p : enumerate_paths(4))
        total4 += successors(p, CoveringRelation::restricted()).size();
    CHECK(total4 == 20);

    unsigned long long tam4 = 0;
    for (const DyckPath& p : enumerate_paths(4))
        tam4 += successors(p, CoveringRelation::tamari()).size();
    CHECK(tam4 == 21);  // (n-1) c_n / 2 at n = 4
}

TEST_CASE("degree identities: out-degree = s, in-degree = t") {
    for (int n = 0; n <= 9; ++n)
        for (const DyckPath& p : enumerate_paths(n)) {
            CHECK(successors(p, CoveringRelation::restricted()).size() ==
                  static_cast<std::size_t>(stat_s(p)));
            CHECK(predecessors(p, CoveringRelation::restricted()).size() ==
                  static_cast<std::size_t>(stat_t(p)));
        }
}

TEST_CASE("predecessors are the exact inverse of successors") {
    for (const CoveringRelation& rel :
         {CoveringRelation::restricted(), CoveringRelation::tamari(),
          CoveringRelation::pattern_avoiding("UDU")}) {
        for (int n = 1; n <= 7; ++n) {
            std::map<std::string, std::set<std::string>> inv;
            auto paths = enumerate_paths(n);
            for (const DyckPath& p : paths)
                for (const DyckPath& q : successors(p, rel)) inv[q.word()].insert(p.word());
            for (const DyckPath& q : paths) CHECK(words(predecessors(q, rel)) == inv[q.word()]);
        }
    }
}

TEST_CASE("only the top has no successor, only the bottom has no predecessor") {
    for (int n = 2; n <= 9; ++n)
        for (const DyckPath& p : enumerate_paths(n)) {
            CHECK(successors(p, CoveringRelation::restricted()).empty() == (p == pyramid_path(n)));
            CHECK(predecessors(p, CoveringRelation::restricted()).empty() == (p == sawtooth(n)));
        }
}

TEST_CASE("dominance: a cover lies weakly above the covered path") {
    for (const CoveringRelation& rel : {CoveringRelation::restricted(), CoveringRelation::tamari()})
        for (int n = 1; n <= 8; ++n)
            for (const DyckPath& p : enumerate_paths(n)) {
                auto hp = heights(p);
                for (const DyckPath& q : successors(p, rel)) {
                    auto hq = heights(q);
                    bool strict = false;
                    for (std::size_t i = 0; i < hp.size(); ++i) {
                        CHECK(hq[i] >= hp[i]);
                        strict |= hq[i] > hp[i];
                    }
                    CHECK(strict);
                }
            }
}

TEST_CASE("statistic drift along a restricted covering") {
    for (int n = 1; n <= 9; ++n)
        for (const DyckPath& p : enumerate_paths(n)) {
            int s = stat_s(p), t = stat_t(p);
            for (const DyckPath& q : successors(p, CoveringRelation::restricted())) {
                CHECK(stat_s(q) >= s - 1);
                CHECK(stat_s(q) <= s);
                CHECK(stat_t(q) >= t - 1);  // t(P) <= t(P') + 1
            }
        }
}

TEST_CASE("restricted covers are Tamari covers, strictly fewer from n = 4") {
    for (int n = 1; n <= 9; ++n) {
        bool strict_somewhere = false;
        for (const DyckPath& p : enumerate_paths(n)) {
            auto r = words(successors(p, CoveringRelation::restricted()));
            auto t = words(successors(p, CoveringRelation::tamari()));
            CHECK(std::includes(t.begin(), t.end(), r.begin(), r.end()));
            strict_somewhere |= r.size() < t.size();
        }
        CHECK(strict_somewhere == (n >= 4));
    }
}

TEST_CASE("pattern DU reproduces the restricted covering") {
    const CoveringRelation du = CoveringRelation::pattern_avoiding("DU");
    for (int n = 0; n <= 8; ++n)
        for (const DyckPath& p : enumerate_paths(n))
            CHECK(words(successors(p, du)) ==
                  words(successors(p, CoveringRelation::restricted())));
}

TEST_CASE("apply_leftmost") {
    CHECK(apply_leftmost(DyckPath::parse("UDUDUD"))->word() == "UUDDUD");
    for (int n = 1; n <= 10; ++n) {
        CHECK_FALSE(apply_leftmost(pyramid_path(n)).has_value());
        DyckPath cur = sawtooth(n);
        int steps = 0;
        while (auto next = apply_leftmost(cur)) {
            cur = *next;
            ++steps;
            REQUIRE(steps <= n * (n - 1) / 2);
        }
        CHECK(cur == pyramid_path(n));
        CHECK(steps == n * (n - 1) / 2);
    }

    // The leftmost move is one of the successors.
    for (int n = 1; n <= 8; ++n)
        for (const DyckPath& p : enumerate_paths(n))
            if (auto q = apply_leftmost(p)) {
                auto s = successors(p, CoveringRelation::restricted());
                CHECK(std::find(s.begin(), s.end(), *q) != s.end());
            }
}

TEST_CASE("distinct restricted occurrences give distinct covers") {
    // |successors| already equals the occurrence count stat_s (tested above);
    // this re-checks it on the biggest class directly.
    for (const DyckPath& p : enumerate_paths(9)) {
        auto s = successors(p, CoveringRelation::restricted());
        CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    }
}

TEST_CASE("pattern relation input validation") {
    CHECK_THROWS_AS(CoveringRelation::pattern_avoiding("UX"), BadCharacter);
    CHECK_THROWS_AS(CoveringRelation::pattern_avoiding(""), BadInput);
    CHECK(CoveringRelation::pattern_avoiding("UDU").name() == "pattern:UDU");
    CHECK(CoveringRelation::restricted().name() == "restricted");
    CHECK(CoveringRelation::tamari().name() == "tamari");
}
