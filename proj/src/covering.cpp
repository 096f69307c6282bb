#include "dycklat/covering.hpp"

#include <algorithm>

#include "dycklat/errors.hpp"

namespace dycklat {

CoveringRelation CoveringRelation::pattern_avoiding(std::string mu) {
    if (mu.empty()) throw BadInput("empty avoidance pattern");
    for (char c : mu)
        if (c != 'U' && c != 'D') throw BadCharacter("pattern must be a U/D word");
    return {Kind::PatternAvoiding, std::move(mu)};
}

std::string CoveringRelation::name() const {
    switch (kind) {
        case Kind::Restricted: return "restricted";
        case Kind::Tamari: return "tamari";
        case Kind::PatternAvoiding: return "pattern:" + pattern;
    }
    return "?";
}

namespace {

// Index of the down step matching the up step at position i.
int matching_down(const DyckPath& p, int i) {
    int h = 1;
    for (int j = i + 1; j < p.length(); ++j) {
        h += p.up(j) ? 1 : -1;
        if (h == 0) return j;
    }
    throw Error("unmatched up step in a Dyck path");
}

bool contains_factor(const DyckPath& q, const std::string& mu) {
    const int m = static_cast<int>(mu.size());
    for (int start = 0; start + m <= q.length(); ++start) {
        bool hit = true;
        for (int j = 0; j < m && hit; ++j)
            if (q.up(start + j) != (mu[static_cast<std::size_t>(j)] == 'U')) hit = false;
        if (hit) return true;
    }
    return false;
}

// DUQD at steps [i, j] with the D at i and its new place after the factor:
// steps i..j-1 shift left by one and step j becomes the moved D.
DyckPath shift_down_right(const DyckPath& p, int i, int j) {
    std::uint64_t bits = p.bits();
    for (int pos = i; pos < j; ++pos) {
        if (p.up(pos + 1))
            bits |= 1ull << pos;
        else
            bits &= ~(1ull << pos);
    }
    bits &= ~(1ull << j);
    return DyckPath::from_bits_unchecked(bits, p.semilength());
}

// Inverse move: steps i..j-1 shift right by one and step i becomes a D.
DyckPath shift_down_left(const DyckPath& p, int i, int j) {
    std::uint64_t bits = p.bits();
    for (int pos = j; pos > i; --pos) {
        if (p.up(pos - 1))
            bits |= 1ull << pos;
        else
            bits &= ~(1ull << pos);
    }
    bits &= ~(1ull << i);
    return DyckPath::from_bits_unchecked(bits, p.semilength());
}

void sort_unique(std::vector<DyckPath>& v) {
    std::sort(v.begin(), v.end(), DyckPathLexLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<DyckPath> successors(const DyckPath& p, const CoveringRelation& rel) {
    std::vector<DyckPath> out;
    for (int i = 0; i + 1 < p.length(); ++i) {
        if (p.up(i) || !p.up(i + 1)) continue;  // need a valley: D at i, U at i+1
        int j = matching_down(p, i + 1);
        DyckPath q = p.slice(i + 2, j - i - 2);
        bool allowed = false;
        switch (rel.kind) {
            case CoveringRelation::Kind::Restricted:
                allowed = (q == pyramid_path(q.semilength()));
                break;
            case CoveringRelation::Kind::Tamari:
                allowed = true;
                break;
            case CoveringRelation::Kind::PatternAvoiding:
                allowed = !contains_factor(q, rel.pattern);
                break;
        }
        if (allowed) out.push_back(shift_down_right(p, i, j));
    }
    sort_unique(out);
    return out;
}

std::vector<DyckPath> predecessors(const DyckPath& p, const CoveringRelation& rel) {
    std::vector<DyckPath> out;
    for (int i = 0; i < p.length(); ++i) {
        if (!p.up(i)) continue;
        int j = matching_down(p, i);
        if (j + 1 >= p.length() || p.up(j + 1)) continue;  // need UQD followed by D
        DyckPath q = p.slice(i + 1, j - i - 1);
        bool allowed = false;
        switch (rel.kind) {
            case CoveringRelation::Kind::Restricted:
                allowed = (q == pyramid_path(q.semilength()));
                break;
            case CoveringRelation::Kind::Tamari:
                allowed = true;
                break;
            case CoveringRelation::Kind::PatternAvoiding:
                allowed = !contains_factor(q, rel.pattern);
                break;
        }
        if (allowed) out.push_back(shift_down_left(p, i, j));
    }
    sort_unique(out);
    return out;
}

std::optional<DyckPath> apply_leftmost(const DyckPath& p) {
    for (int i = 0; i + 1 < p.length(); ++i) {
        if (p.up(i) || !p.up(i + 1)) continue;
        int k = 0;
        while (i + 1 + k < p.length() && p.up(i + 1 + k)) ++k;
        int downs = 0;
        while (i + 1 + k + downs < p.length() && !p.up(i + 1 + k + downs)) ++downs;
        if (downs >= k) return shift_down_right(p, i, i + 2 * k);
    }
    return std::nullopt;
}

}  // namespace dycklat
