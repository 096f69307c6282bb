#include "dycklat/involution.hpp"

#include <algorithm>

#include "dycklat/errors.hpp"

namespace dycklat {

const char* phi_case_name(PhiCase c) {
    switch (c) {
        case PhiCase::CaseI: return "i";
        case PhiCase::CaseII: return "ii";
        case PhiCase::CaseIII: return "iii";
        case PhiCase::CaseIV: return "iv";
        case PhiCase::CaseV: return "v";
        case PhiCase::Inverse: return "inverse";
    }
    return "?";
}

namespace {

// Splits a prefix path (weakly nonnegative, ending at height k) at its k
// unmatched up steps into k+1 Dyck factors.
std::vector<DyckPath> split_at_unmatched(const DyckPath& whole, int len, int k) {
    std::vector<int> unmatched;  // positions, ascending
    int pending = 0;
    for (int i = len - 1; i >= 0; --i) {
        if (!whole.up(i)) {
            ++pending;
        } else if (pending > 0) {
            --pending;
        } else {
            unmatched.push_back(i);
        }
    }
    std::reverse(unmatched.begin(), unmatched.end());
    if (static_cast<int>(unmatched.size()) != k)
        throw Error("unexpected unmatched-up count in decomposition");
    std::vector<DyckPath> parts;
    int start = 0;
    for (int pos : unmatched) {
        parts.push_back(whole.slice(start, pos - start));
        start = pos + 1;
    }
    parts.push_back(whole.slice(start, len - start));
    return parts;
}

struct PathBuilder {
    std::uint64_t bits = 0;
    int pos = 0;
    void append(const DyckPath& p) {
        bits |= p.bits() << pos;
        pos += p.length();
    }
    void up() {
        bits |= 1ull << pos;
        ++pos;
    }
    void downs(int k) { pos += k; }
    DyckPath finish() const { return DyckPath::from_bits_unchecked(bits, pos / 2); }
};

}  // namespace

std::optional<P1Class> classify_p1(const DyckPath& p) {
    if (p.empty()) return P1Class{PhiCase::CaseI, 0, 0, {}, {}};
    const int n = p.semilength();
    const int b = p.trailing_down_run();
    const int a = p.trailing_up_run();
    if (a == b) {
        if (p == pyramid_path(n)) return P1Class{PhiCase::CaseII, n, 0, {}, {}};
        if (a >= 2) {
            P1Class c{PhiCase::CaseIII, a, 0, p.slice(0, p.length() - 2 * a), {}};
            return c;
        }
        return std::nullopt;  // ends with a lone UD peak
    }
    // b > a always: the trailing ascent starts at height b - a >= 0.
    const int k = b - a;
    const int head_len = p.length() - a - b;
    std::vector<DyckPath> parts = split_at_unmatched(p, head_len, k);
    if (parts.back().empty()) throw Error("R_k empty in P1 decomposition");
    if (a == 1) return P1Class{PhiCase::CaseIV, k, 0, {}, std::move(parts)};
    return P1Class{PhiCase::CaseV, k, a - 1, {}, std::move(parts)};
}

DyckPath sharp(const DyckPath& p) {
    if (p.empty()) throw BadShape("sharp of empty path");
    const int b = p.trailing_down_run();
    const int cut = p.length() - b;  // just after the last peak's up step
    std::uint64_t low = p.bits() & ((cut >= 64) ? ~0ull : ((1ull << cut) - 1));
    std::uint64_t bits = low | (1ull << cut);  // extra U, then D and the old D run
    return DyckPath::from_bits_unchecked(bits, p.semilength() + 1);
}

namespace {

DyckPath apply_rule(const P1Class& c, const PhiFamily& fam) {
    switch (c.tag) {
        case PhiCase::CaseI:
            return DyckPath{};
        case PhiCase::CaseII:
            return sawtooth(c.k);
        case PhiCase::CaseIII:
            return sharp(fam.phi(c.prefix)).concat(sawtooth(c.k - 1));
        case PhiCase::CaseIV:
        case PhiCase::CaseV: {
            PathBuilder b;
            for (const DyckPath& part : c.components) {
                b.append(fam.phi(part));
                b.up();
            }
            b.downs(c.k + 1);
            if (c.tag == PhiCase::CaseV) b.append(sawtooth(c.r));
            return b.finish();
        }
        default:
            throw Error("apply_rule on non-rule case");
    }
}

std::size_t lex_index(const std::vector<DyckPath>& paths, const DyckPath& p) {
    auto it = std::lower_bound(paths.begin(), paths.end(), p, DyckPathLexLess{});
    if (it == paths.end() || *it != p) throw Error("image is not a Dyck path of the right size");
    return static_cast<std::size_t>(it - paths.begin());
}

}  // namespace

DyckPath PhiTable::apply(const DyckPath& p) const {
    return paths[forward[lex_index(paths, p)]];
}

PhiCase PhiTable::tag_of(const DyckPath& p) const {
    return case_tag[lex_index(paths, p)];
}

PhiFamily::PhiFamily(int max_n) {
    if (max_n < 0) throw BadInput("negative semilength");
    tables_.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        PhiTable t;
        t.n = n;
        t.paths = enumerate_paths(n);
        const std::size_t m = t.paths.size();
        t.forward.assign(m, 0);
        t.case_tag.assign(m, PhiCase::Inverse);
        std::vector<long long> preimage(m, -1);
        std::vector<char> in_p1(m, 0);

        for (std::size_t i = 0; i < m; ++i) {
            auto cls = classify_p1(t.paths[i]);
            if (!cls) continue;
            in_p1[i] = 1;
            t.case_tag[i] = cls->tag;
            std::size_t img = lex_index(t.paths, apply_rule(*cls, *this));
            if (preimage[img] >= 0)
                throw ConstructionFailure(
                    "rule images collide at semilength " + std::to_string(n),
                    {t.paths[static_cast<std::size_t>(preimage[img])].word(), t.paths[i].word(),
                     t.paths[img].word()});
            preimage[img] = static_cast<long long>(i);
            t.forward[i] = static_cast<std::uint32_t>(img);
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (in_p1[i]) continue;
            if (preimage[i] < 0)
                throw ConstructionFailure("inverse assignment not total at semilength " + std::to_string(n),
                                          {t.paths[i].word()});
            t.forward[i] = static_cast<std::uint32_t>(preimage[i]);
        }
        for (std::size_t i = 0; i < m; ++i)
            if (t.forward[t.forward[i]] != i)
                throw ConstructionFailure("forward map is not an involution at semilength " + std::to_string(n),
                                          {t.paths[i].word(), t.paths[t.forward[i]].word()});
        tables_.push_back(std::move(t));
    }
}

const PhiTable& PhiFamily::table(int n) const {
    if (n < 0 || n > max_semilength())
        throw TableMissing("no phi table for semilength " + std::to_string(n));
    return tables_[static_cast<std::size_t>(n)];
}

DyckPath PhiFamily::phi(const DyckPath& p) const {
    return table(p.semilength()).apply(p);
}

PhiTable build_phi_table(int n) {
    PhiFamily fam(n);
    return fam.table(n);
}

}  // namespace dycklat
