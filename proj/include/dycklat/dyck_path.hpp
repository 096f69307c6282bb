#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dycklat {

/// Immutable balanced U/D step sequence staying weakly above the axis.
/// Steps are packed into a machine word, bit i = step i, U=1 and D=0,
/// which keeps hashing and factor scans cheap at desk scale (n <= 32).
class DyckPath {
public:
    static constexpr int kMaxSemilength = 32;

    DyckPath() = default;  // the empty path, n = 0

    /// Parses a U/D word. Throws BadCharacter, NotBalanced, GoesBelowAxis.
    static DyckPath parse(std::string_view word);

    /// Unchecked construction from packed steps; callers must guarantee
    /// the Dyck property (used by enumeration and covering moves).
    static DyckPath from_bits_unchecked(std::uint64_t bits, int n) {
        DyckPath p;
        p.bits_ = bits;
        p.n_ = static_cast<std::uint8_t>(n);
        return p;
    }

    int semilength() const { return n_; }
    int length() const { return 2 * n_; }
    bool empty() const { return n_ == 0; }
    std::uint64_t bits() const { return bits_; }

    /// True iff step i is an up step.
    bool up(int i) const { return (bits_ >> i) & 1u; }

    std::string word() const;

    /// Height of the path after step i (heights are in [0, n]).
    int height_after(int i) const;

    /// Sum of heights after each step; strictly increases along a covering.
    int area() const;

    int trailing_down_run() const;
    /// Length of the up run immediately before the trailing down run.
    int trailing_up_run() const;

    /// First return decomposition P = U R D S. Throws EmptyPath.
    std::pair<DyckPath, DyckPath> first_return() const;
    /// Last return decomposition P = R U S D. Throws EmptyPath.
    std::pair<DyckPath, DyckPath> last_return() const;

    /// Touches the axis only at its two endpoints.
    bool is_prime() const;

    DyckPath concat(const DyckPath& other) const;
    /// Extracts steps [from, from+len) which must form a Dyck factor.
    DyckPath slice(int from, int len) const;

    friend bool operator==(const DyckPath& a, const DyckPath& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const DyckPath& a, const DyckPath& b) { return !(a == b); }

    /// Lexicographic order on step words with U < D.
    friend bool lex_less(const DyckPath& a, const DyckPath& b);

private:
    std::uint64_t bits_ = 0;
    std::uint8_t n_ = 0;
};

bool lex_less(const DyckPath& a, const DyckPath& b);

struct DyckPathLexLess {
    bool operator()(const DyckPath& a, const DyckPath& b) const { return lex_less(a, b); }
};

struct DyckPathHash {
    std::size_t operator()(const DyckPath& p) const {
        std::uint64_t v = p.bits() * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(p.semilength());
        v ^= v >> 29;
        return static_cast<std::size_t>(v);
    }
};

/// Catalan numbers as 64-bit values, exact for n <= 33.
unsigned long long catalan_ull(int n);

inline constexpr unsigned long long kDefaultEnumCap = 10'000'000ull;

/// All Dyck paths of semilength n in lexicographic order (U < D).
/// Throws ResourceLimit when Catalan(n) exceeds the cap.
std::vector<DyckPath> enumerate_paths(int n, unsigned long long cap = kDefaultEnumCap);

/// (UD)^n and U^nD^n, the bottom and top elements of S_n.
DyckPath sawtooth(int n);
DyckPath pyramid_path(int n);

}  // namespace dycklat
