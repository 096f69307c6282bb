#include "dycklat/dyck_path.hpp"

#include <bit>

#include "dycklat/errors.hpp"

namespace dycklat {

DyckPath DyckPath::parse(std::string_view word) {
    if (word.size() > 2 * kMaxSemilength)
        throw ResourceLimit("path longer than " + std::to_string(2 * kMaxSemilength) + " steps");
    std::uint64_t bits = 0;
    int ups = 0, downs = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        char c = word[i];
        if (c == 'U') {
            bits |= 1ull << i;
            ++ups;
        } else if (c == 'D') {
            ++downs;
            if (downs > ups)
                throw GoesBelowAxis("prefix has more D than U at step " + std::to_string(i));
        } else {
            throw BadCharacter(std::string("unexpected character '") + c + "'");
        }
    }
    if (ups != downs)
        throw NotBalanced("word has " + std::to_string(ups) + " U and " + std::to_string(downs) + " D");
    return from_bits_unchecked(bits, ups);
}

std::string DyckPath::word() const {
    std::string w(static_cast<std::size_t>(length()), 'D');
    for (int i = 0; i < length(); ++i)
        if (up(i)) w[static_cast<std::size_t>(i)] = 'U';
    return w;
}

int DyckPath::height_after(int i) const {
    // #U minus #D among steps 0..i
    std::uint64_t mask = (i >= 63) ? ~0ull : ((1ull << (i + 1)) - 1);
    int ups = std::popcount(bits_ & mask);
    return 2 * ups - (i + 1);
}

int DyckPath::area() const {
    int h = 0, a = 0;
    for (int i = 0; i < length(); ++i) {
        h += up(i) ? 1 : -1;
        a += h;
    }
    return a;
}

int DyckPath::trailing_down_run() const {
    int k = 0;
    for (int i = length() - 1; i >= 0 && !up(i); --i) ++k;
    return k;
}

int DyckPath::trailing_up_run() const {
    int b = trailing_down_run();
    int k = 0;
    for (int i = length() - b - 1; i >= 0 && up(i); --i) ++k;
    return k;
}

std::pair<DyckPath, DyckPath> DyckPath::first_return() const {
    if (empty()) throw EmptyPath("first_return of empty path");
    int h = 0;
    for (int i = 0; i < length(); ++i) {
        h += up(i) ? 1 : -1;
        if (h == 0) {
            DyckPath r = slice(1, i - 1);
            DyckPath s = slice(i + 1, length() - i - 1);
            return {r, s};
        }
    }
    throw Error("unreachable: Dyck path never returned to axis");
}

std::pair<DyckPath, DyckPath> DyckPath::last_return() const {
    if (empty()) throw EmptyPath("last_return of empty path");
    int h = 0;
    int last_zero = 0;  // position after which height is 0, before final excursion
    for (int i = 0; i < length() - 1; ++i) {
        h += up(i) ? 1 : -1;
        if (h == 0) last_zero = i + 1;
    }
    DyckPath r = slice(0, last_zero);
    DyckPath s = slice(last_zero + 1, length() - last_zero - 2);
    return {r, s};
}

bool DyckPath::is_prime() const {
    if (empty()) return false;
    int h = 0;
    for (int i = 0; i < length() - 1; ++i) {
        h += up(i) ? 1 : -1;
        if (h == 0) return false;
    }
    return true;
}

DyckPath DyckPath::concat(const DyckPath& other) const {
    if (n_ + other.n_ > kMaxSemilength) throw ResourceLimit("concat exceeds capacity");
    std::uint64_t bits = bits_ | (other.bits_ << length());
    return from_bits_unchecked(bits, n_ + other.n_);
}

DyckPath DyckPath::slice(int from, int len) const {
    std::uint64_t mask = (len >= 64) ? ~0ull : ((1ull << len) - 1);
    std::uint64_t bits = (bits_ >> from) & mask;
    return from_bits_unchecked(bits, len / 2);
}

bool lex_less(const DyckPath& a, const DyckPath& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    // At the first differing step, U (bit 1) precedes D (bit 0).
    std::uint64_t low = diff & (~diff + 1);
    return (a.bits_ & low) != 0;
}

unsigned long long catalan_ull(int n) {
    static const auto table = [] {
        std::vector<unsigned long long> c(34, 0);
        c[0] = 1;
        for (int m = 1; m <= 33; ++m)
            for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
        return c;
    }();
    return table.at(static_cast<std::size_t>(n));
}

namespace {

void enumerate_rec(std::uint64_t bits, int pos, int ups, int downs, int n,
                   std::vector<DyckPath>& out) {
    if (pos == 2 * n) {
        out.push_back(DyckPath::from_bits_unchecked(bits, n));
        return;
    }
    if (ups < n) enumerate_rec(bits | (1ull << pos), pos + 1, ups + 1, downs, n, out);
    if (downs < ups) enumerate_rec(bits, pos + 1, ups, downs + 1, n, out);
}

}  // namespace

std::vector<DyckPath> enumerate_paths(int n, unsigned long long cap) {
    if (n < 0) throw BadInput("negative semilength");
    if (n > DyckPath::kMaxSemilength) throw ResourceLimit("semilength exceeds capacity");
    if (catalan_ull(n) > cap)
        throw ResourceLimit("Catalan(" + std::to_string(n) + ") exceeds cap " + std::to_string(cap));
    std::vector<DyckPath> out;
    out.reserve(static_cast<std::size_t>(catalan_ull(n)));
    enumerate_rec(0, 0, 0, 0, n, out);
    return out;
}

DyckPath sawtooth(int n) {
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) bits |= 1ull << (2 * i);
    return DyckPath::from_bits_unchecked(bits, n);
}

DyckPath pyramid_path(int n) {
    std::uint64_t bits = (n == 0) ? 0 : ((1ull << n) - 1);
    return DyckPath::from_bits_unchecked(bits, n);
}

}  // namespace dycklat
