#include "dycklat/stats.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

#include "dycklat/errors.hpp"

namespace dycklat {

namespace {

// Length of the up run starting at step i (0 if step i is D or past the end).
int up_run_at(const DyckPath& p, int i) {
    int k = 0;
    while (i + k < p.length() && p.up(i + k)) ++k;
    return k;
}

int down_run_at(const DyckPath& p, int i) {
    int k = 0;
    while (i + k < p.length() && !p.up(i + k)) ++k;
    return k;
}

}  // namespace

int stat_s(const DyckPath& p) {
    int count = 0;
    for (int i = 0; i < p.length(); ++i) {
        if (p.up(i)) continue;
        int k = up_run_at(p, i + 1);
        if (k >= 1 && down_run_at(p, i + 1 + k) >= k) ++count;
    }
    return count;
}

int stat_t(const DyckPath& p) {
    int count = 0;
    // U^kD^k followed by one more D: anchored at each U/D boundary, one
    // occurrence for every k with k ups available and k+1 downs after.
    for (int i = 1; i < p.length(); ++i) {
        if (!p.up(i - 1) || p.up(i)) continue;  // boundary: step i-1 = U, step i = D
        int ups = 0;
        while (i - 1 - ups >= 0 && p.up(i - 1 - ups)) ++ups;
        int downs = down_run_at(p, i);
        count += std::min(ups, downs - 1);
    }
    return count;
}

std::vector<Pyramid> pyramid_profile(const DyckPath& p) {
    std::vector<Pyramid> out;
    for (int i = 1; i < p.length(); ++i) {
        if (!p.up(i - 1) || p.up(i)) continue;
        int ups = 0;
        while (i - 1 - ups >= 0 && p.up(i - 1 - ups)) ++ups;
        int downs = down_run_at(p, i);
        out.push_back(Pyramid{i - ups, ups, downs});
    }
    return out;
}

PyramidCounts pyramid_counts(const DyckPath& p) {
    PyramidCounts c;
    for (const Pyramid& py : pyramid_profile(p)) {
        if (!py.symmetric()) ++c.asymmetric;
        // Every pyramid U^kD^l carries a maximal symmetric pyramid
        // U^mD^m with m = min(k, l); the weights of these are summed.
        c.symmetric_weight_sum += std::min(py.up_len, py.down_len);
    }
    return c;
}

std::vector<int> stanley_code(const DyckPath& p) {
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(p.semilength()));
    int ups = 0;
    for (int i = 0; i < p.length(); ++i) {
        if (p.up(i))
            ++ups;
        else
            code.push_back(ups);
    }
    return code;
}

DyckPath path_from_code(const std::vector<int>& code) {
    const int n = static_cast<int>(code.size());
    if (n > DyckPath::kMaxSemilength) throw ResourceLimit("code too long");
    for (int i = 0; i < n; ++i) {
        if (code[i] < i + 1 || code[i] > n)
            throw InvalidCode("c_" + std::to_string(i + 1) + " out of range [i, n]");
        if (i + 1 < n && code[i] > code[i + 1])
            throw InvalidCode("code not weakly increasing at position " + std::to_string(i + 1));
    }
    std::uint64_t bits = 0;
    int pos = 0, ups = 0;
    for (int i = 0; i < n; ++i) {
        while (ups < code[i]) {
            bits |= 1ull << pos;
            ++pos;
            ++ups;
        }
        ++pos;  // the i-th down step
    }
    return DyckPath::from_bits_unchecked(bits, n);
}

std::vector<int> bkn_shape(const DyckPath& p) {
    std::vector<int> values = stanley_code(p);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

StatRecord stat_record(const DyckPath& p) {
    return StatRecord{p, stat_s(p), stat_t(p), stanley_code(p), bkn_shape(p), pyramid_counts(p)};
}

nlohmann::json to_json(const StatRecord& r) {
    return nlohmann::json{{"path", r.path.word()},
                          {"n", r.path.semilength()},
                          {"s", r.s},
                          {"t", r.t},
                          {"stanley_code", r.stanley},
                          {"bkn_shape", r.shape}};
}

std::vector<std::vector<unsigned long long>> tally_bistatistic_serial(int n) {
    std::vector tally(static_cast<std::size_t>(n + 1),
                      std::vector<unsigned long long>(static_cast<std::size_t>(n + 1), 0));
    for (const DyckPath& p : enumerate_paths(n))
        ++tally[static_cast<std::size_t>(stat_s(p))][static_cast<std::size_t>(stat_t(p))];
    return tally;
}

std::vector<std::vector<unsigned long long>> tally_bistatistic(int n) {
    const std::vector<DyckPath> paths = enumerate_paths(n);
    std::vector tally(static_cast<std::size_t>(n + 1),
                      std::vector<unsigned long long>(static_cast<std::size_t>(n + 1), 0));
#pragma omp parallel
    {
        std::vector local(tally.size(), std::vector<unsigned long long>(tally.size(), 0));
#pragma omp for nowait
        for (long long i = 0; i < static_cast<long long>(paths.size()); ++i) {
            const DyckPath& p = paths[static_cast<std::size_t>(i)];
            ++local[static_cast<std::size_t>(stat_s(p))][static_cast<std::size_t>(stat_t(p))];
        }
#pragma omp critical
        for (std::size_t a = 0; a < tally.size(); ++a)
            for (std::size_t b = 0; b < tally.size(); ++b) tally[a][b] += local[a][b];
    }
    return tally;
}

unsigned long long total_coverings_serial(int n) {
    unsigned long long total = 0;
    for (const DyckPath& p : enumerate_paths(n)) total += static_cast<unsigned long long>(stat_s(p));
    return total;
}

unsigned long long total_coverings(int n) {
    const std::vector<DyckPath> paths = enumerate_paths(n);
    unsigned long long total = 0;
#pragma omp parallel for reduction(+ : total)
    for (long long i = 0; i < static_cast<long long>(paths.size()); ++i)
        total += static_cast<unsigned long long>(stat_s(paths[static_cast<std::size_t>(i)]));
    return total;
}

}  // namespace dycklat
