#pragma once

#include <vector>

#include "dycklat/dyck_path.hpp"
#include "json.hpp"

namespace dycklat {

/// Number of occurrences of the factor DU^kD^k, k >= 1 (outgoing Hasse edges).
int stat_s(const DyckPath& p);

/// Number of occurrences of the factor U^kD^kD, k >= 1 (incoming Hasse edges).
/// Nested occurrences at the same down run count separately for each k.
int stat_t(const DyckPath& p);

/// Maximal occurrence of U^kD^l: the full up run and full down run around a peak.
struct Pyramid {
    int position;  // step index of the first U
    int up_len;
    int down_len;
    bool symmetric() const { return up_len == down_len; }
};

/// All maximal pyramids, left to right.
std::vector<Pyramid> pyramid_profile(const DyckPath& p);

struct PyramidCounts {
    int asymmetric = 0;
    // Each maximal pyramid U^kD^l contains a maximal symmetric pyramid
    // U^mD^m with m = min(k, l); this is the sum of those weights m.
    int symmetric_weight_sum = 0;
};
PyramidCounts pyramid_counts(const DyckPath& p);

/// c_i = number of up steps before the i-th down step, i = 1..n.
std::vector<int> stanley_code(const DyckPath& p);

/// Inverse of stanley_code. Throws InvalidCode unless i <= c_i <= n and
/// the code is weakly increasing.
DyckPath path_from_code(const std::vector<int>& code);

/// Set of distinct Stanley code values, equivalently the numbers of up
/// steps before each peak. Returned sorted.
std::vector<int> bkn_shape(const DyckPath& p);

struct StatRecord {
    DyckPath path;
    int s = 0;
    int t = 0;
    std::vector<int> stanley;
    std::vector<int> shape;
    PyramidCounts pyramids;
};

StatRecord stat_record(const DyckPath& p);
nlohmann::json to_json(const StatRecord& r);

/// Per-(s,t) path counts over all of D_n; the brute-force side of the
/// trivariate generating function checks. Both variants return identical
/// tables; the omp one fans the scan out over threads.
std::vector<std::vector<unsigned long long>> tally_bistatistic_serial(int n);
std::vector<std::vector<unsigned long long>> tally_bistatistic(int n);

/// Sum of stat_s over D_n (= Hasse edge count of S_n), serial and parallel.
unsigned long long total_coverings_serial(int n);
unsigned long long total_coverings(int n);

}  // namespace dycklat
