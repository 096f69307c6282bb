// Compares the serial reference kernels with their OpenMP counterparts and
// checks that both sides produce identical results while timing them.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "dycklat/poset.hpp"
#include "dycklat/stats.hpp"

using namespace dycklat;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double timed(F&& f) {
    auto t0 = Clock::now();
    f();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool same) {
    std::cout << name << "  serial " << serial_ms << " ms  parallel " << parallel_ms
              << " ms  speedup " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
              << "  agree " << (same ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    int n_stats = argc > 1 ? std::atoi(argv[1]) : 12;
    int n_graph = argc > 2 ? std::atoi(argv[2]) : 8;

    {
        std::vector<std::vector<unsigned long long>> a, b;
        double ts = timed([&] { a = tally_bistatistic_serial(n_stats); });
        double tp = timed([&] { b = tally_bistatistic(n_stats); });
        row("tally_bistatistic n=" + std::to_string(n_stats), ts, tp, a == b);
    }
    {
        unsigned long long a = 0, b = 0;
        double ts = timed([&] { a = total_coverings_serial(n_stats); });
        double tp = timed([&] { b = total_coverings(n_stats); });
        row("total_coverings  n=" + std::to_string(n_stats), ts, tp, a == b);
    }

    PosetGraph g = build_hasse(n_graph, CoveringRelation::restricted());
    {
        int a = 0, b = 0;
        double ts = timed([&] { a = diameter_serial(g); });
        double tp = timed([&] { b = diameter(g); });
        row("diameter         n=" + std::to_string(n_graph), ts, tp, a == b);
    }
    {
        LatticeReport a, b;
        double ts = timed([&] { a = certify_lattice_serial(g); });
        double tp = timed([&] { b = certify_lattice(g); });
        row("certify_lattice  n=" + std::to_string(n_graph), ts, tp,
            a.is_lattice == b.is_lattice && a.witness == b.witness);
    }
    return 0;
}
