#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dycklat/covering.hpp"
#include "dycklat/dyck_path.hpp"
#include "json.hpp"

namespace dycklat {

using VertexId = std::uint32_t;

/// Fixed-size bitset over vertex ids.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : n_(bits), w_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void or_with(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }
    void and_of(const Bitset& a, const Bitset& b) {
        n_ = a.n_;
        w_.resize(a.w_.size());
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] = a.w_[i] & b.w_[i];
    }
    std::size_t count() const;
    std::size_t size() const { return n_; }
    /// Calls f(i) for every set bit, ascending.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                std::uint64_t low = w & (~w + 1);
                f(wi * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
                w ^= low;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BuildLimits {
    // Full graph construction and graph-only queries.
    unsigned long long max_vertices = 250'000;
    // Transitive-closure bitsets (meet/join, intervals, Mobius, leq).
    unsigned long long max_closure_vertices = 20'000;
};

/// Hasse diagram of D_n under a covering relation, vertices in lex order.
/// Immutable after build_hasse; all queries are safe concurrently.
struct PosetGraph {
    int n = 0;
    CoveringRelation relation;
    std::vector<DyckPath> vertices;                 // lexicographic order
    std::vector<std::vector<VertexId>> up_edges;    // covering successors
    std::vector<std::vector<VertexId>> down_edges;  // exact transpose
    std::vector<VertexId> topo;                     // linear extension (by area, then lex)
    std::size_t edge_count = 0;

    bool has_closure = false;
    std::vector<Bitset> down_set;  // reflexive ancestors (everything <= v)
    std::vector<Bitset> up_set;    // reflexive descendants

    VertexId id_of(const DyckPath& p) const;  // throws UnknownVertex
    bool contains(const DyckPath& p) const;
};

PosetGraph build_hasse(int n, const CoveringRelation& rel, const BuildLimits& limits = {});

/// P <= Q in the poset. Uses closure bitsets when available, BFS otherwise.
bool leq(const PosetGraph& g, const DyckPath& p, const DyckPath& q);

/// Unique maximal common lower bound, or nullopt with the maximal antichain
/// reported through *antichain. Requires closure.
std::optional<DyckPath> try_meet(const PosetGraph& g, const DyckPath& p, const DyckPath& q,
                                 std::vector<DyckPath>* antichain = nullptr);
std::optional<DyckPath> try_join(const PosetGraph& g, const DyckPath& p, const DyckPath& q,
                                 std::vector<DyckPath>* antichain = nullptr);

/// Throwing wrappers: NoMeet / NoJoin carry the antichain found.
DyckPath meet(const PosetGraph& g, const DyckPath& p, const DyckPath& q);
DyckPath join(const PosetGraph& g, const DyckPath& p, const DyckPath& q);

struct LatticeReport {
    bool is_lattice = true;
    std::optional<std::pair<DyckPath, DyckPath>> witness;  // first failing pair, lex order
    bool meet_failed = false;                              // witness failed on meet (else join)
};

LatticeReport certify_lattice_serial(const PosetGraph& g);
LatticeReport certify_lattice(const PosetGraph& g);

struct Irreducibles {
    std::vector<DyckPath> meet_irreducible;  // out-degree exactly 1
    std::vector<DyckPath> join_irreducible;  // in-degree exactly 1
    std::vector<DyckPath> doubly_irreducible;
};
Irreducibles irreducibles(const PosetGraph& g);

struct IntervalTable {
    unsigned long long total = 0;
    std::map<int, unsigned long long> by_last_run;        // trailing down run of the upper path
    std::map<int, unsigned long long> prime_by_last_run;  // same, upper path prime
    unsigned long long prime_total = 0;
};
IntervalTable count_intervals(const PosetGraph& g);

/// Mobius function anchored at the bottom, indexed by vertex id.
std::vector<long long> mobius(const PosetGraph& g);

/// Shortest-path distance in the undirected Hasse graph.
int distance(const PosetGraph& g, const DyckPath& p, const DyckPath& q);
int diameter_serial(const PosetGraph& g);
int diameter(const PosetGraph& g);

/// Longest directed chain from (UD)^n to U^nD^n.
std::vector<DyckPath> longest_chain(const PosetGraph& g);

struct CodeCharReport {
    int n = 0;
    std::string relation;
    bool forward_holds = true;   // P <= Q implies code/shape condition
    bool backward_holds = true;  // code/shape condition implies P <= Q
    std::vector<std::pair<DyckPath, DyckPath>> forward_counterexamples;
    std::vector<std::pair<DyckPath, DyckPath>> backward_counterexamples;
    bool equivalence_holds() const { return forward_holds && backward_holds; }
};

/// Exhaustive test of: P <= Q  iff  stanley_code(P) <= stanley_code(Q)
/// componentwise and bkn_shape(Q) is a subset of bkn_shape(P).
CodeCharReport check_code_characterization(int n, const CoveringRelation& rel,
                                           const BuildLimits& limits = {},
                                           std::size_t max_witnesses = 5);

/// DOT export; when tamari_overlay is non-null its extra edges are drawn
/// dashed red on top of g's solid edges.
void export_dot(const PosetGraph& g, std::ostream& out, const PosetGraph* tamari_overlay = nullptr);

nlohmann::json graph_json(const PosetGraph& g);

/// Longest-chain length from the bottom to each vertex (the DOT rank).
std::vector<int> rank_from_bottom(const PosetGraph& g);

}  // namespace dycklat
