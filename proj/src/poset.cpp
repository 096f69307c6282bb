#include "dycklat/poset.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

#include "dycklat/errors.hpp"
#include "dycklat/stats.hpp"

namespace dycklat {

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

VertexId PosetGraph::id_of(const DyckPath& p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p, DyckPathLexLess{});
    if (it == vertices.end() || *it != p) throw UnknownVertex("path " + p.word() + " not in D_" + std::to_string(n));
    return static_cast<VertexId>(it - vertices.begin());
}

bool PosetGraph::contains(const DyckPath& p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p, DyckPathLexLess{});
    return it != vertices.end() && *it == p;
}

PosetGraph build_hasse(int n, const CoveringRelation& rel, const BuildLimits& limits) {
    if (catalan_ull(n) > limits.max_vertices)
        throw ResourceLimit("Catalan(" + std::to_string(n) + ") exceeds vertex cap");
    PosetGraph g;
    g.n = n;
    g.relation = rel;
    g.vertices = enumerate_paths(n, limits.max_vertices);
    const std::size_t m = g.vertices.size();
    g.up_edges.resize(m);
    g.down_edges.resize(m);
    for (std::size_t v = 0; v < m; ++v) {
        for (const DyckPath& s : successors(g.vertices[v], rel)) {
            VertexId w = g.id_of(s);
            g.up_edges[v].push_back(w);
            g.down_edges[w].push_back(static_cast<VertexId>(v));
        }
        g.edge_count += g.up_edges[v].size();
    }
    for (auto& e : g.down_edges) std::sort(e.begin(), e.end());

    // Covering moves strictly increase the area under the path, so sorting
    // by area yields a linear extension.
    std::vector<int> area(m);
    for (std::size_t v = 0; v < m; ++v) area[v] = g.vertices[v].area();
    g.topo.resize(m);
    std::iota(g.topo.begin(), g.topo.end(), 0u);
    std::stable_sort(g.topo.begin(), g.topo.end(),
                     [&](VertexId a, VertexId b) { return area[a] < area[b]; });

    if (m <= limits.max_closure_vertices) {
        g.down_set.assign(m, Bitset(m));
        g.up_set.assign(m, Bitset(m));
        for (VertexId v : g.topo) {
            g.down_set[v].set(v);
            for (VertexId u : g.down_edges[v]) g.down_set[v].or_with(g.down_set[u]);
        }
        for (auto it = g.topo.rbegin(); it != g.topo.rend(); ++it) {
            VertexId v = *it;
            g.up_set[v].set(v);
            for (VertexId w : g.up_edges[v]) g.up_set[v].or_with(g.up_set[w]);
        }
        g.has_closure = true;
    }
    return g;
}

bool leq(const PosetGraph& g, const DyckPath& p, const DyckPath& q) {
    VertexId a = g.id_of(p), b = g.id_of(q);
    if (g.has_closure) return g.down_set[b].test(a);
    if (a == b) return true;
    std::vector<char> seen(g.vertices.size(), 0);
    std::queue<VertexId> bfs;
    bfs.push(a);
    seen[a] = 1;
    while (!bfs.empty()) {
        VertexId v = bfs.front();
        bfs.pop();
        for (VertexId w : g.up_edges[v]) {
            if (w == b) return true;
            if (!seen[w]) {
                seen[w] = 1;
                bfs.push(w);
            }
        }
    }
    return false;
}

namespace {

// Unique maximal element of the down-closed intersection of two down-sets
// (dually for up-sets). Extremal = member with no neighbour inside the set.
std::optional<VertexId> unique_extremal(const Bitset& s,
                                        const std::vector<std::vector<VertexId>>& toward,
                                        std::vector<VertexId>* antichain) {
    std::optional<VertexId> found;
    bool unique = true;
    s.for_each([&](std::size_t v) {
        bool extremal = true;
        for (VertexId w : toward[v])
            if (s.test(w)) {
                extremal = false;
                break;
            }
        if (!extremal) return;
        if (!found)
            found = static_cast<VertexId>(v);
        else
            unique = false;
        if (antichain) antichain->push_back(static_cast<VertexId>(v));
    });
    if (found && unique) return found;
    return std::nullopt;
}

void require_closure(const PosetGraph& g) {
    if (!g.has_closure) throw ResourceLimit("graph built without transitive closure");
}

std::vector<VertexId> sources(const PosetGraph& g) {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (g.down_edges[v].empty()) out.push_back(static_cast<VertexId>(v));
    return out;
}

}  // namespace

std::optional<DyckPath> try_meet(const PosetGraph& g, const DyckPath& p, const DyckPath& q,
                                 std::vector<DyckPath>* antichain) {
    require_closure(g);
    VertexId a = g.id_of(p), b = g.id_of(q);
    Bitset s;
    s.and_of(g.down_set[a], g.down_set[b]);
    std::vector<VertexId> anti;
    auto r = unique_extremal(s, g.up_edges, antichain ? &anti : nullptr);
    if (r) return g.vertices[*r];
    if (antichain)
        for (VertexId v : anti) antichain->push_back(g.vertices[v]);
    return std::nullopt;
}

std::optional<DyckPath> try_join(const PosetGraph& g, const DyckPath& p, const DyckPath& q,
                                 std::vector<DyckPath>* antichain) {
    require_closure(g);
    VertexId a = g.id_of(p), b = g.id_of(q);
    Bitset s;
    s.and_of(g.up_set[a], g.up_set[b]);
    std::vector<VertexId> anti;
    auto r = unique_extremal(s, g.down_edges, antichain ? &anti : nullptr);
    if (r) return g.vertices[*r];
    if (antichain)
        for (VertexId v : anti) antichain->push_back(g.vertices[v]);
    return std::nullopt;
}

DyckPath meet(const PosetGraph& g, const DyckPath& p, const DyckPath& q) {
    std::vector<DyckPath> anti;
    if (auto r = try_meet(g, p, q, &anti)) return *r;
    std::vector<std::string> words;
    for (const DyckPath& w : anti) words.push_back(w.word());
    throw NoMeet("no meet for " + p.word() + ", " + q.word(), std::move(words));
}

DyckPath join(const PosetGraph& g, const DyckPath& p, const DyckPath& q) {
    std::vector<DyckPath> anti;
    if (auto r = try_join(g, p, q, &anti)) return *r;
    std::vector<std::string> words;
    for (const DyckPath& w : anti) words.push_back(w.word());
    throw NoJoin("no join for " + p.word() + ", " + q.word(), std::move(words));
}

namespace {

// Scans pairs i < j (lex order) and reports the first one lacking a meet
// or a join. Comparable pairs trivially have both.
LatticeReport certify_range(const PosetGraph& g, std::size_t i_begin, std::size_t i_end) {
    LatticeReport rep;
    Bitset s;
    for (std::size_t i = i_begin; i < i_end && rep.is_lattice; ++i) {
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            if (g.down_set[j].test(i) || g.down_set[i].test(j)) continue;
            s.and_of(g.down_set[i], g.down_set[j]);
            bool meet_ok = unique_extremal(s, g.up_edges, nullptr).has_value();
            bool join_ok = true;
            if (meet_ok) {
                s.and_of(g.up_set[i], g.up_set[j]);
                join_ok = unique_extremal(s, g.down_edges, nullptr).has_value();
            }
            if (!meet_ok || !join_ok) {
                rep.is_lattice = false;
                rep.witness = {g.vertices[i], g.vertices[j]};
                rep.meet_failed = !meet_ok;
                break;
            }
        }
    }
    return rep;
}

}  // namespace

LatticeReport certify_lattice_serial(const PosetGraph& g) {
    require_closure(g);
    return certify_range(g, 0, g.vertices.size());
}

LatticeReport certify_lattice(const PosetGraph& g) {
    require_closure(g);
    const std::size_t m = g.vertices.size();
    LatticeReport best;
    std::size_t best_i = m;
#pragma omp parallel
    {
        LatticeReport local;
        std::size_t local_i = m;
#pragma omp for schedule(dynamic, 8) nowait
        for (long long i = 0; i < static_cast<long long>(m); ++i) {
            if (local_i < static_cast<std::size_t>(i)) continue;  // earlier row already failed
            LatticeReport r = certify_range(g, static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1);
            if (!r.is_lattice) {
                local = r;
                local_i = static_cast<std::size_t>(i);
            }
        }
#pragma omp critical
        if (!local.is_lattice && local_i < best_i) {
            best = local;
            best_i = local_i;
        }
    }
    return best;
}

Irreducibles irreducibles(const PosetGraph& g) {
    Irreducibles r;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        bool m = g.up_edges[v].size() == 1;
        bool j = g.down_edges[v].size() == 1;
        if (m) r.meet_irreducible.push_back(g.vertices[v]);
        if (j) r.join_irreducible.push_back(g.vertices[v]);
        if (m && j) r.doubly_irreducible.push_back(g.vertices[v]);
    }
    return r;
}

IntervalTable count_intervals(const PosetGraph& g) {
    require_closure(g);
    IntervalTable t;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        unsigned long long c = g.down_set[v].count();
        int k = g.vertices[v].trailing_down_run();
        t.total += c;
        t.by_last_run[k] += c;
        if (g.vertices[v].is_prime()) {
            t.prime_by_last_run[k] += c;
            t.prime_total += c;
        }
    }
    return t;
}

std::vector<long long> mobius(const PosetGraph& g) {
    require_closure(g);
    auto src = sources(g);
    if (src.size() != 1) throw BadInput("Mobius function needs a unique bottom element");
    std::vector<long long> mu(g.vertices.size(), 0);
    for (VertexId v : g.topo) {
        if (v == src[0]) {
            mu[v] = 1;
            continue;
        }
        long long sum = 0;
        g.down_set[v].for_each([&](std::size_t u) {
            if (u != v) sum += mu[u];
        });
        mu[v] = -sum;
    }
    return mu;
}

namespace {

std::vector<int> bfs_dist(const PosetGraph& g, VertexId start) {
    std::vector<int> dist(g.vertices.size(), -1);
    std::queue<VertexId> q;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (const auto* edges : {&g.up_edges[v], &g.down_edges[v]})
            for (VertexId w : *edges)
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
    }
    return dist;
}

}  // namespace

int distance(const PosetGraph& g, const DyckPath& p, const DyckPath& q) {
    VertexId a = g.id_of(p), b = g.id_of(q);
    std::vector<int> d = bfs_dist(g, a);
    if (d[b] < 0) throw Error("Hasse graph is disconnected");
    return d[b];
}

int diameter_serial(const PosetGraph& g) {
    int best = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (int d : bfs_dist(g, static_cast<VertexId>(v))) best = std::max(best, d);
    return best;
}

int diameter(const PosetGraph& g) {
    int best = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(max : best)
    for (long long v = 0; v < static_cast<long long>(g.vertices.size()); ++v)
        for (int d : bfs_dist(g, static_cast<VertexId>(v))) best = std::max(best, d);
    return best;
}

std::vector<int> rank_from_bottom(const PosetGraph& g) {
    std::vector<int> rank(g.vertices.size(), 0);
    for (VertexId v : g.topo)
        for (VertexId w : g.up_edges[v]) rank[w] = std::max(rank[w], rank[v] + 1);
    return rank;
}

std::vector<DyckPath> longest_chain(const PosetGraph& g) {
    auto src = sources(g);
    if (src.size() != 1) throw BadInput("longest_chain needs a unique bottom element");
    std::vector<int> len(g.vertices.size(), -1);
    std::vector<VertexId> parent(g.vertices.size(), 0);
    len[src[0]] = 0;
    for (VertexId v : g.topo) {
        if (len[v] < 0) continue;
        for (VertexId w : g.up_edges[v])
            if (len[v] + 1 > len[w]) {
                len[w] = len[v] + 1;
                parent[w] = v;
            }
    }
    VertexId best = src[0];
    for (std::size_t v = 0; v < len.size(); ++v)
        if (len[v] > len[best]) best = static_cast<VertexId>(v);
    std::vector<DyckPath> chain;
    for (VertexId v = best;; v = parent[v]) {
        chain.push_back(g.vertices[v]);
        if (v == src[0]) break;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

CodeCharReport check_code_characterization(int n, const CoveringRelation& rel,
                                           const BuildLimits& limits, std::size_t max_witnesses) {
    PosetGraph g = build_hasse(n, rel, limits);
    require_closure(g);
    CodeCharReport rep;
    rep.n = n;
    rep.relation = rel.name();
    const std::size_t m = g.vertices.size();
    std::vector<std::vector<int>> codes(m), shapes(m);
    for (std::size_t v = 0; v < m; ++v) {
        codes[v] = stanley_code(g.vertices[v]);
        shapes[v] = bkn_shape(g.vertices[v]);
    }
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            bool order = g.down_set[b].test(a);
            bool code_le = true;
            for (int i = 0; i < n && code_le; ++i)
                if (codes[a][static_cast<std::size_t>(i)] > codes[b][static_cast<std::size_t>(i)])
                    code_le = false;
            bool shape_sub =
                std::includes(shapes[a].begin(), shapes[a].end(), shapes[b].begin(), shapes[b].end());
            bool cond = code_le && shape_sub;
            if (order && !cond) {
                rep.forward_holds = false;
                if (rep.forward_counterexamples.size() < max_witnesses)
                    rep.forward_counterexamples.emplace_back(g.vertices[a], g.vertices[b]);
            }
            if (cond && !order) {
                rep.backward_holds = false;
                if (rep.backward_counterexamples.size() < max_witnesses)
                    rep.backward_counterexamples.emplace_back(g.vertices[a], g.vertices[b]);
            }
        }
    }
    return rep;
}

void export_dot(const PosetGraph& g, std::ostream& out, const PosetGraph* tamari_overlay) {
    std::vector<int> rank = rank_from_bottom(g);
    out << "digraph hasse {\n";
    out << "  rankdir=BT;\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        out << "  v" << v << " [label=\"" << g.vertices[v].word() << "\", rank=" << rank[v] << "];\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (VertexId w : g.up_edges[v]) out << "  v" << v << " -> v" << w << ";\n";
    if (tamari_overlay) {
        for (std::size_t v = 0; v < g.vertices.size(); ++v) {
            for (VertexId w : tamari_overlay->up_edges[v]) {
                const auto& own = g.up_edges[v];
                if (std::find(own.begin(), own.end(), w) == own.end())
                    out << "  v" << v << " -> v" << w << " [style=dashed, color=red];\n";
            }
        }
    }
    out << "}\n";
}

nlohmann::json graph_json(const PosetGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (VertexId w : g.up_edges[v]) edges.push_back({v, w});
    nlohmann::json words = nlohmann::json::array();
    for (const DyckPath& p : g.vertices) words.push_back(p.word());
    return nlohmann::json{
        {"n", g.n}, {"relation", g.relation.name()}, {"vertices", words}, {"edges", edges}};
}

}  // namespace dycklat
