#include "plcsnet/netgraph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <utility>

#include "plcsnet/error.hpp"
#include "plcsnet/union_find.hpp"

namespace plcsnet {

namespace {

bool lex_less(const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
}

std::string describe_components(const std::vector<std::vector<std::string>>& comps) {
    std::string out;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (c) out += " | ";
        out += "{";
        for (std::size_t k = 0; k < comps[c].size(); ++k) {
            if (k) out += ",";
            out += comps[c][k];
        }
        out += "}";
    }
    return out;
}

void require_connected(const WeightedGraph& g, std::string_view what) {
    const auto comps = g.components();
    if (comps.size() > 1) {
        throw ContractError(std::string(what) + " needs a connected graph; components: " +
                            describe_components(comps));
    }
}

using Adjacency = std::vector<std::vector<char>>;

Adjacency adjacency(const WeightedGraph& g) {
    Adjacency adj(g.node_count(), std::vector<char>(g.node_count(), 0));
    for (const auto& e : g.edges()) {
        const auto u = g.node_index(e.u);
        const auto v = g.node_index(e.v);
        adj[u][v] = adj[v][u] = 1;
    }
    return adj;
}

void bron_kerbosch(const Adjacency& adj, std::vector<std::size_t>& r, std::vector<std::size_t> p,
                   std::vector<std::size_t> x, std::vector<std::vector<std::size_t>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot: the vertex of P u X with most neighbours in P.
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
        for (std::size_t u : *set) {
            std::size_t count = 0;
            for (std::size_t w : p) count += adj[u][w] ? 1 : 0;
            if (count > best) {
                best = count;
                pivot = u;
            }
        }
    }
    std::vector<std::size_t> candidates;
    for (std::size_t v : p) {
        if (!adj[pivot][v]) candidates.push_back(v);
    }
    for (std::size_t v : candidates) {
        std::vector<std::size_t> np, nx;
        for (std::size_t w : p) {
            if (adj[v][w]) np.push_back(w);
        }
        for (std::size_t w : x) {
            if (adj[v][w]) nx.push_back(w);
        }
        r.push_back(v);
        bron_kerbosch(adj, r, std::move(np), std::move(nx), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace

WeightedGraph::WeightedGraph(std::vector<std::string> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    std::set<std::string> seen_nodes;
    for (const auto& n : nodes_) {
        if (!seen_nodes.insert(n).second) throw ContractError("duplicate node " + n);
    }
    std::set<std::pair<std::string, std::string>> seen_edges;
    for (auto& e : edges_) {
        if (e.u == e.v) throw ContractError("self-loop on " + e.u);
        if (!seen_nodes.count(e.u) || !seen_nodes.count(e.v)) {
            throw ContractError("edge " + e.u + "-" + e.v + " has an unknown endpoint");
        }
        if (!std::isfinite(e.weight)) throw ContractError("non-finite weight on " + e.u + "-" + e.v);
        if (e.v < e.u) std::swap(e.u, e.v);
        if (!seen_edges.emplace(e.u, e.v).second) throw ContractError("duplicate edge " + e.u + "-" + e.v);
    }
}

std::size_t WeightedGraph::node_index(std::string_view code) const {
    const auto it = std::find(nodes_.begin(), nodes_.end(), code);
    if (it == nodes_.end()) throw ContractError("unknown node " + std::string(code));
    return static_cast<std::size_t>(it - nodes_.begin());
}

bool WeightedGraph::has_edge(std::string_view a, std::string_view b) const {
    if (b < a) std::swap(a, b);
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.u == a && e.v == b; });
}

double WeightedGraph::total_weight() const {
    double total = 0.0;
    for (const auto& e : edges_) total += e.weight;
    return total;
}

std::vector<std::vector<std::string>> WeightedGraph::components() const {
    UnionFind uf(nodes_.size());
    for (const auto& e : edges_) uf.unite(node_index(e.u), node_index(e.v));
    std::map<std::size_t, std::vector<std::string>> groups;
    for (std::size_t i = 0; i < nodes_.size(); ++i) groups[uf.find(i)].push_back(nodes_[i]);
    std::vector<std::vector<std::string>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

WeightedGraph WeightedGraph::canonical() const {
    WeightedGraph out = *this;
    std::sort(out.edges_.begin(), out.edges_.end(), lex_less);
    return out;
}

PreferenceRule preference_rule(Preference p) {
    switch (p) {
        case Preference::ConvergentPreferential: return {Channel::Gamma, true};
        case Preference::StrengthPreferential: return {Channel::Gamma, false};
        case Preference::StabilityPreferential: return {Channel::Beta, true};
        case Preference::SmallDistance: return {Channel::Ud, true};
    }
    throw ContractError("unknown preference");
}

std::string_view preference_tag(Preference p) {
    switch (p) {
        case Preference::ConvergentPreferential: return "cp";
        case Preference::StrengthPreferential: return "sp";
        case Preference::StabilityPreferential: return "s";
        case Preference::SmallDistance: return "ud";
    }
    return "unknown";
}

Preference parse_preference(std::string_view tag) {
    for (auto p : {Preference::ConvergentPreferential, Preference::StrengthPreferential,
                   Preference::StabilityPreferential, Preference::SmallDistance}) {
        if (preference_tag(p) == tag) return p;
    }
    throw ContractError("unknown preference '" + std::string(tag) + "' (expected cp, sp, s or ud)");
}

WeightedGraph build_graph(const PairMatrix& matrix, Channel channel) {
    if (matrix.size() < 2) throw ContractError("build_graph needs at least 2 entities");
    if (!matrix.has_channel(channel)) {
        throw ContractError("matrix has no " + std::string(channel_name(channel)) + " channel");
    }
    std::vector<Edge> edges;
    edges.reserve(matrix.pair_count());
    for (std::size_t k = 0; k < matrix.pair_count(); ++k) {
        const auto [i, j] = matrix.pair_at(k);
        if (const auto w = matrix.value(i, j, channel)) {
            edges.push_back({matrix.entities()[i], matrix.entities()[j], *w});
        }
    }
    if (edges.empty()) {
        throw EmptyGraphError("every pair is degenerate on the " + std::string(channel_name(channel)) +
                              " channel");
    }
    WeightedGraph g(matrix.entities(), std::move(edges));
    const auto comps = g.components();
    if (comps.size() > 1) {
        throw EmptyGraphError("degenerate pairs disconnect the " + std::string(channel_name(channel)) +
                              " graph; components: " + describe_components(comps));
    }
    return g;
}

std::vector<Edge> sort_edges(const WeightedGraph& g, PreferenceRule rule) {
    std::vector<Edge> out = g.edges();
    std::sort(out.begin(), out.end(), [&](const Edge& a, const Edge& b) {
        if (a.weight != b.weight) return rule.smaller_preferred ? a.weight < b.weight : a.weight > b.weight;
        return lex_less(a, b);
    });
    return out;
}

std::vector<Edge> sort_edges(const WeightedGraph& g, Preference p) {
    return sort_edges(g, preference_rule(p));
}

ThresholdNetwork npt(const WeightedGraph& g, PreferenceRule rule) {
    if (g.edge_count() == 0) throw ContractError("npt needs at least one edge");
    require_connected(g, "npt");
    const std::vector<Edge> order = sort_edges(g, rule);

    // Removing order[i] happens once every later edge is gone, so it
    // disconnects exactly when the prefix order[0, i) is disconnected. Prefix
    // connectivity only improves as i grows, hence the removal halts at the
    // edge that first connects the prefix.
    UnionFind uf(g.node_count());
    std::size_t keep = order.size();
    for (std::size_t i = 0; i < order.size(); ++i) {
        uf.unite(g.node_index(order[i].u), g.node_index(order[i].v));
        if (uf.components() == 1) {
            keep = i + 1;
            break;
        }
    }

    ThresholdNetwork net;
    net.bridge = order[keep - 1];
    for (std::size_t i = order.size(); i > keep; --i) net.removed.push_back(order[i - 1]);
    net.graph = WeightedGraph(g.nodes(), std::vector<Edge>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep)));
    return net;
}

ThresholdNetwork npt(const WeightedGraph& g, Preference p) {
    ThresholdNetwork net = npt(g, preference_rule(p));
    net.preference = p;
    return net;
}

WeightedGraph mst(const WeightedGraph& g) {
    require_connected(g, "mst");
    UnionFind uf(g.node_count());
    std::vector<Edge> tree;
    for (const auto& e : sort_edges(g, PreferenceRule{Channel::Ud, true})) {
        if (uf.unite(g.node_index(e.u), g.node_index(e.v))) tree.push_back(e);
        if (tree.size() + 1 == g.node_count()) break;
    }
    return WeightedGraph(g.nodes(), std::move(tree));
}

DegreeSummary degrees(const WeightedGraph& g) {
    DegreeSummary s;
    for (const auto& n : g.nodes()) s.degree[n] = 0;
    for (const auto& e : g.edges()) {
        ++s.degree[e.u];
        ++s.degree[e.v];
    }
    s.mean = g.node_count() ? 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count()) : 0.0;
    return s;
}

std::vector<std::vector<std::string>> cliques(const WeightedGraph& g, std::size_t min_size) {
    if (min_size < 3) throw ContractError("clique min_size must be >= 3");
    const Adjacency adj = adjacency(g);
    std::vector<std::size_t> r, p(g.node_count());
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> found;
    bron_kerbosch(adj, r, std::move(p), {}, found);

    std::vector<std::vector<std::string>> out;
    for (const auto& c : found) {
        if (c.size() < min_size) continue;
        std::vector<std::string> names;
        for (std::size_t i : c) names.push_back(g.nodes()[i]);
        std::sort(names.begin(), names.end());
        out.push_back(std::move(names));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

std::vector<std::string> hubs(const WeightedGraph& g, std::size_t k) {
    if (k == 0) throw ContractError("hubs needs k >= 1");
    const DegreeSummary s = degrees(g);
    std::vector<std::pair<std::string, std::size_t>> ranked(s.degree.begin(), s.degree.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::string> out;
    for (std::size_t i = 0; i < std::min(k, ranked.size()); ++i) out.push_back(ranked[i].first);
    return out;
}

}  // namespace plcsnet
