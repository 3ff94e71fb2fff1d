#pragma once

// Networks over a pair matrix: the complete weighted graph, the network on
// the percolation threshold (NPT), the minimum spanning tree baseline, and
// the degree/hub/clique summaries read off them.
//
// NPT: sort edges by preference, then repeatedly drop the least preferred
// remaining edge. The first drop that disconnects the node set (an isolated
// node counts) is undone and the process stops; later edges in the order are
// not tried.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "plcsnet/pair_matrix.hpp"

namespace plcsnet {

struct Edge {
    std::string u;  // u < v lexicographically
    std::string v;
    double weight = 0.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph with finite weights.
class WeightedGraph {
public:
    WeightedGraph() = default;
    /// Normalizes each edge to u < v. ContractError on self-loops, duplicate
    /// pairs, unknown endpoints, non-finite weights or duplicate node codes.
    WeightedGraph(std::vector<std::string> nodes, std::vector<Edge> edges);

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::size_t node_index(std::string_view code) const;
    bool has_edge(std::string_view a, std::string_view b) const;
    double total_weight() const;

    /// Connected components as sorted lists of node codes, in order of their
    /// smallest member.
    std::vector<std::vector<std::string>> components() const;
    bool connected() const { return components().size() <= 1; }

    /// Same graph with edges listed in lexicographic (u, v) order.
    WeightedGraph canonical() const;

private:
    std::vector<std::string> nodes_;
    std::vector<Edge> edges_;
};

enum class Preference { ConvergentPreferential, StrengthPreferential, StabilityPreferential, SmallDistance };

struct PreferenceRule {
    Channel channel;
    bool smaller_preferred;
};

/// Channel and direction each preference fixes:
///   CP  gamma, smaller first     SP  gamma, larger first
///   S   beta,  smaller first     SmallDistance  ud, smaller first
PreferenceRule preference_rule(Preference p);
/// Short tag used on the command line and in file names: cp, sp, s, ud.
std::string_view preference_tag(Preference p);
Preference parse_preference(std::string_view tag);

struct ThresholdNetwork {
    WeightedGraph graph;        // surviving edges
    std::vector<Edge> removed;  // in removal order
    Edge bridge;                // removed, found to disconnect, restored
    Preference preference = Preference::ConvergentPreferential;
};

/// One edge per pair with a value on the channel. EmptyGraphError if no pair
/// has one or the remaining edges leave the node set disconnected.
WeightedGraph build_graph(const PairMatrix& matrix, Channel channel);

/// Most preferred first under the rule; equal weights by ascending (u, v).
std::vector<Edge> sort_edges(const WeightedGraph& g, PreferenceRule rule);
std::vector<Edge> sort_edges(const WeightedGraph& g, Preference p);

/// ContractError if g is disconnected (the message lists the components).
ThresholdNetwork npt(const WeightedGraph& g, Preference p);
/// Same, with an explicit rule (tests use it for direction duality).
ThresholdNetwork npt(const WeightedGraph& g, PreferenceRule rule);

/// Kruskal; ties by ascending (u, v). ContractError if g is disconnected.
WeightedGraph mst(const WeightedGraph& g);

struct DegreeSummary {
    std::map<std::string, std::size_t> degree;
    double mean = 0.0;  // 2|E| / |V|
};
DegreeSummary degrees(const WeightedGraph& g);

/// All maximal cliques with at least min_size nodes (Bron-Kerbosch with
/// pivoting). Members sorted; list sorted by size descending, then
/// lexicographically. ContractError if min_size < 3.
std::vector<std::vector<std::string>> cliques(const WeightedGraph& g, std::size_t min_size = 3);

/// Top-k nodes by degree, ties lexicographic. ContractError if k == 0.
std::vector<std::string> hubs(const WeightedGraph& g, std::size_t k);

}  // namespace plcsnet
