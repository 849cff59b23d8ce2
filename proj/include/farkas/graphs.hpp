#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "farkas/types.hpp"

namespace farkas {

// Finite simple undirected graph. Vertices are indexed by declaration
// order; edges are stored canonically as (i, j) with i < j, sorted.
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Graph() = default;
    // Throws InvalidArgument on self-loops, duplicate edges, unknown
    // endpoints, or duplicate labels.
    Graph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges);
    Graph(std::size_t vertex_count, const std::vector<Edge>& edges);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }

    bool adjacent(std::size_t a, std::size_t b) const;
    // Position of edge {a, b} in edges(), or nullopt.
    std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const;
    bool connected() const;

private:
    void build(std::vector<Edge> edges);

    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

// Cyclic vertex sequence of odd length ≥ 3, canonical: starts at its
// smallest vertex, second entry smaller than the last.
struct OddCycle {
    std::vector<std::size_t> vertices;

    friend bool operator==(const OddCycle&, const OddCycle&) = default;
    friend auto operator<=>(const OddCycle&, const OddCycle&) = default;
};

struct CyclePairWitness {
    OddCycle first;
    OddCycle second;
    // Smallest vertex not on either cycle (covering check only).
    std::optional<std::size_t> uncovered_vertex;
    std::string note;
};

struct GraphVerdict {
    std::optional<bool> almost_farkas;
    std::optional<bool> weakly_farkas;
    std::optional<CyclePairWitness> witness;
};

// Incidence vectors v(e) ∈ {0,1}^|V| in canonical edge order. Requires a
// connected graph with at least one edge.
VectorFamily edge_vectors(const Graph& g);

std::vector<OddCycle> enumerate_odd_cycles(const Graph& g, const Limits& limits = {});

// Every two vertex-disjoint simple odd cycles together cover all vertices.
GraphVerdict is_almost_farkas_graph(const Graph& g, const Limits& limits = {});

// Every two vertex-disjoint simple odd cycles are joined by an edge.
GraphVerdict is_weakly_farkas_graph(const Graph& g, const Limits& limits = {});

// Two vertex-disjoint odd cycles u_1..u_m and v_1..v_n joined by the path
// u_1 w_1 .. w_p v_1 (path lists u_1, the interior, then v_1).
struct OddCycleGap {
    std::vector<std::size_t> first_cycle;
    std::vector<std::size_t> second_cycle;
    std::vector<std::size_t> path;
};

// Pattern a_e ∈ {−1,0,1} (single +1) and rational point x_e with
// Σ x_e v(e) = 0 and a_e ≤ x_e ≤ a_e + 1, indexed by canonical edge order.
struct ProofFixture {
    std::vector<int> pattern;
    RationalCoeffs x;
};

ProofFixture proof_fixture(const Graph& g, const OddCycleGap& gap);

// Pair of disjoint odd cycles at distance > 1 with a connecting path whose
// interior avoids both cycles, minimizing total cycle length plus path
// interior. nullopt when the odd-cycle condition holds.
std::optional<OddCycleGap> find_odd_cycle_gap(const Graph& g, const Limits& limits = {});

struct CrossValidation {
    bool agrees = true;
    bool graph_almost = true;
    bool graph_weak = true;
    bool vector_afr = true;
    bool vector_wfr = true;
};

CrossValidation cross_validate_report(const Graph& g, const Limits& limits = {});
bool cross_validate(const Graph& g, const Limits& limits = {});

}  // namespace farkas
