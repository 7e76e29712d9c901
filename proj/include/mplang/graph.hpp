#ifndef MPLANG_GRAPH_HPP
#define MPLANG_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "mplang/rational.hpp"

namespace mplang {

// Finite undirected graph with a rational feature vector per node.
// No self-loops; adjacency is symmetric by construction.
class EmbeddedGraph {
public:
    EmbeddedGraph(int node_count, int dim);

    int node_count() const { return static_cast<int>(embedding_.size()); }
    int dim() const { return dim_; }

    const std::vector<Rational>& row(int v) const { return embedding_[check(v)]; }
    void set_row(int v, std::vector<Rational> values);
    void set_entry(int v, int j, Rational value);  // j is 1-based

    // Throws GraphError on self-loops, out-of-range endpoints or
    // duplicate edges.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbours(int v) const { return adj_[check(v)]; }
    // Edges in canonical order: u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::size_t check(int v) const;

    int dim_;
    std::vector<std::vector<Rational>> embedding_;
    std::vector<std::vector<int>> adj_;
};

// Embedded graph whose rows are one-hot over k named colours.
class ColouredGraph {
public:
    ColouredGraph(EmbeddedGraph graph, std::vector<std::string> colour_names);

    const EmbeddedGraph& graph() const { return graph_; }
    const std::vector<std::string>& colour_names() const { return colour_names_; }
    int colour_count() const { return static_cast<int>(colour_names_.size()); }
    int node_count() const { return graph_.node_count(); }

    // 1-based colour index of node v.
    int colour_of(int v) const;
    const std::string& colour_name_of(int v) const { return colour_names_[static_cast<std::size_t>(colour_of(v) - 1)]; }

    // 1-based index of a named colour; throws GraphError when absent.
    int colour_index(const std::string& name) const;

private:
    EmbeddedGraph graph_;
    std::vector<std::string> colour_names_;
};

// Convenience for building one-hot rows.
std::vector<Rational> one_hot(int k, int index);  // index 1-based

}  // namespace mplang

#endif
