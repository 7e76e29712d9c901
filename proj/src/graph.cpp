#include "mplang/graph.hpp"

#include <algorithm>

#include "mplang/errors.hpp"

namespace mplang {

EmbeddedGraph::EmbeddedGraph(int node_count, int dim) : dim_(dim) {
    if (node_count < 0) throw GraphError("negative node count");
    if (dim < 1) throw GraphError("embedding dimension must be >= 1");
    embedding_.assign(static_cast<std::size_t>(node_count),
                      std::vector<Rational>(static_cast<std::size_t>(dim)));
    adj_.assign(static_cast<std::size_t>(node_count), {});
}

std::size_t EmbeddedGraph::check(int v) const {
    if (v < 0 || v >= node_count()) throw GraphError("node id " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
}

void EmbeddedGraph::set_row(int v, std::vector<Rational> values) {
    if (static_cast<int>(values.size()) != dim_)
        throw GraphError("embedding row has length " + std::to_string(values.size()) +
                         ", expected " + std::to_string(dim_));
    embedding_[check(v)] = std::move(values);
}

void EmbeddedGraph::set_entry(int v, int j, Rational value) {
    if (j < 1 || j > dim_) throw GraphError("feature index out of range");
    embedding_[check(v)][static_cast<std::size_t>(j - 1)] = std::move(value);
}

void EmbeddedGraph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw GraphError("self-loop on node " + std::to_string(u));
    if (has_edge(u, v)) throw GraphError("duplicate edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
}

bool EmbeddedGraph::has_edge(int u, int v) const {
    const auto& n = adj_[check(u)];
    check(v);
    return std::find(n.begin(), n.end(), v) != n.end();
}

std::vector<std::pair<int, int>> EmbeddedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < node_count(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

ColouredGraph::ColouredGraph(EmbeddedGraph graph, std::vector<std::string> colour_names)
    : graph_(std::move(graph)), colour_names_(std::move(colour_names)) {
    if (static_cast<int>(colour_names_.size()) != graph_.dim())
        throw GraphError("colour list length must equal the embedding dimension");
    for (int v = 0; v < graph_.node_count(); ++v) colour_of(v);  // validates one-hotness
}

int ColouredGraph::colour_of(int v) const {
    const auto& r = graph_.row(v);
    int found = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j] == Rational(1)) {
            if (found) throw GraphError("node " + std::to_string(v) + " row is not one-hot");
            found = static_cast<int>(j) + 1;
        } else if (!r[j].is_zero()) {
            throw GraphError("node " + std::to_string(v) + " row is not one-hot");
        }
    }
    if (!found) throw GraphError("node " + std::to_string(v) + " row is not one-hot");
    return found;
}

int ColouredGraph::colour_index(const std::string& name) const {
    for (std::size_t i = 0; i < colour_names_.size(); ++i)
        if (colour_names_[i] == name) return static_cast<int>(i) + 1;
    throw GraphError("unknown colour '" + name + "'");
}

std::vector<Rational> one_hot(int k, int index) {
    std::vector<Rational> row(static_cast<std::size_t>(k));
    row[static_cast<std::size_t>(index - 1)] = Rational(1);
    return row;
}

}  // namespace mplang
