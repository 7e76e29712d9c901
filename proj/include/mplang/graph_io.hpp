#ifndef MPLANG_GRAPH_IO_HPP
#define MPLANG_GRAPH_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "mplang/graph.hpp"

namespace mplang {

// A graph as read from disk: coloured files carry their colour names.
struct GraphFile {
    EmbeddedGraph graph;
    std::optional<std::vector<std::string>> colours;

    bool is_coloured() const { return colours.has_value(); }
    ColouredGraph coloured() const;  // throws FileError when embedded-mode
};

// Canonical JSON serialization: keys {dim, mode, colours?, nodes, edges},
// nodes in id order, edges sorted with u < v, rationals as "p/q" strings.
std::string graph_to_json(const EmbeddedGraph& g);
std::string graph_to_json(const ColouredGraph& g);

GraphFile graph_from_json(const std::string& text);

void save_graph(const EmbeddedGraph& g, const std::string& path);
void save_graph(const ColouredGraph& g, const std::string& path);
GraphFile load_graph(const std::string& path);

}  // namespace mplang

#endif
