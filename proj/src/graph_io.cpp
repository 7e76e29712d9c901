#include "mplang/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mplang/errors.hpp"

namespace mplang {

namespace {

using nlohmann::json;

json embedding_json(const EmbeddedGraph& g) {
    json nodes = json::array();
    for (int v = 0; v < g.node_count(); ++v) {
        json row = json::array();
        for (const Rational& x : g.row(v)) row.push_back(x.str());
        nodes.push_back(std::move(row));
    }
    return nodes;
}

json edges_json(const EmbeddedGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return edges;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace

ColouredGraph GraphFile::coloured() const {
    if (!colours) throw FileError("graph file is not in coloured mode");
    return ColouredGraph(graph, *colours);
}

std::string graph_to_json(const EmbeddedGraph& g) {
    json j;
    j["dim"] = g.dim();
    j["mode"] = "embedded";
    j["nodes"] = embedding_json(g);
    j["edges"] = edges_json(g);
    return dump(j);
}

std::string graph_to_json(const ColouredGraph& g) {
    json j;
    j["dim"] = g.graph().dim();
    j["mode"] = "coloured";
    j["colours"] = g.colour_names();
    j["nodes"] = embedding_json(g.graph());
    j["edges"] = edges_json(g.graph());
    return dump(j);
}

GraphFile graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FileError(std::string("malformed graph file: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("dim") || !j.contains("mode") || !j.contains("nodes") ||
            !j.contains("edges"))
            throw FileError("graph file must have fields dim, mode, nodes, edges");
        int dim = j.at("dim").get<int>();
        std::string mode = j.at("mode").get<std::string>();
        if (mode != "embedded" && mode != "coloured")
            throw FileError("mode must be \"embedded\" or \"coloured\"");

        const json& nodes = j.at("nodes");
        EmbeddedGraph g(static_cast<int>(nodes.size()), dim);
        int v = 0;
        for (const json& row : nodes) {
            if (static_cast<int>(row.size()) != dim)
                throw FileError("node " + std::to_string(v) + " has inconsistent dimension");
            std::vector<Rational> vals;
            vals.reserve(row.size());
            for (const json& cell : row) {
                if (!cell.is_string()) throw FileError("embedding entries must be rational strings");
                try {
                    vals.push_back(Rational::parse(cell.get<std::string>()));
                } catch (const std::invalid_argument& e) {
                    throw FileError(e.what());
                }
            }
            g.set_row(v++, std::move(vals));
        }
        for (const json& edge : j.at("edges")) {
            if (!edge.is_array() || edge.size() != 2) throw FileError("edges must be [u,v] pairs");
            try {
                g.add_edge(edge[0].get<int>(), edge[1].get<int>());
            } catch (const GraphError& e) {
                throw FileError(e.what());
            }
        }

        GraphFile out{std::move(g), std::nullopt};
        if (mode == "coloured") {
            if (!j.contains("colours")) throw FileError("coloured mode requires a colours list");
            std::vector<std::string> colours = j.at("colours").get<std::vector<std::string>>();
            try {
                ColouredGraph check(out.graph, colours);  // validates one-hot rows
            } catch (const GraphError& e) {
                throw FileError(e.what());
            }
            out.colours = std::move(colours);
        }
        return out;
    } catch (const json::exception& e) {
        throw FileError(std::string("malformed graph file: ") + e.what());
    }
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw FileError("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

void save_graph(const EmbeddedGraph& g, const std::string& path) { write_file(path, graph_to_json(g)); }
void save_graph(const ColouredGraph& g, const std::string& path) { write_file(path, graph_to_json(g)); }

GraphFile load_graph(const std::string& path) { return graph_from_json(read_file(path)); }

}  // namespace mplang
