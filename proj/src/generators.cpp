#include "mplang/generators.hpp"

#include <deque>

#include "mplang/errors.hpp"

namespace mplang {

namespace {

const std::vector<std::string>& nonclosure_colours() {
    static const std::vector<std::string> names{"white", "blue", "red"};
    return names;
}

constexpr int kRed = 1, kBlue = 2, kWhite = 3;  // indices into rb_colours()

}  // namespace

const char* node_type_name(NodeType t) {
    switch (t) {
        case NodeType::W: return "w";
        case NodeType::WPrime: return "w'";
        case NodeType::Red: return "red";
        case NodeType::Blue: return "blue";
    }
    return "?";
}

Star make_star(int red_count, int blue_count) {
    if (red_count < 0 || blue_count < 0) throw GraphError("make_star: negative counts");
    int n = 1 + red_count + blue_count;
    EmbeddedGraph g(n, 3);
    g.set_row(0, one_hot(3, kWhite));
    for (int i = 0; i < red_count; ++i) {
        g.set_row(1 + i, one_hot(3, kRed));
        g.add_edge(0, 1 + i);
    }
    for (int i = 0; i < blue_count; ++i) {
        g.set_row(1 + red_count + i, one_hot(3, kBlue));
        g.add_edge(0, 1 + red_count + i);
    }
    return Star{ColouredGraph(std::move(g), rb_colours()), 0};
}

PathExample make_path_example() {
    const std::vector<std::string> colours{"red", "blue"};
    auto path = [&colours](const std::vector<int>& colour_of) {
        EmbeddedGraph g(5, 2);
        for (int v = 0; v < 5; ++v) g.set_row(v, one_hot(2, colour_of[static_cast<std::size_t>(v)]));
        for (int v = 0; v + 1 < 5; ++v) g.add_edge(v, v + 1);
        return ColouredGraph(std::move(g), colours);
    };
    // red = 1, blue = 2
    ColouredGraph c = path({2, 1, 1, 1, 2});
    ColouredGraph c_prime = path({1, 1, 2, 1, 1});
    return PathExample{std::move(c), std::move(c_prime), 1};
}

RbTree make_rb_tree(int r, int b, int k) {
    if (r < 0 || b < 0 || k < 0) throw GraphError("make_rb_tree: negative parameters");

    struct Rec {
        NodeType type;
        int depth;
        int parent;
    };
    std::vector<Rec> recs;
    std::vector<std::pair<int, int>> edges;
    recs.push_back({NodeType::W, 0, -1});

    std::deque<int> queue{0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        const Rec rec = recs[static_cast<std::size_t>(v)];
        if (rec.depth >= k) continue;  // depth-k nodes are leaves

        auto spawn = [&](NodeType t) {
            int id = static_cast<int>(recs.size());
            recs.push_back({t, rec.depth + 1, v});
            edges.emplace_back(v, id);
            queue.push_back(id);
        };

        switch (rec.type) {
            case NodeType::W:
            case NodeType::WPrime: {
                int quota_red = rec.type == NodeType::W ? r : b;
                int quota_blue = rec.type == NodeType::W ? b : r;
                if (rec.parent >= 0) {
                    NodeType pt = recs[static_cast<std::size_t>(rec.parent)].type;
                    if (pt == NodeType::Red) --quota_red;
                    if (pt == NodeType::Blue) --quota_blue;
                }
                for (int i = 0; i < quota_red; ++i) spawn(NodeType::Red);
                for (int i = 0; i < quota_blue; ++i) spawn(NodeType::Blue);
                break;
            }
            case NodeType::Red:
            case NodeType::Blue: {
                // One white child of the type opposite the white parent.
                NodeType pt = recs[static_cast<std::size_t>(rec.parent)].type;
                spawn(pt == NodeType::W ? NodeType::WPrime : NodeType::W);
                break;
            }
        }
    }

    int n = static_cast<int>(recs.size());
    EmbeddedGraph g(n, 3);
    for (int v = 0; v < n; ++v) {
        int colour = kWhite;
        if (recs[static_cast<std::size_t>(v)].type == NodeType::Red) colour = kRed;
        if (recs[static_cast<std::size_t>(v)].type == NodeType::Blue) colour = kBlue;
        g.set_row(v, one_hot(3, colour));
    }
    for (auto [u, v] : edges) g.add_edge(u, v);

    std::vector<NodeType> types;
    std::vector<int> depths;
    types.reserve(recs.size());
    depths.reserve(recs.size());
    for (const Rec& rec : recs) {
        types.push_back(rec.type);
        depths.push_back(rec.depth);
    }
    return RbTree{ColouredGraph(std::move(g), rb_colours()), 0, std::move(types), std::move(depths), r, b, k};
}

bool RbTree::quota_ok(int v) const {
    int reds = 0, blues = 0, w_count = 0, wp_count = 0;
    for (int u : graph.graph().neighbours(v)) {
        switch (type[static_cast<std::size_t>(u)]) {
            case NodeType::Red: ++reds; break;
            case NodeType::Blue: ++blues; break;
            case NodeType::W: ++w_count; break;
            case NodeType::WPrime: ++wp_count; break;
        }
    }
    switch (type[static_cast<std::size_t>(v)]) {
        case NodeType::W:
            return reds == r && blues == b && w_count == 0 && wp_count == 0;
        case NodeType::WPrime:
            return reds == b && blues == r && w_count == 0 && wp_count == 0;
        case NodeType::Red:
        case NodeType::Blue:
            return reds == 0 && blues == 0 && w_count == 1 && wp_count == 1;
    }
    return false;
}

NonclosureTrees make_nonclosure_trees() {
    // white = P1, blue = P2, red = P3
    auto tree = [](int leaf_a_colour, int leaf_b_colour) {
        EmbeddedGraph g(3, 3);
        g.set_row(0, one_hot(3, 1));
        g.set_row(1, one_hot(3, leaf_a_colour));
        g.set_row(2, one_hot(3, leaf_b_colour));
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        return ColouredGraph(std::move(g), nonclosure_colours());
    };
    return NonclosureTrees{tree(2, 2), tree(2, 3), tree(3, 3), 0, 1, 2};
}

}  // namespace mplang
