#ifndef MPLANG_GENERATORS_HPP
#define MPLANG_GENERATORS_HPP

#include <string>
#include <vector>

#include "mplang/graph.hpp"

namespace mplang {

// Colour conventions used by the generated families. Node ids are dense
// and assigned in BFS order, so generator output is deterministic.
inline const std::vector<std::string>& rb_colours() {
    static const std::vector<std::string> names{"red", "blue", "white"};
    return names;
}

struct Star {
    ColouredGraph graph;
    int centre;
};

// White centre with `red_count` red and `blue_count` blue leaves,
// colours {red, blue, white}.
Star make_star(int red_count, int blue_count);

struct PathExample {
    ColouredGraph c;        // v0, v4 blue; v1, v2, v3 red
    ColouredGraph c_prime;  // v2 blue; the rest red
    int v1;                 // the distinguished node
};

// The 5-node path with its two colourings over {red, blue}. The two
// pointed graphs (c, v1) and (c_prime, v1) are walk-equivalent yet
// distinguished by step queries.
PathExample make_path_example();

enum class NodeType { W, WPrime, Red, Blue };

const char* node_type_name(NodeType t);

// Red--blue symmetric tree of height k. White nodes alternate between
// w-type (r red, b blue neighbours) and w'-type (b red, r blue); every
// coloured interior node sits between one w-type and one w'-type white
// node. Depth-k nodes are leaves and do not meet the quotas.
struct RbTree {
    ColouredGraph graph;  // colours {red, blue, white}
    int root = 0;
    std::vector<NodeType> type;
    std::vector<int> depth;
    int r = 0;
    int b = 0;
    int k = 0;

    // Whether node v's neighbourhood matches its type quota exactly.
    bool quota_ok(int v) const;
};

RbTree make_rb_tree(int r, int b, int k);

struct NonclosureTrees {
    ColouredGraph c1;  // both leaves blue
    ColouredGraph c2;  // one blue, one red
    ColouredGraph c3;  // both leaves red
    int root = 0;
    int leaf_a = 1;
    int leaf_b = 2;
};

// The 3-node tree (root with two leaves) in its three colourings over
// {white, blue, red}; roots are white.
NonclosureTrees make_nonclosure_trees();

}  // namespace mplang

#endif
