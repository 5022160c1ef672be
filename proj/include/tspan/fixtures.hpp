#pragma once

// Named test graphs used across the suite and addressable from the CLI as
// fixture:<name>.
//
//   fig1_gpp  - 4-node spanner whose footprint is not a tree
//   fig2_k5   - recursively 1-hop dismountable K5
//   fig5_g1   - 5-node graph with a compressible labeling
//   fig5_g2   - its compressed image (compression fixpoint)
//   fig5_g3   - full-range 5-node graph, not temporally connected
//   fig12_k8  - K8 that is neither pivotable nor k-hop dismountable
//   k4_min    - non-dismountable, non-pivotable K4 with a 4-edge spanner
//   k4_2hop   - K4 that is 2-hop but not 1-hop dismountable

#include <stdexcept>
#include <string>
#include <vector>

#include "tspan/graph.hpp"

namespace tspan {

inline TemporalGraph fixture(const std::string& name) {
    GraphBuilder b;
    if (name == "fig1_gpp") {
        b.add_contact("a", "b", 2);
        b.add_contact("b", "c", 3);
        b.add_contact("c", "d", 1);
        b.add_contact("a", "d", 4);
        return b.build();
    }
    if (name == "fig2_k5") {
        b.add_contact("a", "b", 0);
        b.add_contact("a", "c", 3);
        b.add_contact("a", "d", 2);
        b.add_contact("a", "e", 9);
        b.add_contact("b", "c", 4);
        b.add_contact("b", "d", 6);
        b.add_contact("b", "e", 1);
        b.add_contact("c", "d", 5);
        b.add_contact("c", "e", 7);
        b.add_contact("d", "e", 8);
        return b.build();
    }
    if (name == "fig5_g1") {
        b.add_contact("c", "d", 1);
        b.add_contact("c", "e", 2);
        b.add_contact("a", "c", 3);
        b.add_contact("b", "d", 4);
        b.add_contact("a", "b", 5);
        b.add_contact("d", "e", 17);
        return b.build();
    }
    if (name == "fig5_g2") {
        b.add_contact("c", "d", 1);
        b.add_contact("c", "e", 2);
        b.add_contact("a", "c", 3);
        b.add_contact("b", "d", 2);
        b.add_contact("a", "b", 4);
        b.add_contact("d", "e", 3);
        return b.build();
    }
    if (name == "fig5_g3") {
        b.add_contact("a", "b", 1);
        b.add_contact("a", "c", 2);
        b.add_contact("c", "d", 3);
        b.add_contact("c", "e", 4);
        b.add_contact("d", "e", 5);
        b.add_contact("b", "d", 6);
        return b.build();
    }
    if (name == "fig12_k8") {
        for (int v = 0; v < 8; ++v) b.add_node(std::to_string(v));
        // plain cross edges
        b.add_contact("0", "5", 10);
        b.add_contact("0", "7", 11);
        b.add_contact("1", "4", 16);
        b.add_contact("1", "6", 17);
        b.add_contact("2", "4", 12);
        b.add_contact("2", "6", 13);
        b.add_contact("3", "5", 14);
        b.add_contact("3", "7", 15);
        // latest-edge matching
        b.add_contact("5", "1", 18);
        b.add_contact("6", "0", 19);
        b.add_contact("4", "3", 20);
        b.add_contact("7", "2", 21);
        // earliest-edge matching
        b.add_contact("7", "1", 6);
        b.add_contact("6", "3", 7);
        b.add_contact("4", "0", 8);
        b.add_contact("5", "2", 9);
        // within {4,5,6,7}
        b.add_contact("5", "4", 22);
        b.add_contact("4", "6", 23);
        b.add_contact("7", "4", 24);
        b.add_contact("5", "6", 25);
        b.add_contact("5", "7", 26);
        b.add_contact("7", "6", 27);
        // within {0,1,2,3}
        b.add_contact("1", "0", 0);
        b.add_contact("2", "0", 1);
        b.add_contact("0", "3", 2);
        b.add_contact("2", "1", 3);
        b.add_contact("1", "3", 4);
        b.add_contact("2", "3", 5);
        return b.build();
    }
    if (name == "k4_min") {
        for (int v = 1; v <= 4; ++v) b.add_node(std::to_string(v));
        b.add_contact("1", "2", 1);
        b.add_contact("1", "3", 2);
        b.add_contact("2", "4", 3);
        b.add_contact("2", "3", 5);
        b.add_contact("1", "4", 6);
        b.add_contact("3", "4", 7);
        return b.build();
    }
    if (name == "k4_2hop") {
        for (int v = 1; v <= 4; ++v) b.add_node(std::to_string(v));
        b.add_contact("1", "2", 1);
        b.add_contact("1", "4", 2);
        b.add_contact("1", "3", 3);
        b.add_contact("2", "4", 4);
        b.add_contact("2", "3", 6);
        b.add_contact("3", "4", 7);
        return b.build();
    }
    throw std::invalid_argument("unknown fixture: " + name);
}

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "fig1_gpp", "fig2_k5", "fig5_g1", "fig5_g2",
        "fig5_g3",  "fig12_k8", "k4_min", "k4_2hop"};
    return names;
}

}  // namespace tspan
