#pragma once

// The two worked examples used throughout the suites: a genus-2 curve
// (elliptic and rational component joined at two nodes, polarized by (1,1)
// and (1,5)) and the degree-0 banana (two rational components, two nodes,
// polarized by (1,1) and (3,1)).

#include "mgstab/curve.hpp"
#include "mgstab/polarization.hpp"

namespace mgstab::testfix {

inline DualGraph genus2_graph() {
    DualGraph graph;
    graph.components = {Component{"C1", 1}, Component{"C2", 0}};
    graph.nodes = {{"C1", "C2"}, {"C1", "C2"}};
    return graph;
}

inline Polarization genus2_polarization() {
    Polarization pol;
    pol.names = {"L1", "L2"};
    pol.degrees = {{Rational(1), Rational(1)}, {Rational(1), Rational(5)}};
    return pol;
}

inline DualGraph banana_graph() {
    DualGraph graph;
    graph.components = {Component{"C1", 0}, Component{"C2", 0}};
    graph.nodes = {{"C1", "C2"}, {"C1", "C2"}};
    return graph;
}

inline Polarization banana_polarization() {
    Polarization pol;
    pol.names = {"L1", "L2"};
    pol.degrees = {{Rational(1), Rational(1)}, {Rational(3), Rational(1)}};
    return pol;
}

inline DualGraph chain3_graph() {
    DualGraph graph;
    graph.components = {Component{"C1", 0}, Component{"C2", 1}, Component{"C3", 0}};
    graph.nodes = {{"C1", "C2"}, {"C2", "C3"}};
    return graph;
}

} // namespace mgstab::testfix
