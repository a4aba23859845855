// Marked Dynkin diagrams derived from root lists: bonds and arrows from
// pairwise Cartan integers, connected components, classification against the
// finite A-G catalogue, and marked-subdiagram containment.
//
// Length marks are relative to the longest root in the input by default; the
// RootSystem overload marks relative to the ambient length scale instead,
// which is what marked-subdiagram questions need.
#ifndef PISYS_DIAGRAM_HPP
#define PISYS_DIAGRAM_HPP

#include <span>
#include <string>
#include <vector>

#include "pisys/exactlin.hpp"
#include "pisys/rootsys.hpp"

namespace pisys {

struct DiagramNode {
    int index;  // position of the root in the caller's input list
    LengthClass mark;
};

struct DiagramBond {
    int i, j;          // positions into Diagram::nodes
    int multiplicity;  // 1..3
    int arrow_to;      // node position of the shorter end, -1 when multiplicity is 1
};

struct Diagram {
    std::vector<DiagramNode> nodes;
    std::vector<DiagramBond> bonds;

    std::size_t size() const { return nodes.size(); }
    // multiplicity between node positions a and b, 0 when unbonded
    int bond_multiplicity(int a, int b) const;
    const DiagramBond* bond_between(int a, int b) const;
    std::vector<std::vector<int>> adjacency() const;
};

// Diagram of a root list. Pairwise Cartan integers must be <= 0; a positive
// one means the list is not a simple-system configuration and throws.
Diagram diagram_of(std::span<const RationalVector> roots);

// Same, with marks taken from the ambient system's length scale.
Diagram diagram_of(std::span<const RationalVector> roots, const RootSystem& ambient);

// Connected components under bonds; node order inherited from the input.
std::vector<Diagram> components(const Diagram& d);

struct ComponentShape {
    TypeLabel type;
    // node_map[p] = DiagramNode::index of the node sitting at Bourbaki
    // position p+1 of `type`.
    std::vector<int> node_map;
};

struct ClassifiedShape {
    std::vector<ComponentShape> components;

    bool single(TypeLabel t) const {
        return components.size() == 1 && same_system(components[0].type, t);
    }
    std::string str() const;  // e.g. "A3", "A1+A1", "-" when empty
};

// Classify every component against the catalogue. Rank-2 double-bond
// components are reported as B2 (B2 and C2 are the same system). Throws when
// a component matches nothing, which cannot happen for genuine pi-systems.
ClassifiedShape classify(const Diagram& d);

// Bourbaki diagram of a label, marks on the system's own length scale.
const Diagram& catalogue_diagram(TypeLabel t);

// True iff some node subset of the ambient Bourbaki diagram induces a
// diagram isomorphic to `sub`, preserving bonds, arrows, and short/long
// marks. The TypeLabel form uses sub's own catalogue marks.
bool is_marked_subdiagram(const Diagram& sub, TypeLabel ambient);
bool is_marked_subdiagram(TypeLabel sub, TypeLabel ambient);

// One-line rendering for chains ("o---o=>=*", short nodes drawn as '*'),
// node/bond listing otherwise.
std::string render_ascii(const Diagram& d);

}  // namespace pisys

#endif
