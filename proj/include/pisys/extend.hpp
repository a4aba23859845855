// Extendability of a pi-system to a basis of the ambient system: the
// closure-equality criterion with witness or obstruction, the half-sum fast
// path for the two exceptional shapes, and transformation paths between
// full-rank pi-systems.
#ifndef PISYS_EXTEND_HPP
#define PISYS_EXTEND_HPP

#include <optional>
#include <vector>

#include "pisys/diagram.hpp"
#include "pisys/pisystem.hpp"

namespace pisys {

struct ExtensionReport {
    bool extendable = false;
    ClosureResult closure;
    ClassifiedShape closure_type;  // type of [C], with C as basis
    ClassifiedShape span_type;     // type of R' = R intersect span(C)
    std::optional<std::vector<RationalVector>> witness_basis;
    std::optional<RationalVector> obstruction;
    bool halfsum_checked = false;  // the fast path applied to this shape
    std::optional<RationalVector> halfsum;
};

// Decides extendability: extendable iff [C] equals R intersect span(C).
// Extendable: witness basis containing C, found by backtracking with
// closure equality as the pruning condition at every depth. Not extendable:
// an obstruction root from the rational closure minus the integer closure
// (the half-sum root when the fast path applies, else the canonically first).
ExtensionReport can_extend(const RootSystem& R, const PiSystem& C);

// True when C is a single A3 chain inside a B-family system, or a single A7
// chain inside E8 — the shapes the half-sum test covers.
bool halfsum_applicable(const RootSystem& R, const ClassifiedShape& shape);

// The half-sum with chain coefficients (1,2,1)/2 resp. (1,2,3,4,3,2,1)/2,
// returned when it is a root of R. Chain order is recovered from the
// diagram; the coefficient strings are palindromes, so direction does not
// matter. Throws when the shape does not match.
std::optional<RationalVector> halfsum_obstruction(const RootSystem& R, const PiSystem& C);

struct TransformStep {
    std::vector<int> component_nodes;
    RationalVector adjoined;
    RationalVector removed;
};

struct TransformPath {
    enum class Status { Found, ProvenAbsent, DepthExceeded };
    Status status = Status::ProvenAbsent;
    std::vector<TransformStep> steps;

    bool found() const { return status == Status::Found; }
};

// Breadth-first search over elementary transformations from a full-rank
// pi-system until some reachable full-rank indecomposable pi-system
// classifies as target_type. ProvenAbsent means the reachable set was
// exhausted below the depth bound; DepthExceeded means the bound cut the
// search off.
TransformPath transformation_path(const PiSystem& start, TypeLabel target_type, int max_depth = 4);

}  // namespace pisys

#endif
