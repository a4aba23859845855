// Pi-systems and the operations the extension theory runs on: validation,
// admissibility, integer and rational closures, lowest roots of components,
// elementary transformations, and extension to full rank.
//
// A PiSystem borrows its ambient RootSystem by pointer; the system must
// outlive every pi-system built inside it. Everything here is pure and
// reentrant: enumeration-heavy callers may evaluate branches concurrently.
#ifndef PISYS_PISYSTEM_HPP
#define PISYS_PISYSTEM_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pisys/diagram.hpp"
#include "pisys/exactlin.hpp"
#include "pisys/rootsys.hpp"

namespace pisys {

struct PiSystem {
    const RootSystem* ambient = nullptr;
    std::vector<RationalVector> members;

    std::size_t size() const { return members.size(); }
};

struct PiCheckResult {
    enum class Kind { Ok, NotARoot, Dependent, DifferenceIsRoot };

    Kind kind = Kind::Ok;
    // NotARoot: offender + its position. Dependent: certificate coefficients
    // c over members[0..k] with sum c_i * members[i] == 0. DifferenceIsRoot:
    // the witness pair and their difference.
    std::optional<RationalVector> offender;
    int offender_index = -1;
    std::vector<Rational> dependency;
    std::optional<RationalVector> witness_a, witness_b, difference;

    bool ok() const { return kind == Kind::Ok; }
    std::string describe() const;
};

// The pi-system axioms, checked in order: membership in R, linear
// independence, no difference of two members is a root. Returns the first
// failure with a witness.
PiCheckResult check_pi_system(const RootSystem& R, std::span<const RationalVector> roots);

// Validating constructor; throws std::invalid_argument with the witness
// description when the axioms fail.
PiSystem make_pi_system(const RootSystem& R, std::vector<RationalVector> members);

// All pairwise inner products <= 0. Weaker than the pi-system axioms in
// multiply laced systems.
bool is_admissible(std::span<const RationalVector> roots);

struct ClosureResult {
    std::vector<RationalVector> integer_roots;   // [C], canonical order
    std::vector<RationalVector> rational_roots;  // R intersect span(C), canonical order
    int span_rank = 0;

    bool closures_equal() const { return integer_roots.size() == rational_roots.size(); }
};

// Both closures in one pass: one rational solve per ambient root, integrality
// decides membership in [C].
ClosureResult closure_of(const RootSystem& R, const PiSystem& C);

std::vector<RationalVector> integer_closure(const RootSystem& R, const PiSystem& C);
std::vector<RationalVector> rational_closure(const RootSystem& R, const PiSystem& C);

// Simple basis of a root subsystem given as a plain root set: the positive
// roots (lexicographic sign) that are not sums of two positive roots.
std::vector<RationalVector> simple_basis_of(std::span<const RationalVector> subsystem_roots);

// Negative of the highest root of [component], with the component as simple
// basis. The component must be an indecomposable pi-system.
RationalVector lowest_root_of(const RootSystem& R, std::span<const RationalVector> component);

struct ElementaryMove {
    std::vector<int> component_nodes;  // member positions of the transformed component
    RationalVector adjoined;           // lowest root of that component's closure
    RationalVector removed;
    PiSystem result;
};

// One elementary transformation: adjoin the lowest root of an indecomposable
// component, then remove one root of that component. Results equal to the
// input do not occur (removing the adjoined root itself is skipped); every
// result is revalidated.
std::vector<ElementaryMove> elementary_moves(const RootSystem& R, const PiSystem& P);
std::vector<PiSystem> elementary_transformations(const RootSystem& R, const PiSystem& P);

// Extends C to a pi-system with rank(R) members by depth-first search over
// roots in canonical order. Guaranteed to succeed for indecomposable R;
// exhaustion throws std::logic_error.
PiSystem extend_pi_system(const RootSystem& R, const PiSystem& C);

// Canonical key for visited-set deduplication: the member multiset in
// canonical order.
std::vector<RationalVector> canonical_members(const PiSystem& P);

}  // namespace pisys

#endif
