#include "pisys/pisystem.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pisys {

std::string PiCheckResult::describe() const {
    switch (kind) {
        case Kind::Ok:
            return "ok";
        case Kind::NotARoot:
            return "entry " + std::to_string(offender_index) + " = " + offender->str() +
                   " is not a root of the ambient system";
        case Kind::Dependent: {
            std::ostringstream os;
            os << "members are linearly dependent (certificate:";
            for (const auto& c : dependency) os << " " << c.str();
            os << ")";
            return os.str();
        }
        case Kind::DifferenceIsRoot:
            return witness_a->str() + " - " + witness_b->str() + " = " + difference->str() +
                   " is a root of the ambient system";
    }
    return "";
}

PiCheckResult check_pi_system(const RootSystem& R, std::span<const RationalVector> roots) {
    PiCheckResult res;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].dim() != R.ambient_dim() || !R.is_root(roots[i])) {
            res.kind = PiCheckResult::Kind::NotARoot;
            res.offender = roots[i];
            res.offender_index = static_cast<int>(i);
            return res;
        }
    }
    // Independence: find the first member inside the span of its
    // predecessors and return the vanishing combination as certificate.
    for (std::size_t k = 1; k < roots.size(); ++k) {
        SpanSolver prefix(roots.subspan(0, k));
        if (auto c = prefix.coords(roots[k])) {
            res.kind = PiCheckResult::Kind::Dependent;
            res.dependency = std::move(*c);
            res.dependency.push_back(Rational(-1));
            return res;
        }
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (i == j) continue;
            RationalVector diff = roots[i] - roots[j];
            if (R.is_root(diff)) {
                res.kind = PiCheckResult::Kind::DifferenceIsRoot;
                res.witness_a = roots[i];
                res.witness_b = roots[j];
                res.difference = std::move(diff);
                return res;
            }
        }
    return res;
}

PiSystem make_pi_system(const RootSystem& R, std::vector<RationalVector> members) {
    PiCheckResult check = check_pi_system(R, members);
    if (!check.ok()) throw std::invalid_argument("not a pi-system: " + check.describe());
    return PiSystem{&R, std::move(members)};
}

bool is_admissible(std::span<const RationalVector> roots) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (Rational(0) < dot(roots[i], roots[j])) return false;
    return true;
}

ClosureResult closure_of(const RootSystem& R, const PiSystem& C) {
    ClosureResult out;
    SpanSolver span(C.members);
    out.span_rank = span.rank();
    for (const auto& r : R.roots()) {
        auto coords = span.coords(r);
        if (!coords) continue;
        out.rational_roots.push_back(r);
        bool integral = std::all_of(coords->begin(), coords->end(),
                                    [](const Rational& c) { return c.is_integer(); });
        if (integral) out.integer_roots.push_back(r);
    }
    return out;  // R.roots() is canonically sorted, so both lists are too
}

std::vector<RationalVector> integer_closure(const RootSystem& R, const PiSystem& C) {
    return closure_of(R, C).integer_roots;
}

std::vector<RationalVector> rational_closure(const RootSystem& R, const PiSystem& C) {
    return closure_of(R, C).rational_roots;
}

std::vector<RationalVector> simple_basis_of(std::span<const RationalVector> subsystem_roots) {
    // Positive = lexicographically positive, a regular ordering for any
    // finite root set; simple roots are the positives that do not split as a
    // sum of two positives.
    std::vector<RationalVector> positive;
    RationalVector zero;
    for (const auto& r : subsystem_roots) {
        if (zero.dim() == 0) zero = RationalVector::zero(r.dim());
        if (lex_less(zero, r)) positive.push_back(r);
    }
    auto is_positive = [&](const RationalVector& v) {
        return std::find(positive.begin(), positive.end(), v) != positive.end();
    };
    std::vector<RationalVector> simple;
    for (const auto& r : positive) {
        bool splits = false;
        for (const auto& p : positive) {
            if (p == r) continue;
            if (is_positive(r - p)) {
                splits = true;
                break;
            }
        }
        if (!splits) simple.push_back(r);
    }
    std::sort(simple.begin(), simple.end(), lex_less);
    return simple;
}

RationalVector lowest_root_of(const RootSystem& R, std::span<const RationalVector> component) {
    if (component.empty()) throw std::invalid_argument("lowest root of an empty component");
    if (components(diagram_of(component)).size() != 1)
        throw std::invalid_argument("lowest root of a decomposable component");

    PiSystem piece{&R, {component.begin(), component.end()}};
    SpanSolver span(piece.members);
    auto closure = integer_closure(R, piece);

    bool have = false;
    Rational best_height;
    const RationalVector* highest = nullptr;
    for (const auto& r : closure) {
        auto c = span.coords(r);
        Rational h;
        for (const auto& ci : *c) h = h + ci;
        if (!have || best_height < h) {
            have = true;
            best_height = h;
            highest = &r;
        }
    }
    return -*highest;
}

std::vector<ElementaryMove> elementary_moves(const RootSystem& R, const PiSystem& P) {
    std::vector<ElementaryMove> out;
    Diagram d = diagram_of(P.members);
    for (const Diagram& comp : components(d)) {
        std::vector<int> positions;
        std::vector<RationalVector> roots;
        for (const auto& node : comp.nodes) {
            positions.push_back(node.index);
            roots.push_back(P.members[node.index]);
        }
        RationalVector lowest = lowest_root_of(R, roots);
        for (int removed_pos : positions) {
            // Removing the adjoined root itself reproduces P; skipped.
            std::vector<RationalVector> members;
            members.reserve(P.size());
            for (std::size_t i = 0; i < P.size(); ++i)
                if (static_cast<int>(i) != removed_pos) members.push_back(P.members[i]);
            members.push_back(lowest);

            PiCheckResult check = check_pi_system(R, members);
            if (!check.ok())
                throw std::logic_error("elementary transformation left the pi-system axioms: " +
                                       check.describe());
            out.push_back({positions, lowest, P.members[removed_pos],
                           PiSystem{&R, std::move(members)}});
        }
    }
    return out;
}

std::vector<PiSystem> elementary_transformations(const RootSystem& R, const PiSystem& P) {
    std::vector<PiSystem> out;
    for (auto& mv : elementary_moves(R, P)) out.push_back(std::move(mv.result));
    return out;
}

namespace {

bool pi_compatible(const RootSystem& R, std::span<const RationalVector> members,
                   const RationalVector& candidate) {
    for (const auto& m : members) {
        if (m == candidate) return false;
        if (R.is_root(candidate - m) || R.is_root(m - candidate)) return false;
    }
    return true;
}

bool extend_search(const RootSystem& R, std::vector<RationalVector>& members,
                   std::size_t first_index, std::size_t want) {
    if (members.size() == want) return true;
    const auto& roots = R.roots();
    for (std::size_t idx = first_index; idx < roots.size(); ++idx) {
        const RationalVector& cand = roots[idx];
        if (!pi_compatible(R, members, cand)) continue;
        if (SpanSolver(members).in_span(cand)) continue;
        members.push_back(cand);
        if (extend_search(R, members, idx + 1, want)) return true;
        members.pop_back();
    }
    return false;
}

}  // namespace

PiSystem extend_pi_system(const RootSystem& R, const PiSystem& C) {
    std::size_t want = static_cast<std::size_t>(R.rank());
    std::vector<RationalVector> members = C.members;
    if (members.size() > want)
        throw std::invalid_argument("pi-system larger than the ambient rank");
    if (!extend_search(R, members, 0, want))
        throw std::logic_error("pi-system extension search exhausted: contradicts the extension guarantee");
    return PiSystem{&R, std::move(members)};
}

std::vector<RationalVector> canonical_members(const PiSystem& P) {
    std::vector<RationalVector> key = P.members;
    std::sort(key.begin(), key.end(), lex_less);
    return key;
}

}  // namespace pisys
