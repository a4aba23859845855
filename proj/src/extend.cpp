#include "pisys/extend.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace pisys {

namespace {

bool pi_compatible(const RootSystem& R, std::span<const RationalVector> members,
                   const RationalVector& candidate) {
    for (const auto& m : members) {
        if (m == candidate) return false;
        if (R.is_root(candidate - m) || R.is_root(m - candidate)) return false;
    }
    return true;
}

bool closures_equal(const RootSystem& R, std::span<const RationalVector> members) {
    SpanSolver span(members);
    for (const auto& r : R.roots()) {
        auto c = span.coords(r);
        if (!c) continue;
        bool integral = std::all_of(c->begin(), c->end(),
                                    [](const Rational& x) { return x.is_integer(); });
        if (!integral) return false;
    }
    return true;
}

// Backtracking completion of `members` to a rank(R)-sized pi-system, pruning
// any partial set whose rational closure already exceeds its integer closure.
// Sound because a partial set that extends to a basis is a subset of a basis,
// and subsets of bases have equal closures.
bool witness_search(const RootSystem& R, std::vector<RationalVector>& members,
                    std::size_t first_index, std::size_t want) {
    if (members.size() == want) return true;
    const auto& roots = R.roots();
    for (std::size_t idx = first_index; idx < roots.size(); ++idx) {
        const RationalVector& cand = roots[idx];
        if (!pi_compatible(R, members, cand)) continue;
        if (SpanSolver(members).in_span(cand)) continue;
        members.push_back(cand);
        if (closures_equal(R, members) && witness_search(R, members, idx + 1, want)) return true;
        members.pop_back();
    }
    return false;
}

}  // namespace

bool halfsum_applicable(const RootSystem& R, const ClassifiedShape& shape) {
    if (shape.components.size() != 1) return false;
    const TypeLabel& t = shape.components[0].type;
    if (t.family == Family::A && t.rank == 3 && R.label().family == Family::B) return true;
    if (t.family == Family::A && t.rank == 7 && R.label() == TypeLabel{Family::E, 8}) return true;
    return false;
}

std::optional<RationalVector> halfsum_obstruction(const RootSystem& R, const PiSystem& C) {
    ClassifiedShape shape = classify(diagram_of(C.members));
    if (!halfsum_applicable(R, shape))
        throw std::invalid_argument("half-sum test needs an A3 chain in a B-family system or an A7 chain in E8");

    const std::vector<int>& chain = shape.components[0].node_map;  // Bourbaki chain order
    static const std::vector<std::int64_t> coeff3 = {1, 2, 1};
    static const std::vector<std::int64_t> coeff7 = {1, 2, 3, 4, 3, 2, 1};
    const auto& coeff = chain.size() == 3 ? coeff3 : coeff7;

    RationalVector sum = RationalVector::zero(R.ambient_dim());
    for (std::size_t i = 0; i < chain.size(); ++i)
        sum = sum + Rational(coeff[i]) * C.members[chain[i]];
    RationalVector half = Rational(1, 2) * sum;
    if (R.is_root(half)) return half;
    return std::nullopt;
}

ExtensionReport can_extend(const RootSystem& R, const PiSystem& C) {
    ExtensionReport rep;
    rep.closure = closure_of(R, C);
    rep.extendable = rep.closure.closures_equal();
    rep.closure_type = classify(diagram_of(C.members));
    rep.span_type = classify(diagram_of(simple_basis_of(rep.closure.rational_roots)));
    rep.halfsum_checked = halfsum_applicable(R, rep.closure_type);
    if (rep.halfsum_checked) rep.halfsum = halfsum_obstruction(R, C);

    if (rep.extendable) {
        std::vector<RationalVector> witness = C.members;
        if (!witness_search(R, witness, 0, static_cast<std::size_t>(R.rank())))
            throw std::logic_error("witness search exhausted although the closure criterion holds");
        rep.witness_basis = std::move(witness);
        return rep;
    }

    // Prefer the half-sum root as the reported obstruction; it is always in
    // the rational closure and never in the integer closure.
    if (rep.halfsum) {
        rep.obstruction = rep.halfsum;
        return rep;
    }
    for (const auto& r : rep.closure.rational_roots) {
        if (!std::binary_search(rep.closure.integer_roots.begin(), rep.closure.integer_roots.end(),
                                r, lex_less)) {
            rep.obstruction = r;
            break;
        }
    }
    return rep;
}

TransformPath transformation_path(const PiSystem& start, TypeLabel target_type, int max_depth) {
    const RootSystem& R = *start.ambient;

    struct State {
        PiSystem system;
        std::vector<TransformStep> steps;
    };
    struct KeyLess {
        bool operator()(const std::vector<RationalVector>& a,
                        const std::vector<RationalVector>& b) const {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
        }
    };

    auto matches = [&](const PiSystem& P) {
        Diagram d = diagram_of(P.members);
        if (components(d).size() != 1) return false;
        return classify(d).single(target_type);
    };

    std::set<std::vector<RationalVector>, KeyLess> seen;
    std::deque<State> frontier;
    seen.insert(canonical_members(start));
    frontier.push_back({start, {}});

    TransformPath out;
    bool truncated = false;
    while (!frontier.empty()) {
        State st = std::move(frontier.front());
        frontier.pop_front();
        if (matches(st.system)) {
            out.status = TransformPath::Status::Found;
            out.steps = std::move(st.steps);
            return out;
        }
        bool at_bound = static_cast<int>(st.steps.size()) == max_depth;
        for (auto& mv : elementary_moves(R, st.system)) {
            auto key = canonical_members(mv.result);
            if (at_bound) {
                // Unvisited children past the bound mean the search was cut
                // off rather than exhausted.
                if (!seen.count(key)) truncated = true;
                continue;
            }
            if (!seen.insert(std::move(key)).second) continue;
            std::vector<TransformStep> steps = st.steps;
            steps.push_back({mv.component_nodes, mv.adjoined, mv.removed});
            frontier.push_back({std::move(mv.result), std::move(steps)});
        }
    }

    out.status = truncated ? TransformPath::Status::DepthExceeded : TransformPath::Status::ProvenAbsent;
    return out;
}

}  // namespace pisys
