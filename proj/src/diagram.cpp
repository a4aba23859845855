#include "pisys/diagram.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace pisys {

int Diagram::bond_multiplicity(int a, int b) const {
    const DiagramBond* bd = bond_between(a, b);
    return bd ? bd->multiplicity : 0;
}

const DiagramBond* Diagram::bond_between(int a, int b) const {
    for (const auto& bd : bonds)
        if ((bd.i == a && bd.j == b) || (bd.i == b && bd.j == a)) return &bd;
    return nullptr;
}

std::vector<std::vector<int>> Diagram::adjacency() const {
    std::vector<std::vector<int>> adj(nodes.size());
    for (const auto& bd : bonds) {
        adj[bd.i].push_back(bd.j);
        adj[bd.j].push_back(bd.i);
    }
    return adj;
}

namespace {

Diagram diagram_with_scale(std::span<const RationalVector> roots, const Rational& long_len2) {
    Diagram d;
    d.nodes.reserve(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        Rational l = dot(roots[i], roots[i]);
        d.nodes.push_back({static_cast<int>(i),
                           l < long_len2 ? LengthClass::Short : LengthClass::Long});
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            std::int64_t cij = cartan_int(roots[i], roots[j]);
            std::int64_t cji = cartan_int(roots[j], roots[i]);
            if (cij > 0 || cji > 0)
                throw std::invalid_argument(
                    "positive Cartan integer between entries " + std::to_string(i) + " and " +
                    std::to_string(j) + ": not a simple-system configuration");
            int mult = static_cast<int>(cij * cji);
            if (mult == 0) continue;
            if (mult > 3)
                throw std::invalid_argument("bond multiplicity above 3: inputs are not roots of one system");
            int arrow = -1;
            if (mult >= 2) {
                // Arrow points at the shorter root; |c(i,j)| = 2|(r_i,r_j)| / |r_j|^2
                // is the larger of the two exactly when r_j is the shorter root.
                arrow = (-cij > -cji) ? static_cast<int>(j) : static_cast<int>(i);
            }
            d.bonds.push_back({static_cast<int>(i), static_cast<int>(j), mult, arrow});
        }
    return d;
}

}  // namespace

Diagram diagram_of(std::span<const RationalVector> roots) {
    if (roots.empty()) return {};
    Rational longest = dot(roots[0], roots[0]);
    for (const auto& r : roots) {
        Rational l = dot(r, r);
        if (longest < l) longest = l;
    }
    return diagram_with_scale(roots, longest);
}

Diagram diagram_of(std::span<const RationalVector> roots, const RootSystem& ambient) {
    if (roots.empty()) return {};
    return diagram_with_scale(roots, ambient.long_len2());
}

std::vector<Diagram> components(const Diagram& d) {
    const std::size_t n = d.size();
    std::vector<int> comp(n, -1);
    auto adj = d.adjacency();
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(static_cast<std::size_t>(w));
                }
        }
        ++ncomp;
    }

    std::vector<Diagram> out(ncomp);
    std::vector<std::vector<int>> local(ncomp);  // old position -> local position
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        pos[i] = static_cast<int>(out[comp[i]].nodes.size());
        out[comp[i]].nodes.push_back(d.nodes[i]);
    }
    for (const auto& bd : d.bonds) {
        Diagram& target = out[comp[bd.i]];
        DiagramBond nb = bd;
        nb.i = pos[bd.i];
        nb.j = pos[bd.j];
        nb.arrow_to = bd.arrow_to == -1 ? -1 : pos[bd.arrow_to];
        target.bonds.push_back(nb);
    }
    return out;
}

std::string ClassifiedShape::str() const {
    if (components.empty()) return "-";
    std::vector<std::string> names;
    names.reserve(components.size());
    for (const auto& c : components) names.push_back(c.type.str());
    std::sort(names.begin(), names.end());
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += "+";
        out += names[i];
    }
    return out;
}

const Diagram& catalogue_diagram(TypeLabel t) {
    // Guarded: classification runs inside parallel sweeps. Entries are
    // never erased, so returned references stay valid.
    static std::mutex mutex;
    static std::map<TypeLabel, Diagram> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(t);
    if (it == cache.end()) {
        RootSystem rs = RootSystem::build(t);
        it = cache.emplace(t, diagram_of(rs.simple())).first;
    }
    return it->second;
}

namespace {

// Backtracking isomorphism search: assign sub nodes to distinct pattern
// nodes so that bond multiplicities and arrow directions agree. Marks are
// compared only when `use_marks` (subdiagram queries); classification relies
// on arrows, which already pin relative lengths inside a component.
bool find_embedding(const Diagram& sub, const Diagram& pattern, bool use_marks,
                    std::vector<int>& assign, std::vector<bool>& used, std::size_t k) {
    if (k == sub.size()) return true;
    for (std::size_t p = 0; p < pattern.size(); ++p) {
        if (used[p]) continue;
        if (use_marks && sub.nodes[k].mark != pattern.nodes[p].mark) continue;
        bool ok = true;
        for (std::size_t q = 0; q < k && ok; ++q) {
            const DiagramBond* sb = sub.bond_between(static_cast<int>(k), static_cast<int>(q));
            const DiagramBond* pb = pattern.bond_between(static_cast<int>(p), assign[q]);
            int sm = sb ? sb->multiplicity : 0;
            int pm = pb ? pb->multiplicity : 0;
            if (sm != pm) {
                ok = false;
            } else if (sm >= 2) {
                bool s_to_k = sb->arrow_to == static_cast<int>(k);
                bool p_to_p = pb->arrow_to == static_cast<int>(p);
                if (s_to_k != p_to_p) ok = false;
            }
        }
        if (!ok) continue;
        assign[k] = static_cast<int>(p);
        used[p] = true;
        if (find_embedding(sub, pattern, use_marks, assign, used, k + 1)) return true;
        used[p] = false;
    }
    return false;
}

// Exact isomorphism (same node count) onto the catalogue diagram of `t`,
// ignoring marks. Returns the Bourbaki position map on success.
std::optional<std::vector<int>> match_catalogue(const Diagram& comp, TypeLabel t) {
    const Diagram& cat = catalogue_diagram(t);
    if (cat.size() != comp.size()) return std::nullopt;
    std::vector<int> assign(comp.size(), -1);
    std::vector<bool> used(comp.size(), false);
    if (!find_embedding(comp, cat, /*use_marks=*/false, assign, used, 0)) return std::nullopt;
    // invert: node_map[bourbaki position] = original input index
    std::vector<int> node_map(comp.size());
    for (std::size_t k = 0; k < comp.size(); ++k)
        node_map[assign[k]] = comp.nodes[k].index;
    return node_map;
}

std::vector<TypeLabel> candidate_labels(int rank) {
    std::vector<TypeLabel> out;
    out.push_back({Family::A, rank});
    if (rank >= 2) out.push_back({Family::B, rank});
    if (rank >= 3) out.push_back({Family::C, rank});  // rank-2 double bonds normalize to B2
    if (rank >= 4) out.push_back({Family::D, rank});
    if (rank >= 6 && rank <= 8) out.push_back({Family::E, rank});
    if (rank == 4) out.push_back({Family::F, rank});
    if (rank == 2) out.push_back({Family::G, rank});
    return out;
}

}  // namespace

ClassifiedShape classify(const Diagram& d) {
    ClassifiedShape shape;
    for (const Diagram& comp : components(d)) {
        bool matched = false;
        for (TypeLabel t : candidate_labels(static_cast<int>(comp.size()))) {
            if (auto node_map = match_catalogue(comp, t)) {
                shape.components.push_back({t, std::move(*node_map)});
                matched = true;
                break;
            }
        }
        if (!matched)
            throw std::invalid_argument("unclassifiable diagram component: input was not a pi-system diagram");
    }
    return shape;
}

bool is_marked_subdiagram(const Diagram& sub, TypeLabel ambient) {
    const Diagram& amb = catalogue_diagram(ambient);
    if (sub.size() > amb.size()) return false;
    // Induced-subdiagram embedding == injective map preserving multiplicities
    // (including zero), arrows, and marks; find_embedding checks exactly that
    // when pattern is larger.
    std::vector<int> assign(sub.size(), -1);
    std::vector<bool> used(amb.size(), false);
    return find_embedding(sub, amb, /*use_marks=*/true, assign, used, 0);
}

bool is_marked_subdiagram(TypeLabel sub, TypeLabel ambient) {
    return is_marked_subdiagram(catalogue_diagram(sub), ambient);
}

std::string render_ascii(const Diagram& d) {
    if (d.nodes.empty()) return "(empty)";
    auto adj = d.adjacency();

    auto node_char = [&](int pos) { return d.nodes[pos].mark == LengthClass::Short ? '*' : 'o'; };

    // Chain: all degrees <= 2 and connected with size-1 or two endpoints.
    bool chain = components(d).size() == 1;
    for (const auto& nb : adj)
        if (nb.size() > 2) chain = false;

    std::ostringstream os;
    if (chain) {
        int start = 0;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (adj[i].size() <= 1) {
                start = static_cast<int>(i);
                break;
            }
        std::vector<bool> seen(d.size(), false);
        int cur = start;
        os << node_char(cur);
        seen[cur] = true;
        for (;;) {
            int next = -1;
            for (int w : adj[cur])
                if (!seen[w]) next = w;
            if (next == -1) break;
            const DiagramBond* bd = d.bond_between(cur, next);
            switch (bd->multiplicity) {
                case 1: os << "---"; break;
                case 2: os << (bd->arrow_to == next ? "=>=" : "=<="); break;
                default: os << (bd->arrow_to == next ? "#>#" : "#<#"); break;
            }
            os << node_char(next);
            seen[next] = true;
            cur = next;
        }
        return os.str();
    }

    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << "\n";
        os << i << ": " << node_char(static_cast<int>(i));
        for (int w : adj[i]) {
            const DiagramBond* bd = d.bond_between(static_cast<int>(i), w);
            os << "  -" << w;
            if (bd->multiplicity >= 2)
                os << "(x" << bd->multiplicity << (bd->arrow_to == w ? ",->)" : ",<-)");
        }
    }
    return os.str();
}

}  // namespace pisys
