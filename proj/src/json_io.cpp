#include "pisys/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace pisys {

json rational_to_json(const Rational& r) {
    if (r.is_integer()) return r.num;
    return r.str();
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("coordinate must be an integer or a \"p/q\" string");
}

json vector_to_json(const RationalVector& v) {
    json arr = json::array();
    for (const auto& c : v.coords) arr.push_back(rational_to_json(c));
    return arr;
}

RationalVector vector_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector must be a JSON array");
    RationalVector v;
    v.coords.reserve(j.size());
    for (const auto& c : j) v.coords.push_back(rational_from_json(c));
    return v;
}

json vectors_to_json(std::span<const RationalVector> vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(vector_to_json(v));
    return arr;
}

std::vector<RationalVector> vectors_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of vectors");
    std::vector<RationalVector> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(vector_from_json(v));
    return out;
}

json root_system_to_json(const RootSystem& rs) {
    return json{{"label", rs.label().str()},
                {"ambient_dim", rs.ambient_dim()},
                {"rank", rs.rank()},
                {"simple", vectors_to_json(rs.simple())},
                {"roots", vectors_to_json(rs.roots())}};
}

json diagram_to_json(const Diagram& d) {
    json nodes = json::array();
    for (const auto& n : d.nodes)
        nodes.push_back(json{{"index", n.index},
                             {"mark", n.mark == LengthClass::Short ? "short" : "long"}});
    json bonds = json::array();
    for (const auto& b : d.bonds) {
        json jb{{"i", b.i}, {"j", b.j}, {"multiplicity", b.multiplicity}};
        if (b.arrow_to >= 0) jb["arrow_to"] = b.arrow_to;
        bonds.push_back(jb);
    }
    return json{{"nodes", nodes}, {"bonds", bonds}};
}

json shape_to_json(const ClassifiedShape& s) {
    json comps = json::array();
    for (const auto& c : s.components)
        comps.push_back(json{{"type", c.type.str()}, {"node_map", c.node_map}});
    return json{{"components", comps}, {"name", s.str()}};
}

json pi_system_to_json(const PiSystem& p) {
    return json{{"ambient", p.ambient->label().str()}, {"roots", vectors_to_json(p.members)}};
}

json closure_to_json(const ClosureResult& c) {
    return json{{"integer_roots", vectors_to_json(c.integer_roots)},
                {"rational_roots", vectors_to_json(c.rational_roots)},
                {"span_rank", c.span_rank}};
}

json check_result_to_json(const PiCheckResult& r) {
    json j{{"ok", r.ok()}};
    switch (r.kind) {
        case PiCheckResult::Kind::Ok:
            j["verdict"] = "pi-system";
            break;
        case PiCheckResult::Kind::NotARoot:
            j["verdict"] = "not-a-root";
            j["offender"] = vector_to_json(*r.offender);
            j["offender_index"] = r.offender_index;
            break;
        case PiCheckResult::Kind::Dependent: {
            j["verdict"] = "dependent";
            json cert = json::array();
            for (const auto& c : r.dependency) cert.push_back(rational_to_json(c));
            j["dependency"] = cert;
            break;
        }
        case PiCheckResult::Kind::DifferenceIsRoot:
            j["verdict"] = "difference-is-root";
            j["witness"] = json::array({vector_to_json(*r.witness_a), vector_to_json(*r.witness_b)});
            j["difference"] = vector_to_json(*r.difference);
            break;
    }
    return j;
}

json extension_report_to_json(const ExtensionReport& rep) {
    json j{{"extendable", rep.extendable},
           {"closure", closure_to_json(rep.closure)},
           {"closure_type", rep.closure_type.str()},
           {"span_type", rep.span_type.str()},
           {"halfsum_checked", rep.halfsum_checked}};
    if (rep.witness_basis) j["witness_basis"] = vectors_to_json(*rep.witness_basis);
    if (rep.obstruction) j["obstruction"] = vector_to_json(*rep.obstruction);
    if (rep.halfsum) j["halfsum"] = vector_to_json(*rep.halfsum);
    return j;
}

json transform_path_to_json(const TransformPath& path) {
    json j;
    switch (path.status) {
        case TransformPath::Status::Found: j["status"] = "found"; break;
        case TransformPath::Status::ProvenAbsent: j["status"] = "absent"; break;
        case TransformPath::Status::DepthExceeded: j["status"] = "depth-exceeded"; break;
    }
    if (path.found()) {
        json steps = json::array();
        for (const auto& s : path.steps)
            steps.push_back(json{{"component_nodes", s.component_nodes},
                                 {"adjoined", vector_to_json(s.adjoined)},
                                 {"removed", vector_to_json(s.removed)}});
        j["steps"] = steps;
    }
    return j;
}

json lemma_table_to_json(const LemmaTable& table) {
    json entries = json::array();
    for (const auto& e : table.entries)
        entries.push_back(json{{"subsystem_type", e.subsystem_type.str()},
                               {"ambient_type", e.ambient_type.str()},
                               {"min_steps", e.min_steps}});
    return json{{"max_rank", table.max_rank}, {"max_depth", table.max_depth}, {"entries", entries}};
}

json verify_report_to_json(const VerifyReport& report) {
    json mode;
    if (report.mode.exhaustive) {
        mode = json{{"kind", "exhaustive"}};
    } else {
        mode = json{{"kind", "sampled"},
                    {"count", report.mode.sample.count},
                    {"seed", report.mode.sample.seed},
                    {"prng", "splitmix64"},
                    {"reflections_per_sample", report.mode.sample.reflections_per_sample}};
    }
    json exemplars = json::array();
    for (const auto& p : report.failing_exemplars) exemplars.push_back(pi_system_to_json(p));
    return json{{"ambient", report.ambient.str()},
                {"target_type", report.target_type.str()},
                {"mode", mode},
                {"total_checked", report.total_checked},
                {"extendable_count", report.extendable_count},
                {"failing_count", report.failing_count},
                {"criterion_mismatches", report.criterion_mismatches},
                {"failing_exemplars", exemplars},
                {"failing_span_type_counts", report.failing_span_type_counts}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << canonical_dump(j);
}

}  // namespace pisys
