// pisys command line front end.
//
// Exit codes: 0 = success / positive verdict, 1 = valid input with a
// negative mathematical verdict (not a pi-system, not extendable, no path,
// mismatches found), 2 = input error. Scripts branch on mathematical truth
// without parsing output.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pisys/json_io.hpp"
#include "pisys/harness.hpp"

using namespace pisys;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

void emit(const OutputOptions& opt, const json& j, const std::string& text) {
    std::string body = opt.format == "json" ? canonical_dump(j) : text + "\n";
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + opt.out_path);
        out << body;
    } else {
        std::cout << body;
    }
}

// Input arguments are inline JSON when they start with '{' or '[', file
// paths otherwise.
json load_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
        std::ifstream in(arg, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot read input file: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
    return j;
}

struct ParsedInput {
    RootSystem system;
    std::vector<RationalVector> roots;
};

ParsedInput parse_pisystem_input(const std::string& arg) {
    json j = load_json_arg(arg);
    if (!j.is_object() || !j.contains("ambient") || !j.contains("roots"))
        throw std::invalid_argument("expected {\"ambient\": \"<TYPE>\", \"roots\": [[...], ...]}");
    ParsedInput in{RootSystem::build(parse_type_label(j["ambient"].get<std::string>())),
                   vectors_from_json(j["roots"])};
    for (const auto& r : in.roots)
        if (r.dim() != in.system.ambient_dim())
            throw std::invalid_argument("root " + r.str() + " has dimension " +
                                        std::to_string(r.dim()) + ", ambient needs " +
                                        std::to_string(in.system.ambient_dim()));
    return in;
}

std::string describe_shape(const ClassifiedShape& s) { return s.str(); }

int run_build(const std::string& type_arg, const OutputOptions& opt) {
    RootSystem rs = RootSystem::build(parse_type_label(type_arg));
    std::ostringstream text;
    text << rs.label().str() << ": " << rs.roots().size() << " roots, rank " << rs.rank()
         << ", ambient dimension " << rs.ambient_dim() << "\n";
    text << "diagram: " << render_ascii(diagram_of(rs.simple())) << "\n";
    text << "simple basis:";
    for (const auto& s : rs.simple()) text << "\n  " << s.str();
    emit(opt, root_system_to_json(rs), text.str());
    return kExitOk;
}

int run_check(const std::string& input, const OutputOptions& opt) {
    ParsedInput in = parse_pisystem_input(input);
    PiCheckResult res = check_pi_system(in.system, in.roots);
    json j = check_result_to_json(res);
    j["ambient"] = in.system.label().str();
    std::string text = res.ok() ? "pi-system in " + in.system.label().str()
                                : "not a pi-system: " + res.describe();
    emit(opt, j, text);
    return res.ok() ? kExitOk : kExitNegative;
}

// Commands that need a valid pi-system report an axiom failure as a negative
// verdict (exit 1) with the witness on stdout, distinct from malformed input.
bool reject_non_pisystem(const ParsedInput& in, const PiCheckResult& res, const OutputOptions& opt) {
    if (res.ok()) return false;
    json j = check_result_to_json(res);
    j["ambient"] = in.system.label().str();
    emit(opt, j, "not a pi-system: " + res.describe());
    return true;
}

int run_closure(const std::string& input, const OutputOptions& opt) {
    ParsedInput in = parse_pisystem_input(input);
    PiCheckResult res = check_pi_system(in.system, in.roots);
    if (reject_non_pisystem(in, res, opt)) return kExitNegative;
    PiSystem p{&in.system, in.roots};
    ClosureResult c = closure_of(in.system, p);
    std::ostringstream text;
    text << "integer closure [C]: " << c.integer_roots.size() << " roots\n"
         << "rational closure R': " << c.rational_roots.size() << " roots\n"
         << "span rank: " << c.span_rank;
    emit(opt, closure_to_json(c), text.str());
    return kExitOk;
}

int run_classify(const std::string& input, const OutputOptions& opt) {
    json j = load_json_arg(input);
    std::vector<RationalVector> roots;
    std::optional<RootSystem> ambient;
    if (j.is_array()) {
        roots = vectors_from_json(j);
    } else if (j.is_object() && j.contains("roots")) {
        roots = vectors_from_json(j["roots"]);
        if (j.contains("ambient"))
            ambient = RootSystem::build(parse_type_label(j["ambient"].get<std::string>()));
    } else {
        throw std::invalid_argument("expected a vector array or {\"roots\": [...]}");
    }
    if (ambient)
        for (const auto& r : roots)
            if (!ambient->is_root(r))
                throw std::invalid_argument(r.str() + " is not a root of " + ambient->label().str());
    for (const auto& r : roots)
        if (r.dim() != roots.front().dim())
            throw std::invalid_argument("vectors have mixed dimensions");

    // Well-formed vectors that fail to form a simple-system diagram are a
    // negative verdict, not an input error.
    try {
        Diagram d = ambient ? diagram_of(roots, *ambient) : diagram_of(roots);
        ClassifiedShape shape = classify(d);
        json out{{"shape", shape_to_json(shape)}, {"diagram", diagram_to_json(d)}};
        std::string text = "type: " + describe_shape(shape) + "\n" + render_ascii(d);
        emit(opt, out, text);
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        emit(opt, json{{"classifiable", false}, {"reason", e.what()}},
             std::string("not classifiable: ") + e.what());
        return kExitNegative;
    }
}

int run_extend(const std::string& input, const OutputOptions& opt) {
    ParsedInput in = parse_pisystem_input(input);
    PiCheckResult res = check_pi_system(in.system, in.roots);
    if (reject_non_pisystem(in, res, opt)) return kExitNegative;
    PiSystem p{&in.system, in.roots};
    ExtensionReport rep = can_extend(in.system, p);
    std::ostringstream text;
    text << (rep.extendable ? "extendable" : "not extendable") << " in "
         << in.system.label().str() << "\n"
         << "[C] = " << describe_shape(rep.closure_type) << " (" << rep.closure.integer_roots.size()
         << " roots), R' = " << describe_shape(rep.span_type) << " ("
         << rep.closure.rational_roots.size() << " roots)";
    if (rep.witness_basis) {
        text << "\nwitness basis:";
        for (const auto& w : *rep.witness_basis) text << "\n  " << w.str();
    }
    if (rep.obstruction) text << "\nobstruction: " << rep.obstruction->str();
    emit(opt, extension_report_to_json(rep), text.str());
    return rep.extendable ? kExitOk : kExitNegative;
}

int run_transform(const std::string& input, const std::string& target, int max_depth,
                  const OutputOptions& opt) {
    ParsedInput in = parse_pisystem_input(input);
    TypeLabel target_label = parse_type_label(target);
    PiCheckResult res = check_pi_system(in.system, in.roots);
    if (reject_non_pisystem(in, res, opt)) return kExitNegative;
    PiSystem p{&in.system, in.roots};
    TransformPath path = transformation_path(p, target_label, max_depth);
    std::ostringstream text;
    switch (path.status) {
        case TransformPath::Status::Found:
            text << path.steps.size() << " elementary transformation(s)";
            for (const auto& s : path.steps)
                text << "\n  adjoin " << s.adjoined.str() << ", remove " << s.removed.str();
            break;
        case TransformPath::Status::ProvenAbsent:
            text << "no transformation sequence exists (search space exhausted)";
            break;
        case TransformPath::Status::DepthExceeded:
            text << "no sequence within depth " << max_depth << " (bound exceeded)";
            break;
    }
    emit(opt, transform_path_to_json(path), text.str());
    return path.found() ? kExitOk : kExitNegative;
}

int run_scan_lemma(int max_rank, int max_depth, const OutputOptions& opt) {
    LemmaTable table = scan_elementary(max_rank, max_depth);
    std::ostringstream text;
    text << "elementary-transformation pairs up to rank " << max_rank << ", depth " << max_depth
         << ":";
    for (const auto& e : table.entries)
        text << "\n  " << e.subsystem_type.str() << " in " << e.ambient_type.str()
             << "  (min steps " << e.min_steps << ")";
    emit(opt, lemma_table_to_json(table), text.str());
    return kExitOk;
}

int run_verify(const std::string& ambient, const std::string& target, bool exhaustive,
               std::uint64_t samples, std::uint64_t seed, int jobs, const OutputOptions& opt) {
    RootSystem rs = RootSystem::build(parse_type_label(ambient));
    EnumerationMode mode =
        exhaustive ? EnumerationMode::make_exhaustive() : EnumerationMode::sampled(samples, seed);
    VerifyOptions vopt;
    vopt.threads = jobs;
    VerifyReport rep = verify_theorem(rs, parse_type_label(target), mode, vopt);
    std::ostringstream text;
    text << "checked " << rep.total_checked << " pi-systems of type " << rep.target_type.str()
         << " in " << rep.ambient.str() << "\n"
         << "extendable: " << rep.extendable_count << ", failing: " << rep.failing_count << "\n"
         << "criterion mismatches: " << rep.criterion_mismatches;
    emit(opt, verify_report_to_json(rep), text.str());
    return rep.criterion_mismatches == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact root system and pi-system toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    OutputOptions opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", opt.out_path, "Write output to a file instead of stdout");

    std::string type_arg, input_arg, target_arg, ambient_arg;
    int max_depth = 4, scan_rank = 8, scan_depth = 2, jobs = 0;
    std::uint64_t samples = 1000, seed = 42;
    bool exhaustive = false;

    auto* build = app.add_subcommand("build", "Construct a root system");
    build->add_option("type", type_arg, "Type label, e.g. B3")->required();

    auto* check = app.add_subcommand("check", "Check the pi-system axioms");
    check->add_option("pisystem", input_arg, "Inline JSON or a file path")->required();

    auto* closure = app.add_subcommand("closure", "Integer and rational closures");
    closure->add_option("pisystem", input_arg, "Inline JSON or a file path")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Classify a root list's diagram");
    classify_cmd->add_option("roots", input_arg, "Inline JSON or a file path")->required();

    auto* extend = app.add_subcommand("extend", "Decide extendability to a basis");
    extend->add_option("pisystem", input_arg, "Inline JSON or a file path")->required();

    auto* transform = app.add_subcommand("transform", "Find an elementary-transformation path");
    transform->add_option("pisystem", input_arg, "Inline JSON or a file path")->required();
    transform->add_option("--target", target_arg, "Target type label")->required();
    transform->add_option("--max-depth", max_depth, "Search depth bound")->check(CLI::PositiveNumber);

    auto* scan = app.add_subcommand("scan-lemma", "Scan elementary-transformation pairs");
    scan->add_option("--max-rank", scan_rank)->check(CLI::Range(2, 8));
    scan->add_option("--max-depth", scan_depth)->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Sweep extendability over enumerated pi-systems");
    verify->add_option("ambient", ambient_arg, "Ambient type label")->required();
    verify->add_option("--target", target_arg, "Target type label")->required();
    verify->add_flag("--exhaustive", exhaustive, "Enumerate every ordered pi-system");
    verify->add_option("--samples", samples, "Sample count (seeded mode)");
    verify->add_option("--seed", seed, "PRNG seed (seeded mode)");
    verify->add_option("--jobs", jobs, "Worker threads; 1 forces the serial path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (build->parsed()) return run_build(type_arg, opt);
        if (check->parsed()) return run_check(input_arg, opt);
        if (closure->parsed()) return run_closure(input_arg, opt);
        if (classify_cmd->parsed()) return run_classify(input_arg, opt);
        if (extend->parsed()) return run_extend(input_arg, opt);
        if (transform->parsed()) return run_transform(input_arg, target_arg, max_depth, opt);
        if (scan->parsed()) return run_scan_lemma(scan_rank, scan_depth, opt);
        if (verify->parsed())
            return run_verify(ambient_arg, target_arg, exhaustive, samples, seed, jobs, opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
