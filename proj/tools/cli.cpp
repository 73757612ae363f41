#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "shodlab/census.hpp"
#include "shodlab/classify.hpp"
#include "shodlab/errors.hpp"
#include "shodlab/homology.hpp"
#include "shodlab/io.hpp"
#include "shodlab/permutation.hpp"

namespace shodlab::cli {

namespace {

using io::Json;

enum class Format { Text, Json };

/// Parsed command line. Exactly one command; at most one of the path input
/// flags (--area, --kupisch, --steps) or a file argument.
struct Invocation {
    std::string command;
    Format format = Format::Text;

    std::string area;
    std::string kupisch;
    std::string steps;
    std::string perm;
    std::string file;

    std::string method = "hom";
    std::string module;
    std::string kind = "proj";
    std::string nm;
    int max_semilength = 12;
    int threads = 0;
    bool timings = false;
};

/// Input error tagged with the flag it came from.
class UsageError : public InputError {
public:
    using InputError::InputError;
};

std::string error_kind(const InputError& e) {
    if (dynamic_cast<const InvalidAreaSequence*>(&e)) return "InvalidAreaSequence";
    if (dynamic_cast<const InvalidStepWord*>(&e)) return "InvalidStepWord";
    if (dynamic_cast<const NoSuchModule*>(&e)) return "NoSuchModule";
    if (dynamic_cast<const InvalidPermutation*>(&e)) return "InvalidPermutation";
    if (dynamic_cast<const Not132Avoiding*>(&e)) return "Not132Avoiding";
    if (dynamic_cast<const CapExceeded*>(&e)) return "CapExceeded";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    return "InputError";
}

template <typename Fn>
auto for_flag(const std::string& flag, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const UsageError&) {
        throw;
    } catch (const InputError& e) {
        throw UsageError(flag + ": " + error_kind(e) + ": " + e.what());
    }
}

int enumeration_cap() {
    const char* value = std::getenv(kCapVariable);
    if (!value || !*value) return kDefaultMaxSemilength;
    return for_flag(kCapVariable, [&] {
        const std::vector<int> parsed = io::parse_int_list(value);
        if (parsed.size() != 1 || parsed[0] < 0)
            throw ParseError("expected a non-negative integer, got '" + std::string(value) + "'");
        return parsed[0];
    });
}

int worker_count(int requested) {
    if (requested > 0) return requested;
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct NmBounds {
    int max_pdim;
    int max_idim;
    bool strong;
};

NmBounds parse_nm(const std::string& text) {
    return for_flag("--nm", [&] {
        auto parts = text;
        bool strong = false;
        const auto comma = parts.rfind(',');
        if (comma != std::string::npos && parts.substr(comma + 1) == "strong") {
            strong = true;
            parts.erase(comma);
        }
        const std::vector<int> bounds = io::parse_int_list(parts);
        if (bounds.size() != 2 || bounds[0] < 0 || bounds[1] < 0)
            throw ParseError("expected 'n,m' or 'n,m,strong' with non-negative n, m, got '" + text + "'");
        return NmBounds{bounds[0], bounds[1], strong};
    });
}

std::vector<std::string> read_lines(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw UsageError(file + ": cannot open input file");
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        lines.push_back(line);
    }
    return lines;
}

// A file line is plain text or a JSON object with "area", "kupisch", "steps"
// or "perm".
std::optional<Json> line_object(const std::string& line) {
    const auto first = line.find_first_not_of(" \t");
    if (line[first] != '{') return std::nullopt;
    try {
        return Json::parse(line);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed JSON line: ") + e.what());
    }
}

DyckPath path_from_line(const std::string& line) {
    const auto object = line_object(line);
    if (!object) return io::parse_path(line);
    for (const char* key : {"area", "kupisch"}) {
        if (object->contains(key)) {
            if (!(*object)[key].is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
            const auto area = (*object)[key].get<std::vector<int>>();
            return DyckPath::from_area_sequence(area);
        }
    }
    if (object->contains("steps") && (*object)["steps"].is_string())
        return DyckPath::from_step_word((*object)["steps"].get<std::string>());
    throw ParseError("JSON line needs an \"area\", \"kupisch\" or \"steps\" key");
}

Permutation perm_from_line(const std::string& line) {
    const auto object = line_object(line);
    if (!object) return io::parse_permutation(line);
    if (object->contains("perm") && (*object)["perm"].is_array())
        return Permutation((*object)["perm"].get<std::vector<int>>());
    throw ParseError("JSON line needs a \"perm\" array");
}

std::vector<DyckPath> input_paths(const Invocation& inv) {
    if (!inv.area.empty()) return {for_flag("--area", [&] { return io::parse_area(inv.area); })};
    if (!inv.kupisch.empty()) return {for_flag("--kupisch", [&] { return io::parse_area(inv.kupisch); })};
    if (!inv.steps.empty()) return {for_flag("--steps", [&] { return io::parse_steps(inv.steps); })};
    if (!inv.file.empty()) {
        std::vector<DyckPath> paths;
        int number = 0;
        for (const auto& line : read_lines(inv.file)) {
            ++number;
            paths.push_back(for_flag(inv.file + ":" + std::to_string(number), [&] { return path_from_line(line); }));
        }
        return paths;
    }
    throw UsageError(inv.command + ": one of --area, --kupisch, --steps or an input file is required");
}

std::vector<Permutation> input_perms(const Invocation& inv) {
    if (!inv.perm.empty()) return {for_flag("--perm", [&] { return io::parse_permutation(inv.perm); })};
    if (!inv.file.empty()) {
        std::vector<Permutation> perms;
        int number = 0;
        for (const auto& line : read_lines(inv.file)) {
            ++number;
            perms.push_back(for_flag(inv.file + ":" + std::to_string(number), [&] { return perm_from_line(line); }));
        }
        return perms;
    }
    throw UsageError("phi: --perm or an input file is required");
}

// Text results for several inputs are separated by a blank line; JSON
// results are one object per line.
class Emitter {
public:
    Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

    void emit(const Json& json, const std::string& text) {
        if (format_ == Format::Json) {
            out_ << json.dump() << '\n';
        } else {
            if (count_++) out_ << '\n';
            out_ << text;
        }
    }

private:
    std::ostream& out_;
    Format format_;
    int count_ = 0;
};

Json path_json(const DyckPath& path) {
    Json out;
    out["area"] = std::vector<int>(path.area().begin(), path.area().end());
    out["steps"] = path.steps();
    return out;
}

int run_classify(const Invocation& inv, std::ostream& out) {
    if (inv.method != "hom" && inv.method != "geo" && inv.method != "both")
        throw UsageError("--method: expected hom, geo or both, got '" + inv.method + "'");
    Emitter emitter(out, inv.format);
    int status = kOk;
    for (const DyckPath& path : input_paths(inv)) {
        if (inv.method == "geo") {
            const Verdict v = classify_geometric(path);
            emitter.emit(io::verdict_json(path, v), io::verdict_text(path, v));
            continue;
        }
        const Verdict hom = classify_homological(path);
        Json json = io::verdict_json(path, hom);
        std::vector<std::pair<std::string, std::string>> extra;
        if (inv.method == "both") {
            const Verdict geo = classify_geometric(path);
            const bool agree = geo.cls == hom.cls;
            json["methods_agree"] = agree;
            extra.emplace_back("geometric", to_string(geo.cls));
            extra.emplace_back("methods", agree ? "agree" : "DISAGREE");
            if (!agree) status = kVerificationFailed;
        }
        emitter.emit(json, io::verdict_text(path, hom, extra));
    }
    return status;
}

int run_resolve(const Invocation& inv, std::ostream& out) {
    if (inv.module.empty()) throw UsageError("--module is required");
    const ModulePoint point = for_flag("--module", [&] { return io::parse_module_point(inv.module); });
    const ResolutionKind kind = for_flag("--kind", [&] { return io::parse_kind(inv.kind); });
    Emitter emitter(out, inv.format);
    for (const DyckPath& path : input_paths(inv)) {
        const Resolution res = for_flag("--module", [&] { return resolution(path, point, kind); });
        emitter.emit(io::to_json(res), io::resolution_table(res));
    }
    return kOk;
}

int run_phi(const Invocation& inv, std::ostream& out) {
    Emitter emitter(out, inv.format);
    for (const Permutation& pi : input_perms(inv)) {
        const DyckPath path = for_flag("--perm", [&] { return phi(pi); });
        Json json;
        json["perm"] = std::vector<int>(pi.values().begin(), pi.values().end());
        json.update(path_json(path));
        emitter.emit(json, "area   " + io::format_area(path.area()) + "\nsteps  " + path.steps() + "\n");
    }
    return kOk;
}

int run_phi_inverse(const Invocation& inv, std::ostream& out) {
    Emitter emitter(out, inv.format);
    for (const DyckPath& path : input_paths(inv)) {
        const Permutation pi = for_flag("phi-inv", [&] { return phi_inverse(path); });
        Json json = path_json(path);
        json["perm"] = std::vector<int>(pi.values().begin(), pi.values().end());
        emitter.emit(json, io::format_permutation(pi) + "\n");
    }
    return kOk;
}

int run_nm_shod(const Invocation& inv, std::ostream& out) {
    if (inv.nm.empty()) throw UsageError("--nm is required");
    const NmBounds limits = parse_nm(inv.nm);
    Emitter emitter(out, inv.format);
    for (const DyckPath& path : input_paths(inv)) {
        const bool result = nm_shod(path, limits.max_pdim, limits.max_idim, limits.strong);
        Json json;
        json["area"] = std::vector<int>(path.area().begin(), path.area().end());
        json["n"] = limits.max_pdim;
        json["m"] = limits.max_idim;
        json["strong"] = limits.strong;
        json["nm_shod"] = result;
        const std::string label = std::string(limits.strong ? "strong " : "") + "(" +
                                  std::to_string(limits.max_pdim) + "," + std::to_string(limits.max_idim) +
                                  ")-shod";
        emitter.emit(json, label + "  " + (result ? "yes" : "no") + "\n");
    }
    return kOk;
}

int run_census(const Invocation& inv, std::ostream& out) {
    const CensusOptions options{worker_count(inv.threads), enumeration_cap()};
    const auto rows = for_flag("--max-semilength", [&] { return census_rows(inv.max_semilength, options); });
    std::vector<NmCount> nm;
    std::string nm_label = "nm";
    if (!inv.nm.empty()) {
        const NmBounds limits = parse_nm(inv.nm);
        nm = nm_census(limits.max_pdim, limits.max_idim, limits.strong, inv.max_semilength, options);
        nm_label = std::string(limits.strong ? "strong_" : "") + "nm_" + std::to_string(limits.max_pdim) + "_" +
                   std::to_string(limits.max_idim);
    }
    bool agree = true;
    if (inv.format == Format::Json) {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            Json json = io::to_json(rows[k]);
            if (!nm.empty()) json["nm_count"] = nm[k].count;
            out << json.dump() << '\n';
        }
    } else {
        out << io::census_table(rows, nm, nm_label);
    }
    for (const auto& row : rows) agree = agree && row.agree;
    return agree ? kOk : kVerificationFailed;
}

int run_verify(const Invocation& inv, std::ostream& out) {
    VerifyOptions options;
    options.threads = worker_count(inv.threads);
    options.cap = enumeration_cap();
    const VerifyReport report =
        for_flag("--max-semilength", [&] { return verify_theorems(inv.max_semilength, options); });
    if (inv.format == Format::Json)
        out << io::to_json(report, inv.timings).dump() << '\n';
    else
        out << io::report_text(report, inv.timings);
    return report.verified() ? kOk : kVerificationFailed;
}

void add_path_input(CLI::App* cmd, Invocation& inv) {
    auto* area = cmd->add_option("--area", inv.area, "Area sequence, e.g. 4,3,3,2,1");
    auto* kupisch = cmd->add_option("--kupisch", inv.kupisch, "Kupisch series (alias of --area)");
    auto* steps = cmd->add_option("--steps", inv.steps, "Step word over U/D, e.g. UUDD");
    auto* file = cmd->add_option("file", inv.file, "Input file, one path per line");
    area->excludes(kupisch, steps, file);
    kupisch->excludes(steps, file);
    steps->excludes(file);
}

void add_format(CLI::App* cmd, Invocation& inv) {
    cmd->add_option("--format", inv.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::Text},
                                                                         {"json", Format::Json}}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    CLI::App app{"Shod Nakayama algebras as Dyck paths", "shodlab"};
    app.require_subcommand(1, 1);

    auto* classify = app.add_subcommand("classify", "Classify a path as tilted, strict shod or not shod");
    add_path_input(classify, inv);
    classify->add_option("--method", inv.method, "hom, geo or both")->capture_default_str();
    add_format(classify, inv);

    auto* resolve = app.add_subcommand("resolve", "Minimal projective or injective resolution of a module");
    add_path_input(resolve, inv);
    resolve->add_option("--module", inv.module, "Module point i,j")->required();
    resolve->add_option("--kind", inv.kind, "proj or inj")->capture_default_str();
    add_format(resolve, inv);

    auto* phi_cmd = app.add_subcommand("phi", "Krattenthaler bijection: 132-avoiding permutation to path");
    auto* perm = phi_cmd->add_option("--perm", inv.perm, "Permutation, e.g. \"4 2 3 5 1\"");
    auto* perm_file = phi_cmd->add_option("file", inv.file, "Input file, one permutation per line");
    perm->excludes(perm_file);
    add_format(phi_cmd, inv);

    auto* phi_inv = app.add_subcommand("phi-inv", "Inverse Krattenthaler bijection: path to permutation");
    add_path_input(phi_inv, inv);
    add_format(phi_inv, inv);

    auto* nm_cmd = app.add_subcommand("nm-shod", "Test the (n,m)-shod condition");
    add_path_input(nm_cmd, inv);
    nm_cmd->add_option("--nm", inv.nm, "n,m or n,m,strong")->required();
    add_format(nm_cmd, inv);

    auto* census = app.add_subcommand("census", "Exhaustive class counts against the closed formulas");
    census->add_option("--max-semilength", inv.max_semilength, "Largest semilength")->capture_default_str();
    census->add_option("--nm", inv.nm, "Also count (n,m)-shod paths: n,m or n,m,strong");
    census->add_option("--threads", inv.threads, "Worker threads (0 = hardware)")->capture_default_str();
    add_format(census, inv);

    auto* verify = app.add_subcommand("verify", "Exhaustively verify the classification theorems");
    verify->add_option("--max-semilength", inv.max_semilength, "Largest semilength")->capture_default_str();
    verify->add_option("--threads", inv.threads, "Worker threads (0 = hardware)")->capture_default_str();
    verify->add_flag("--timings", inv.timings, "Include wall-clock timings");
    add_format(verify, inv);

    std::vector<const char*> argv{"shodlab"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    inv.command = app.get_subcommands().front()->get_name();
    try {
        if (inv.command == "classify") return run_classify(inv, out);
        if (inv.command == "resolve") return run_resolve(inv, out);
        if (inv.command == "phi") return run_phi(inv, out);
        if (inv.command == "phi-inv") return run_phi_inverse(inv, out);
        if (inv.command == "nm-shod") return run_nm_shod(inv, out);
        if (inv.command == "census") return run_census(inv, out);
        if (inv.command == "verify") return run_verify(inv, out);
        err << "error: unknown command " << inv.command << '\n';
        return kInvalidInput;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const InputError& e) {
        err << "error: " << error_kind(e) << ": " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace shodlab::cli
