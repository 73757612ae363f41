#include "shodlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "shodlab/errors.hpp"

namespace shodlab::io {

namespace {

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

std::string_view trim(std::string_view text) {
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    return text;
}

int parse_int(std::string_view token, std::string_view what) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError("invalid " + std::string(what) + " entry '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> tokens(std::string_view text, std::string_view what) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    bool comma_pending = false;
    while (pos < text.size()) {
        if (is_space(text[pos])) {
            ++pos;
            continue;
        }
        if (text[pos] == ',') {
            if (comma_pending || out.empty())
                throw ParseError("empty entry in " + std::string(what) + " '" + std::string(text) + "'");
            comma_pending = true;
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && text[end] != ',' && !is_space(text[end])) ++end;
        out.push_back(text.substr(pos, end - pos));
        comma_pending = false;
        pos = end;
    }
    if (comma_pending)
        throw ParseError("trailing comma in " + std::string(what) + " '" + std::string(text) + "'");
    return out;
}

std::vector<int> digits(std::string_view word, std::string_view what) {
    std::vector<int> out;
    for (char ch : word) {
        if (ch < '0' || ch > '9')
            throw ParseError("invalid " + std::string(what) + " '" + std::string(word) + "'");
        out.push_back(ch - '0');
    }
    return out;
}

Json point_json(ModulePoint p) { return Json::array({p.column, p.length}); }

std::string pad(std::string_view text, std::size_t width) {
    std::string out(text);
    out.resize(std::max(width, text.size()), ' ');
    return out;
}

// Left-aligned columns separated by two spaces, no trailing whitespace.
std::string align(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += c + 1 == row.size() ? row[c] : pad(row[c], widths[c]);
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::string join_ints(std::span<const int> values, std::string_view separator) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += separator;
        out += std::to_string(values[k]);
    }
    return out;
}

std::string seconds_text(double seconds) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3f", seconds);
    return buffer;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    for (std::string_view token : tokens(text, "integer list")) out.push_back(parse_int(token, "integer"));
    return out;
}

DyckPath parse_area(std::string_view text) {
    const std::vector<int> area = parse_int_list(text);
    return DyckPath::from_area_sequence(area);
}

DyckPath parse_steps(std::string_view text) { return DyckPath::from_step_word(trim(text)); }

DyckPath parse_path(std::string_view text) {
    const std::string_view body = trim(text);
    const bool word = !body.empty() && std::all_of(body.begin(), body.end(), [](char ch) {
        return ch == 'U' || ch == 'D';
    });
    return word ? parse_steps(body) : parse_area(body);
}

ModulePoint parse_module_point(std::string_view text) {
    const auto parts = tokens(text, "module point");
    if (parts.size() != 2)
        throw ParseError("module point must be 'i,j', got '" + std::string(text) + "'");
    return {parse_int(parts[0], "module column"), parse_int(parts[1], "module length")};
}

ResolutionKind parse_kind(std::string_view text) {
    const std::string_view kind = trim(text);
    if (kind == "proj" || kind == "projective") return ResolutionKind::Projective;
    if (kind == "inj" || kind == "injective") return ResolutionKind::Injective;
    throw ParseError("resolution kind must be proj or inj, got '" + std::string(text) + "'");
}

Permutation parse_permutation(std::string_view text) {
    const auto parts = tokens(text, "permutation");
    if (parts.empty()) throw ParseError("empty permutation");
    if (parts.size() == 1 && parts[0].size() > 1) return Permutation(digits(parts[0], "permutation"));
    std::vector<int> values;
    for (std::string_view token : parts) values.push_back(parse_int(token, "permutation"));
    return Permutation(std::move(values));
}

std::vector<Permutation> parse_patterns(std::string_view text) {
    std::vector<Permutation> out;
    for (std::string_view word : tokens(text, "pattern list")) out.emplace_back(digits(word, "pattern"));
    return out;
}

std::string format_area(std::span<const int> area) { return join_ints(area, ","); }

std::string format_permutation(const Permutation& pi) { return join_ints(pi.values(), " "); }

std::string format_point(ModulePoint point) {
    return "(" + std::to_string(point.column) + "," + std::to_string(point.length) + ")";
}

std::string_view to_string(ResolutionKind kind) noexcept {
    return kind == ResolutionKind::Projective ? "projective" : "injective";
}

Json to_json(const Resolution& res) {
    Json terms = Json::array();
    for (const auto& p : res.terms) terms.push_back(point_json(p));
    Json syzygies = Json::array();
    for (const auto& p : res.syzygies) syzygies.push_back(point_json(p));
    Json out;
    out["kind"] = to_string(res.kind);
    out["terms"] = std::move(terms);
    out["syzygies"] = std::move(syzygies);
    out["length"] = res.length();
    return out;
}

Json verdict_json(const DyckPath& path, const Verdict& verdict) {
    const PeakProfile profile = peak_profile(path);
    Json out;
    out["class"] = to_string(verdict.cls);
    out["gldim"] = verdict.gldim;
    out["witness"] = verdict.witness ? point_json(*verdict.witness) : Json(nullptr);
    out["peaks"] = profile.peak_columns;
    out["d_succ"] = profile.d_succ ? Json(*profile.d_succ) : Json(nullptr);
    out["d_pred"] = profile.d_pred ? Json(*profile.d_pred) : Json(nullptr);
    return out;
}

Json to_json(const CensusRow& row) {
    Json out;
    out["m"] = row.m;
    out["n"] = row.n;
    out["total"] = row.total;
    out["shod"] = row.shod;
    out["tilted"] = row.tilted;
    out["strict"] = row.strict;
    out["f_tilted"] = row.f_tilted;
    out["f_strict"] = row.f_strict;
    out["f_total"] = row.f_total;
    out["agree"] = row.agree;
    return out;
}

Json to_json(const VerifyReport& report, bool timings) {
    Json checks = Json::array();
    for (const auto& check : report.checks) {
        Json c;
        c["id"] = check.id;
        c["name"] = check.name;
        c["status"] = check.verified() ? "verified" : "failed";
        c["checked"] = check.checked;
        if (check.counterexample) {
            const auto& ce = *check.counterexample;
            Json example;
            example["semilength"] = ce.semilength;
            example["steps"] = ce.steps;
            example["area"] = ce.area;
            example["detail"] = ce.detail;
            c["counterexample"] = std::move(example);
        } else {
            c["counterexample"] = nullptr;
        }
        checks.push_back(std::move(c));
    }
    Json rows = Json::array();
    for (const auto& row : report.rows) rows.push_back(to_json(row));

    Json out;
    out["max_semilength"] = report.max_semilength;
    out["verified"] = report.verified();
    out["checks"] = std::move(checks);
    out["rows"] = std::move(rows);
    if (timings) {
        out["seconds_per_semilength"] = report.seconds_per_semilength;
        out["seconds"] = report.seconds;
    }
    return out;
}

std::string resolution_table(const Resolution& res) {
    const bool projective = res.kind == ResolutionKind::Projective;
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"step", projective ? "cover" : "envelope", projective ? "syzygy" : "cosyzygy"});
    for (std::size_t k = 0; k < res.terms.size(); ++k) {
        rows.push_back({std::to_string(k), format_point(res.terms[k]),
                        k < res.syzygies.size() ? format_point(res.syzygies[k]) : "0"});
    }
    std::string out = std::string(to_string(res.kind)) + " resolution\n" + align(rows);
    out += "length  " + std::to_string(res.length()) + "\n";
    return out;
}

std::string verdict_text(const DyckPath& path, const Verdict& verdict,
                         std::span<const std::pair<std::string, std::string>> extra) {
    const PeakProfile profile = peak_profile(path);
    auto optional_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; };
    std::vector<std::vector<std::string>> rows{
        {"area", format_area(path.area())},
        {"steps", path.steps().empty() ? "(empty)" : path.steps()},
        {"class", std::string(to_string(verdict.cls))},
        {"gldim", std::to_string(verdict.gldim)},
        {"witness", verdict.witness ? format_point(*verdict.witness) : "-"},
        {"peaks", profile.peak_columns.empty() ? "-" : join_ints(profile.peak_columns, ",")},
        {"d_succ", optional_int(profile.d_succ)},
        {"d_pred", optional_int(profile.d_pred)},
    };
    for (const auto& [key, value] : extra) rows.push_back({key, value});
    return align(rows);
}

std::string census_table(std::span<const CensusRow> rows, std::span<const NmCount> nm,
                         std::string_view nm_label) {
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> header{"m", "n", "total", "shod", "tilted", "strict",
                                    "f_tilted", "f_strict", "f_total", "agree"};
    if (!nm.empty()) header.emplace_back(nm_label);
    table.push_back(std::move(header));
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const CensusRow& r = rows[k];
        std::vector<std::string> line{std::to_string(r.m),        std::to_string(r.n),
                                      std::to_string(r.total),    std::to_string(r.shod),
                                      std::to_string(r.tilted),   std::to_string(r.strict),
                                      std::to_string(r.f_tilted), std::to_string(r.f_strict),
                                      std::to_string(r.f_total),  r.agree ? "yes" : "NO"};
        if (!nm.empty()) line.push_back(k < nm.size() ? std::to_string(nm[k].count) : "-");
        table.push_back(std::move(line));
    }
    return align(table);
}

std::string report_text(const VerifyReport& report, bool timings) {
    std::ostringstream out;
    out << "verify semilength 1.." << report.max_semilength << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& check : report.checks) {
        std::string status = check.verified() ? "verified" : "FAILED";
        std::vector<std::string> row{check.id, status, std::to_string(check.checked) + " paths", check.name};
        rows.push_back(std::move(row));
    }
    out << align(rows);
    for (const auto& check : report.checks) {
        if (!check.counterexample) continue;
        const auto& ce = *check.counterexample;
        out << check.id << " counterexample at m=" << ce.semilength;
        if (!ce.area.empty()) out << " area " << format_area(ce.area) << " steps " << ce.steps;
        out << ": " << ce.detail << "\n";
    }
    out << census_table(report.rows);
    if (timings) {
        for (std::size_t k = 0; k < report.seconds_per_semilength.size(); ++k)
            out << "m=" << (k + 1) << "  " << seconds_text(report.seconds_per_semilength[k]) << " s\n";
        out << "total  " << seconds_text(report.seconds) << " s\n";
    }
    out << (report.verified() ? "all checks verified" : "verification FAILED") << "\n";
    return out.str();
}

}  // namespace shodlab::io
