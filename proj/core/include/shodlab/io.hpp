#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "shodlab/census.hpp"
#include "shodlab/classify.hpp"
#include "shodlab/dyck_path.hpp"
#include "shodlab/homology.hpp"
#include "shodlab/permutation.hpp"

namespace shodlab::io {

using Json = nlohmann::ordered_json;

// Parsing. Every parser throws ParseError (or the domain error of the object
// being built) with a one-line message.

/// Decimal integers separated by commas and/or whitespace.
std::vector<int> parse_int_list(std::string_view text);

/// "4,3,3,2,1"
DyckPath parse_area(std::string_view text);
/// "UUDD"
DyckPath parse_steps(std::string_view text);
/// Either form: a word over {U, D} is a step word, anything else an area
/// sequence.
DyckPath parse_path(std::string_view text);

/// "i,j"
ModulePoint parse_module_point(std::string_view text);

/// "proj", "projective", "inj" or "injective".
ResolutionKind parse_kind(std::string_view text);

/// "4 2 3 5 1" or "4,2,3,5,1"; a single token such as "42351" is read
/// digit by digit.
Permutation parse_permutation(std::string_view text);

/// "132,4321,4231", each word read digit by digit.
std::vector<Permutation> parse_patterns(std::string_view text);

// Rendering.

std::string format_area(std::span<const int> area);
std::string format_permutation(const Permutation& pi);
std::string format_point(ModulePoint point);
std::string_view to_string(ResolutionKind kind) noexcept;

/// {"kind", "terms", "syzygies", "length"}
Json to_json(const Resolution& res);

/// {"class", "gldim", "witness", "peaks", "d_succ", "d_pred"}
Json verdict_json(const DyckPath& path, const Verdict& verdict);

/// {"m", "n", "total", "shod", "tilted", "strict", "f_tilted", "f_strict", "f_total", "agree"}
Json to_json(const CensusRow& row);

/// Report object; per-semilength timings only when `timings` is set.
Json to_json(const VerifyReport& report, bool timings);

std::string resolution_table(const Resolution& res);
/// Aligned key/value lines; `extra` rows are appended to the same table.
std::string verdict_text(const DyckPath& path, const Verdict& verdict,
                         std::span<const std::pair<std::string, std::string>> extra = {});
/// Aligned census table; appends an nm column when `nm` is non-empty.
std::string census_table(std::span<const CensusRow> rows, std::span<const NmCount> nm = {},
                         std::string_view nm_label = "nm");
std::string report_text(const VerifyReport& report, bool timings);

}  // namespace shodlab::io
