#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shodlab/classify.hpp"
#include "shodlab/dyck_path.hpp"

namespace shodlab {

/// Closed-form counts for algebras with n simples.
struct Formulas {
    std::int64_t f_strict;  // sum_{k=1}^{n-3} k^2
    std::int64_t f_tilted;  // 1 + sum_{k=1}^{n-2} k
    std::int64_t f_total;   // (n^3 - 6n^2 + 14n - 9) / 3
};

/// Throws DomainError for n < 2, std::logic_error if the cubic is not an
/// exact integer or does not equal f_tilted + f_strict.
Formulas formulas(int n);

/// Brute-force census of one semilength m (n = m + 1 simples).
struct CensusRow {
    int m;
    int n;
    std::uint64_t total;
    std::uint64_t shod;
    std::uint64_t tilted;
    std::uint64_t strict;
    std::int64_t f_tilted;
    std::int64_t f_strict;
    std::int64_t f_total;
    bool agree;
};

struct CensusOptions {
    /// Worker threads for the map over paths; results do not depend on it.
    int threads = 1;
    int cap = kDefaultMaxSemilength;
};

/// Requires m >= 1.
CensusRow class_counts(int m, const CensusOptions& options = {});

/// class_counts for m = 1..max_semilength.
std::vector<CensusRow> census_rows(int max_semilength, const CensusOptions& options = {});

struct NmCount {
    int semilength;
    std::uint64_t count;
};

/// Number of (n, m)-shod paths (strong variant if requested) for each
/// semilength 1..max_semilength.
std::vector<NmCount> nm_census(int max_pdim, int max_idim, bool strong, int max_semilength,
                               const CensusOptions& options = {});

struct Counterexample {
    int semilength;
    /// Step word and area of the offending path; empty for count mismatches.
    std::string steps;
    std::vector<int> area;
    std::string detail;
};

struct CheckResult {
    std::string id;    // "E1" .. "E5"
    std::string name;
    /// Paths examined, up to and including the first counterexample.
    std::uint64_t checked = 0;
    std::optional<Counterexample> counterexample;

    bool verified() const noexcept { return !counterexample.has_value(); }
};

struct VerifyReport {
    int max_semilength;
    std::vector<CheckResult> checks;
    std::vector<CensusRow> rows;
    /// Wall time per semilength 1..max_semilength.
    std::vector<double> seconds_per_semilength;
    double seconds = 0.0;

    bool verified() const noexcept;
};

using Classifier = std::function<Verdict(const DyckPath&)>;

struct VerifyOptions {
    int threads = 1;
    int cap = kDefaultMaxSemilength;
    /// Replacements for the two classifiers; empty means the library ones.
    Classifier homological;
    Classifier geometric;
};

/// Exhaustive checks for every path of semilength 1..max_semilength:
///   E1 homological verdict == geometric verdict
///   E2 shod        <=> phi_inverse avoids 4321 and 4231
///   E3 tilted      <=> at most two peaks <=> phi_inverse avoids 321
///   E4 census counts equal the closed formulas
///   E5 phi_inverse is 132-avoiding, phi(phi_inverse(D)) == D and
///      #left-to-right minima == #peaks
/// Each check reports the first counterexample in enumeration order and
/// stops there; the others carry on.
VerifyReport verify_theorems(int max_semilength, const VerifyOptions& options = {});

}  // namespace shodlab
