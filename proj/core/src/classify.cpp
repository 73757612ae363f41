#include "shodlab/classify.hpp"

#include <stdexcept>
#include <string>

#include "shodlab/errors.hpp"

namespace shodlab {

std::string_view to_string(ShodClass cls) noexcept {
    switch (cls) {
        case ShodClass::Tilted: return "tilted";
        case ShodClass::StrictShod: return "strict_shod";
        case ShodClass::NotShod: return "not_shod";
    }
    return "unknown";
}

Verdict classify_homological(const DyckPath& path) {
    const HomologyTable table(path);
    if (table.max_pdim() != table.max_idim())
        throw std::logic_error("max pdim != max idim for " + path.steps());
    const int gl = table.max_pdim();

    if (auto witness = table.first_violation(1, 1))
        return {ShodClass::NotShod, gl, witness};
    if (gl <= 2) return {ShodClass::Tilted, gl, std::nullopt};
    if (gl == 3) return {ShodClass::StrictShod, gl, std::nullopt};
    throw std::logic_error("shod path with gldim " + std::to_string(gl) + ": " + path.steps());
}

Verdict classify_geometric(const DyckPath& path) {
    const HomologyTable table(path);
    const int gl = table.max_pdim();
    if (path.semilength() == 0) return {ShodClass::Tilted, gl, std::nullopt};

    const PeakProfile profile = peak_profile(path);
    switch (profile.peak_count()) {
        case 1:
        case 2:
            return {ShodClass::Tilted, gl, std::nullopt};
        case 3: {
            if (*profile.d_succ == 1 || *profile.d_pred == 1)
                return {ShodClass::StrictShod, gl, std::nullopt};
            const int p2 = profile.peak_columns[1];
            return {ShodClass::NotShod, gl, ModulePoint{p2 + 1, path.c(p2) - 2}};
        }
        default:
            return {ShodClass::NotShod, gl, table.first_violation(1, 1)};
    }
}

bool nm_shod(const HomologyTable& table, int max_pdim, int max_idim, bool strong) {
    if (max_pdim < 0 || max_idim < 0) throw DomainError("(n, m)-shod bounds must be non-negative");
    if (table.first_violation(max_pdim, max_idim)) return false;
    return !strong || table.max_pdim() <= max_pdim + max_idim;
}

bool nm_shod(const DyckPath& path, int max_pdim, int max_idim, bool strong) {
    return nm_shod(HomologyTable(path), max_pdim, max_idim, strong);
}

}  // namespace shodlab
