#include "shodlab/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "shodlab/errors.hpp"

namespace shodlab {

namespace {

void require(const DyckPath& path, ModulePoint point) {
    if (!contains(path, point)) {
        throw NoSuchModule("no module (" + std::to_string(point.column) + "," +
                           std::to_string(point.length) + ") in a path of semilength " +
                           std::to_string(path.semilength()));
    }
}

// Least column a with a + c_a >= top. a + c_a is non-decreasing in a and
// equals m + 1 at a = m, so the search always succeeds for top <= m + 1.
int envelope_column(const DyckPath& path, int top) {
    int a = 0;
    while (a + path.c(a) < top) ++a;
    return a;
}

bool is_projective(const DyckPath& path, ModulePoint p) { return p.length == path.c(p.column); }

bool is_injective(const DyckPath& path, ModulePoint p) {
    return p.column == 0 || path.c(p.column - 1) <= p.length;
}

}  // namespace

bool contains(const DyckPath& path, ModulePoint point) noexcept {
    return point.column >= 0 && point.column <= path.semilength() && point.length >= 1 &&
           point.length <= path.c(point.column);
}

std::vector<ModulePoint> module_points(const DyckPath& path) {
    std::vector<ModulePoint> points;
    for (int i = 0; i <= path.semilength(); ++i) {
        for (int j = 1; j <= path.c(i); ++j) points.push_back({i, j});
    }
    return points;
}

ModuleStatus module_status(const DyckPath& path, ModulePoint point) {
    require(path, point);
    return {is_projective(path, point), is_injective(path, point)};
}

ModulePoint projective_cover(const DyckPath& path, ModulePoint point) {
    require(path, point);
    return {point.column, path.c(point.column)};
}

ModulePoint injective_envelope(const DyckPath& path, ModulePoint point) {
    require(path, point);
    const int top = point.column + point.length;
    const int a = envelope_column(path, top);
    return {a, top - a};
}

MaybeModule syzygy(const DyckPath& path, ModulePoint point) {
    require(path, point);
    if (is_projective(path, point)) return std::nullopt;
    return ModulePoint{point.column + point.length, path.c(point.column) - point.length};
}

MaybeModule cosyzygy(const DyckPath& path, ModulePoint point) {
    require(path, point);
    if (is_injective(path, point)) return std::nullopt;
    const int a = envelope_column(path, point.column + point.length);
    return ModulePoint{a, point.column - a};
}

Resolution resolution(const DyckPath& path, ModulePoint point, ResolutionKind kind) {
    require(path, point);
    const bool projective = kind == ResolutionKind::Projective;
    Resolution res{kind, {}, {}};
    ModulePoint current = point;
    res.terms.push_back(projective ? projective_cover(path, current)
                                   : injective_envelope(path, current));
    for (;;) {
        const MaybeModule next = projective ? syzygy(path, current) : cosyzygy(path, current);
        if (!next) break;
        res.syzygies.push_back(*next);
        current = *next;
        const bool done = projective ? is_projective(path, current) : is_injective(path, current);
        if (done) break;
        res.terms.push_back(projective ? projective_cover(path, current)
                                       : injective_envelope(path, current));
    }
    return res;
}

int homdim(const DyckPath& path, ModulePoint point, ResolutionKind kind) {
    require(path, point);
    int dim = 0;
    MaybeModule current = point;
    for (;;) {
        current = kind == ResolutionKind::Projective ? syzygy(path, *current)
                                                     : cosyzygy(path, *current);
        if (!current) return dim;
        ++dim;
    }
}

int gldim(const DyckPath& path) {
    int max_pdim = 0;
    int max_idim = 0;
    for (const ModulePoint& p : module_points(path)) {
        max_pdim = std::max(max_pdim, homdim(path, p, ResolutionKind::Projective));
        max_idim = std::max(max_idim, homdim(path, p, ResolutionKind::Injective));
    }
    if (max_pdim != max_idim) {
        throw std::logic_error("max pdim " + std::to_string(max_pdim) + " != max idim " +
                               std::to_string(max_idim) + " for " + path.steps());
    }
    return max_pdim;
}

ModulePoint mirror_point(const DyckPath& path, ModulePoint point) noexcept {
    return {path.semilength() + 1 - point.column - point.length, point.length};
}

HomologyTable::HomologyTable(const DyckPath& path) {
    const int m = path.semilength();
    offset_.resize(static_cast<std::size_t>(m) + 2);
    offset_[0] = 0;
    for (int i = 0; i <= m; ++i)
        offset_[static_cast<std::size_t>(i) + 1] = offset_[static_cast<std::size_t>(i)] + path.c(i);
    pdim_.assign(static_cast<std::size_t>(offset_.back()), 0);
    idim_.assign(static_cast<std::size_t>(offset_.back()), 0);

    for (int i = m; i >= 0; --i) {
        const int ci = path.c(i);
        for (int j = 1; j < ci; ++j) {
            const int d = 1 + pdim({i + j, ci - j});
            pdim_[index({i, j})] = d;
            max_pdim_ = std::max(max_pdim_, d);
        }
    }

    // envelope[top] = least a with a + c_a >= top, for top in 1..m+1
    std::vector<int> envelope(static_cast<std::size_t>(m) + 2, 0);
    for (int top = 1, a = 0; top <= m + 1; ++top) {
        while (a + path.c(a) < top) ++a;
        envelope[static_cast<std::size_t>(top)] = a;
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= path.c(i); ++j) {
            const int a = envelope[static_cast<std::size_t>(i + j)];
            if (a == i) continue;
            const int d = 1 + idim({a, i - a});
            idim_[index({i, j})] = d;
            max_idim_ = std::max(max_idim_, d);
        }
    }
}

std::optional<ModulePoint> HomologyTable::first_violation(int max_pdim, int max_idim) const {
    const int columns = static_cast<int>(offset_.size()) - 1;
    for (int i = 0; i < columns; ++i) {
        const int ci = offset_[static_cast<std::size_t>(i) + 1] - offset_[static_cast<std::size_t>(i)];
        for (int j = 1; j <= ci; ++j) {
            const std::size_t k = index({i, j});
            if (pdim_[k] > max_pdim && idim_[k] > max_idim) return ModulePoint{i, j};
        }
    }
    return std::nullopt;
}

}  // namespace shodlab
