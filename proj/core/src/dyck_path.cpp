#include "shodlab/dyck_path.hpp"

#include <stdexcept>

#include "shodlab/errors.hpp"

namespace shodlab {

namespace {

std::vector<int> area_from_steps(std::string_view word) {
    std::vector<int> area;
    area.reserve(word.size() / 2 + 1);
    int ups = 0;
    for (char step : word) {
        if (step == 'U') {
            ++ups;
        } else {
            const int column = static_cast<int>(area.size());
            area.push_back(1 + ups - column);
        }
    }
    area.push_back(1);
    return area;
}

}  // namespace

DyckPath::DyckPath() : area_{1} {}

DyckPath DyckPath::from_area_sequence(std::span<const int> area) {
    using Rule = InvalidAreaSequence::Rule;
    if (area.empty())
        throw InvalidAreaSequence(Rule::Empty, -1, "area sequence is empty");

    const int m = static_cast<int>(area.size()) - 1;
    for (int i = 0; i < m; ++i) {
        const int ci = area[static_cast<std::size_t>(i)];
        if (ci < 2) {
            throw InvalidAreaSequence(Rule::EntryBelowTwo, i,
                                      "c_" + std::to_string(i) + " = " + std::to_string(ci) +
                                          " must be at least 2 before the last entry");
        }
        const int next = area[static_cast<std::size_t>(i) + 1];
        if (next < ci - 1) {
            throw InvalidAreaSequence(Rule::DropTooSteep, i + 1,
                                      "c_" + std::to_string(i + 1) + " = " + std::to_string(next) +
                                          " drops more than 1 below c_" + std::to_string(i) + " = " +
                                          std::to_string(ci));
        }
    }
    if (area.back() != 1) {
        throw InvalidAreaSequence(Rule::LastNotOne, m,
                                  "last entry c_" + std::to_string(m) + " = " +
                                      std::to_string(area.back()) + " must be 1");
    }

    std::string steps;
    steps.reserve(2 * static_cast<std::size_t>(m));
    int ups = 0;
    for (int i = 0; i < m; ++i) {
        const int ci = area[static_cast<std::size_t>(i)];
        if (ci > m + 1 - i) throw std::logic_error("area bound c_i <= m + 1 - i violated");
        // number of up-steps preceding the (i+1)-th down-step
        const int ups_before = ci + i - 1;
        while (ups < ups_before) {
            steps.push_back('U');
            ++ups;
        }
        steps.push_back('D');
    }
    return DyckPath(std::move(steps), std::vector<int>(area.begin(), area.end()));
}

DyckPath DyckPath::from_step_word(std::string_view word) {
    int height = 0;
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        const char step = word[pos];
        if (step == 'U') {
            ++height;
        } else if (step == 'D') {
            if (--height < 0) {
                throw InvalidStepWord("step word dips below the baseline after " +
                                      std::to_string(pos + 1) + " steps");
            }
        } else {
            throw InvalidStepWord(std::string("illegal character '") + step + "' at position " +
                                  std::to_string(pos + 1) + " (expected U or D)");
        }
    }
    if (height != 0) {
        throw InvalidStepWord("step word is unbalanced: " + std::to_string(height) +
                              " more U than D");
    }
    return DyckPath(std::string(word), area_from_steps(word));
}

DyckPath mirror(const DyckPath& path) {
    const std::string& steps = path.steps();
    std::string mirrored(steps.rbegin(), steps.rend());
    for (char& step : mirrored) step = step == 'U' ? 'D' : 'U';
    return DyckPath::from_step_word(mirrored);
}

PeakProfile peak_profile(const DyckPath& path) {
    PeakProfile profile;
    const int m = path.semilength();
    for (int i = 0; i < m; ++i) {
        if (i == 0 || path.c(i) >= path.c(i - 1)) profile.peak_columns.push_back(i);
    }
    for (std::size_t k = 1; k < profile.peak_columns.size(); ++k) {
        const int p = profile.peak_columns[k - 1];
        const int q = profile.peak_columns[k];
        profile.valley_points.push_back({q, path.c(p) - (q - p)});
    }
    if (profile.peak_columns.size() == 3) {
        const int p1 = profile.peak_columns[0];
        const int p2 = profile.peak_columns[1];
        const int p3 = profile.peak_columns[2];
        profile.d_succ = p3 - p2;
        profile.d_pred = path.c(p2) - path.c(p1) + (p2 - p1);
    }
    return profile;
}

int peak_count(const DyckPath& path) {
    int peaks = 0;
    const std::string& steps = path.steps();
    for (std::size_t k = 1; k < steps.size(); ++k) {
        if (steps[k - 1] == 'U' && steps[k] == 'D') ++peaks;
    }
    return peaks;
}

PathEnumerator::PathEnumerator(int semilength, int cap) : semilength_(semilength) {
    if (semilength < 0) throw DomainError("semilength must be non-negative");
    if (semilength > cap) {
        throw CapExceeded("semilength " + std::to_string(semilength) + " exceeds the cap of " +
                          std::to_string(cap));
    }
    word_.assign(static_cast<std::size_t>(semilength), 'U');
    word_.append(static_cast<std::size_t>(semilength), 'D');
}

std::optional<DyckPath> PathEnumerator::next() {
    if (done_) return std::nullopt;
    if (started_ && !advance()) {
        done_ = true;
        return std::nullopt;
    }
    started_ = true;
    return DyckPath::from_step_word(word_);
}

bool PathEnumerator::skip() {
    if (done_) return false;
    if (started_ && !advance()) {
        done_ = true;
        return false;
    }
    started_ = true;
    return true;
}

// Lexicographic successor: flip the rightmost U that can legally become a D,
// then complete with the smallest suffix (all remaining U's, then D's).
bool PathEnumerator::advance() {
    const int length = 2 * semilength_;
    int ups = 0;
    int downs = 0;
    for (char step : word_) (step == 'U' ? ups : downs)++;

    for (int pos = length - 1; pos >= 0; --pos) {
        const char step = word_[static_cast<std::size_t>(pos)];
        (step == 'U' ? ups : downs)--;
        if (step == 'U' && ups - downs >= 1) {
            word_[static_cast<std::size_t>(pos)] = 'D';
            ++downs;
            std::size_t out = static_cast<std::size_t>(pos) + 1;
            for (; ups < semilength_; ++ups) word_[out++] = 'U';
            for (; downs < semilength_; ++downs) word_[out++] = 'D';
            return true;
        }
    }
    return false;
}

std::vector<DyckPath> enumerate_paths(int semilength, int cap) {
    std::vector<DyckPath> out;
    for_each_path(semilength, [&](const DyckPath& path) { out.push_back(path); }, cap);
    return out;
}

}  // namespace shodlab
