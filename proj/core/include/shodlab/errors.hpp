#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace shodlab {

/// Base class for every error caused by bad caller input. The CLI maps all of
/// these to exit code 1; anything else escaping the library is a bug.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidAreaSequence : public InputError {
public:
    enum class Rule {
        Empty,          // length 0
        LastNotOne,     // c_m != 1
        EntryBelowTwo,  // c_i < 2 for some i < m
        DropTooSteep,   // c_{i+1} < c_i - 1
    };

    InvalidAreaSequence(Rule rule, int index, const std::string& what)
        : InputError(what), rule_(rule), index_(index) {}

    Rule rule() const noexcept { return rule_; }
    /// Position of the offending entry, or -1 for Empty.
    int index() const noexcept { return index_; }

private:
    Rule rule_;
    int index_;
};

class InvalidStepWord : public InputError {
public:
    using InputError::InputError;
};

class NoSuchModule : public InputError {
public:
    using InputError::InputError;
};

class InvalidPermutation : public InputError {
public:
    using InputError::InputError;
};

class Not132Avoiding : public InputError {
public:
    Not132Avoiding(std::vector<int> witness, const std::string& what)
        : InputError(what), witness_(std::move(witness)) {}

    /// 1-based positions of the first 132 occurrence.
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;
};

class CapExceeded : public InputError {
public:
    using InputError::InputError;
};

class DomainError : public InputError {
public:
    using InputError::InputError;
};

/// Malformed text input (bad integer, wrong separator, unknown keyword).
class ParseError : public InputError {
public:
    using InputError::InputError;
};

}  // namespace shodlab
