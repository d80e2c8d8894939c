#pragma once

#include <stdexcept>
#include <string>

namespace symdet {

// Error taxonomy mirrors the CLI exit codes: input 2, genericity 3, budget 4.
// Everything else (internal invariant violations) derives from MathError.

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed user input: parse errors, schema violations, asymmetric
/// matrices, F(0) != 0, unknown variables.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// A validated-genericity computation disagreed between independent random
/// draws, or ran out of redraw attempts.
class GenericityError : public Error {
public:
    explicit GenericityError(const std::string& what) : Error(what) {}
};

/// The configured computation budget (S-pairs / reduction steps) ran out.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

/// A mathematical precondition failed at runtime (non-m-primary input to the
/// Hilbert-Samuel routine, a polar locus that is not a curve, an oracle
/// mismatch, ...).
class MathError : public Error {
public:
    explicit MathError(const std::string& what) : Error(what) {}
};

} // namespace symdet
