#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wordsym {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed values: letters out of range, erasing images, bad spec strings, ...
class InvalidInput : public Error {
public:
    using Error::Error;
};

class NotAFactor : public Error {
public:
    using Error::Error;
};

// Query beyond the certified range of a FactorIndex.
class UntrustedRange : public Error {
public:
    using Error::Error;
};

class InsufficientOccurrences : public Error {
public:
    using Error::Error;
};

class GroupTooLarge : public Error {
public:
    using Error::Error;
};

// A right-extension walk ran out of certified data before reaching the next
// special factor.
class TrustExhausted : public Error {
public:
    using Error::Error;
};

// Raised when a structure guaranteed to exist could not be found; signals a
// bug, not bad input.
class ContradictionError : public Error {
public:
    using Error::Error;
};

// A stated hypothesis (closure under a symmetry, commutation, involutivity)
// does not hold for the given data. Carries the offending symmetry/factor in
// display form when known.
class HypothesisViolation : public Error {
public:
    explicit HypothesisViolation(const std::string& msg,
                                 std::string symmetry_text = {},
                                 std::string factor_text = {})
        : Error(msg),
          symmetry_(std::move(symmetry_text)),
          factor_(std::move(factor_text)) {}

    const std::string& symmetry() const { return symmetry_; }
    const std::string& factor() const { return factor_; }

private:
    std::string symmetry_;
    std::string factor_;
};

// The doubling protocol hit the prefix cap before the factor sets settled.
// Carries the complexity counts observed on the last prefix tried.
class StabilizationFailure : public Error {
public:
    StabilizationFailure(const std::string& msg, std::size_t prefix_length,
                         std::vector<long long> partial_complexity)
        : Error(msg),
          prefix_length_(prefix_length),
          partial_complexity_(std::move(partial_complexity)) {}

    std::size_t prefix_length() const { return prefix_length_; }
    const std::vector<long long>& partial_complexity() const {
        return partial_complexity_;
    }

private:
    std::size_t prefix_length_;
    std::vector<long long> partial_complexity_;
};

}  // namespace wordsym
