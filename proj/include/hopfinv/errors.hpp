#ifndef HOPFINV_ERRORS_HPP
#define HOPFINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopfinv {

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotAComplex : std::runtime_error {
    explicit NotAComplex(const std::string& what) : std::runtime_error(what) {}
};

struct NotAGroup : std::runtime_error {
    explicit NotAGroup(const std::string& what) : std::runtime_error(what) {}
};

struct NotARepresentation : std::runtime_error {
    explicit NotARepresentation(const std::string& what) : std::runtime_error(what) {}
};

struct BadInput : std::runtime_error {
    explicit BadInput(const std::string& what) : std::runtime_error(what) {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct SizeGuard : std::runtime_error {
    explicit SizeGuard(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent decision procedures disagreed; always a bug, never an
/// expected negative verdict.
struct OracleDisagreement : std::logic_error {
    explicit OracleDisagreement(const std::string& what) : std::logic_error(what) {}
};

/// Hypotheses of the base-change theorem verified but a conclusion check
/// failed; indicates an implementation bug and must abort loudly.
struct TheoremViolation : std::logic_error {
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

struct ExactnessFailure : std::logic_error {
    explicit ExactnessFailure(const std::string& what) : std::logic_error(what) {}
};

struct IdealNotStable : std::logic_error {
    explicit IdealNotStable(const std::string& what) : std::logic_error(what) {}
};

struct ConstraintViolation : std::runtime_error {
    explicit ConstraintViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hopfinv

#endif
