#ifndef POLYAUT_ERRORS_HPP
#define POLYAUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyaut {

struct RingMismatch : std::logic_error {
    explicit RingMismatch(const std::string& what) : std::logic_error(what) {}
};

struct ZeroPolynomial : std::logic_error {
    explicit ZeroPolynomial(const std::string& what) : std::logic_error(what) {}
};

struct NotAMonomialUnit : std::logic_error {
    explicit NotAMonomialUnit(const std::string& what) : std::logic_error(what) {}
};

struct ZeroDenominator : std::runtime_error {
    explicit ZeroDenominator(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NonInvertibleScale : std::invalid_argument {
    explicit NonInvertibleScale(const std::string& what) : std::invalid_argument(what) {}
};

struct TypeMismatch : std::runtime_error {
    explicit TypeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct UndecidableNonzero : std::runtime_error {
    explicit UndecidableNonzero(const std::string& what) : std::runtime_error(what) {}
};

struct CaseConstraintViolated : std::runtime_error {
    explicit CaseConstraintViolated(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownCase : std::invalid_argument {
    explicit UnknownCase(const std::string& what) : std::invalid_argument(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ExponentOverflow : std::overflow_error {
    explicit ExponentOverflow(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace polyaut

#endif
