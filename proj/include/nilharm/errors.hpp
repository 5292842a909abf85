#pragma once

#include <stdexcept>
#include <string>

namespace nilharm {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotNilpotentError : Error {
    explicit NotNilpotentError(const std::string& msg = "matrix/algebra is not nilpotent")
        : Error(msg) {}
};

// Jacobi identity fails on the basis triple (i,j,k), 1-based in messages.
struct JacobiViolationError : Error {
    int i, j, k;
    std::string defect;
    JacobiViolationError(int i_, int j_, int k_, std::string defect_)
        : Error("Jacobi identity violated on triple (" + std::to_string(i_ + 1) + "," +
                std::to_string(j_ + 1) + "," + std::to_string(k_ + 1) + "), defect " + defect_),
          i(i_), j(j_), k(k_), defect(std::move(defect_)) {}
};

struct AbelianInputError : Error {
    AbelianInputError() : Error("algebra is abelian; a one-parameter metabelian algebra is nonabelian by definition") {}
};

struct NotMetabelianError : Error {
    NotMetabelianError() : Error("algebra has no abelian ideal of codimension one") {}
};

struct NotAnIdealChainError : Error {
    explicit NotAnIdealChainError(const std::string& msg) : Error(msg) {}
};

// Strongly-based validation failure; row/col are 1-based positions in A = e^{ad X_n}|_m
// (or in a structure-constant vector), entry is the offending rational.
struct IntegralityFailureError : Error {
    int row, col;
    std::string entry;
    IntegralityFailureError(int row_, int col_, std::string entry_, const std::string& where)
        : Error("integrality failure in " + where + " at entry (" + std::to_string(row_) + "," +
                std::to_string(col_) + ") = " + entry_),
          row(row_), col(col_), entry(std::move(entry_)) {}
};

struct BasisMismatchError : Error {
    BasisMismatchError() : Error("group elements live in different bases") {}
};

struct NotACharacterError : Error {
    explicit NotACharacterError(const std::string& msg) : Error(msg) {}
};

struct NotGenericError : Error {
    NotGenericError() : Error("functional vanishes on [g,g]; not generic") {}
};

struct NotGenError : Error {
    NotGenError() : Error("functional is not in gen") {}
};

struct NeitherClassError : Error {
    NeitherClassError() : Error("functional is neither gen nor nongen") {}
};

struct GridTooCoarseError : Error {
    int required, given;
    GridTooCoarseError(int required_, int given_)
        : Error("grid size " + std::to_string(given_) + " below required " + std::to_string(required_)),
          required(required_), given(given_) {}
};

struct UnclassifiedFunctionalError : Error {
    UnclassifiedFunctionalError() : Error("functional is neither a crosssection representative nor nongen") {}
};

struct IncompleteSpectralSupportError : Error {
    explicit IncompleteSpectralSupportError(const std::string& msg) : Error(msg) {}
};

struct BoxTooSmallError : Error {
    explicit BoxTooSmallError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct CurveInjectivityError : Error {
    explicit CurveInjectivityError(const std::string& msg) : Error(msg) {}
};

}  // namespace nilharm
