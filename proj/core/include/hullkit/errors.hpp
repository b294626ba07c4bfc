#pragma once

#include <stdexcept>
#include <string>

namespace hullkit {

/// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction / arithmetic
struct InvalidFieldSpec : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    FieldMismatch() : Error("operands belong to different fields") {}
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct ZeroArgument : Error {
    ZeroArgument() : Error("argument must be nonzero") {}
};
struct EvenCharacteristic : Error {
    EvenCharacteristic() : Error("operation requires odd characteristic") {}
};
struct OddCharacteristic : Error {
    OddCharacteristic() : Error("operation requires characteristic 2") {}
};
struct NotAHermitianField : Error {
    NotAHermitianField() : Error("field has odd extension degree; no conjugation available") {}
};
struct NotASquare : Error {
    NotASquare() : Error("element is not a square") {}
};
struct NotInFixedSubfield : Error {
    NotInFixedSubfield() : Error("element is not fixed by conjugation") {}
};

// linear algebra
struct DimensionMismatch : Error {
    using Error::Error;
    DimensionMismatch() : Error("matrix dimensions do not match") {}
};
struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};
struct NotSymmetric : Error {
    NotSymmetric() : Error("matrix is not symmetric") {}
};
struct NotHermitianSymmetric : Error {
    NotHermitianSymmetric() : Error("matrix is not Hermitian") {}
};

// codes and embeddings
struct RankDeficientGenerator : Error {
    RankDeficientGenerator() : Error("generator matrix does not have full row rank") {}
};
struct TooLargeToEnumerate : Error {
    using Error::Error;
    TooLargeToEnumerate() : Error("codeword count exceeds the enumeration bound") {}
};
struct TOutOfRange : Error {
    TOutOfRange() : Error("target hull dimension t must satisfy 0 <= t <= k") {}
};
struct AppendRejected : Error {
    using Error::Error;
    AppendRejected() : Error("appended columns do not produce the requested hull dimension") {}
};

// file formats and fixtures
struct ParseError : Error {
    using Error::Error;
};
struct FixtureMismatch : Error {
    using Error::Error;
};

}  // namespace hullkit
