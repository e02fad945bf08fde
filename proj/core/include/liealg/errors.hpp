#pragma once

#include <stdexcept>
#include <string>

namespace liealg {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::domain_error {
    using std::domain_error::domain_error;
};

struct SingularTransform : SingularMatrix {
    using SingularMatrix::SingularMatrix;
};

struct SingularInput : SingularMatrix {
    using SingularMatrix::SingularMatrix;
};

struct NonCommuting : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonAbelianDerivedIdeal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParamOutOfDomain : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A sub-case that the case analysis proves cannot occur was reached.
struct ImpossibleBranch : std::logic_error {
    using std::logic_error::logic_error;
};

enum class NotInClassReason { NotSolvable, DerivedDimNot2, JacobiFails, DerivedNotAbelian, DerivedCodimNot2, TooSmall };

inline const char* reason_name(NotInClassReason r) {
    switch (r) {
        case NotInClassReason::NotSolvable: return "NotSolvable";
        case NotInClassReason::DerivedDimNot2: return "DerivedDimNot2";
        case NotInClassReason::JacobiFails: return "JacobiFails";
        case NotInClassReason::DerivedNotAbelian: return "DerivedNotAbelian";
        case NotInClassReason::DerivedCodimNot2: return "DerivedCodimNot2";
        case NotInClassReason::TooSmall: return "TooSmall";
    }
    return "?";
}

struct NotInClass : std::invalid_argument {
    NotInClass(NotInClassReason r, const std::string& detail)
        : std::invalid_argument(std::string(reason_name(r)) + ": " + detail), reason(r) {}
    NotInClassReason reason;
};

struct Unsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace liealg
