#include "actdim/error.hpp"

namespace actdim {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyComplex: return "EmptyComplex";
        case ErrorKind::NotASimplex: return "NotASimplex";
        case ErrorKind::VertexClash: return "VertexClash";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::NotFinite: return "NotFinite";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::EmptySubset: return "EmptySubset";
        case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::NotFullSubcomplex: return "NotFullSubcomplex";
        case ErrorKind::NotSpherical: return "NotSpherical";
        case ErrorKind::NotRightAngled: return "NotRightAngled";
        case ErrorKind::NotApplicable: return "NotApplicable";
        case ErrorKind::BudgetExhausted: return "BudgetExhausted";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

}  // namespace actdim
