#include "pgr/error.hpp"

namespace pgr {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::IdenticalEdge: return "IdenticalEdge";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InvalidWalk: return "InvalidWalk";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::WrongPeriodicityRank: return "WrongPeriodicityRank";
        case ErrorKind::NotDependent: return "NotDependent";
        case ErrorKind::TooFewEdges: return "TooFewEdges";
        case ErrorKind::TooSmall: return "TooSmall";
        case ErrorKind::WrongDegree: return "WrongDegree";
        case ErrorKind::SurfaceRankMismatch: return "SurfaceRankMismatch";
        case ErrorKind::BadPrime: return "BadPrime";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

}  // namespace pgr
