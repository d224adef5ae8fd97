#include "pmforce/error.hpp"

namespace pmforce {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::BadColoring: return "BadColoring";
    case ErrorKind::BadRotation: return "BadRotation";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::NotSubsetOfM: return "NotSubsetOfM";
    case ErrorKind::IntersectsM: return "IntersectsM";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::HasHole: return "HasHole";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::NotAValidCut: return "NotAValidCut";
    case ErrorKind::BadRowSequence: return "BadRowSequence";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidGlue: return "InvalidGlue";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::Inapplicable: return "Inapplicable";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

} // namespace pmforce
