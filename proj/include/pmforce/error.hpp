#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmforce {

enum class ErrorKind {
    DuplicateEdge,
    SelfLoop,
    BadColoring,
    BadRotation,
    VertexOutOfRange,
    LimitExceeded,
    NotPerfect,
    NoPerfectMatching,
    NotBipartite,
    NotSubsetOfM,
    IntersectsM,
    Disconnected,
    HasHole,
    NotATree,
    NotAValidCut,
    BadRowSequence,
    UnknownName,
    TooLarge,
    InvalidGlue,
    ParseError,
    UnknownSuite,
    Inapplicable,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace pmforce
