#ifndef DISKNET_ERRORS_HPP
#define DISKNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace disknet {

enum class Err {
    // embedding / editing
    EmbeddingInconsistent,
    SelfLoopContraction,
    BoundaryContraction,
    ConnectivityBroken,
    FaceNotFound,
    AttachNotOnFace,
    EmptyRestriction,
    // linear algebra
    Singular,
    ShapeMismatch,
    // response
    Disconnected,
    SpikeSingular,
    // moves
    NegativeConductance,
    SiteMismatch,
    ConjecturalCheckFailed,
    // medial
    NotATriangle,
    AmbiguousOrientation,
    // connections
    NotACprn,
    OrderingViolation,
    // recovery
    PeelStuck,
    InconsistentResponse,
    DegenerateSystem,
    // io / misc
    ParseError,
    Domain,
};

const char* err_name(Err e);

/// Domain error carrying a machine-checkable kind next to the message.
class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& msg)
        : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

    Err kind() const { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace disknet

#endif
