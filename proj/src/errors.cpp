#include "disknet/errors.hpp"

namespace disknet {

const char* err_name(Err e) {
    switch (e) {
        case Err::EmbeddingInconsistent: return "EmbeddingInconsistent";
        case Err::SelfLoopContraction: return "SelfLoopContraction";
        case Err::BoundaryContraction: return "BoundaryContraction";
        case Err::ConnectivityBroken: return "ConnectivityBroken";
        case Err::FaceNotFound: return "FaceNotFound";
        case Err::AttachNotOnFace: return "AttachNotOnFace";
        case Err::EmptyRestriction: return "EmptyRestriction";
        case Err::Singular: return "Singular";
        case Err::ShapeMismatch: return "ShapeMismatch";
        case Err::Disconnected: return "Disconnected";
        case Err::SpikeSingular: return "SpikeSingular";
        case Err::NegativeConductance: return "NegativeConductance";
        case Err::SiteMismatch: return "SiteMismatch";
        case Err::ConjecturalCheckFailed: return "ConjecturalCheckFailed";
        case Err::NotATriangle: return "NotATriangle";
        case Err::AmbiguousOrientation: return "AmbiguousOrientation";
        case Err::NotACprn: return "NotACprn";
        case Err::OrderingViolation: return "OrderingViolation";
        case Err::PeelStuck: return "PeelStuck";
        case Err::InconsistentResponse: return "InconsistentResponse";
        case Err::DegenerateSystem: return "DegenerateSystem";
        case Err::ParseError: return "ParseError";
        case Err::Domain: return "Domain";
    }
    return "Unknown";
}

}  // namespace disknet
