#pragma once

#include <stdexcept>
#include <string>

namespace tetrageo {

enum class Errc {
    invalid_angle,
    invalid_edge,
    invalid_type,
    invalid_sequence,
    ambiguous_geodesic,
    out_of_hemisphere,
    invalid_tetrahedron,
    no_link_nodes,
    vertex_hit,
    too_long,
    precondition_failed,
    numerical_failure,
    bound_vacuous,
    bound_degenerate,
    no_threshold,
};

constexpr const char* to_string(Errc e) noexcept
{
    switch (e) {
    case Errc::invalid_angle: return "InvalidAngle";
    case Errc::invalid_edge: return "InvalidEdge";
    case Errc::invalid_type: return "InvalidType";
    case Errc::invalid_sequence: return "InvalidSequence";
    case Errc::ambiguous_geodesic: return "AmbiguousGeodesic";
    case Errc::out_of_hemisphere: return "OutOfHemisphere";
    case Errc::invalid_tetrahedron: return "InvalidTetrahedron";
    case Errc::no_link_nodes: return "NoLinkNodes";
    case Errc::vertex_hit: return "VertexHit";
    case Errc::too_long: return "TooLong";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::numerical_failure: return "NumericalFailure";
    case Errc::bound_vacuous: return "BoundVacuous";
    case Errc::bound_degenerate: return "BoundDegenerate";
    case Errc::no_threshold: return "NoThreshold";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, double value = 0.0)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), value_(value)
    {
    }

    Errc code() const noexcept { return code_; }
    // offending quantity, when one is meaningful
    double value() const noexcept { return value_; }

private:
    Errc code_;
    double value_;
};

} // namespace tetrageo
