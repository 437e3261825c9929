#ifndef OTSGE_ERROR_HPP
#define OTSGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace otsge {

enum class Errc {
    degenerate_input,
    not_acyclic,
    not_on_hull,
    on_hull,
    no_consistent_cycle,
    inconsistent_input,
    search_exhausted,
    non_triangular_hull,
    too_small,
    missing_label,
    realization_mismatch,
    degenerate_realization,
    no_mutual_face,
    instance_too_large,
    format_error,
    version_error,
};

const char* errc_name(Errc code);

/// Library-wide exception. Carries a machine-checkable code plus a
/// human-readable message naming the offending data.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

inline const char* errc_name(Errc code) {
    switch (code) {
    case Errc::degenerate_input: return "DegenerateInput";
    case Errc::not_acyclic: return "NotAcyclic";
    case Errc::not_on_hull: return "NotOnHull";
    case Errc::on_hull: return "OnHull";
    case Errc::no_consistent_cycle: return "NoConsistentCycle";
    case Errc::inconsistent_input: return "InconsistentInput";
    case Errc::search_exhausted: return "SearchExhausted";
    case Errc::non_triangular_hull: return "NonTriangularHull";
    case Errc::too_small: return "TooSmall";
    case Errc::missing_label: return "MissingLabel";
    case Errc::realization_mismatch: return "RealizationMismatch";
    case Errc::degenerate_realization: return "DegenerateRealization";
    case Errc::no_mutual_face: return "NoMutualFace";
    case Errc::instance_too_large: return "InstanceTooLarge";
    case Errc::format_error: return "FormatError";
    case Errc::version_error: return "VersionError";
    }
    return "UnknownError";
}

} // namespace otsge

#endif
