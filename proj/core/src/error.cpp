#include "degseq/error.hpp"

namespace degseq {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::malformed_token: return "MalformedToken";
    case ErrorCode::degree_out_of_range: return "DegreeOutOfRange";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::self_pair: return "SelfPair";
    case ErrorCode::underflow: return "Underflow";
    case ErrorCode::duplicate_edge: return "DuplicateEdge";
    case ErrorCode::vertex_out_of_range: return "VertexOutOfRange";
    case ErrorCode::not_graphical: return "NotGraphical";
    case ErrorCode::empty_candidates: return "EmptyCandidates";
    case ErrorCode::internal_stuck: return "InternalStuck";
    case ErrorCode::too_few_edges: return "TooFewEdges";
    case ErrorCode::no_edges: return "NoEdges";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::ungraphable: return "Ungraphable";
    case ErrorCode::equivalence_breach: return "EquivalenceBreach";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::io: return "IoError";
    }
    return "Unknown";
}

bool is_invariant_breach(ErrorCode code) noexcept {
    return code == ErrorCode::empty_candidates || code == ErrorCode::internal_stuck ||
           code == ErrorCode::equivalence_breach;
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

} // namespace degseq
