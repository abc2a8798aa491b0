#include "cdatc/errors.hpp"

namespace cdatc {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::self_loop: return "SelfLoop";
    case ErrorCode::duplicate_edge: return "DuplicateEdge";
    case ErrorCode::disconnected_graph: return "DisconnectedGraph";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::missing_neighbor_estimate: return "MissingNeighborEstimate";
    case ErrorCode::weight_constraint_violated: return "WeightConstraintViolated";
    case ErrorCode::non_finite_input: return "NonFiniteInput";
    case ErrorCode::config_invalid: return "ConfigInvalid";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::validation_error: return "ValidationError";
    case ErrorCode::window_out_of_range: return "WindowOutOfRange";
    case ErrorCode::unknown_preset: return "UnknownPreset";
    case ErrorCode::no_data: return "NoData";
    case ErrorCode::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace cdatc
