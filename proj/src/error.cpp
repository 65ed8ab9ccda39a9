#include "metdim/error.hpp"

namespace metdim {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::TrivialGraph: return "TrivialGraph";
        case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
        case ErrorCode::OrderOverflow: return "OrderOverflow";
        case ErrorCode::EqualVertices: return "EqualVertices";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::RootOutOfRange: return "RootOutOfRange";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::Unbounded: return "Unbounded";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownFamily: return "UnknownFamily";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace metdim
