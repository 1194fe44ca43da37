#pragma once

#include <stdexcept>
#include <string>

namespace scramblekit {

// Failure categories surfaced by the library. The CLI maps these onto
// process exit codes.
enum class errc {
    empty_graph,
    loop_edge,
    disconnected,
    too_large,
    empty_side,
    empty_set,
    terminals_overlap,
    not_an_edge,
    zero_factor,
    bad_param,
    no_column_metadata,
    not_a_subgraph,
    not_a_subdivision,
    disconnected_egg,
    bad_set,
    not_effective,
    graph_mismatch,
    cap_exceeded,
    not_a_permutation,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_graph: return "EmptyGraph";
        case errc::loop_edge: return "LoopEdge";
        case errc::disconnected: return "Disconnected";
        case errc::too_large: return "TooLarge";
        case errc::empty_side: return "EmptySide";
        case errc::empty_set: return "EmptySet";
        case errc::terminals_overlap: return "TerminalsOverlap";
        case errc::not_an_edge: return "NotAnEdge";
        case errc::zero_factor: return "ZeroFactor";
        case errc::bad_param: return "BadParam";
        case errc::no_column_metadata: return "NoColumnMetadata";
        case errc::not_a_subgraph: return "NotASubgraph";
        case errc::not_a_subdivision: return "NotASubdivision";
        case errc::disconnected_egg: return "DisconnectedEgg";
        case errc::bad_set: return "BadSet";
        case errc::not_effective: return "NotEffective";
        case errc::graph_mismatch: return "GraphMismatch";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::not_a_permutation: return "NotAPermutation";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace scramblekit
