#pragma once

#include "slidewave/source.hpp"
#include "slidewave/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace slidewave {

enum class AlgorithmId { Dp, Band, RowWave, StreamLce, StreamPeriodic, Auto };

std::string_view algorithm_name(AlgorithmId id);
std::optional<AlgorithmId> parse_algorithm(std::string_view name);

/// True for the algorithms that read their inputs as streams.
bool is_streaming(AlgorithmId id);

struct RunOptions {
    bool retain_frontier = false;
    bool check_invariants = false;
    bool kn_guard = false;
    /// Alphabet size assumed by the Auto dispatcher.
    int sigma = 256;
};

struct RunReport {
    AlgorithmId requested = AlgorithmId::Auto;
    AlgorithmId algorithm = AlgorithmId::Auto; ///< what actually ran
    BoundedDistance distance;
    int k = 0;
    int passes = 1;
    std::uint64_t comparisons = 0;
    std::uint64_t maturity_events = 0;
    std::uint64_t peak_entries = 0;
    std::uint64_t operations = 0;
    std::uint64_t invariant_violations = 0;
    std::uint64_t wall_ns = 0;
    ReaderStats x_reader;
    ReaderStats y_reader;
    /// Filled only when RunOptions::retain_frontier is set and the algorithm
    /// produces one (not Dp).
    FrontierTable frontier;
};

/// One run with a fixed budget k.
RunReport run_algorithm(AlgorithmId id, ByteSource& x, ByteSource& y, int k, const RunOptions& options = {});

struct AutoKResult {
    RunReport report;      ///< the successful (or last) run
    int k_found = 0;
    int passes = 0;        ///< runs performed
    bool ceiling_exceeded = false;
};

/// Runs with k = 1, 2, 4, ... (the last attempt is the ceiling itself) until
/// the distance fits. Sources are rewound between passes.
AutoKResult auto_k(AlgorithmId id, ByteSource& x, ByteSource& y, int ceiling, const RunOptions& options = {});

/// Cost-model choice between the two streaming algorithms. Ties go to the
/// periodic streamer.
struct DispatchModel {
    double lce_per_symbol_log;   ///< per symbol, per unit of min(log k, log sigma)
    double lce_per_k2;
    double periodic_per_symbol;
    double periodic_per_k3;
};

/// Nanosecond costs measured with `slidewave bench` (n = 2e5, sigma = 4).
DispatchModel default_dispatch_model();

AlgorithmId dispatch_combined(Row n, int k, int sigma, const DispatchModel& model = default_dispatch_model());

enum class Preset { Random, Periodic, Boundary };

std::string_view preset_name(Preset p);
std::optional<Preset> parse_preset(std::string_view name);

struct GeneratedPair {
    std::string x;
    std::string y;
    int planted = 0;
};

/// Deterministic pair: x drawn over `sigma` symbols, y = x with exactly k
/// unit edits at distinct positions of x (so the distance is at most k).
/// Random: uniform x, uniform edit positions. Periodic: x = w^t with
/// |w| in 1..6, edits clustered in one window. Boundary: edits at the first
/// and last positions plus uniform ones.
GeneratedPair gen_pair(Row n, int k, int sigma, std::uint64_t seed, Preset preset = Preset::Random);

/// Byte used for symbol s of a sigma-letter alphabet.
char symbol_byte(int s, int sigma);

} // namespace slidewave
