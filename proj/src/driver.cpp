#include "slidewave/driver.hpp"

#include "slidewave/oracle.hpp"
#include "slidewave/periodic_stream.hpp"
#include "slidewave/streaming_lce.hpp"
#include "slidewave/wavefront.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace slidewave {

namespace {

struct NamedAlgorithm {
    AlgorithmId id;
    std::string_view name;
};

constexpr std::array<NamedAlgorithm, 6> kAlgorithms{{
    {AlgorithmId::Dp, "dp"},
    {AlgorithmId::Band, "band"},
    {AlgorithmId::RowWave, "rowwave"},
    {AlgorithmId::StreamLce, "stream-lce"},
    {AlgorithmId::StreamPeriodic, "stream-periodic"},
    {AlgorithmId::Auto, "auto"},
}};

ReaderStats materialized_stats(const ByteSource& s)
{
    ReaderStats r = s.stats();
    r.peak_lookback = std::max<Row>(0, s.size() - 1);
    return r;
}

} // namespace

std::string_view algorithm_name(AlgorithmId id)
{
    for (const auto& a : kAlgorithms) {
        if (a.id == id) {
            return a.name;
        }
    }
    return "unknown";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view name)
{
    for (const auto& a : kAlgorithms) {
        if (a.name == name) {
            return a.id;
        }
    }
    return std::nullopt;
}

bool is_streaming(AlgorithmId id)
{
    return id == AlgorithmId::StreamLce || id == AlgorithmId::StreamPeriodic;
}

RunReport run_algorithm(AlgorithmId id, ByteSource& x, ByteSource& y, int k, const RunOptions& options)
{
    if (k < 0) {
        throw std::invalid_argument("k must be non-negative");
    }
    RunReport report;
    report.requested = id;
    report.k = k;
    if (id == AlgorithmId::Auto) {
        id = dispatch_combined(x.size(), k, options.sigma);
    }
    report.algorithm = id;
    const auto started = std::chrono::steady_clock::now();

    switch (id) {
    case AlgorithmId::Dp: {
        const std::string a = read_all(x);
        const std::string b = read_all(y);
        const int d = oracle::wf_distance(a, b);
        if (d <= k) {
            report.distance = d;
        }
        report.comparisons = static_cast<std::uint64_t>(a.size()) * b.size();
        report.operations = report.comparisons;
        report.x_reader = materialized_stats(x);
        report.y_reader = materialized_stats(y);
        break;
    }
    case AlgorithmId::Band: {
        const std::string a = read_all(x);
        const std::string b = read_all(y);
        report.distance = oracle::banded_distance(a, b, k);
        report.comparisons = static_cast<std::uint64_t>(a.size() + 1) * static_cast<std::uint64_t>(2 * k + 1);
        report.operations = report.comparisons;
        if (options.retain_frontier) {
            report.frontier = oracle::brute_frontier(a, b, k);
        }
        report.x_reader = materialized_stats(x);
        report.y_reader = materialized_stats(y);
        break;
    }
    case AlgorithmId::RowWave: {
        const std::string a = read_all(x);
        const std::string b = read_all(y);
        RowWaveOptions o;
        o.retain_frontier = options.retain_frontier;
        RowWaveResult r = row_wave_distance(a, b, k, o);
        report.distance = r.distance;
        report.comparisons = r.stats.comparisons + r.stats.slides;
        report.peak_entries = r.stats.peak_live;
        report.operations = r.stats.comparisons + r.stats.pops + r.stats.updates;
        report.frontier = std::move(r.frontier);
        report.x_reader = materialized_stats(x);
        report.y_reader = materialized_stats(y);
        break;
    }
    case AlgorithmId::StreamLce: {
        StreamLceOptions o;
        o.retain_frontier = options.retain_frontier;
        StreamLceResult r = stream_distance_lce(x, y, k, o);
        report.distance = r.distance;
        report.comparisons = r.stats.queries;
        report.peak_entries = r.stats.peak_live;
        report.operations = r.stats.non_build_operations();
        report.invariant_violations = r.stats.premature_recycles;
        report.frontier = std::move(r.frontier);
        report.x_reader = r.stats.x_reader;
        report.y_reader = r.stats.y_reader;
        break;
    }
    case AlgorithmId::StreamPeriodic: {
        PeriodicOptions o;
        o.retain_frontier = options.retain_frontier;
        o.check_invariants = options.check_invariants;
        o.kn_guard = options.kn_guard;
        PeriodicResult r = stream_distance_periodic(x, y, k, o);
        report.distance = r.distance;
        report.comparisons = r.stats.comparisons;
        report.maturity_events = r.stats.maturity_events;
        report.peak_entries = r.stats.peak_live;
        report.operations = r.stats.total_operations();
        report.invariant_violations = r.stats.invariant_violations + r.stats.premature_recycles;
        report.frontier = std::move(r.frontier);
        report.x_reader = r.stats.x_reader;
        report.y_reader = r.stats.y_reader;
        break;
    }
    case AlgorithmId::Auto:
        throw std::logic_error("dispatch returned Auto");
    }

    report.wall_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started).count());
    return report;
}

AutoKResult auto_k(AlgorithmId id, ByteSource& x, ByteSource& y, int ceiling, const RunOptions& options)
{
    if (ceiling < 0) {
        throw std::invalid_argument("auto_k: ceiling must be non-negative");
    }
    AutoKResult out;
    for (int k = std::min(1, ceiling);; k = std::min(2 * k, ceiling)) {
        if (out.passes > 0) {
            x.rewind();
            y.rewind();
        }
        out.report = run_algorithm(id, x, y, k, options);
        ++out.passes;
        out.k_found = k;
        if (out.report.distance) {
            break;
        }
        if (k >= ceiling) {
            out.ceiling_exceeded = true;
            break;
        }
    }
    out.report.passes = out.passes;
    return out;
}

DispatchModel default_dispatch_model()
{
    return DispatchModel{
        .lce_per_symbol_log = 500.0,
        .lce_per_k2 = 50.0,
        .periodic_per_symbol = 27.0,
        .periodic_per_k3 = 20.0,
    };
}

AlgorithmId dispatch_combined(Row n, int k, int sigma, const DispatchModel& model)
{
    const double nn = static_cast<double>(std::max<Row>(n, 0));
    const double kk = static_cast<double>(std::max(k, 0));
    const double log_factor =
        std::min(std::log2(std::max(kk, 2.0)), std::log2(static_cast<double>(std::max(sigma, 2))));
    const double lce = model.lce_per_symbol_log * nn * log_factor + model.lce_per_k2 * kk * kk;
    const double periodic = model.periodic_per_symbol * nn + model.periodic_per_k3 * kk * kk * kk;
    return lce < periodic ? AlgorithmId::StreamLce : AlgorithmId::StreamPeriodic;
}

// ---------------------------------------------------------------------------

std::string_view preset_name(Preset p)
{
    switch (p) {
    case Preset::Random: return "random";
    case Preset::Periodic: return "periodic";
    case Preset::Boundary: return "boundary";
    }
    return "unknown";
}

std::optional<Preset> parse_preset(std::string_view name)
{
    for (Preset p : {Preset::Random, Preset::Periodic, Preset::Boundary}) {
        if (preset_name(p) == name) {
            return p;
        }
    }
    return std::nullopt;
}

char symbol_byte(int s, int sigma)
{
    if (sigma == 4) {
        return "ACGT"[s];
    }
    if (sigma <= 26) {
        return static_cast<char>('A' + s);
    }
    return static_cast<char>(static_cast<unsigned char>(s));
}

namespace {

// `count` distinct values from [lo, lo + width), in increasing order.
std::vector<Row> distinct_positions(std::mt19937_64& rng, Row lo, Row width, Row count, std::vector<Row> forced)
{
    std::set<Row> chosen(forced.begin(), forced.end());
    const Row need = count - static_cast<Row>(chosen.size());
    if (need > 0 && 2 * count <= width) {
        while (static_cast<Row>(chosen.size()) < count) {
            chosen.insert(lo + static_cast<Row>(rng() % static_cast<std::uint64_t>(width)));
        }
    } else if (need > 0) {
        std::vector<Row> pool;
        for (Row p = lo; p < lo + width; ++p) {
            if (!chosen.count(p)) {
                pool.push_back(p);
            }
        }
        for (Row t = 0; t < need; ++t) {
            const auto r = static_cast<std::size_t>(t)
                           + static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(pool.size() - static_cast<std::size_t>(t)));
            std::swap(pool[static_cast<std::size_t>(t)], pool[r]);
            chosen.insert(pool[static_cast<std::size_t>(t)]);
        }
    }
    return {chosen.begin(), chosen.end()};
}

} // namespace

GeneratedPair gen_pair(Row n, int k, int sigma, std::uint64_t seed, Preset preset)
{
    if (sigma < 1 || sigma > 256) {
        throw std::invalid_argument("gen_pair: alphabet size must be in 1..256");
    }
    if (n < 0 || k < 0) {
        throw std::invalid_argument("gen_pair: n and k must be non-negative");
    }
    if (k > n) {
        throw std::invalid_argument("gen_pair: k must not exceed n");
    }
    std::mt19937_64 rng(seed);
    auto draw = [&](std::uint64_t bound) { return static_cast<int>(rng() % bound); };
    const auto su = static_cast<std::uint64_t>(sigma);

    std::vector<int> xs(static_cast<std::size_t>(n));
    if (preset == Preset::Periodic) {
        std::vector<int> w(static_cast<std::size_t>(1 + draw(6)));
        for (int& c : w) {
            c = draw(su);
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            xs[i] = w[i % w.size()];
        }
    } else {
        for (int& c : xs) {
            c = draw(su);
        }
    }

    std::vector<Row> positions;
    if (preset == Preset::Periodic) {
        const Row width = std::min<Row>(n, std::max<Row>(8 * static_cast<Row>(k), 16));
        const Row lo = n > width ? static_cast<Row>(rng() % static_cast<std::uint64_t>(n - width + 1)) : 0;
        positions = distinct_positions(rng, lo, width, k, {});
    } else if (preset == Preset::Boundary) {
        std::vector<Row> forced;
        if (k >= 1) {
            forced.push_back(0);
        }
        if (k >= 2 && n >= 2) {
            forced.push_back(n - 1);
        }
        positions = distinct_positions(rng, 0, n, k, forced);
    } else {
        positions = distinct_positions(rng, 0, n, k, {});
    }

    GeneratedPair out;
    out.planted = k;
    out.x.reserve(xs.size());
    for (int c : xs) {
        out.x.push_back(symbol_byte(c, sigma));
    }
    out.y.reserve(xs.size() + static_cast<std::size_t>(k));
    std::size_t next = 0;
    for (Row i = 0; i < n; ++i) {
        const int c = xs[static_cast<std::size_t>(i)];
        if (next < positions.size() && positions[next] == i) {
            ++next;
            const int op = sigma == 1 ? 1 + draw(2) : draw(3);
            switch (op) {
            case 0: // substitute with a different symbol
                out.y.push_back(symbol_byte((c + 1 + draw(su - 1)) % sigma, sigma));
                break;
            case 1: // delete x[i]
                break;
            default: // insert before x[i]
                out.y.push_back(symbol_byte(draw(su), sigma));
                out.y.push_back(symbol_byte(c, sigma));
                break;
            }
            continue;
        }
        out.y.push_back(symbol_byte(c, sigma));
    }
    return out;
}

} // namespace slidewave
