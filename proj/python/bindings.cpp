#include "slidewave/alignment.hpp"
#include "slidewave/driver.hpp"
#include "slidewave/oracle.hpp"
#include "slidewave/periodic_stream.hpp"
#include "slidewave/source.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace slidewave;

namespace {

AlgorithmId algorithm_or_throw(const std::string& name)
{
    const auto id = parse_algorithm(name);
    if (!id) {
        throw py::value_error("unknown algorithm '" + name + "'");
    }
    return *id;
}

py::dict reader_dict(const ReaderStats& s)
{
    py::dict d;
    d["bytes_read"] = s.bytes_read;
    d["peak_lookback"] = s.peak_lookback;
    d["passes"] = s.passes;
    return d;
}

py::dict report_dict(const RunReport& r)
{
    py::dict d;
    d["algorithm"] = std::string(algorithm_name(r.algorithm));
    d["distance"] = r.distance ? py::object(py::int_(*r.distance)) : py::object(py::none());
    d["k"] = r.k;
    d["passes"] = r.passes;
    d["comparisons"] = r.comparisons;
    d["maturity_events"] = r.maturity_events;
    d["peak_entries"] = r.peak_entries;
    d["operations"] = r.operations;
    d["wall_ns"] = r.wall_ns;
    d["x_reader"] = reader_dict(r.x_reader);
    d["y_reader"] = reader_dict(r.y_reader);
    return d;
}

RunReport run_bytes(const std::string& x, const std::string& y, int k, const std::string& algorithm,
                    const RunOptions& options)
{
    MemorySource xs(x);
    MemorySource ys(y);
    py::gil_scoped_release release;
    return run_algorithm(algorithm_or_throw(algorithm), xs, ys, k, options);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Bounded edit distance of similar strings: wave algorithms, oracles, alignments.";

    m.def("cap_c", &cap_c, py::arg("d"), py::arg("h"), "Number of wave candidates of cell (d, h).");
    m.def("gcd0", [](std::int64_t a, std::int64_t b) { return gcd0(a, b); }, py::arg("a"), py::arg("b"));

    m.def("wf_distance", [](const std::string& x, const std::string& y) { return oracle::wf_distance(x, y); },
          py::arg("x"), py::arg("y"), "Full dynamic-programming edit distance.");
    m.def("banded_distance",
          [](const std::string& x, const std::string& y, int k) { return oracle::banded_distance(x, y, k); },
          py::arg("x"), py::arg("y"), py::arg("k"), "Distance if at most k, else None.");

    m.def(
        "distance",
        [](const std::string& x, const std::string& y, int k, const std::string& algorithm) {
            return run_bytes(x, y, k, algorithm, RunOptions{}).distance;
        },
        py::arg("x"), py::arg("y"), py::arg("k"), py::arg("algorithm") = "stream-periodic",
        "Edit distance if it is at most k, else None.");

    m.def(
        "run",
        [](const std::string& x, const std::string& y, int k, const std::string& algorithm) {
            return report_dict(run_bytes(x, y, k, algorithm, RunOptions{}));
        },
        py::arg("x"), py::arg("y"), py::arg("k"), py::arg("algorithm") = "stream-periodic",
        "Run one algorithm and return its report as a dict.");

    m.def(
        "auto_k",
        [](const std::string& x, const std::string& y, const std::string& algorithm, int ceiling) {
            MemorySource xs(x);
            MemorySource ys(y);
            const AutoKResult r = auto_k(algorithm_or_throw(algorithm), xs, ys, ceiling);
            return py::make_tuple(r.report.distance, r.k_found, r.passes);
        },
        py::arg("x"), py::arg("y"), py::arg("algorithm") = "stream-periodic", py::arg("ceiling") = 1 << 16,
        "Doubling search over k; returns (distance or None, k, passes).");

    m.def(
        "align",
        [](const std::string& x, const std::string& y, int k, const std::string& algorithm) -> std::optional<std::string> {
            RunOptions options;
            options.retain_frontier = true;
            const RunReport r = run_bytes(x, y, k, algorithm, options);
            if (!r.distance) {
                return std::nullopt;
            }
            if (r.algorithm == AlgorithmId::Dp) {
                return oracle::wf_alignment(x, y).cigar();
            }
            const auto dstar = static_cast<Diagonal>(static_cast<Row>(y.size()) - static_cast<Row>(x.size()));
            return reconstruct_alignment(r.frontier, *r.distance, dstar).cigar();
        },
        py::arg("x"), py::arg("y"), py::arg("k"), py::arg("algorithm") = "stream-periodic",
        "CIGAR string of an optimal alignment, or None when the distance exceeds k.");

    m.def(
        "edit_script",
        [](const std::string& x, const std::string& y, int k) -> std::optional<py::list> {
            RunOptions options;
            options.retain_frontier = true;
            const RunReport r = run_bytes(x, y, k, "stream-periodic", options);
            if (!r.distance) {
                return std::nullopt;
            }
            const auto dstar = static_cast<Diagonal>(static_cast<Row>(y.size()) - static_cast<Row>(x.size()));
            const EditScript s = reconstruct_alignment(r.frontier, *r.distance, dstar);
            py::list runs;
            for (const EditRun& run : s.runs()) {
                runs.append(py::make_tuple(std::string(1, static_cast<char>(run.op)), run.length, py::bytes(run.payload)));
            }
            return runs;
        },
        py::arg("x"), py::arg("y"), py::arg("k"), "Runs (op, length, payload) of an optimal alignment.");

    m.def(
        "apply_script",
        [](const std::string& x, const std::vector<std::tuple<std::string, Row, std::string>>& runs) {
            EditScript s;
            for (const auto& [op, length, payload] : runs) {
                if (op.size() != 1) {
                    throw py::value_error("op must be one of '=', 'X', 'I', 'D'");
                }
                s.push(static_cast<EditOp>(op[0]), length, payload);
            }
            return py::bytes(slidewave::apply(x, s));
        },
        py::arg("x"), py::arg("runs"), "Replay runs against x.");

    m.def(
        "gen_pair",
        [](Row n, int k, int sigma, std::uint64_t seed, const std::string& preset) {
            const auto p = parse_preset(preset);
            if (!p) {
                throw py::value_error("unknown preset '" + preset + "'");
            }
            const GeneratedPair g = gen_pair(n, k, sigma, seed, *p);
            return py::make_tuple(py::bytes(g.x), py::bytes(g.y));
        },
        py::arg("n"), py::arg("k"), py::arg("sigma") = 4, py::arg("seed") = 1, py::arg("preset") = "random",
        "Deterministic pair with k planted edits.");
}
