#include "cli.hpp"

#include "slidewave/alignment.hpp"
#include "slidewave/driver.hpp"
#include "slidewave/oracle.hpp"
#include "slidewave/source.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

namespace slidewave::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kAlgoNames{"dp", "band", "rowwave", "stream-lce", "stream-periodic", "auto"};

struct InputArgs {
    std::string x_path;
    std::string y_path;
    int k = -1;
    bool auto_k = false;
    int k_ceiling = 1 << 16;
    std::string algo = "auto";
    bool json = false;
    bool strip_newlines = false;
};

void add_input_options(CLI::App* cmd, InputArgs& a)
{
    cmd->add_option("fileX", a.x_path, "first input (\"-\" for standard input)")->required();
    cmd->add_option("fileY", a.y_path, "second input (\"-\" for standard input)")->required();
    auto* k = cmd->add_option("--k", a.k, "distance budget")->check(CLI::NonNegativeNumber);
    auto* ak = cmd->add_flag("--auto-k", a.auto_k, "search k = 1, 2, 4, ... until the distance fits");
    k->excludes(ak);
    cmd->add_option("--k-ceiling", a.k_ceiling, "largest k tried by --auto-k")->check(CLI::NonNegativeNumber);
    cmd->add_option("--algo", a.algo, "algorithm")->check(CLI::IsMember(kAlgoNames));
    cmd->add_flag("--json", a.json, "emit a JSON report");
    cmd->add_flag("--strip-newlines", a.strip_newlines, "drop one trailing newline from each input");
}

class Inputs {
public:
    Inputs(const InputArgs& a, std::istream& in)
    {
        if (a.x_path == "-" && a.y_path == "-") {
            throw UsageError("only one of the two inputs may be standard input");
        }
        x_ = open(a.x_path, a.strip_newlines, in);
        y_ = open(a.y_path, a.strip_newlines, in);
    }

    ByteSource& x() { return *x_; }
    ByteSource& y() { return *y_; }

private:
    static std::unique_ptr<ByteSource> open(const std::string& path, bool strip, std::istream& in)
    {
        if (path == "-") {
            std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            if (in.bad()) {
                throw IoError("error reading standard input");
            }
            return std::make_unique<MemorySource>(strip ? strip_trailing_newline(std::move(data)) : std::move(data));
        }
        return std::make_unique<FileSource>(path, strip);
    }

    std::unique_ptr<ByteSource> x_;
    std::unique_ptr<ByteSource> y_;
};

json reader_json(const ReaderStats& s)
{
    return json{{"bytes_read", s.bytes_read}, {"peak_lookback", s.peak_lookback}, {"passes", s.passes}};
}

json report_json(const RunReport& r)
{
    json j;
    j["algorithm"] = std::string(algorithm_name(r.algorithm));
    j["requested"] = std::string(algorithm_name(r.requested));
    j["distance"] = r.distance ? json(*r.distance) : json(nullptr);
    j["exceeds_k"] = !r.distance.has_value();
    j["k"] = r.k;
    j["passes"] = r.passes;
    j["stats"] = json{{"comparisons", r.comparisons},
                      {"maturity_events", r.maturity_events},
                      {"peak_entries", r.peak_entries},
                      {"operations", r.operations}};
    j["wall_ns"] = r.wall_ns;
    j["readers"] = json{{"x", reader_json(r.x_reader)}, {"y", reader_json(r.y_reader)}};
    return j;
}

struct Outcome {
    RunReport report;
    bool searched = false;
    bool ceiling_exceeded = false;
};

Outcome compute(const InputArgs& a, Inputs& inputs, const RunOptions& options)
{
    const AlgorithmId id = *parse_algorithm(a.algo);
    Outcome o;
    if (a.auto_k) {
        AutoKResult r = auto_k(id, inputs.x(), inputs.y(), a.k_ceiling, options);
        o.report = std::move(r.report);
        o.searched = true;
        o.ceiling_exceeded = r.ceiling_exceeded;
        return o;
    }
    if (a.k < 0) {
        throw UsageError("one of --k or --auto-k is required");
    }
    o.report = run_algorithm(id, inputs.x(), inputs.y(), a.k, options);
    return o;
}

int cmd_distance(const InputArgs& a, std::ostream& out, std::ostream& err, std::istream& in)
{
    Inputs inputs(a, in);
    const Outcome o = compute(a, inputs, RunOptions{});
    const RunReport& r = o.report;
    if (a.json) {
        json j = report_json(r);
        if (o.searched) {
            j["ceiling_exceeded"] = o.ceiling_exceeded;
        }
        out << j.dump(2) << '\n';
    } else if (r.distance) {
        out << *r.distance << '\n';
        if (o.searched) {
            err << "k=" << r.k << " passes=" << r.passes << '\n';
        }
    } else {
        out << "exceeds k" << '\n';
        if (o.searched) {
            err << "ceiling " << a.k_ceiling << " exceeded after " << r.passes << " passes\n";
        }
    }
    return r.distance ? kOk : kExceedsK;
}

int cmd_align(const InputArgs& a, bool ops, std::ostream& out, std::ostream& err, std::istream& in)
{
    Inputs inputs(a, in);
    AlgorithmId id = *parse_algorithm(a.algo);
    EditScript script;
    RunReport report;
    if (id == AlgorithmId::Dp) {
        // The full DP produces its own alignment; k only bounds the answer.
        if (!a.auto_k && a.k < 0) {
            throw UsageError("one of --k or --auto-k is required");
        }
        const int k = a.auto_k ? a.k_ceiling : a.k;
        const std::string x = read_all(inputs.x());
        const std::string y = read_all(inputs.y());
        script = oracle::wf_alignment(x, y);
        report.requested = report.algorithm = id;
        report.k = k;
        if (script.cost() <= k) {
            report.distance = static_cast<int>(script.cost());
        }
    } else {
        RunOptions options;
        options.retain_frontier = true;
        report = compute(a, inputs, options).report;
        if (report.distance) {
            const Diagonal dstar = static_cast<Diagonal>(inputs.y().size() - inputs.x().size());
            script = reconstruct_alignment(report.frontier, *report.distance, dstar);
        }
    }
    if (!report.distance) {
        if (a.json) {
            json j = report_json(report);
            j["cigar"] = nullptr;
            out << j.dump(2) << '\n';
        } else {
            out << "exceeds k" << '\n';
        }
        return kExceedsK;
    }
    if (a.json) {
        json j = report_json(report);
        j["cigar"] = script.cigar();
        out << j.dump(2) << '\n';
    } else if (ops) {
        out << format_ops(script);
    } else {
        out << script.cigar() << '\n';
    }
    if (a.auto_k) {
        err << "k=" << report.k << " passes=" << report.passes << '\n';
    }
    return kOk;
}

struct BenchArgs {
    std::string preset = "random";
    Row n = 100000;
    int k = 8;
    int sigma = 4;
    std::uint64_t seed = 1;
    std::vector<std::string> algos{"band", "rowwave", "stream-lce", "stream-periodic"};
    bool csv = false;
};

int cmd_bench(const BenchArgs& b, std::ostream& out)
{
    const auto preset = parse_preset(b.preset);
    if (!preset) {
        throw UsageError("unknown preset '" + b.preset + "'");
    }
    const GeneratedPair pair = gen_pair(b.n, b.k, b.sigma, b.seed, *preset);
    const std::vector<std::string> columns{"algo", "n", "k", "sigma", "seed", "distance",
                                           "comparisons", "wall_ns", "peak_entries", "peak_lookback"};
    std::vector<std::vector<std::string>> rows;
    for (const std::string& name : b.algos) {
        MemorySource x(pair.x);
        MemorySource y(pair.y);
        RunOptions options;
        options.sigma = b.sigma;
        const RunReport r = run_algorithm(*parse_algorithm(name), x, y, b.k, options);
        rows.push_back({std::string(algorithm_name(r.algorithm)), std::to_string(b.n), std::to_string(b.k),
                        std::to_string(b.sigma), std::to_string(b.seed),
                        r.distance ? std::to_string(*r.distance) : std::string("exceeds"),
                        std::to_string(r.comparisons), std::to_string(r.wall_ns), std::to_string(r.peak_entries),
                        std::to_string(std::max(r.x_reader.peak_lookback, r.y_reader.peak_lookback))});
    }
    if (b.csv) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << (c ? "," : "") << columns[c];
        }
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out << (c ? "," : "") << row[c];
            }
            out << '\n';
        }
        return kOk;
    }
    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        width[c] = columns[c].size();
        for (const auto& row : rows) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << cells[c];
        }
        out << '\n';
    };
    line(columns);
    for (const auto& row : rows) {
        line(row);
    }
    return kOk;
}

struct GenArgs {
    std::string preset = "random";
    Row n = 1000;
    int k = 10;
    int sigma = 4;
    std::uint64_t seed = 1;
    std::string out_x;
    std::string out_y;
};

void write_file(const std::string& path, const std::string& data)
{
    std::ofstream f(path, std::ios::binary);
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!f) {
        throw IoError("cannot write '" + path + "'");
    }
}

int cmd_gen(const GenArgs& g, std::ostream& out)
{
    const auto preset = parse_preset(g.preset);
    if (!preset) {
        throw UsageError("unknown preset '" + g.preset + "'");
    }
    if (g.k > g.n) {
        throw UsageError("--k must not exceed --n");
    }
    const GeneratedPair pair = gen_pair(g.n, g.k, g.sigma, g.seed, *preset);
    write_file(g.out_x, pair.x);
    write_file(g.out_y, pair.y);
    out << "planted " << pair.planted << '\n';
    return kOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in)
{
    CLI::App app{"Bounded edit distance of two similar strings in one streaming pass", "slidewave"};
    app.require_subcommand(1);

    InputArgs dist;
    auto* distance = app.add_subcommand("distance", "edit distance if it is at most k");
    add_input_options(distance, dist);

    InputArgs al;
    bool cigar = false;
    bool ops = false;
    auto* align = app.add_subcommand("align", "optimal alignment as CIGAR text or an op list");
    add_input_options(align, al);
    auto* cigar_flag = align->add_flag("--cigar", cigar, "print CIGAR (default)");
    align->add_flag("--ops", ops, "print one line per run")->excludes(cigar_flag);

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "run algorithms on a generated pair");
    bench->add_option("--preset", bench_args.preset)->check(CLI::IsMember({"random", "periodic", "boundary"}));
    bench->add_option("--n", bench_args.n)->check(CLI::NonNegativeNumber);
    bench->add_option("--k", bench_args.k)->check(CLI::NonNegativeNumber);
    bench->add_option("--sigma", bench_args.sigma)->check(CLI::Range(1, 256));
    bench->add_option("--seed", bench_args.seed);
    bench->add_option("--algo", bench_args.algos, "algorithms to run")->check(CLI::IsMember(kAlgoNames));
    bench->add_flag("--csv", bench_args.csv);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "write a generated pair to two files");
    gen->add_option("--preset", gen_args.preset)->check(CLI::IsMember({"random", "periodic", "boundary"}));
    gen->add_option("--n", gen_args.n)->check(CLI::NonNegativeNumber);
    gen->add_option("--k", gen_args.k)->check(CLI::NonNegativeNumber);
    gen->add_option("--sigma", gen_args.sigma)->check(CLI::Range(1, 256));
    gen->add_option("--seed", gen_args.seed);
    gen->add_option("--out-x", gen_args.out_x)->required();
    gen->add_option("--out-y", gen_args.out_y)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        for (auto* sub : app.get_subcommands()) {
            err << sub->help();
        }
        if (app.get_subcommands().empty()) {
            err << app.help();
        }
        return kUsage;
    }

    try {
        if (distance->parsed()) {
            return cmd_distance(dist, out, err, in);
        }
        if (align->parsed()) {
            return cmd_align(al, ops, out, err, in);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_args, out);
        }
        return cmd_gen(gen_args, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace slidewave::cli
