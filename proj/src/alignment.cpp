#include "slidewave/alignment.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace slidewave {

namespace {

bool carries_payload(EditOp op)
{
    return op == EditOp::Substitute || op == EditOp::Insert;
}

} // namespace

void EditScript::push(EditOp op, Row length, std::string_view payload)
{
    if (length <= 0) {
        return;
    }
    if (carries_payload(op) && static_cast<Row>(payload.size()) != length) {
        throw std::invalid_argument("EditScript: payload size must match run length");
    }
    if (!runs_.empty() && runs_.back().op == op) {
        runs_.back().length += length;
        if (carries_payload(op)) {
            runs_.back().payload.append(payload);
        }
        return;
    }
    EditRun run;
    run.op = op;
    run.length = length;
    if (carries_payload(op)) {
        run.payload.assign(payload);
    }
    runs_.push_back(std::move(run));
}

Row EditScript::cost() const
{
    Row total = 0;
    for (const auto& run : runs_) {
        if (run.op != EditOp::Match) {
            total += run.length;
        }
    }
    return total;
}

std::string EditScript::cigar() const
{
    std::string out;
    for (const auto& run : runs_) {
        out += std::to_string(run.length);
        out += static_cast<char>(run.op);
    }
    return out;
}

std::vector<CigarOp> parse_cigar(std::string_view text)
{
    std::vector<CigarOp> ops;
    std::size_t pos = 0;
    while (pos < text.size()) {
        Row count = 0;
        std::size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            count = count * 10 + (text[pos] - '0');
            ++pos;
            ++digits;
            if (digits > 18) {
                throw std::invalid_argument("parse_cigar: count too long");
            }
        }
        if (digits == 0 || pos == text.size()) {
            throw std::invalid_argument("parse_cigar: expected <count><op>");
        }
        const char c = text[pos++];
        EditOp op;
        switch (c) {
        case '=': op = EditOp::Match; break;
        case 'X': op = EditOp::Substitute; break;
        case 'I': op = EditOp::Insert; break;
        case 'D': op = EditOp::Delete; break;
        default: throw std::invalid_argument(std::string("parse_cigar: unknown op '") + c + "'");
        }
        if (count == 0) {
            throw std::invalid_argument("parse_cigar: zero-length run");
        }
        ops.push_back(CigarOp{op, count});
    }
    return ops;
}

std::string apply(std::string_view x, const EditScript& script)
{
    std::string out;
    std::size_t pos = 0;
    for (const auto& run : script.runs()) {
        const auto len = static_cast<std::size_t>(run.length);
        switch (run.op) {
        case EditOp::Match:
            if (pos + len > x.size()) {
                throw std::invalid_argument("apply: match run overruns x");
            }
            out.append(x.substr(pos, len));
            pos += len;
            break;
        case EditOp::Substitute:
            if (pos + len > x.size()) {
                throw std::invalid_argument("apply: substitution overruns x");
            }
            if (run.payload.size() != len) {
                throw std::invalid_argument("apply: substitution payload size mismatch");
            }
            out.append(run.payload);
            pos += len;
            break;
        case EditOp::Insert:
            if (run.payload.size() != len) {
                throw std::invalid_argument("apply: insertion payload size mismatch");
            }
            out.append(run.payload);
            break;
        case EditOp::Delete:
            if (pos + len > x.size()) {
                throw std::invalid_argument("apply: deletion overruns x");
            }
            pos += len;
            break;
        }
    }
    if (pos != x.size()) {
        throw std::invalid_argument("apply: script leaves part of x unconsumed");
    }
    return out;
}

std::string format_ops(const EditScript& script)
{
    std::string out;
    for (const auto& run : script.runs()) {
        out += static_cast<char>(run.op);
        out += ' ';
        out += std::to_string(run.length);
        if (!run.payload.empty()) {
            out += ' ';
            for (unsigned char c : run.payload) {
                if (std::isprint(c) && c != '\\') {
                    out += static_cast<char>(c);
                } else {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\x%02X", c);
                    out += buf;
                }
            }
        }
        out += '\n';
    }
    return out;
}

EditScript reconstruct_alignment(const FrontierTable& frontier, int e, Diagonal dstar)
{
    if (frontier.empty()) {
        throw std::invalid_argument("reconstruct_alignment: frontier table was not retained");
    }
    const Band band = frontier.band();
    if (e < 0 || e > frontier.k() || std::abs(dstar) > e || frontier.at(dstar, e) != band.n) {
        throw std::invalid_argument("reconstruct_alignment: terminal cell does not reach row n");
    }

    enum class From { Same, Above, Below };
    struct Step {
        EditOp op;
        Row match;
        char byte;
    };
    std::vector<Step> steps;

    Diagonal d = dstar;
    Level h = e;
    while (h > 0) {
        const auto here = frontier.at(d, h);
        if (!here) {
            throw std::invalid_argument("reconstruct_alignment: incomplete frontier");
        }
        const Row last = band.last_row(d);

        Row best = -1;
        std::optional<From> from;
        auto consider = [&](From which, Row value) {
            if (value > last) {
                return;
            }
            if (value > best) {
                best = value;
                from = which;
            }
        };
        if (std::abs(d) <= h - 1) {
            consider(From::Same, frontier.reach(d, h - 1) + 1);
        }
        if (d + 1 <= h - 1 && d + 1 <= band.max_diagonal()) {
            consider(From::Above, frontier.reach(d + 1, h - 1) + 1);
        }
        if (d - 1 >= -(h - 1) && d - 1 >= band.min_diagonal()) {
            consider(From::Below, frontier.reach(d - 1, h - 1));
        }
        if (!from || best > *here) {
            throw std::invalid_argument("reconstruct_alignment: no predecessor for F^"
                                        + std::to_string(h) + "(" + std::to_string(d) + ")");
        }

        Step step{EditOp::Delete, *here - best, 0};
        Diagonal prev = d;
        switch (*from) {
        case From::Same: {
            step.op = EditOp::Substitute;
            const auto b = frontier.next_y(d, h - 1);
            if (!b) {
                throw std::invalid_argument("reconstruct_alignment: missing substituted byte");
            }
            step.byte = static_cast<char>(*b);
            break;
        }
        case From::Above:
            step.op = EditOp::Delete;
            prev = d + 1;
            break;
        case From::Below: {
            step.op = EditOp::Insert;
            prev = d - 1;
            const auto b = frontier.next_y(prev, h - 1);
            if (!b) {
                throw std::invalid_argument("reconstruct_alignment: missing inserted byte");
            }
            step.byte = static_cast<char>(*b);
            break;
        }
        }
        steps.push_back(step);
        d = prev;
        --h;
    }
    if (d != 0) {
        throw std::invalid_argument("reconstruct_alignment: backtrack did not end at (0,0)");
    }
    const auto origin = frontier.at(0, 0);
    if (!origin) {
        throw std::invalid_argument("reconstruct_alignment: incomplete frontier");
    }

    EditScript script;
    script.push(EditOp::Match, *origin);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->op == EditOp::Delete) {
            script.push(EditOp::Delete, 1);
        } else {
            script.push(it->op, 1, std::string_view(&it->byte, 1));
        }
        script.push(EditOp::Match, it->match);
    }
    return script;
}

} // namespace slidewave
