#pragma once

#include "slidewave/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace slidewave {

/// CIGAR-style operation codes. Insert and Delete are relative to x: an
/// insertion consumes a byte of y only, a deletion a byte of x only.
enum class EditOp : char {
    Match = '=',
    Substitute = 'X',
    Insert = 'I',
    Delete = 'D',
};

struct EditRun {
    EditOp op = EditOp::Match;
    Row length = 0;
    /// Bytes of y written by Substitute and Insert runs (length bytes);
    /// empty for Match and Delete.
    std::string payload;

    friend bool operator==(const EditRun&, const EditRun&) = default;
};

/// A run-length encoded alignment of x against y, in x order.
class EditScript {
public:
    /// Append a run, merging with the previous one when the op repeats.
    /// Zero-length runs are dropped.
    void push(EditOp op, Row length, std::string_view payload = {});

    const std::vector<EditRun>& runs() const { return runs_; }
    bool empty() const { return runs_.empty(); }

    /// Number of non-match operations.
    Row cost() const;

    /// Canonical text form, e.g. "2=1X1=". Empty for an empty script.
    std::string cigar() const;

    friend bool operator==(const EditScript&, const EditScript&) = default;

private:
    std::vector<EditRun> runs_;
};

struct CigarOp {
    EditOp op;
    Row count;

    friend bool operator==(const CigarOp&, const CigarOp&) = default;
};

/// Parses (count, opChar)+ with opChar in {=, X, I, D}. Throws
/// std::invalid_argument on malformed text.
std::vector<CigarOp> parse_cigar(std::string_view text);

/// Replays `script` over x. Throws std::invalid_argument if a run overruns x,
/// a payload has the wrong size, or x is not fully consumed.
std::string apply(std::string_view x, const EditScript& script);

/// One operation per line: "= 12", "X 1 G", "I 2 TT", "D 1". Non-printable
/// payload bytes are written as \xHH.
std::string format_ops(const EditScript& script);

/// Backtracks an optimal script of cost e from the terminal cell (dstar, e)
/// of a complete frontier table. Throws std::invalid_argument when the table
/// does not reach row n on dstar at level e, or lacks a required cell.
EditScript reconstruct_alignment(const FrontierTable& frontier, int e, Diagonal dstar);

} // namespace slidewave
