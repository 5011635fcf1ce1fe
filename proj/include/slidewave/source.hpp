#pragma once

#include "slidewave/types.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace slidewave {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ReaderStats {
    std::uint64_t bytes_read = 0;
    /// Largest gap between the furthest byte requested and a byte requested
    /// later. Filled in by StreamWindow.
    Row peak_lookback = 0;
    int passes = 0;
};

/// A one-way byte stream of known total length.
///
/// Bytes and passes are counted here, so every source is instrumented.
/// rewind() starts another pass; sources that cannot restart throw IoError.
class ByteSource {
public:
    virtual ~ByteSource() = default;

    virtual Row size() const = 0;

    /// Reads up to buf.size() bytes; returns 0 only at end of stream.
    std::size_t read(std::span<char> buf);
    void rewind();

    const ReaderStats& stats() const { return stats_; }

protected:
    virtual std::size_t do_read(std::span<char> buf) = 0;
    virtual void do_rewind() = 0;

private:
    ReaderStats stats_;
    bool started_ = false;
};

class MemorySource : public ByteSource {
public:
    explicit MemorySource(std::string data);
    Row size() const override { return static_cast<Row>(data_.size()); }
    const std::string& data() const { return data_; }

protected:
    std::size_t do_read(std::span<char> buf) override;
    void do_rewind() override { pos_ = 0; }

private:
    std::string data_;
    std::size_t pos_ = 0;
};

class FileSource : public ByteSource {
public:
    /// With `strip_trailing_newline`, a final "\n" (or "\r\n") is excluded
    /// from the stream; the tail is inspected once at open.
    explicit FileSource(const std::filesystem::path& path, bool strip_trailing_newline = false);
    Row size() const override { return size_; }

protected:
    std::size_t do_read(std::span<char> buf) override;
    void do_rewind() override;

private:
    std::filesystem::path path_;
    std::ifstream in_;
    Row size_ = 0;
    Row pos_ = 0;
};

/// Reads a whole source (one pass). Used by the non-streaming paths.
std::string read_all(ByteSource& source);

/// Drop a single trailing "\n" or "\r\n".
std::string strip_trailing_newline(std::string s);

/// Sliding window over a source. Bytes are pulled from the source once, in
/// order, and kept until released; asking for a released position is a
/// logic error.
class StreamWindow {
public:
    explicit StreamWindow(ByteSource& source, std::size_t chunk = 4096);

    Row size() const { return size_; }

    unsigned char at(Row pos);

    /// Allow positions below `pos` to be discarded.
    void release_before(Row pos);

    Row peak_lookback() const { return peak_lookback_; }

    /// Bytes currently held.
    std::size_t resident() const { return static_cast<std::size_t>(end_ - base_); }
    std::size_t peak_resident() const { return peak_resident_; }

    ReaderStats stats() const;

private:
    void fill(Row pos);
    void grow(std::size_t needed);

    ByteSource& source_;
    std::size_t chunk_;
    Row size_;
    std::vector<unsigned char> ring_;
    std::size_t mask_ = 0;
    Row base_ = 0; ///< first byte still stored
    Row released_ = 0; ///< first byte that may still be requested
    Row end_ = 0;
    Row high_ = -1;
    Row peak_lookback_ = 0;
    std::size_t peak_resident_ = 0;
    std::vector<char> scratch_;
};

} // namespace slidewave
