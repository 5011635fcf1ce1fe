#include "slidewave/source.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace slidewave {

std::size_t ByteSource::read(std::span<char> buf)
{
    if (!started_) {
        started_ = true;
        ++stats_.passes;
    }
    const std::size_t got = do_read(buf);
    stats_.bytes_read += got;
    return got;
}

void ByteSource::rewind()
{
    do_rewind();
    started_ = false;
}

MemorySource::MemorySource(std::string data)
    : data_(std::move(data))
{
}

std::size_t MemorySource::do_read(std::span<char> buf)
{
    const std::size_t n = std::min(buf.size(), data_.size() - pos_);
    std::memcpy(buf.data(), data_.data() + pos_, n);
    pos_ += n;
    return n;
}

FileSource::FileSource(const std::filesystem::path& path, bool strip_trailing_newline)
    : path_(path)
{
    std::error_code ec;
    const auto bytes = std::filesystem::file_size(path_, ec);
    if (ec) {
        throw IoError("cannot open '" + path_.string() + "': " + ec.message());
    }
    in_.open(path_, std::ios::binary);
    if (!in_) {
        throw IoError("cannot open '" + path_.string() + "'");
    }
    size_ = static_cast<Row>(bytes);
    if (strip_trailing_newline && size_ > 0) {
        char tail[2] = {0, 0};
        const Row look = std::min<Row>(2, size_);
        in_.seekg(size_ - look);
        in_.read(tail + (2 - look), look);
        if (!in_) {
            throw IoError("cannot read '" + path_.string() + "'");
        }
        if (tail[1] == '\n') {
            size_ -= (look == 2 && tail[0] == '\r') ? 2 : 1;
        }
        in_.seekg(0);
    }
}

std::size_t FileSource::do_read(std::span<char> buf)
{
    const auto want = static_cast<std::streamsize>(std::min<Row>(static_cast<Row>(buf.size()), size_ - pos_));
    if (want == 0) {
        return 0;
    }
    in_.read(buf.data(), want);
    const auto got = in_.gcount();
    if (got != want) {
        throw IoError("short read from '" + path_.string() + "'");
    }
    pos_ += got;
    return static_cast<std::size_t>(got);
}

void FileSource::do_rewind()
{
    in_.clear();
    in_.seekg(0);
    if (!in_) {
        throw IoError("cannot rewind '" + path_.string() + "'");
    }
    pos_ = 0;
}

std::string read_all(ByteSource& source)
{
    std::string out(static_cast<std::size_t>(source.size()), '\0');
    std::size_t filled = 0;
    while (filled < out.size()) {
        const std::size_t got = source.read(std::span<char>(out.data() + filled, out.size() - filled));
        if (got == 0) {
            throw IoError("unexpected end of input");
        }
        filled += got;
    }
    return out;
}

std::string strip_trailing_newline(std::string s)
{
    if (!s.empty() && s.back() == '\n') {
        s.pop_back();
        if (!s.empty() && s.back() == '\r') {
            s.pop_back();
        }
    }
    return s;
}

StreamWindow::StreamWindow(ByteSource& source, std::size_t chunk)
    : source_(source)
    , chunk_(std::max<std::size_t>(chunk, 1))
    , size_(source.size())
{
    grow(std::bit_ceil(chunk_));
}

void StreamWindow::grow(std::size_t needed)
{
    const std::size_t cap = std::bit_ceil(std::max<std::size_t>(needed, 16));
    if (cap <= ring_.size()) {
        return;
    }
    std::vector<unsigned char> bigger(cap);
    for (Row p = base_; p < end_; ++p) {
        bigger[static_cast<std::size_t>(p) & (cap - 1)] = ring_[static_cast<std::size_t>(p) & mask_];
    }
    ring_ = std::move(bigger);
    mask_ = cap - 1;
}

void StreamWindow::fill(Row pos)
{
    while (end_ <= pos) {
        const auto want = static_cast<std::size_t>(std::min<Row>(static_cast<Row>(chunk_), size_ - end_));
        grow(static_cast<std::size_t>(end_ - base_) + want);
        scratch_.resize(want);
        std::size_t got = 0;
        while (got < want) {
            const std::size_t n = source_.read(std::span<char>(scratch_.data() + got, want - got));
            if (n == 0) {
                throw IoError("unexpected end of input");
            }
            got += n;
        }
        for (std::size_t t = 0; t < want; ++t) {
            ring_[static_cast<std::size_t>(end_ + static_cast<Row>(t)) & mask_] = static_cast<unsigned char>(scratch_[t]);
        }
        end_ += static_cast<Row>(want);
        base_ = std::max(base_, std::min(released_, end_));
        peak_resident_ = std::max(peak_resident_, resident());
    }
}

unsigned char StreamWindow::at(Row pos)
{
    if (pos < released_) {
        throw std::logic_error("StreamWindow: position " + std::to_string(pos) + " was already released");
    }
    if (pos >= size_) {
        throw std::out_of_range("StreamWindow: position past the end of input");
    }
    if (pos >= end_) {
        fill(pos);
    }
    if (pos > high_) {
        high_ = pos;
    } else {
        peak_lookback_ = std::max(peak_lookback_, high_ - pos);
    }
    return ring_[static_cast<std::size_t>(pos) & mask_];
}

void StreamWindow::release_before(Row pos)
{
    released_ = std::max(released_, pos);
    base_ = std::clamp(released_, base_, end_);
}

ReaderStats StreamWindow::stats() const
{
    ReaderStats s = source_.stats();
    s.peak_lookback = peak_lookback_;
    return s;
}

} // namespace slidewave
