#include "slidewave/source.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

using namespace slidewave;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& body)
{
    const std::filesystem::path p = std::filesystem::path(SLIDEWAVE_TEST_TMP) / name;
    std::ofstream(p, std::ios::binary) << body;
    return p;
}

} // namespace

TEST_CASE("memory source counts bytes and passes")
{
    MemorySource s("hello");
    CHECK(s.size() == 5);
    CHECK(s.stats().passes == 0);
    CHECK(read_all(s) == "hello");
    CHECK(s.stats().passes == 1);
    CHECK(s.stats().bytes_read == 5);
    s.rewind();
    CHECK(read_all(s) == "hello");
    CHECK(s.stats().passes == 2);
    CHECK(s.stats().bytes_read == 10);
}

TEST_CASE("file source reads, strips a final newline, and rewinds")
{
    const auto p = write_temp("source_a.txt", "ACGT\r\n");
    FileSource raw(p);
    CHECK(raw.size() == 6);
    FileSource stripped(p, true);
    CHECK(stripped.size() == 4);
    CHECK(read_all(stripped) == "ACGT");
    stripped.rewind();
    CHECK(read_all(stripped) == "ACGT");
    CHECK(stripped.stats().passes == 2);

    const auto inner = write_temp("source_b.txt", "A\nB\n");
    FileSource keeps_inner(inner, true);
    CHECK(read_all(keeps_inner) == "A\nB");

    CHECK_THROWS_AS(FileSource(std::filesystem::path(SLIDEWAVE_TEST_TMP) / "missing.txt"), IoError);
}

TEST_CASE("strip_trailing_newline drops one line ending")
{
    CHECK(strip_trailing_newline("AB\n") == "AB");
    CHECK(strip_trailing_newline("AB\r\n") == "AB");
    CHECK(strip_trailing_newline("AB\n\n") == "AB\n");
    CHECK(strip_trailing_newline("AB") == "AB");
    CHECK(strip_trailing_newline("") == "");
}

TEST_CASE("stream window serves positions until they are released")
{
    std::string data;
    for (int i = 0; i < 20000; ++i) {
        data.push_back(static_cast<char>('a' + i % 26));
    }
    MemorySource s(data);
    StreamWindow w(s, 64);
    CHECK(w.size() == 20000);
    CHECK(w.at(0) == 'a');
    CHECK(w.at(100) == data[100]);
    CHECK(w.at(10) == data[10]);
    CHECK(w.peak_lookback() == 90);
    w.release_before(5000);
    CHECK(w.at(7000) == data[7000]);
    CHECK_THROWS_AS(w.at(4999), std::logic_error);
    CHECK_THROWS_AS(w.at(20000), std::out_of_range);
    CHECK(w.at(19999) == data[19999]);
    CHECK(w.peak_resident() < 20000);
    const ReaderStats st = w.stats();
    CHECK(st.bytes_read == 20000);
    CHECK(st.passes == 1);
    CHECK(st.peak_lookback == 90);
}

TEST_CASE("stream window over an empty source")
{
    MemorySource s("");
    StreamWindow w(s);
    CHECK(w.size() == 0);
    CHECK_THROWS_AS(w.at(0), std::out_of_range);
}
