#include "nullprop/cli/io.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

using namespace nullprop;
using namespace nullprop::cli;
namespace fs = std::filesystem;

namespace
{

PValueSample read_text(const std::string& text, InputFormat format = InputFormat::text,
                       ReadStats* stats = nullptr)
{
    std::istringstream in(text);
    return read_pvalues(in, format, "pvalue", "inline", stats);
}

std::size_t error_line(const std::string& text, InputFormat format = InputFormat::text)
{
    try
    {
        read_text(text, format);
    }
    catch (const InputError& e)
    {
        return e.line();
    }
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST_CASE("plain text")
{
    const PValueSample s = read_text("0.1\n0.9\n");
    CHECK(s.size() == 2);
    CHECK(s.values()[0] == 0.1);
    CHECK(s.values()[1] == 0.9);
    CHECK(s.source() == "inline");
}

TEST_CASE("comments, blank lines and unsorted input")
{
    ReadStats stats;
    const PValueSample s = read_text("# header\n0.7\n\n  0.2  \n1e-8\n+0.5\n", InputFormat::text, &stats);
    CHECK(s.size() == 4);
    CHECK(s.values()[0] == 1e-8);
    CHECK(s.values()[3] == 0.7);
    CHECK(stats.values == 4);
    CHECK(stats.skipped == 2);
    CHECK(stats.lines == 6);
}

TEST_CASE("out-of-range and unparseable values name their line")
{
    CHECK(error_line("0.1\n1.2\n") == 2);
    CHECK(error_line("0.1\n0.2\n-0.01\n") == 3);
    CHECK(error_line("0.1\nabc\n") == 2);
    CHECK(error_line("0.1\n0.5x\n") == 2);
    CHECK(error_line("nan\n") == 1);
    CHECK(error_line("") == 0);
    try
    {
        read_text("0.1\n1.2\n");
    }
    catch (const InputError& e)
    {
        CHECK(std::string(e.what()).find("inline:2") != std::string::npos);
    }
}

TEST_CASE("csv with a named column")
{
    std::string text = "id,pvalue,note\n";
    for (int i = 0; i < 1000; ++i)
        text += std::to_string(i) + "," + std::to_string((i + 0.5) / 1000) + ",x\n";
    const PValueSample s = read_text(text, InputFormat::csv);
    CHECK(s.size() == 1000);
    CHECK(s.values()[0] == 0.0005);

    CHECK(read_text("\"pvalue\"\n\"0.25\"\n", InputFormat::csv).values()[0] == 0.25);
    CHECK(error_line("id,p\n1,0.5\n", InputFormat::csv) == 1);
    CHECK(error_line("id,pvalue\n1,0.5\n2\n", InputFormat::csv) == 3);
    CHECK(error_line("id,pvalue\n1,2.0\n", InputFormat::csv) == 2);
}

TEST_CASE("format detection from the file extension")
{
    const fs::path dir = fs::path(NULLPROP_TEST_TMP) / "cli_io";
    fs::create_directories(dir);
    {
        std::ofstream(dir / "a.csv") << "pvalue\n0.3\n0.1\n";
        std::ofstream(dir / "a.txt") << "0.3\n0.1\n";
    }
    CHECK(read_pvalues(dir / "a.csv").size() == 2);
    CHECK(read_pvalues(dir / "a.txt").size() == 2);
    CHECK_THROWS_AS(read_pvalues(dir / "missing.txt"), InputError);
}

TEST_CASE("numbers round-trip through 17 significant digits")
{
    for (double x : {0.1, 1.0 / 3.0, 2.0e-300, 0.0948894883732956860, 123456789.125})
        CHECK(std::strtod(format_number(x).c_str(), nullptr) == x);
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("csv writer")
{
    std::ostringstream out;
    CsvWriter w(out, {"a", "b", "c"});
    w.cell(std::int64_t{3}).cell(std::string_view("1/n,1-1/n")).cell(true);
    w.end_row();
    w.cell(0.5).cell(std::string_view("say \"hi\"")).cell(std::uint64_t{7});
    w.end_row();
    CHECK(out.str() == "a,b,c\n3,\"1/n,1-1/n\",true\n0.5,\"say \"\"hi\"\"\",7\n");
    w.cell(1.0);
    CHECK_THROWS_AS(w.end_row(), std::logic_error);
}

TEST_CASE("input format names")
{
    CHECK(parse_input_format("auto") == InputFormat::automatic);
    CHECK(parse_input_format("csv") == InputFormat::csv);
    CHECK(to_string(InputFormat::text) == "text");
    CHECK_THROWS(parse_input_format("xlsx"));
}
