#ifndef NULLPROP_CLI_IO_HPP
#define NULLPROP_CLI_IO_HPP

#include "nullprop/pvalue_sample.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nullprop::cli
{

enum class InputFormat
{
    automatic, // csv by extension, text otherwise
    text,      // one value per line; blank lines and '#' comments skipped
    csv        // header row, values taken from a named column
};

InputFormat parse_input_format(std::string_view text);
std::string_view to_string(InputFormat format);

/// Input problem with the 1-based line it occurred on (0 when not line-specific).
class InputError : public std::runtime_error
{
public:
    InputError(const std::string& source, std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ReadStats
{
    std::size_t lines = 0;
    std::size_t values = 0;
    std::size_t skipped = 0; // blank or comment lines
};

/// Parses p-values from a stream. Unparseable values and values outside
/// [0,1] are errors, never clipped.
PValueSample read_pvalues(std::istream& in, InputFormat format, const std::string& column,
                          const std::string& source, ReadStats* stats = nullptr);

PValueSample read_pvalues(const std::filesystem::path& path, InputFormat format = InputFormat::automatic,
                          const std::string& column = "pvalue", ReadStats* stats = nullptr);

/// 17 significant digits; nan/inf spelled as such.
std::string format_number(double value);

/// Minimal CSV emitter: a fixed header, then rows of preformatted cells.
class CsvWriter
{
public:
    CsvWriter(std::ostream& out, std::vector<std::string> header);

    CsvWriter& cell(double value);
    CsvWriter& cell(std::int64_t value);
    CsvWriter& cell(std::uint64_t value);
    CsvWriter& cell(std::string_view text);
    CsvWriter& cell(bool value);
    /// Ends the row; throws std::logic_error if the cell count does not match the header.
    void end_row();

private:
    std::ostream& out_;
    std::size_t columns_;
    std::vector<std::string> row_;
};

} // namespace nullprop::cli

#endif // NULLPROP_CLI_IO_HPP
