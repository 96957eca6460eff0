#include "nullprop/cli/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

namespace nullprop::cli
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s)
{
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        return s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string_view> split_csv(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true)
    {
        const auto comma = line.find(',', start);
        fields.push_back(unquote(line.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return fields;
}

double parse_value(std::string_view token, const std::string& source, std::size_t line)
{
    double value = 0.0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    if (!token.empty() && *begin == '+')
        ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (token.empty() || ec != std::errc() || ptr != end)
        throw InputError(source, line, "cannot parse '" + std::string(token) + "' as a number");
    if (!(value >= 0.0 && value <= 1.0))
        throw InputError(source, line, "p-value " + std::string(token) + " is outside [0,1]");
    return value;
}

} // namespace

InputFormat parse_input_format(std::string_view text)
{
    if (text == "auto")
        return InputFormat::automatic;
    if (text == "text" || text == "txt")
        return InputFormat::text;
    if (text == "csv")
        return InputFormat::csv;
    throw std::invalid_argument("unknown input format '" + std::string(text) + "'");
}

std::string_view to_string(InputFormat format)
{
    switch (format)
    {
    case InputFormat::automatic:
        return "auto";
    case InputFormat::text:
        return "text";
    case InputFormat::csv:
        return "csv";
    }
    return "unknown";
}

InputError::InputError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
      line_(line)
{
}

PValueSample read_pvalues(std::istream& in, InputFormat format, const std::string& column,
                          const std::string& source, ReadStats* stats)
{
    if (format == InputFormat::automatic)
        format = InputFormat::text;

    ReadStats local;
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    std::size_t column_index = 0;
    std::size_t header_columns = 0;
    bool have_header = format == InputFormat::text;

    while (std::getline(in, line))
    {
        ++line_no;
        const std::string_view content = trim(line);
        if (content.empty() || content.front() == '#')
        {
            ++local.skipped;
            continue;
        }
        if (format == InputFormat::text)
        {
            values.push_back(parse_value(content, source, line_no));
            continue;
        }

        const auto fields = split_csv(content);
        if (!have_header)
        {
            std::size_t i = 0;
            for (; i < fields.size() && fields[i] != column; ++i)
            {
            }
            if (i == fields.size())
                throw InputError(source, line_no, "CSV header has no column named '" + column + "'");
            column_index = i;
            header_columns = fields.size();
            have_header = true;
            continue;
        }
        if (fields.size() != header_columns)
        {
            throw InputError(source, line_no,
                             "expected " + std::to_string(header_columns) + " fields, found " +
                                 std::to_string(fields.size()));
        }
        values.push_back(parse_value(fields[column_index], source, line_no));
    }
    if (format == InputFormat::csv && !have_header)
        throw InputError(source, 0, "CSV input has no header row");
    if (values.empty())
        throw InputError(source, 0, "no p-values found");

    local.lines = line_no;
    local.values = values.size();
    if (stats)
        *stats = local;
    return PValueSample(std::move(values), source);
}

PValueSample read_pvalues(const std::filesystem::path& path, InputFormat format,
                          const std::string& column, ReadStats* stats)
{
    std::ifstream in(path);
    if (!in)
        throw InputError(path.string(), 0, "cannot open file");
    if (format == InputFormat::automatic)
        format = path.extension() == ".csv" ? InputFormat::csv : InputFormat::text;
    return read_pvalues(in, format, column, path.string(), stats);
}

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header)
    : out_(out), columns_(header.size())
{
    for (std::size_t i = 0; i < header.size(); ++i)
        out_ << (i ? "," : "") << header[i];
    out_ << '\n';
}

CsvWriter& CsvWriter::cell(double value)
{
    row_.push_back(format_number(value));
    return *this;
}

CsvWriter& CsvWriter::cell(std::int64_t value)
{
    row_.push_back(std::to_string(value));
    return *this;
}

CsvWriter& CsvWriter::cell(std::uint64_t value)
{
    row_.push_back(std::to_string(value));
    return *this;
}

CsvWriter& CsvWriter::cell(std::string_view text)
{
    if (text.find_first_of(",\"\n") == std::string_view::npos)
    {
        row_.emplace_back(text);
        return *this;
    }
    std::string quoted = "\"";
    for (const char c : text)
    {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    row_.push_back(std::move(quoted));
    return *this;
}

CsvWriter& CsvWriter::cell(bool value)
{
    row_.emplace_back(value ? "true" : "false");
    return *this;
}

void CsvWriter::end_row()
{
    if (row_.size() != columns_)
    {
        throw std::logic_error("CSV row has " + std::to_string(row_.size()) + " cells, header has " +
                               std::to_string(columns_));
    }
    for (std::size_t i = 0; i < row_.size(); ++i)
        out_ << (i ? "," : "") << row_[i];
    out_ << '\n';
    row_.clear();
}

} // namespace nullprop::cli
