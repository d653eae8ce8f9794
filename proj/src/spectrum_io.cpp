#include "kk/spectrum_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "kk/report_json.hpp"

namespace kk {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

double parse_double(const std::string& cell, int line_no) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw std::runtime_error("CSV parse error at line " +
                                 std::to_string(line_no) +
                                 ": not a number: '" + cell + "'");
    return v;
}

}  // namespace

FrequencyGrid parse_grid_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(trim(p));
    if (parts.size() != 3)
        throw std::invalid_argument("invalid grid spec '" + spec +
                                    "' (expected MIN:MAX:N)");
    char* end = nullptr;
    double lo = std::strtod(parts[0].c_str(), &end);
    if (end == parts[0].c_str() || *end != '\0')
        throw std::invalid_argument("invalid grid spec: bad MIN '" + parts[0] +
                                    "'");
    double hi = std::strtod(parts[1].c_str(), &end);
    if (end == parts[1].c_str() || *end != '\0')
        throw std::invalid_argument("invalid grid spec: bad MAX '" + parts[1] +
                                    "'");
    long n = std::strtol(parts[2].c_str(), &end, 10);
    if (end == parts[2].c_str() || *end != '\0')
        throw std::invalid_argument("invalid grid spec: bad N '" + parts[2] +
                                    "'");
    FrequencyGrid grid{lo, hi, static_cast<int>(n)};
    grid.validate();
    return grid;
}

SpectrumRows read_spectrum_csv(const std::string& path,
                               const std::string& omega_col,
                               const std::string& re_col,
                               const std::string& im_col, int min_rows) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);

    std::string line;
    int line_no = 0;
    std::vector<std::string> header;
    while (std::getline(f, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        header = split_csv_line(t);
        break;
    }
    if (header.empty())
        throw std::runtime_error("CSV parse error: no header row found");

    auto col_index = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw std::runtime_error("CSV parse error: column '" + name +
                                     "' not found in header");
        return static_cast<std::size_t>(it - header.begin());
    };
    std::size_t iw = col_index(omega_col);
    std::size_t ir = col_index(re_col);
    std::size_t ii = col_index(im_col);

    SpectrumRows rows;
    while (std::getline(f, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> cells = split_csv_line(t);
        std::size_t need = std::max({iw, ir, ii});
        if (cells.size() <= need)
            throw std::runtime_error("CSV parse error at line " +
                                     std::to_string(line_no) +
                                     ": too few columns");
        double w = parse_double(cells[iw], line_no);
        double re = parse_double(cells[ir], line_no);
        double im = parse_double(cells[ii], line_no);
        if (!rows.omega.empty() && !(w > rows.omega.back()))
            throw std::runtime_error(
                "CSV parse error at line " + std::to_string(line_no) +
                ": omega values must be strictly increasing");
        rows.omega.push_back(w);
        rows.values.emplace_back(re, im);
    }
    if (static_cast<int>(rows.omega.size()) < min_rows)
        throw std::runtime_error("CSV input has " +
                                 std::to_string(rows.omega.size()) +
                                 " rows; need at least " +
                                 std::to_string(min_rows));
    return rows;
}

std::string write_spectrum_csv(const Spectrum& spectrum) {
    std::string out = "omega,re,im\n";
    for (int i = 0; i < spectrum.grid.n_points; ++i) {
        out += JsonWriter::format_double(spectrum.grid.point(i));
        out += ',';
        out += JsonWriter::format_double(spectrum.values[i].real());
        out += ',';
        out += JsonWriter::format_double(spectrum.values[i].imag());
        out += '\n';
    }
    return out;
}

}  // namespace kk
