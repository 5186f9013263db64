#include "wkbres/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "wkbres/error.hpp"
#include "wkbres/kernels.hpp"

namespace wkbres::io {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? std::string{} : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_number(const std::string& s, std::size_t line_no) {
    double x = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, x);
    if (ec != std::errc{} || ptr != end)
        throw Error(ErrorCode::InvalidArgument, fmt::format("line {}: '{}' is not a number", line_no, s));
    return x;
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, fmt::format("cannot open {}", path));
    return in;
}

}  // namespace

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw Error(ErrorCode::InvalidArgument, fmt::format("no column '{}'", name));
}

CsvTable read_csv(std::istream& in) {
    CsvTable t;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line);
        if (t.header.empty()) {
            t.header = std::move(fields);
            continue;
        }
        if (fields.size() != t.header.size())
            throw Error(ErrorCode::InvalidArgument,
                        fmt::format("line {}: {} fields, header has {}", line_no, fields.size(), t.header.size()));
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) row.push_back(parse_number(f, line_no));
        t.rows.push_back(std::move(row));
    }
    if (t.header.empty()) throw Error(ErrorCode::InvalidArgument, "empty CSV");
    return t;
}

CsvTable read_csv_file(const std::string& path) {
    auto in = open(path);
    return read_csv(in);
}

void write_spectrum(std::ostream& out, const std::vector<Resonance>& spectrum) {
    fmt::print(out, "{}\n", kSpectrumHeader);
    for (const auto& r : spectrum)
        fmt::print(out, "{},{:.17g},{:.17g},{:.17g},{:.17g},{}\n", r.index, r.position, r.half_width, r.period,
                   r.validity_ratio, r.valid ? 1 : 0);
}

void write_wavefunction(std::ostream& out, const WaveSolution& w, bool unit_max) {
    fmt::print(out, "{}\n", kWavefunctionHeader);
    if (!unit_max) {
        for (std::size_t i = 0; i < w.size(); ++i)
            fmt::print(out, "{:.17g},{:.17g},{:.17g},{:.17g}\n", w.r[i], w.psi[i].real(), w.psi[i].imag(),
                       w.log_norm[i]);
        return;
    }
    const auto raw = w.common_scale(false);
    const double peak = kernels::table().max_abs(raw);
    const double scale = peak > 0.0 ? peak : 1.0;
    const double log_norm = (w.log_norm.empty() ? 0.0 : w.log_norm.back()) + std::log(scale);
    for (std::size_t i = 0; i < w.size(); ++i)
        fmt::print(out, "{:.17g},{:.17g},{:.17g},{:.17g}\n", w.r[i], raw[i].real() / scale, raw[i].imag() / scale,
                   log_norm);
}

void write_partner(std::ostream& out, const PartnerPotential& partner) {
    fmt::print(out, "{}\n", kPartnerHeader);
    for (std::size_t i = 0; i < partner.r.size(); ++i)
        fmt::print(out, "{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", partner.r[i], partner.v[i],
                   partner.first_order[i].real(), partner.first_order[i].imag(), partner.second_order[i]);
}

Tabulated read_tabulated(std::istream& in) {
    const auto t = read_csv(in);
    if (t.header.size() != 2 || t.header[0] != "r" || t.header[1] != "V")
        throw Error(ErrorCode::InvalidArgument, fmt::format("tabulated potential needs header '{}'", kTabulatedHeader));
    std::vector<Sample> samples;
    samples.reserve(t.rows.size());
    for (const auto& row : t.rows) samples.push_back({row[0], row[1]});
    return Tabulated(std::move(samples));
}

Tabulated read_tabulated_file(const std::string& path) {
    auto in = open(path);
    return read_tabulated(in);
}

}  // namespace wkbres::io
