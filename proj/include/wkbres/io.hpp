#pragma once

// CSV files written and read by the command-line tool. Every file has a
// header row, comma separators and newline-terminated records; data values
// are printed with 17 significant digits so they round-trip exactly.

#include <iosfwd>
#include <string>
#include <vector>

#include "wkbres/darboux.hpp"
#include "wkbres/potential.hpp"
#include "wkbres/resonance.hpp"
#include "wkbres/siegert.hpp"

namespace wkbres::io {

inline constexpr const char* kSpectrumHeader = "n,re_e,half_width,tau,tau_gamma,valid";
inline constexpr const char* kWavefunctionHeader = "r,re_psi,im_psi,log_norm";
inline constexpr const char* kPartnerHeader = "r,V,re_V1,im_V1,V2";
inline constexpr const char* kTabulatedHeader = "r,V";

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& name) const;
};

/// Parses a numeric CSV with a header row; throws InvalidArgument on ragged or non-numeric data.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

void write_spectrum(std::ostream& out, const std::vector<Resonance>& spectrum);

/// With unit_max the samples are scaled to max |psi| = 1 and the log_norm
/// column carries the removed factor, so psi * exp(log_norm) is unchanged.
void write_wavefunction(std::ostream& out, const WaveSolution& w, bool unit_max = true);

void write_partner(std::ostream& out, const PartnerPotential& partner);

Tabulated read_tabulated(std::istream& in);
Tabulated read_tabulated_file(const std::string& path);

}  // namespace wkbres::io
