#include "rotint/spectra_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "rotint/errors.hpp"

namespace rotint {

namespace {

constexpr const char* header = "omega_or_nu,re,im";

void write_rows(const FrequencyAxis& axis,
                const std::vector<std::complex<double>>& values,
                std::ostream& out) {
  out << header << '\n';
  char line[128];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", axis[i],
                  values[i].real(), values[i].imag());
    out << line;
  }
}

struct ParsedRows {
  std::vector<double> x;
  std::vector<std::complex<double>> values;
};

double parse_field(const std::string& text, std::size_t line_no) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw validation_error("spectral CSV: malformed number on line " +
                           std::to_string(line_no));
  }
  return value;
}

ParsedRows parse_rows(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw validation_error("spectral CSV: empty input");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  if (line != header) {
    throw validation_error("spectral CSV: expected header '" +
                           std::string(header) + "', got '" + line + "'");
  }

  ParsedRows rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                                   : line.find(',', c1 + 1);
    if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
      throw validation_error("spectral CSV: expected 3 fields on line " +
                             std::to_string(line_no));
    }
    rows.x.push_back(parse_field(line.substr(0, c1), line_no));
    const double re = parse_field(line.substr(c1 + 1, c2 - c1 - 1), line_no);
    const double im = parse_field(line.substr(c2 + 1), line_no);
    rows.values.emplace_back(re, im);
  }
  if (rows.x.size() < 2) {
    throw validation_error("spectral CSV: need at least 2 samples");
  }
  return rows;
}

FrequencyAxis axis_from_samples(const std::vector<double>& x) {
  FrequencyAxis axis;
  axis.points = x.size();
  axis.start = x.front();
  axis.step = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  if (!(axis.step > 0.0)) {
    throw validation_error("spectral CSV: axis must be strictly increasing");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - axis[i]) > 1e-6 * axis.step) {
      throw validation_error("spectral CSV: axis is not uniform (row " +
                             std::to_string(i + 2) + ")");
    }
  }
  return axis;
}

}  // namespace

void write_csv(const SpectralAmplitude& psi, std::ostream& out) {
  write_rows(psi.axis, psi.values, out);
}

void write_csv(const CorrelatedSpectrum& psi, std::ostream& out) {
  write_rows(psi.axis, psi.values, out);
}

SpectralAmplitude read_spectral_amplitude_csv(std::istream& in) {
  ParsedRows rows = parse_rows(in);
  SpectralAmplitude psi;
  psi.axis = axis_from_samples(rows.x);
  psi.values = std::move(rows.values);
  return psi;
}

CorrelatedSpectrum read_correlated_csv(std::istream& in, double center) {
  ParsedRows rows = parse_rows(in);
  CorrelatedSpectrum psi;
  psi.axis = axis_from_samples(rows.x);
  // The exchange operation reverses the detuning axis in place, so the axis
  // has to be symmetric about zero.
  if (std::abs(psi.axis.start + psi.axis.back()) > 1e-6 * psi.axis.step) {
    throw validation_error(
        "spectral CSV: detuning axis must be symmetric about zero");
  }
  psi.center = center;
  psi.values = std::move(rows.values);
  return psi;
}

}  // namespace rotint
