#pragma once

#include <string>

namespace mixsim {

// Shortest form with the given number of significant digits ("%.*g").
// Deterministic for a given double; the project never touches the locale.
std::string format_sig(double value, int digits = 6);

// Fixed decimal places ("%.*f").
std::string format_fixed(double value, int decimals);

// Canonical "g<g>-d<d>" token used as the case column in every CSV.
std::string case_label(double g_rate, double d_rate);

// Writes text verbatim (binary mode); throws std::runtime_error on failure.
void write_file(const std::string& path, const std::string& text);

std::string read_file(const std::string& path);

} // namespace mixsim
