#pragma once

#include "monogamy/harness.hpp"
#include "monogamy/states.hpp"

#include <iosfwd>
#include <string>

namespace monogamy {

// Fixed 12-significant-digit decimal rendering used for every emitted number.
std::string format_number(double value);

// Round-trip a value through the emitted representation, so JSON documents
// carry exactly the digits the CSV path would print.
double rounded_number(double value);

// CSV with header beta,ylm,fei,tao,new,truth and \n line endings.
std::string figure_csv(const FigureTable& table);

// Amplitude file: one amplitude per line as "re im", blank lines and
// #-comments ignored; entry count must be 2^n for 1 <= n <= 5. Inputs within
// 1e-6 of unit norm are rescaled exactly; anything farther off is rejected.
PureState read_amplitudes(std::istream& in);

}  // namespace monogamy
