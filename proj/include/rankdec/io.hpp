// Text formats.
//
// Element: the packed integer, in decimal. Polynomial: whitespace-separated
// element tokens, low degree first; the zero polynomial is "0". Word file:
// header line "q m s n", then s lines of n element tokens. Erasure file:
// header "s gamma rho_1..rho_s", then gamma rows of n base-q digits (B^(C)),
// then one line of rho_i element tokens per elementary code. Outcome: a
// verdict line, then message polynomials, one per line.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rankdec/channel.hpp"
#include "rankdec/interp_decoder.hpp"

namespace rankdec {

std::string format_poly(const Field& f, const LinPoly& p);
LinPoly parse_poly(const Field& f, const std::string& line);

void write_word(std::ostream& os, const InterleavedCode& code, const WordMatrix& w);
// The header must match the code's parameters.
WordMatrix read_word(std::istream& is, const InterleavedCode& code);

// s polynomial lines; entry i must have q-degree < k_i.
MessageTuple read_message_file(std::istream& is, const InterleavedCode& code);

// "unique" / "list N" / "failure rank-deficient|list-overflow|radius-exceeded",
// then the message polynomials (s lines per tuple).
void write_outcome(std::ostream& os, const InterleavedCode& code, const DecodeOutcome& out);

ErasureInfo read_erasure_file(std::istream& is, const InterleavedCode& code);
void write_erasure_file(std::ostream& os, const InterleavedCode& code, const ErasureInfo& info);

}  // namespace rankdec
