#include "rankdec/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rankdec {
namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

std::string next_line(std::istream& is, const char* what) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument(std::string("missing ") + what);
  return line;
}

}  // namespace

std::string format_poly(const Field& f, const LinPoly& p) {
  if (p.c.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (i) out += ' ';
    out += f.format_elem(p.c[i]);
  }
  return out;
}

LinPoly parse_poly(const Field& f, const std::string& line) {
  LinPoly p;
  for (const std::string& t : tokens(line)) p.c.push_back(f.parse_elem(t));
  return lp_trim(std::move(p));
}

void write_word(std::ostream& os, const InterleavedCode& code, const WordMatrix& w) {
  const Field& f = code.f();
  os << f.q() << ' ' << f.m() << ' ' << code.s << ' ' << code.n << '\n';
  for (std::uint32_t i = 0; i < code.s; ++i) {
    for (std::uint32_t j = 0; j < code.n; ++j) {
      if (j) os << ' ';
      os << f.format_elem(w.at(i, j));
    }
    os << '\n';
  }
}

WordMatrix read_word(std::istream& is, const InterleavedCode& code) {
  const Field& f = code.f();
  std::vector<std::string> hdr = tokens(next_line(is, "word header"));
  if (hdr.size() != 4) throw std::invalid_argument("word header must be 'q m s n'");
  if (std::stoul(hdr[0]) != f.q() || std::stoul(hdr[1]) != f.m() ||
      std::stoul(hdr[2]) != code.s || std::stoul(hdr[3]) != code.n)
    throw std::invalid_argument("word header does not match the code");
  WordMatrix w(code.s, code.n);
  for (std::uint32_t i = 0; i < code.s; ++i) {
    std::vector<std::string> row = tokens(next_line(is, "word row"));
    if (row.size() != code.n) throw std::invalid_argument("word row length mismatch");
    for (std::uint32_t j = 0; j < code.n; ++j) w.at(i, j) = f.parse_elem(row[j]);
  }
  return w;
}

MessageTuple read_message_file(std::istream& is, const InterleavedCode& code) {
  const Field& f = code.f();
  MessageTuple msg(code.s);
  for (std::uint32_t i = 0; i < code.s; ++i) {
    msg[i] = parse_poly(f, next_line(is, "message polynomial"));
    if (lp_qdeg(msg[i]) >= int(code.k[i]))
      throw std::invalid_argument("message q-degree exceeds dimension");
  }
  return msg;
}

void write_outcome(std::ostream& os, const InterleavedCode& code, const DecodeOutcome& out) {
  const Field& f = code.f();
  switch (out.kind) {
    case OutcomeKind::Unique:
      os << "unique\n";
      break;
    case OutcomeKind::List:
      os << "list " << out.messages.size() << '\n';
      break;
    case OutcomeKind::Failure:
      os << "failure ";
      switch (out.reason) {
        case FailureReason::RankDeficient:
          os << "rank-deficient\n";
          break;
        case FailureReason::ListOverflow:
          os << "list-overflow\n";
          break;
        default:
          os << "radius-exceeded\n";
          break;
      }
      return;
  }
  for (const MessageTuple& msg : out.messages)
    for (const LinPoly& p : msg) os << format_poly(f, p) << '\n';
}

ErasureInfo read_erasure_file(std::istream& is, const InterleavedCode& code) {
  const Field& f = code.f();
  std::vector<std::string> hdr = tokens(next_line(is, "erasure header"));
  if (hdr.size() != 2 + code.s)
    throw std::invalid_argument("erasure header must be 's gamma rho_1..rho_s'");
  if (std::stoul(hdr[0]) != code.s) throw std::invalid_argument("erasure header s mismatch");
  ErasureInfo info;
  info.gamma = std::uint32_t(std::stoul(hdr[1]));
  for (std::uint32_t i = 0; i < code.s; ++i)
    info.rho.push_back(std::uint32_t(std::stoul(hdr[2 + i])));
  info.b_col = Mat(info.gamma, code.n);
  for (std::uint32_t l = 0; l < info.gamma; ++l) {
    std::vector<std::string> row = tokens(next_line(is, "column erasure row"));
    if (row.size() != code.n) throw std::invalid_argument("column erasure row length mismatch");
    for (std::uint32_t j = 0; j < code.n; ++j) {
      unsigned long v = std::stoul(row[j]);
      if (v >= f.q()) throw std::invalid_argument("column erasure digit out of range");
      info.b_col.at(l, j) = Elem(v);
    }
  }
  info.a_row.resize(code.s);
  for (std::uint32_t i = 0; i < code.s; ++i) {
    std::vector<std::string> row = tokens(next_line(is, "row erasure coefficients"));
    if (row.size() != info.rho[i])
      throw std::invalid_argument("row erasure coefficient count mismatch");
    for (const std::string& t : row) info.a_row[i].push_back(f.parse_elem(t));
  }
  return info;
}

void write_erasure_file(std::ostream& os, const InterleavedCode& code, const ErasureInfo& info) {
  const Field& f = code.f();
  os << code.s << ' ' << info.gamma;
  for (std::uint32_t i = 0; i < code.s; ++i)
    os << ' ' << (i < info.rho.size() ? info.rho[i] : 0);
  os << '\n';
  for (std::uint32_t l = 0; l < info.gamma; ++l) {
    for (std::uint32_t j = 0; j < code.n; ++j) {
      if (j) os << ' ';
      os << info.b_col.at(l, j);
    }
    os << '\n';
  }
  for (std::uint32_t i = 0; i < code.s; ++i) {
    const auto& a = i < info.a_row.size() ? info.a_row[i] : std::vector<Elem>{};
    for (std::size_t l = 0; l < a.size(); ++l) {
      if (l) os << ' ';
      os << f.format_elem(a[l]);
    }
    os << '\n';
  }
}

}  // namespace rankdec
