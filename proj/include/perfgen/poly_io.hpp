#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "perfgen/polynomial.hpp"

namespace perfgen {

/// Parses the text grammar
///   poly     := term (('+'|'-') term)*
///   term     := [integer '*'] monomial | integer
///   monomial := var ['^' nat] ('*' var ['^' nat])*
///   var      := 'x' nat            (1-based)
/// Whitespace is ignored; a leading sign is accepted. Throws ParseError.
Polynomial parse_poly(std::string_view text, std::size_t nvars, const PrimeField& field);

/// Canonical text form; coefficients print as symmetric representatives.
std::string format_poly(const Polynomial& f);

/// `d=<int> p=<int>` header followed by one polynomial per line.
struct IdealFile {
  std::size_t nvars = 0;
  PrimeField field;
  std::vector<Polynomial> generators;
};

IdealFile parse_ideal(std::istream& in);
IdealFile read_ideal_file(const std::string& path);
void write_ideal(std::ostream& out, const IdealFile& ideal);

}  // namespace perfgen
