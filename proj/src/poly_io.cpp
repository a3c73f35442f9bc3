#include "perfgen/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "perfgen/error.hpp"

namespace perfgen {

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, std::size_t nvars, const PrimeField& field)
      : text_(text), nvars_(nvars), field_(field) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      advance();
    }
    terms.push_back(signed_term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      advance();
      terms.push_back(signed_term(c == '-'));
    }
    return Polynomial::from_terms(nvars_, field_, std::move(terms));
  }

private:
  Term signed_term(bool negative) {
    Term t = term();
    if (negative) t.coeff = field_.neg(t.coeff);
    return t;
  }

  Term term() {
    skip_ws();
    Coeff coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer_mod_p();
      skip_ws();
      if (peek() != '*') return {Monomial(nvars_), coeff};
      advance();
      skip_ws();
    }
    return {monomial(), coeff};
  }

  Monomial monomial() {
    Monomial m(nvars_);
    while (true) {
      skip_ws();
      if (peek() != 'x') fail("expected variable");
      std::size_t var_pos = pos_;
      advance();
      std::uint64_t index = natural();
      if (index < 1 || index > nvars_) {
        throw ParseError("variable index x" + std::to_string(index) + " out of range 1.." +
                             std::to_string(nvars_),
                         var_pos);
      }
      std::uint64_t power = 1;
      skip_ws();
      if (peek() == '^') {
        advance();
        skip_ws();
        power = natural();
      }
      std::uint64_t total = m[index - 1] + power;
      if (total > 0xffff) fail("exponent too large");
      m.set(index - 1, static_cast<unsigned>(total));
      skip_ws();
      // A '*' continues the monomial only when a variable follows.
      if (peek() == '*') {
        std::size_t save = pos_;
        advance();
        skip_ws();
        if (peek() == 'x') continue;
        pos_ = save;
      }
      return m;
    }
  }

  Coeff integer_mod_p() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::uint64_t r = 0;
    const std::uint64_t p = field_.characteristic();
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      r = (r * 10 + static_cast<std::uint64_t>(peek() - '0')) % p;
      advance();
    }
    return static_cast<Coeff>(r);
  }

  std::uint64_t natural() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected natural number");
    std::uint64_t r = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      r = r * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (r > 0xffffffffull) fail("number too large");
      advance();
    }
    return r;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  const PrimeField& field_;
};

}  // namespace

Polynomial parse_poly(std::string_view text, std::size_t nvars, const PrimeField& field) {
  return PolyParser(text, nvars, field).parse();
}

std::string format_poly(const Polynomial& f) {
  if (f.is_zero()) return "0";
  // Highest degree first, then the reverse internal order.
  std::vector<Term> terms = f.terms();
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.mono.degree() != b.mono.degree()) return a.mono.degree() > b.mono.degree();
    return b.mono < a.mono;
  });
  std::string out;
  for (const auto& t : terms) {
    std::int64_t c = f.field().to_signed(t.coeff);
    bool neg = c < 0;
    std::uint64_t mag = static_cast<std::uint64_t>(neg ? -c : c);
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + '*';
      out += t.mono.to_string();
    }
  }
  return out;
}

IdealFile parse_ideal(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  IdealFile ideal;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string tok;
      long long d = -1, p = -1;
      while (hs >> tok) {
        if (tok.rfind("d=", 0) == 0) d = std::stoll(tok.substr(2));
        else if (tok.rfind("p=", 0) == 0) p = std::stoll(tok.substr(2));
        else throw Error("ideal header: unexpected token '" + tok + "'");
      }
      if (d < 1 || p < 2) throw Error("ideal header must read 'd=<int> p=<int>'");
      ideal.nvars = static_cast<std::size_t>(d);
      ideal.field = PrimeField(static_cast<Coeff>(p));
      have_header = true;
      continue;
    }
    try {
      ideal.generators.push_back(parse_poly(line, ideal.nvars, ideal.field));
    } catch (const ParseError& e) {
      throw Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw Error("ideal file is missing its 'd=<int> p=<int>' header");
  return ideal;
}

IdealFile read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ideal file '" + path + "'");
  return parse_ideal(in);
}

void write_ideal(std::ostream& out, const IdealFile& ideal) {
  out << "d=" << ideal.nvars << " p=" << ideal.field.characteristic() << '\n';
  for (const auto& g : ideal.generators) out << format_poly(g) << '\n';
}

}  // namespace perfgen
