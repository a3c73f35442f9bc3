#include "perfgen/order.hpp"

#include "perfgen/error.hpp"

namespace perfgen {

OrderSpec OrderSpec::block_sum(std::size_t nvars, std::size_t g) {
  if (g < 1 || g > nvars) throw Error("block-sum order requires 1 <= g <= d");
  return OrderSpec(OrderKind::block_sum, nvars, g);
}

OrderSpec OrderSpec::pure_lex(std::size_t nvars) { return OrderSpec(OrderKind::pure_lex, nvars, 0); }

OrderSpec OrderSpec::degrevlex(std::size_t nvars) {
  return OrderSpec(OrderKind::degrevlex, nvars, 0);
}

OrderSpec OrderSpec::elimination(std::size_t nvars, std::size_t block) {
  if (block > nvars) throw Error("elimination block larger than variable count");
  return OrderSpec(OrderKind::elimination, nvars, block);
}

OrderSpec OrderSpec::parse(std::string_view text, std::size_t nvars) {
  if (text == "lex") return pure_lex(nvars);
  if (text == "degrevlex") return degrevlex(nvars);
  constexpr std::string_view prefix = "paper:g=";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string digits(text.substr(prefix.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("bad order parameter in '" + std::string(text) + "'");
    }
    return block_sum(nvars, std::stoul(digits));
  }
  throw Error("unknown order '" + std::string(text) + "' (expected paper:g=<int>, lex, degrevlex)");
}

namespace {

// Degree then reverse lexicographic on the variable range [lo, hi).
std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering OrderSpec::compare_unchecked(const Monomial& a, const Monomial& b) const {
  const std::size_t d = nvars_;
  switch (kind_) {
    case OrderKind::block_sum: {
      for (std::size_t i = d; i-- > param_;) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      unsigned sa = 0, sb = 0;
      for (std::size_t i = 0; i < param_; ++i) {
        sa += a[i];
        sb += b[i];
      }
      if (sa != sb) return sa <=> sb;
      for (std::size_t i = param_; i-- > 0;) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    }
    case OrderKind::pure_lex:
      for (std::size_t i = d; i-- > 0;) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::degrevlex:
      return degrevlex_range(a, b, 0, d);
    case OrderKind::elimination: {
      auto c = degrevlex_range(a, b, d - param_, d);
      if (c != 0) return c;
      return degrevlex_range(a, b, 0, d - param_);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering OrderSpec::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars_ || b.nvars() != nvars_) {
    throw Error("monomial dimension does not match the order");
  }
  return compare_unchecked(a, b);
}

std::string OrderSpec::to_string() const {
  switch (kind_) {
    case OrderKind::block_sum: return "paper:g=" + std::to_string(param_);
    case OrderKind::pure_lex: return "lex";
    case OrderKind::degrevlex: return "degrevlex";
    case OrderKind::elimination: return "elim:" + std::to_string(param_);
  }
  return "?";
}

std::strong_ordering compare_monomials(const OrderSpec& ord, const Monomial& a, const Monomial& b) {
  return ord.compare(a, b);
}

Term leading_term(const Polynomial& f, const OrderSpec& ord) {
  if (f.is_zero()) throw Error("leading term of the zero polynomial");
  if (f.nvars() != ord.nvars()) throw Error("polynomial dimension does not match the order");
  const bool local = ord.is_local();
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    auto c = ord.compare_unchecked(t.mono, best->mono);
    if (local ? c < 0 : c > 0) best = &t;
  }
  return *best;
}

}  // namespace perfgen
