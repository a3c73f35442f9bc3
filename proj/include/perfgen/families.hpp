#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perfgen/error.hpp"
#include "perfgen/poly_matrix.hpp"
#include "perfgen/polynomial.hpp"
#include "perfgen/rng.hpp"
#include "perfgen/trunc.hpp"

namespace perfgen {

enum class Family {
  hilbert_burch,
  pfaffian,
  m_primary,
  complete_intersection,
  example,
  example_g4,
  user,
};

std::string family_name(Family f);
Family parse_family(const std::string& name);

/// One ideal instance with its structural perfectness certificate.
struct IdealSpec {
  std::size_t d = 0;
  PrimeField field;
  std::vector<Polynomial> generators;
  Family family = Family::user;
  std::optional<std::size_t> expected_grade;
  bool homogeneous = true;
  /// Weighted homogeneous with positive weights; components pass through the origin.
  bool quasi_homogeneous = true;
  /// False when perfectness has no structural certificate.
  bool certified = true;
  std::uint64_t seed = 0;
  std::string params;
  unsigned attempts = 1;
};

class GenerationError : public Error {
public:
  using Error::Error;
};

struct GenerationOptions {
  PrimeField field;
  unsigned retry_budget = 32;
};

/// Dense random homogeneous form of the given degree.
Polynomial random_form(std::size_t nvars, unsigned degree, Rng& rng, const PrimeField& field);
/// Random invertible d x d scalar matrix.
ScalarMatrix random_invertible(std::size_t d, Rng& rng, const PrimeField& field);

IdealSpec hilbert_burch_from_matrix(const PolyMatrix& m);
IdealSpec gen_hilbert_burch(std::size_t d, std::size_t t, unsigned entry_degree, std::uint64_t seed,
                            const GenerationOptions& opts = {});

IdealSpec pfaffian_from_matrix(const PolyMatrix& a);
IdealSpec gen_pfaffian(std::size_t d, std::size_t k, unsigned entry_degree, std::uint64_t seed,
                       const GenerationOptions& opts = {});

/// `count` generators, each a random form of degree n-1 plus a random form
/// of degree n; retried until the ideal is m-primary.
IdealSpec gen_mprimary(std::size_t d, unsigned n, std::size_t count, std::uint64_t seed,
                       const GenerationOptions& opts = {});

/// g random forms of the given degree; retried until height g.
IdealSpec gen_complete_intersection(std::size_t d, std::size_t g, unsigned degree,
                                    std::uint64_t seed, const GenerationOptions& opts = {});

/// (x1^2, x1x2, x1x3, x1y0 + x2^N, x1y1 + x2^{N-1}x3, ..., x1yN + x3^N) in
/// variables x1, x2, x3, y0..yN mapped to x1..x_{N+4}.
IdealSpec example_ideal(unsigned N, const PrimeField& field = PrimeField());
/// The same with the square of one extra variable appended. Uncertified.
IdealSpec example_ideal_g4(unsigned N, const PrimeField& field = PrimeField());

/// Height at the origin. Homogeneous and quasi-homogeneous ideals use the
/// global height; otherwise an m-primary certificate is tried and the global
/// height is the fallback.
std::optional<std::size_t> local_height(const IdealSpec& spec);

struct ExampleReport {
  unsigned N = 0;
  std::optional<std::size_t> height;
  std::size_t mu_mod_3 = 0;
  StabilizedMu mu;
  /// regular[i]: y_i is regular on R/(I + (y_0, ..., y_{i-1})).
  std::vector<bool> regular;
  std::size_t phi_height = 0;

  std::size_t expected_mu() const { return N + 4; }
  bool height_ok() const { return height && *height == 3; }
  bool mu_mod_3_ok() const { return mu_mod_3 == expected_mu(); }
  bool mu_ok() const { return mu.stable && mu.mu == expected_mu(); }
  bool regular_sequence_ok() const;
  bool phi_height_ok() const { return phi_height == 1; }
  bool all_ok() const {
    return height_ok() && mu_mod_3_ok() && mu_ok() && regular_sequence_ok() && phi_height_ok();
  }
};

ExampleReport verify_example(unsigned N, const PrimeField& field = PrimeField(),
                             const StabilizationPolicy& policy = {});

}  // namespace perfgen
