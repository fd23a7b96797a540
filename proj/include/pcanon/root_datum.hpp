#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcanon/int_matrix.hpp"

namespace pcanon {

/// A root of the finite system, in simple-root coordinates.
struct Root {
  IntVector coords;          ///< beta = sum coords[s] * alpha_s
  std::int64_t norm = 0;     ///< (beta, beta), short roots normalized to 2
  IntVector coroot_coeffs;   ///< beta^vee = sum coroot_coeffs[s] * alpha_s^vee
  IntVector coroot_functional;  ///< <mu, beta^vee> = dot(mu, coroot_functional)

  std::int64_t height() const;
};

/// Input accepted by build_root_datum: either a Cartan type label such as
/// "A2", or an explicit Cartan matrix with optional root norms.
struct RootDatumSpec {
  std::optional<std::string> type;
  std::optional<IntMatrix> cartan;
  std::optional<std::vector<std::int64_t>> norms;

  static RootDatumSpec of_type(std::string label) { return {std::move(label), {}, {}}; }
  static RootDatumSpec of_matrix(IntMatrix a, std::optional<std::vector<std::int64_t>> norms = {}) {
    return {{}, std::move(a), std::move(norms)};
  }
};

/// Finite irreducible crystallographic root system.
///
/// The Euclidean space E is coordinatized by the simple roots, so every
/// root and every point of the root lattice is an integer vector.  The
/// Cartan matrix uses the convention cartan(s, t) = <alpha_s, alpha_t^vee>.
/// Immutable after construction.
class RootDatum {
 public:
  const std::string& label() const { return label_; }
  std::size_t rank() const { return cartan_.rows(); }

  const IntMatrix& cartan() const { return cartan_; }
  /// Symmetric Gram matrix (alpha_s, alpha_t).
  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::int64_t>& norms() const { return norms_; }

  /// Positive roots ordered by height, then by coordinates (descending).
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Root& highest_short_root() const { return positive_roots_[highest_short_index_]; }
  const IntVector& highest_short_root_coeffs() const { return highest_short_root().coords; }
  const IntVector& highest_short_coroot_coeffs() const { return highest_short_root().coroot_coeffs; }

  /// <alpha_s, alpha_t^vee> recomputed from the Gram matrix.
  std::int64_t pairing_from_vectors(std::size_t s, std::size_t t) const;
  /// <mu, alpha_t^vee> for mu in simple-root coordinates.
  std::int64_t simple_coroot_pairing(std::span<const std::int64_t> mu, std::size_t t) const;
  /// Apply the simple reflection s_t to mu.
  IntVector reflect(std::span<const std::int64_t> mu, std::size_t t) const;

  friend RootDatum build_root_datum(const RootDatumSpec& spec);

 private:
  RootDatum() = default;

  std::string label_;
  IntMatrix cartan_;
  IntMatrix gram_;
  std::vector<std::int64_t> norms_;
  std::vector<Root> positive_roots_;
  std::size_t highest_short_index_ = 0;
};

RootDatum build_root_datum(const RootDatumSpec& spec);
inline RootDatum build_root_datum(const std::string& type) {
  return build_root_datum(RootDatumSpec::of_type(type));
}

/// Positive roots as plain coordinate vectors, in the datum's canonical order.
std::vector<IntVector> positive_roots(const RootDatum& datum);

}  // namespace pcanon
