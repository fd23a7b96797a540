#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcanon/affine_group.hpp"

namespace pcanon {

/// The universal realization V_Z with basis {a_s : s in S}, index 0 = a_{s~}.
class Realization {
 public:
  explicit Realization(GroupPtr group);

  const AffineWeylGroup& group() const { return *group_; }
  std::size_t dimension() const { return pairing_.rows(); }

  /// pairing()(s, t) = <a_s, a_t^vee>: the affine Cartan matrix with alpha_{s~} = -alpha_h.
  const IntMatrix& pairing() const { return pairing_; }
  /// s(v) = v - <v, a_s^vee> a_s on coordinate vectors.
  const IntMatrix& generator_matrix(Generator s) const;
  IntMatrix action_matrix(const AffineWeylElement& x) const;
  /// Contragredient action on V*, in the dual basis.
  IntMatrix dual_action_matrix(const AffineWeylElement& x) const;

  IntVector a_h() const;
  IntVector a_tilde_p(std::int64_t p) const;
  IntVector v_fix() const;
  /// a_t for an S_p generator t: a_t for finite t, a_{s~_p} for t = 0.
  IntVector p_basis_vector(Generator t, std::int64_t p) const;

  /// Values on the basis of the functional attached to a point mu of E:
  /// (mu, alpha_s) on a_s for finite s and 1 - <mu, alpha_h^vee> on a_{s~},
  /// all multiplied by scale() and evaluated at a scaled point.
  IntVector scaled_point_functional(std::span<const std::int64_t> scaled_point) const;

 private:
  GroupPtr group_;
  IntMatrix pairing_;
  std::vector<IntMatrix> generators_;
};

struct RlzCoefsRecord {
  std::size_t w = 0;
  Generator s = 0;
  std::int64_t coeff_of_a_tilde = 0;
  bool divisible = false;
  bool same_coset = false;
  std::optional<Generator> wall_generator;
  std::optional<bool> image_matches;

  /// divisible iff same_coset, and the image matches in the stay case.
  bool consistent() const { return divisible == same_coset && image_matches.value_or(true); }
};

RlzCoefsRecord rlzcoefs_report(const Realization& rlz, const CosetTable& table, std::size_t w, Generator s);
std::vector<RlzCoefsRecord> rlzcoefs_table(const Realization& rlz, const CosetTable& table);

}  // namespace pcanon
