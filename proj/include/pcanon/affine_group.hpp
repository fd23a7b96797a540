#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "pcanon/int_matrix.hpp"
#include "pcanon/root_datum.hpp"

namespace pcanon {

/// Generator index: 0 is the affine generator, 1..rank the finite ones.
/// The same convention labels S_p, with 0 standing for the p-dilated
/// affine generator.
using Generator = int;
using Word = std::vector<Generator>;

/// Element t_lambda o m of W = W_f x| Z Phi_f, acting on E by mu -> m(mu) + lambda.
///
/// The inverse of the linear part is carried along so that inversion never
/// needs a matrix solve.
struct AffineWeylElement {
  IntMatrix linear;
  IntMatrix linear_inv;
  IntVector translation;

  std::size_t rank() const { return translation.size(); }
  bool is_identity() const;

  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.translation == b.translation && a.linear == b.linear;
  }
  friend std::strong_ordering operator<=>(const AffineWeylElement& a, const AffineWeylElement& b) {
    if (auto c = a.translation <=> b.translation; c != 0) return c;
    return a.linear <=> b.linear;
  }
};

/// Unchecked composition (lambda1, m1)(lambda2, m2) = (lambda1 + m1 lambda2, m1 m2).
AffineWeylElement operator*(const AffineWeylElement& x, const AffineWeylElement& y);
AffineWeylElement inverse(const AffineWeylElement& x);

/// The affine Weyl group of a root datum together with the alcove geometry
/// needed for lengths, descents and coset computations.
///
/// Points of E are handled scaled by an integer `scale()` so that the
/// barycenter of the fundamental alcove becomes an integer vector.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootDatum datum);
  AffineWeylGroup(const AffineWeylGroup&) = delete;
  AffineWeylGroup& operator=(const AffineWeylGroup&) = delete;

  static std::shared_ptr<const AffineWeylGroup> create(RootDatum datum);

  const RootDatum& datum() const { return datum_; }
  std::size_t rank() const { return datum_.rank(); }
  std::size_t num_generators() const { return datum_.rank() + 1; }

  AffineWeylElement identity() const;
  const AffineWeylElement& generator(Generator s) const;
  AffineWeylElement from_word(const Word& word) const;

  /// Checked product and inverse; throw DatumMismatch on rank mismatch.
  AffineWeylElement mul(const AffineWeylElement& x, const AffineWeylElement& y) const;
  AffineWeylElement inv(const AffineWeylElement& x) const;

  /// Number of hyperplanes separating A_0 and xA_0.
  std::int64_t length(const AffineWeylElement& x) const;
  bool is_right_descent(const AffineWeylElement& x, Generator s) const;
  std::vector<Generator> right_descents(const AffineWeylElement& x) const;
  /// Reduced word built by peeling off the smallest right descent.
  Word canonical_rex(const AffineWeylElement& x) const;

  /// Order by length, then canonical reduced word.
  bool canonical_less(const AffineWeylElement& x, const AffineWeylElement& y) const;

  /// Bruhat order via the subword property; throws CapExceeded when
  /// length(y) exceeds the cap.
  bool bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y) const;
  std::size_t bruhat_cap() const { return bruhat_cap_; }
  void set_bruhat_cap(std::size_t cap) { bruhat_cap_ = cap; }
  /// All elements below y (including y) under the Bruhat order.
  std::shared_ptr<const std::set<AffineWeylElement>> bruhat_interval(const AffineWeylElement& y) const;

  AffineWeylElement frobenius(const AffineWeylElement& x, std::int64_t p) const;
  /// Throws DomainError unless x lies in W_p.
  AffineWeylElement frobenius_inv(const AffineWeylElement& x, std::int64_t p) const;
  bool in_p_affine_subgroup(const AffineWeylElement& x, std::int64_t p) const;

  /// Common denominator of the fundamental alcove barycenter.
  std::int64_t scale() const { return scale_; }
  /// scale() * barycenter of A_0, in simple-root coordinates.
  const IntVector& scaled_barycenter() const { return barycenter_; }
  /// scale() * x(barycenter), i.e. a point inside the alcove xA_0.
  IntVector scaled_alcove_point(const AffineWeylElement& x) const;
  /// Vertices of the alcove xA_0 in simple-root coordinates; the first is x(0).
  std::vector<std::vector<double>> alcove_vertices(const AffineWeylElement& x) const;

  /// scale() * f_s(mu) for the affine functional f_s cutting out the wall of
  /// A_0 fixed by s: alpha_s^vee for finite s, 1 - alpha_h^vee for s = 0.
  std::int64_t wall_functional(Generator s, std::span<const std::int64_t> scaled_point) const;
  /// Same for the walls of the fundamental p-alcove: p - alpha_h^vee for 0.
  std::int64_t p_wall_functional(Generator t, std::int64_t p, std::span<const std::int64_t> scaled_point) const;

  /// S_p generator as an element of W: finite generators are shared, the
  /// affine one is F(s~).
  AffineWeylElement p_generator(Generator t, std::int64_t p) const;

  void check_generator(Generator s) const;
  void check_element(const AffineWeylElement& x) const;

 private:
  RootDatum datum_;
  std::vector<AffineWeylElement> generators_;
  std::int64_t scale_ = 1;
  IntVector barycenter_;
  std::vector<std::vector<double>> vertices_;
  std::size_t bruhat_cap_ = 16;

  mutable std::mutex bruhat_mutex_;
  mutable std::map<AffineWeylElement, std::shared_ptr<const std::set<AffineWeylElement>>> bruhat_cache_;
};

using GroupPtr = std::shared_ptr<const AffineWeylGroup>;

/// One entry of the right action of S on the coset representatives.
struct CosetStep {
  bool stay = false;
  /// stay: S_p generator t with w s w^{-1} = t; move: index of w s.
  int target = 0;
};

/// Decomposition x = xbar * w with xbar in W_p and w a coset representative.
struct CosetDecomposition {
  AffineWeylElement xbar;
  std::size_t rep_index = 0;
};

/// Minimal length representatives of W_p \ W and the right W-action on them.
class CosetTable {
 public:
  CosetTable(GroupPtr group, std::int64_t p);
  static std::shared_ptr<const CosetTable> create(GroupPtr group, std::int64_t p);

  const AffineWeylGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::int64_t p() const { return p_; }
  std::size_t size() const { return reps_.size(); }

  const std::vector<AffineWeylElement>& reps() const { return reps_; }
  const AffineWeylElement& rep(std::size_t i) const { return reps_[i]; }
  /// Index of a representative, or nullopt if x is not one.
  std::optional<std::size_t> index_of(const AffineWeylElement& x) const;

  const CosetStep& step(std::size_t w, Generator s) const { return action_[w][static_cast<std::size_t>(s)]; }
  bool stays(std::size_t w, Generator s) const { return step(w, s).stay; }
  /// w * s on coset representatives.
  std::size_t act(std::size_t w, Generator s) const;
  /// w * x for an arbitrary element x.
  std::size_t act(std::size_t w, const AffineWeylElement& x) const;
  std::size_t act_word(std::size_t w, const Word& word) const;

  /// Folds x(c) into the fundamental p-alcove using S_p reflections.
  CosetDecomposition decompose(const AffineWeylElement& x) const;

  /// scale() * barycenter of each alcove w A_0.
  const std::vector<IntVector>& sample_points() const { return sample_points_; }

 private:
  GroupPtr group_;
  std::int64_t p_;
  std::vector<AffineWeylElement> reps_;
  std::map<AffineWeylElement, std::size_t> index_;
  std::vector<std::vector<CosetStep>> action_;
  std::vector<IntVector> sample_points_;
};

using TablePtr = std::shared_ptr<const CosetTable>;

CosetDecomposition coset_decompose(const AffineWeylElement& x, const CosetTable& table);

}  // namespace pcanon
