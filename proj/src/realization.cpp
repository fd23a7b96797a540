#include "pcanon/realization.hpp"

#include "pcanon/error.hpp"

namespace pcanon {

Realization::Realization(GroupPtr group) : group_(std::move(group)) {
  const RootDatum& d = group_->datum();
  const std::size_t r = d.rank();
  const Root& high = d.highest_short_root();
  pairing_ = IntMatrix(r + 1, r + 1);
  pairing_(0, 0) = 2;
  for (std::size_t s = 0; s < r; ++s) {
    pairing_(0, s + 1) = -d.simple_coroot_pairing(high.coords, s);
    pairing_(s + 1, 0) = -high.coroot_functional[s];
    for (std::size_t t = 0; t < r; ++t) pairing_(s + 1, t + 1) = d.cartan()(s, t);
  }
  for (std::size_t s = 0; s <= r; ++s) {
    IntMatrix m = IntMatrix::identity(r + 1);
    for (std::size_t j = 0; j <= r; ++j) m(s, j) -= pairing_(j, s);
    generators_.push_back(std::move(m));
  }
}

const IntMatrix& Realization::generator_matrix(Generator s) const {
  group_->check_generator(s);
  return generators_[static_cast<std::size_t>(s)];
}

IntMatrix Realization::action_matrix(const AffineWeylElement& x) const {
  IntMatrix m = IntMatrix::identity(dimension());
  for (Generator s : group_->canonical_rex(x)) m = m * generators_[static_cast<std::size_t>(s)];
  return m;
}

IntMatrix Realization::dual_action_matrix(const AffineWeylElement& x) const {
  return action_matrix(inverse(x)).transpose();
}

IntVector Realization::a_h() const {
  IntVector v(dimension(), 0);
  const IntVector& c = group_->datum().highest_short_root_coeffs();
  for (std::size_t s = 0; s < c.size(); ++s) v[s + 1] = c[s];
  return v;
}

IntVector Realization::a_tilde_p(std::int64_t p) const {
  IntVector v = a_h();
  for (auto& c : v) c *= p - 1;
  v[0] += p;
  return v;
}

IntVector Realization::v_fix() const {
  IntVector v = a_h();
  v[0] += 1;
  return v;
}

IntVector Realization::p_basis_vector(Generator t, std::int64_t p) const {
  group_->check_generator(t);
  if (t == 0) return a_tilde_p(p);
  IntVector v(dimension(), 0);
  v[static_cast<std::size_t>(t)] = 1;
  return v;
}

IntVector Realization::scaled_point_functional(std::span<const std::int64_t> scaled_point) const {
  const RootDatum& d = group_->datum();
  IntVector out(dimension());
  out[0] = group_->wall_functional(0, scaled_point);
  for (std::size_t s = 0; s < d.rank(); ++s)
    out[s + 1] = d.norms()[s] / 2 * d.simple_coroot_pairing(scaled_point, s);
  return out;
}

RlzCoefsRecord rlzcoefs_report(const Realization& rlz, const CosetTable& table, std::size_t w, Generator s) {
  if (&rlz.group() != &table.group()) throw DatumMismatch("realization and coset table use different groups");
  if (w >= table.size()) throw InvalidInput("coset representative index out of range");
  RlzCoefsRecord rec;
  rec.w = w;
  rec.s = s;
  const IntVector image = rlz.action_matrix(table.rep(w)).column(static_cast<std::size_t>(s));
  rec.coeff_of_a_tilde = image[0];
  rec.divisible = image[0] % table.p() == 0;
  const CosetStep& step = table.step(w, s);
  rec.same_coset = step.stay;
  if (step.stay) {
    rec.wall_generator = step.target;
    rec.image_matches = image == rlz.p_basis_vector(step.target, table.p());
  }
  return rec;
}

std::vector<RlzCoefsRecord> rlzcoefs_table(const Realization& rlz, const CosetTable& table) {
  std::vector<RlzCoefsRecord> out;
  for (std::size_t w = 0; w < table.size(); ++w)
    for (Generator s = 0; s < static_cast<Generator>(table.group().num_generators()); ++s)
      out.push_back(rlzcoefs_report(rlz, table, w, s));
  return out;
}

}  // namespace pcanon
