#include "pcanon/affine_group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include <boost/rational.hpp>

#include "pcanon/error.hpp"

namespace pcanon {
namespace {

using Rational = boost::rational<std::int64_t>;

// Solve a x = b over Q for square invertible a.
std::vector<Rational> solve(const IntMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (m[pivot][c].numerator() == 0) ++pivot;
    std::swap(m[pivot], m[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].numerator() == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

bool AffineWeylElement::is_identity() const {
  if (std::any_of(translation.begin(), translation.end(), [](std::int64_t c) { return c != 0; })) return false;
  return linear == IntMatrix::identity(linear.rows());
}

AffineWeylElement operator*(const AffineWeylElement& x, const AffineWeylElement& y) {
  AffineWeylElement out;
  out.linear = x.linear * y.linear;
  out.linear_inv = y.linear_inv * x.linear_inv;
  out.translation = x.linear.apply(y.translation);
  for (std::size_t i = 0; i < out.translation.size(); ++i) out.translation[i] += x.translation[i];
  return out;
}

AffineWeylElement inverse(const AffineWeylElement& x) {
  AffineWeylElement out;
  out.linear = x.linear_inv;
  out.linear_inv = x.linear;
  out.translation = x.linear_inv.apply(x.translation);
  for (auto& c : out.translation) c = -c;
  return out;
}

AffineWeylGroup::AffineWeylGroup(RootDatum datum) : datum_(std::move(datum)) {
  const std::size_t n = rank();
  const Root& high = datum_.highest_short_root();

  // s~ = s_{alpha_h, 1}: mu -> s_{alpha_h}(mu) + alpha_h.
  AffineWeylElement affine;
  affine.linear = IntMatrix::identity(n);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t col = 0; col < n; ++col) affine.linear(row, col) -= high.coords[row] * high.coroot_functional[col];
  affine.linear_inv = affine.linear;
  affine.translation = high.coords;
  generators_.push_back(std::move(affine));

  for (std::size_t t = 0; t < n; ++t) {
    AffineWeylElement g;
    g.linear = IntMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) g.linear(t, col) -= datum_.cartan()(col, t);
    g.linear_inv = g.linear;
    g.translation.assign(n, 0);
    generators_.push_back(std::move(g));
  }

  // Vertices of A_0: 0 and varpi_s / c_s^vee; barycenter is their average.
  const IntMatrix at = datum_.cartan().transpose();
  const IntVector& cvee = datum_.highest_short_coroot_coeffs();
  std::vector<Rational> center(n, Rational(0));
  vertices_.assign(1, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Rational> e(n, Rational(0));
    e[s] = 1;
    const auto varpi = solve(at, e);
    std::vector<double> vertex(n);
    for (std::size_t i = 0; i < n; ++i) {
      center[i] += varpi[i] / cvee[s];
      vertex[i] = boost::rational_cast<double>(varpi[i] / cvee[s]);
    }
    vertices_.push_back(std::move(vertex));
  }
  std::int64_t denom = 1;
  for (auto& c : center) {
    c /= static_cast<std::int64_t>(n + 1);
    denom = std::lcm(denom, c.denominator());
  }
  scale_ = denom;
  barycenter_.resize(n);
  for (std::size_t i = 0; i < n; ++i) barycenter_[i] = (center[i] * denom).numerator();
}

std::shared_ptr<const AffineWeylGroup> AffineWeylGroup::create(RootDatum datum) {
  return std::make_shared<const AffineWeylGroup>(std::move(datum));
}

AffineWeylElement AffineWeylGroup::identity() const {
  AffineWeylElement e;
  e.linear = IntMatrix::identity(rank());
  e.linear_inv = e.linear;
  e.translation.assign(rank(), 0);
  return e;
}

void AffineWeylGroup::check_generator(Generator s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= num_generators())
    throw InvalidInput("generator index " + std::to_string(s) + " out of range 0.." + std::to_string(rank()));
}

void AffineWeylGroup::check_element(const AffineWeylElement& x) const {
  if (x.translation.size() != rank() || x.linear.rows() != rank())
    throw DatumMismatch("element does not belong to an affine Weyl group of rank " + std::to_string(rank()));
}

const AffineWeylElement& AffineWeylGroup::generator(Generator s) const {
  check_generator(s);
  return generators_[static_cast<std::size_t>(s)];
}

AffineWeylElement AffineWeylGroup::from_word(const Word& word) const {
  AffineWeylElement x = identity();
  for (Generator s : word) x = x * generator(s);
  return x;
}

AffineWeylElement AffineWeylGroup::mul(const AffineWeylElement& x, const AffineWeylElement& y) const {
  check_element(x);
  check_element(y);
  return x * y;
}

AffineWeylElement AffineWeylGroup::inv(const AffineWeylElement& x) const {
  check_element(x);
  return inverse(x);
}

IntVector AffineWeylGroup::scaled_alcove_point(const AffineWeylElement& x) const {
  IntVector out = x.linear.apply(barycenter_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale_ * x.translation[i];
  return out;
}

std::vector<std::vector<double>> AffineWeylGroup::alcove_vertices(const AffineWeylElement& x) const {
  std::vector<std::vector<double>> out;
  for (const auto& v : vertices_) {
    std::vector<double> image(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      image[i] = static_cast<double>(x.translation[i]);
      for (std::size_t j = 0; j < v.size(); ++j) image[i] += static_cast<double>(x.linear(i, j)) * v[j];
    }
    out.push_back(std::move(image));
  }
  return out;
}

std::int64_t AffineWeylGroup::length(const AffineWeylElement& x) const {
  const IntVector point = scaled_alcove_point(x);
  std::int64_t count = 0;
  for (const Root& beta : datum_.positive_roots()) {
    const std::int64_t value = dot(point, beta.coroot_functional);
    count += value > 0 ? value / scale_ : floor_div(-value, scale_) + 1;
  }
  return count;
}

std::int64_t AffineWeylGroup::wall_functional(Generator s, std::span<const std::int64_t> scaled_point) const {
  if (s == 0) return scale_ - dot(scaled_point, datum_.highest_short_root().coroot_functional);
  return datum_.simple_coroot_pairing(scaled_point, static_cast<std::size_t>(s - 1));
}

std::int64_t AffineWeylGroup::p_wall_functional(Generator t, std::int64_t p,
                                                std::span<const std::int64_t> scaled_point) const {
  if (t == 0) return p * scale_ - dot(scaled_point, datum_.highest_short_root().coroot_functional);
  return datum_.simple_coroot_pairing(scaled_point, static_cast<std::size_t>(t - 1));
}

bool AffineWeylGroup::is_right_descent(const AffineWeylElement& x, Generator s) const {
  check_generator(s);
  // s is a right descent of x iff the wall of s separates A_0 from x^{-1} A_0.
  const IntVector point = scaled_alcove_point(inverse(x));
  return wall_functional(s, point) < 0;
}

std::vector<Generator> AffineWeylGroup::right_descents(const AffineWeylElement& x) const {
  const IntVector point = scaled_alcove_point(inverse(x));
  std::vector<Generator> out;
  for (Generator s = 0; s < static_cast<Generator>(num_generators()); ++s)
    if (wall_functional(s, point) < 0) out.push_back(s);
  return out;
}

Word AffineWeylGroup::canonical_rex(const AffineWeylElement& x) const {
  check_element(x);
  Word reversed;
  AffineWeylElement cur = x;
  while (true) {
    const IntVector point = scaled_alcove_point(inverse(cur));
    Generator found = -1;
    for (Generator s = 0; s < static_cast<Generator>(num_generators()); ++s)
      if (wall_functional(s, point) < 0) {
        found = s;
        break;
      }
    if (found < 0) break;
    reversed.push_back(found);
    cur = cur * generators_[static_cast<std::size_t>(found)];
  }
  return Word(reversed.rbegin(), reversed.rend());
}

bool AffineWeylGroup::canonical_less(const AffineWeylElement& x, const AffineWeylElement& y) const {
  const auto lx = length(x);
  const auto ly = length(y);
  if (lx != ly) return lx < ly;
  return canonical_rex(x) < canonical_rex(y);
}

std::shared_ptr<const std::set<AffineWeylElement>> AffineWeylGroup::bruhat_interval(
    const AffineWeylElement& y) const {
  check_element(y);
  const Word rex = canonical_rex(y);
  if (rex.size() > bruhat_cap_)
    throw CapExceeded("Bruhat query on an element of length " + std::to_string(rex.size()) +
                      " exceeds the cap " + std::to_string(bruhat_cap_));
  {
    std::lock_guard lock(bruhat_mutex_);
    if (auto it = bruhat_cache_.find(y); it != bruhat_cache_.end()) return it->second;
  }
  // Subword property: the products of all subwords of a reduced word.
  std::set<AffineWeylElement> below{identity()};
  for (Generator s : rex) {
    std::vector<AffineWeylElement> extra;
    extra.reserve(below.size());
    for (const auto& z : below) extra.push_back(z * generators_[static_cast<std::size_t>(s)]);
    below.insert(extra.begin(), extra.end());
  }
  auto shared = std::make_shared<const std::set<AffineWeylElement>>(std::move(below));
  std::lock_guard lock(bruhat_mutex_);
  return bruhat_cache_.emplace(y, std::move(shared)).first->second;
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y) const {
  check_element(x);
  if (x == y) return true;
  const auto interval = bruhat_interval(y);
  return interval->contains(x);
}

AffineWeylElement AffineWeylGroup::frobenius(const AffineWeylElement& x, std::int64_t p) const {
  check_element(x);
  if (p < 1) throw InvalidInput("Frobenius parameter must be positive");
  AffineWeylElement out = x;
  for (auto& c : out.translation) c *= p;
  return out;
}

bool AffineWeylGroup::in_p_affine_subgroup(const AffineWeylElement& x, std::int64_t p) const {
  return std::all_of(x.translation.begin(), x.translation.end(), [p](std::int64_t c) { return c % p == 0; });
}

AffineWeylElement AffineWeylGroup::frobenius_inv(const AffineWeylElement& x, std::int64_t p) const {
  check_element(x);
  if (p < 1) throw InvalidInput("Frobenius parameter must be positive");
  if (!in_p_affine_subgroup(x, p)) throw DomainError("element is not in the p-affine Weyl group");
  AffineWeylElement out = x;
  for (auto& c : out.translation) c /= p;
  return out;
}

AffineWeylElement AffineWeylGroup::p_generator(Generator t, std::int64_t p) const {
  check_generator(t);
  if (t == 0) return frobenius(generators_[0], p);
  return generators_[static_cast<std::size_t>(t)];
}

CosetTable::CosetTable(GroupPtr group, std::int64_t p) : group_(std::move(group)), p_(p) {
  if (p_ < 2) throw InvalidInput("p must be at least 2");
  const AffineWeylGroup& g = *group_;
  const auto ngen = static_cast<Generator>(g.num_generators());

  auto inside = [&](const AffineWeylElement& x) {
    const IntVector point = g.scaled_alcove_point(x);
    for (Generator t = 0; t < ngen; ++t)
      if (g.p_wall_functional(t, p_, point) <= 0) return false;
    return true;
  };

  // Breadth-first search across walls that are not p-walls.
  std::set<AffineWeylElement> seen{g.identity()};
  std::queue<AffineWeylElement> queue;
  queue.push(g.identity());
  std::vector<AffineWeylElement> found;
  while (!queue.empty()) {
    AffineWeylElement w = queue.front();
    queue.pop();
    for (Generator s = 0; s < ngen; ++s) {
      AffineWeylElement ws = w * g.generator(s);
      if (seen.contains(ws) || !inside(ws)) continue;
      seen.insert(ws);
      queue.push(ws);
    }
    found.push_back(std::move(w));
  }
  std::sort(found.begin(), found.end(),
            [&](const AffineWeylElement& a, const AffineWeylElement& b) { return g.canonical_less(a, b); });
  reps_ = std::move(found);
  for (std::size_t i = 0; i < reps_.size(); ++i) index_.emplace(reps_[i], i);

  std::vector<AffineWeylElement> pgens;
  for (Generator t = 0; t < ngen; ++t) pgens.push_back(g.p_generator(t, p_));

  action_.assign(reps_.size(), std::vector<CosetStep>(static_cast<std::size_t>(ngen)));
  for (std::size_t w = 0; w < reps_.size(); ++w) {
    for (Generator s = 0; s < ngen; ++s) {
      const AffineWeylElement ws = reps_[w] * g.generator(s);
      CosetStep& step = action_[w][static_cast<std::size_t>(s)];
      if (auto it = index_.find(ws); it != index_.end()) {
        step = {false, static_cast<int>(it->second)};
        continue;
      }
      const AffineWeylElement conj = ws * inverse(reps_[w]);
      auto pos = std::find(pgens.begin(), pgens.end(), conj);
      if (pos == pgens.end()) throw Error("coset table: w s w^{-1} is not an S_p generator");
      step = {true, static_cast<int>(pos - pgens.begin())};
    }
    sample_points_.push_back(g.scaled_alcove_point(reps_[w]));
  }
}

std::shared_ptr<const CosetTable> CosetTable::create(GroupPtr group, std::int64_t p) {
  return std::make_shared<const CosetTable>(std::move(group), p);
}

std::optional<std::size_t> CosetTable::index_of(const AffineWeylElement& x) const {
  if (auto it = index_.find(x); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t CosetTable::act(std::size_t w, Generator s) const {
  const CosetStep& st = step(w, s);
  return st.stay ? w : static_cast<std::size_t>(st.target);
}

std::size_t CosetTable::act_word(std::size_t w, const Word& word) const {
  for (Generator s : word) w = act(w, s);
  return w;
}

std::size_t CosetTable::act(std::size_t w, const AffineWeylElement& x) const {
  return decompose(reps_[w] * x).rep_index;
}

CosetDecomposition CosetTable::decompose(const AffineWeylElement& x) const {
  const AffineWeylGroup& g = *group_;
  g.check_element(x);
  const auto ngen = static_cast<Generator>(g.num_generators());
  AffineWeylElement cur = x;
  AffineWeylElement xbar = g.identity();
  while (true) {
    const IntVector point = g.scaled_alcove_point(cur);
    Generator wall = -1;
    for (Generator t = 0; t < ngen; ++t)
      if (g.p_wall_functional(t, p_, point) < 0) {
        wall = t;
        break;
      }
    if (wall < 0) break;
    const AffineWeylElement reflection = g.p_generator(wall, p_);
    cur = reflection * cur;
    xbar = xbar * reflection;
  }
  auto idx = index_of(cur);
  if (!idx) throw Error("coset decomposition did not land on a representative");
  return {std::move(xbar), *idx};
}

CosetDecomposition coset_decompose(const AffineWeylElement& x, const CosetTable& table) {
  return table.decompose(x);
}

}  // namespace pcanon
