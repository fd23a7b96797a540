#include "pcanon/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>

#include <boost/rational.hpp>

#include "pcanon/error.hpp"

namespace pcanon {
namespace {

using Rational = boost::rational<std::int64_t>;

// Gram matrices (alpha_s, alpha_t) of the built-in types, Bourbaki numbering.
IntMatrix gram_for_type(char family, std::size_t n) {
  IntMatrix g(n, n);
  auto bond = [&](std::size_t i, std::size_t j, std::int64_t value) {
    g(i, j) = value;
    g(j, i) = value;
  };
  switch (family) {
    case 'A':
      for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
      for (std::size_t i = 0; i + 1 < n; ++i) bond(i, i + 1, -1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) g(i, i) = 4;
      g(n - 1, n - 1) = 2;
      for (std::size_t i = 0; i + 1 < n; ++i) bond(i, i + 1, -2);
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) g(i, i) = 2;
      g(n - 1, n - 1) = 4;
      for (std::size_t i = 0; i + 2 < n; ++i) bond(i, i + 1, -1);
      bond(n - 2, n - 1, -2);
      break;
    case 'D':
      for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) bond(i, i + 1, -1);
      bond(n - 3, n - 1, -1);
      break;
    case 'F':
      g(0, 0) = 4;
      g(1, 1) = 4;
      g(2, 2) = 2;
      g(3, 3) = 2;
      bond(0, 1, -2);
      bond(1, 2, -2);
      bond(2, 3, -1);
      break;
    case 'G':
      g(0, 0) = 2;
      g(1, 1) = 6;
      bond(0, 1, -3);
      break;
    default:
      throw InvalidInput("unknown Cartan type family '" + std::string(1, family) + "'");
  }
  return g;
}

IntMatrix gram_from_label(const std::string& label) {
  if (label.size() < 2 || !std::isupper(static_cast<unsigned char>(label[0])))
    throw InvalidInput("malformed Cartan type '" + label + "'");
  std::size_t n = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i])))
      throw InvalidInput("malformed Cartan type '" + label + "'");
    n = n * 10 + static_cast<std::size_t>(label[i] - '0');
  }
  const char family = label[0];
  const bool ok = (family == 'A' && n >= 1 && n <= 4) || (family == 'B' && n >= 2 && n <= 4) ||
                  (family == 'C' && n >= 2 && n <= 4) || (family == 'D' && n == 4) ||
                  (family == 'F' && n == 4) || (family == 'G' && n == 2);
  if (!ok) throw InvalidInput("unsupported Cartan type '" + label + "' (built-in tables cover rank <= 4)");
  return gram_for_type(family, n);
}

bool is_connected(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t t = 0; t < n; ++t)
      if (!seen[t] && a(s, t) != 0) {
        seen[t] = true;
        stack.push_back(t);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

void validate_cartan_shape(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0 || a.cols() != n) throw InvalidInput("Cartan matrix must be square and non-empty");
  for (std::size_t s = 0; s < n; ++s) {
    if (a(s, s) != 2) throw InvalidInput("Cartan matrix diagonal entries must be 2");
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      if (a(s, t) > 0) throw InvalidInput("Cartan matrix off-diagonal entries must be <= 0");
      if ((a(s, t) == 0) != (a(t, s) == 0))
        throw InvalidInput("Cartan matrix zero pattern must be symmetric");
      const std::int64_t prod = a(s, t) * a(t, s);
      if (prod < 0 || prod > 3) throw InvalidInput("Cartan matrix bond products must lie in {0,1,2,3}");
    }
  }
  if (!is_connected(a)) throw InvalidInput("Cartan matrix is reducible");
}

// Root norms symmetrizing a: a(s,t) * norm(t) == a(t,s) * norm(s), shortest = 2.
std::vector<std::int64_t> symmetrizing_norms(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> norm(n, Rational(0));
  norm[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t t = 0; t < n; ++t) {
      if (t == s || a(s, t) == 0) continue;
      const Rational candidate = norm[s] * Rational(a(t, s), a(s, t));
      if (norm[t].numerator() == 0) {
        norm[t] = candidate;
        stack.push_back(t);
      } else if (norm[t] != candidate) {
        throw InvalidInput("Cartan matrix is not symmetrizable");
      }
    }
  }
  const Rational smallest = *std::min_element(norm.begin(), norm.end());
  std::vector<std::int64_t> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    const Rational scaled = norm[s] / smallest * 2;
    if (scaled.denominator() != 1) throw InvalidInput("root norms are not integral after normalization");
    out[s] = scaled.numerator();
  }
  return out;
}

bool positive_definite(const IntMatrix& g) {
  const std::size_t n = g.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = g(i, j);
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t pivot = c;
      while (pivot < k && m[pivot][c].numerator() == 0) ++pivot;
      if (pivot == k) return false;
      if (pivot != c) {
        std::swap(m[pivot], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (std::size_t r = c + 1; r < k; ++r) {
        const Rational f = m[r][c] / m[c][c];
        for (std::size_t j = c; j < k; ++j) m[r][j] -= f * m[c][j];
      }
    }
    if (det.numerator() <= 0) return false;
  }
  return true;
}

}  // namespace

std::int64_t Root::height() const { return std::accumulate(coords.begin(), coords.end(), std::int64_t{0}); }

std::int64_t RootDatum::pairing_from_vectors(std::size_t s, std::size_t t) const {
  return 2 * gram_(s, t) / gram_(t, t);
}

std::int64_t RootDatum::simple_coroot_pairing(std::span<const std::int64_t> mu, std::size_t t) const {
  std::int64_t acc = 0;
  for (std::size_t s = 0; s < rank(); ++s) acc += mu[s] * cartan_(s, t);
  return acc;
}

IntVector RootDatum::reflect(std::span<const std::int64_t> mu, std::size_t t) const {
  IntVector out(mu.begin(), mu.end());
  out[t] -= simple_coroot_pairing(mu, t);
  return out;
}

RootDatum build_root_datum(const RootDatumSpec& spec) {
  RootDatum d;
  if (spec.type) {
    d.gram_ = gram_from_label(*spec.type);
    d.label_ = *spec.type;
    const std::size_t n = d.gram_.rows();
    d.cartan_ = IntMatrix(n, n);
    d.norms_.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
      d.norms_[s] = d.gram_(s, s);
      for (std::size_t t = 0; t < n; ++t) d.cartan_(s, t) = 2 * d.gram_(s, t) / d.gram_(t, t);
    }
  } else if (spec.cartan) {
    const IntMatrix& a = *spec.cartan;
    validate_cartan_shape(a);
    const std::size_t n = a.rows();
    d.cartan_ = a;
    d.norms_ = symmetrizing_norms(a);
    if (spec.norms) {
      if (*spec.norms != d.norms_) throw InvalidInput("given root norms do not symmetrize the Cartan matrix");
    }
    d.gram_ = IntMatrix(n, n);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        const std::int64_t twice = a(s, t) * d.norms_[t];
        if (twice % 2 != 0) throw InvalidInput("Gram matrix is not integral");
        d.gram_(s, t) = twice / 2;
      }
    d.label_ = "cartan";
  } else {
    throw InvalidInput("root datum spec needs a type or a Cartan matrix");
  }

  validate_cartan_shape(d.cartan_);
  if (!positive_definite(d.gram_)) throw InvalidInput("Cartan matrix is not of finite type");

  const std::size_t n = d.rank();

  // Orbit closure of the simple roots under simple reflections, kept positive.
  std::set<IntVector> seen;
  std::vector<IntVector> order;
  std::queue<IntVector> queue;
  for (std::size_t s = 0; s < n; ++s) {
    IntVector e(n, 0);
    e[s] = 1;
    seen.insert(e);
    queue.push(e);
  }
  constexpr std::size_t kMaxRoots = 4096;
  while (!queue.empty()) {
    IntVector beta = queue.front();
    queue.pop();
    order.push_back(beta);
    for (std::size_t t = 0; t < n; ++t) {
      IntVector image = d.reflect(beta, t);
      if (std::any_of(image.begin(), image.end(), [](std::int64_t c) { return c < 0; })) continue;
      if (seen.insert(image).second) {
        if (seen.size() > kMaxRoots) throw InvalidInput("root enumeration did not terminate");
        queue.push(std::move(image));
      }
    }
  }

  for (auto& coords : order) {
    Root r;
    r.coords = coords;
    r.norm = 0;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) r.norm += coords[s] * d.gram_(s, t) * coords[t];
    r.coroot_coeffs.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
      const std::int64_t num = coords[s] * d.norms_[s];
      if (num % r.norm != 0) throw InvalidInput("coroot is not integral");
      r.coroot_coeffs[s] = num / r.norm;
    }
    r.coroot_functional.assign(n, 0);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) r.coroot_functional[s] += d.cartan_(s, t) * r.coroot_coeffs[t];
    d.positive_roots_.push_back(std::move(r));
  }
  std::sort(d.positive_roots_.begin(), d.positive_roots_.end(), [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coords > y.coords;
  });

  const std::int64_t short_norm = *std::min_element(d.norms_.begin(), d.norms_.end());
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < d.positive_roots_.size(); ++i) {
    const Root& r = d.positive_roots_[i];
    if (r.norm != short_norm) continue;
    if (!best || r.height() > d.positive_roots_[*best].height()) best = i;
  }
  d.highest_short_index_ = *best;
  return d;
}

std::vector<IntVector> positive_roots(const RootDatum& datum) {
  std::vector<IntVector> out;
  out.reserve(datum.positive_roots().size());
  for (const Root& r : datum.positive_roots()) out.push_back(r.coords);
  return out;
}

}  // namespace pcanon
