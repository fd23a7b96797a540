#include "pcanon/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pcanon/error.hpp"

namespace pcanon {

namespace {

XiMatrix zero_xi(std::size_t n) { return XiMatrix(n, std::vector<GroupAlgElt>(n)); }

std::string p_string(const AffineWeylGroup& g, std::int64_t p, const HeckeElt& h) {
  std::string s = frobenius_inv(g, h, p).to_string(g);
  for (std::size_t pos = 0; (pos = s.find("H_", pos)) != std::string::npos; pos += 6) s.replace(pos, 2, "H^(p)_");
  return s;
}

}  // namespace

XiMatrix xi_identity(const CosetTable& table) {
  XiMatrix out = zero_xi(table.size());
  for (std::size_t w = 0; w < table.size(); ++w) out[w][w] = GroupAlgElt::basis(table.group().identity());
  return out;
}

XiMatrix xi(const CosetTable& table, const AffineWeylElement& y) {
  const AffineWeylGroup& g = table.group();
  g.check_element(y);
  XiMatrix out = zero_xi(table.size());
  for (std::size_t w = 0; w < table.size(); ++w) {
    const CosetDecomposition d = table.decompose(table.rep(w) * y);
    out[w][d.rep_index].add(g.frobenius_inv(d.xbar, table.p()), 1);
  }
  return out;
}

XiMatrix xi(const CosetTable& table, const GroupAlgElt& y) {
  XiMatrix out = zero_xi(table.size());
  for (const auto& [x, c] : y.terms()) {
    const XiMatrix m = xi(table, x);
    for (std::size_t w = 0; w < table.size(); ++w)
      for (std::size_t z = 0; z < table.size(); ++z)
        if (!m[w][z].is_zero()) out[w][z] += c * m[w][z];
  }
  return out;
}

XiMatrix xi_mul(const XiMatrix& a, const XiMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DatumMismatch("matrix sizes differ");
  XiMatrix out = zero_xi(n);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u) {
      if (a[w][u].is_zero()) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (!b[u][z].is_zero()) out[w][z] += a[w][u] * b[u][z];
    }
  return out;
}

RhoMatrix rho(const CosetTable& table, const StarHeckeElt& a) {
  const std::size_t n = table.size();
  RhoMatrix out(n, std::vector<HeckeElt>(n));
  for (std::size_t w = 0; w < n; ++w) {
    const PAstElt row = past_right_act(table, past_basis(table, w), a);
    for (const auto& [z, c] : row.terms()) {
      const CosetDecomposition d = table.decompose(z);
      out[w][d.rep_index].add(d.xbar, c);
    }
  }
  return out;
}

RhoMatrix rho_mul(const CosetTable& table, const RhoMatrix& a, const RhoMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DatumMismatch("matrix sizes differ");
  RhoMatrix out(n, std::vector<HeckeElt>(n));
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u) {
      if (a[w][u].is_zero()) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (!b[u][z].is_zero()) out[w][z] += hp_mul(table.group(), table.p(), a[w][u], b[u][z]);
    }
  return out;
}

XiMatrix rho_specialize(const CosetTable& table, const RhoMatrix& m) {
  XiMatrix out = zero_xi(m.size());
  for (std::size_t w = 0; w < m.size(); ++w)
    for (std::size_t z = 0; z < m.size(); ++z)
      out[w][z] = v1_specialize(frobenius_inv(table.group(), m[w][z], table.p()));
  return out;
}

PsiReport psi_generator_crosscheck(const CosetTable& table, Generator s) {
  const AffineWeylGroup& g = table.group();
  g.check_generator(s);
  const RhoMatrix r = rho(table, StarHeckeElt::basis(table, g.generator(s)));
  const HeckeElt one = HeckeElt::basis(g.identity());
  PsiReport report;
  report.s = s;
  for (std::size_t w = 0; w < table.size(); ++w)
    for (std::size_t z = 0; z < table.size(); ++z) {
      PsiEntry e;
      e.w = w;
      e.z = z;
      e.from_rho = p_string(g, table.p(), r[w][z]);
      if (table.act(w, s) != z) {
        e.kind = PsiEntryKind::Zero;
        e.literal = "0";
        e.agrees = r[w][z].is_zero();
        report.zero_pattern_agrees = report.zero_pattern_agrees && e.agrees;
      } else if (w != z) {
        e.kind = PsiEntryKind::Move;
        e.literal = "1";
        e.agrees = r[w][z] == one;
        report.move_entries_agree = report.move_entries_agree && e.agrees;
      } else {
        e.kind = PsiEntryKind::StayDiagonal;
        e.literal = "H*_" + std::to_string(s);
        ++report.flagged;
      }
      report.entries.push_back(std::move(e));
    }
  return report;
}

std::vector<GroupAlgElt> first_row_decomposition(const CosetTable& table, const GroupAlgElt& t) {
  std::vector<GroupAlgElt> out(table.size());
  for (const auto& [z, c] : t.terms()) {
    const CosetDecomposition d = table.decompose(z);
    out[d.rep_index].add(table.group().frobenius_inv(d.xbar, table.p()), c);
  }
  return out;
}

GroupAlgElt first_row_reconstruct(const CosetTable& table, const std::vector<GroupAlgElt>& buckets) {
  if (buckets.size() != table.size()) throw DatumMismatch("bucket count differs from the coset table size");
  GroupAlgElt out;
  for (std::size_t w = 0; w < buckets.size(); ++w)
    out += f_scale(table.group(), table.p(), buckets[w], table.rep(w));
  return out;
}

GroupAlgElt f_scale(const AffineWeylGroup& g, std::int64_t p, const GroupAlgElt& chi, const AffineWeylElement& z) {
  GroupAlgElt out;
  for (const auto& [y, c] : chi.terms()) out.add(g.frobenius(y, p) * z, c);
  return out;
}

double euclidean_norm(const RootDatum& datum, const std::vector<double>& mu) {
  double sq = 0;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < mu.size(); ++j) sq += mu[i] * static_cast<double>(datum.gram()(i, j)) * mu[j];
  return std::sqrt(std::max(sq, 0.0));
}

std::vector<XiSizeRow> xi_size_stats(const CosetTable& table, const AffineWeylElement& y) {
  const AffineWeylGroup& g = table.group();
  const auto vertices = g.alcove_vertices(g.identity());
  double diam = 0;
  for (const auto& a : vertices)
    for (const auto& b : vertices) {
      std::vector<double> d(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
      diam = std::max(diam, euclidean_norm(g.datum(), d));
    }
  auto origin_norm = [&](const AffineWeylElement& x) {
    return euclidean_norm(g.datum(), std::vector<double>(x.translation.begin(), x.translation.end()));
  };
  const double bound = (origin_norm(y) + diam) / static_cast<double>(table.p());
  std::vector<XiSizeRow> out;
  const XiMatrix m = xi(table, y);
  for (std::size_t w = 0; w < m.size(); ++w)
    for (std::size_t z = 0; z < m.size(); ++z)
      for (const auto& [x, c] : m[w][z].terms()) out.push_back({w, z, x, origin_norm(x), bound});
  return out;
}

void CanonicalLibrary::validate() const {
  for (const auto& [y, entry] : entries) {
    if (entry.value.coeff(y) != 1) throw InvalidInput("library value does not have coefficient 1 on its key");
    if (!entry.value.nonnegative()) throw InvalidInput("library value has a negative coefficient");
  }
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::None: return "none";
    case CertificateKind::Uncovered: return "uncovered";
    case CertificateKind::ForcedOverflow: return "forced_overflow";
    case CertificateKind::Exhausted: return "exhausted";
  }
  return "?";
}

namespace {

class Decomposer {
 public:
  Decomposer(const AffineWeylGroup& g, const std::vector<GroupAlgElt>& vectors)
      : g_(g), vectors_(vectors), mult_(vectors.size(), 0), decided_(vectors.size(), false) {}

  bool search(const GroupAlgElt& residual) {
    if (residual.is_zero()) return true;
    for (const auto& [u, c] : residual.terms())
      if (!coverable(u)) return false;
    const AffineWeylElement z = longest(residual);
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      if (decided_[i] || vectors_[i].coeff(z) <= 0) continue;
      std::int64_t cap = -1;
      for (const auto& [u, c] : vectors_[i].terms()) {
        const std::int64_t ratio = residual.coeff(u) / c;
        cap = cap < 0 ? ratio : std::min(cap, ratio);
      }
      decided_[i] = true;
      for (std::int64_t m = cap; m >= 0; --m) {
        mult_[i] = m;
        if (search(residual - m * vectors_[i])) return true;
      }
      decided_[i] = false;
      mult_[i] = 0;
      return false;
    }
    return false;
  }

  AffineWeylElement longest(const GroupAlgElt& t) const {
    const AffineWeylElement* best = nullptr;
    for (const auto& [u, c] : t.terms())
      if (best == nullptr || g_.canonical_less(*best, u)) best = &u;
    return *best;
  }

  const std::vector<std::int64_t>& multiplicities() const { return mult_; }

 private:
  bool coverable(const AffineWeylElement& u) const {
    for (std::size_t i = 0; i < vectors_.size(); ++i)
      if (!decided_[i] && vectors_[i].coeff(u) > 0) return true;
    return false;
  }

  const AffineWeylGroup& g_;
  const std::vector<GroupAlgElt>& vectors_;
  std::vector<std::int64_t> mult_;
  std::vector<bool> decided_;
};

Certificate infeasibility_certificate(const AffineWeylGroup& g, const GroupAlgElt& target,
                                      const std::vector<GroupAlgElt>& vectors) {
  std::vector<AffineWeylElement> support;
  for (const auto& [u, c] : target.terms()) support.push_back(u);
  std::sort(support.begin(), support.end(), [&](const auto& a, const auto& b) { return g.canonical_less(b, a); });

  Certificate cert;
  std::map<std::size_t, std::int64_t> forced;
  for (const auto& u : support) {
    std::vector<std::size_t> cover;
    for (std::size_t i = 0; i < vectors.size(); ++i)
      if (vectors[i].coeff(u) > 0) cover.push_back(i);
    if (cover.empty()) {
      cert.kind = CertificateKind::Uncovered;
      cert.element = u;
      return cert;
    }
    if (cover.size() == 1) {
      const std::int64_t need = target.coeff(u), per = vectors[cover[0]].coeff(u);
      auto& m = forced[cover[0]];
      m = std::max(m, (need + per - 1) / per);
    }
  }
  GroupAlgElt sum;
  for (const auto& [i, m] : forced) sum += m * vectors[i];
  std::vector<AffineWeylElement> sum_support;
  for (const auto& [u, c] : sum.terms()) sum_support.push_back(u);
  std::sort(sum_support.begin(), sum_support.end(),
            [&](const auto& a, const auto& b) { return g.canonical_less(a, b); });
  for (const auto& u : sum_support)
    if (sum.coeff(u) > target.coeff(u)) {
      cert.kind = CertificateKind::ForcedOverflow;
      cert.element = u;
      for (const auto& [i, m] : forced)
        if (vectors[i].coeff(u) > 0) cert.forced.emplace_back(i, m);
      return cert;
    }
  cert.kind = CertificateKind::Exhausted;
  return cert;
}

}  // namespace

NonnegResult decompose_nonnegative(const AffineWeylGroup& g, const GroupAlgElt& target,
                                   const std::vector<GroupAlgElt>& vectors) {
  if (!target.nonnegative()) throw InvalidInput("target has a negative coefficient");
  for (const auto& v : vectors)
    if (!v.nonnegative() || v.is_zero()) throw InvalidInput("vectors must be nonzero and nonnegative");
  NonnegResult out;
  Decomposer search(g, vectors);
  if (search.search(target)) {
    out.feasible = true;
    out.multiplicities = search.multiplicities();
    GroupAlgElt sum;
    for (std::size_t i = 0; i < vectors.size(); ++i) sum += out.multiplicities[i] * vectors[i];
    if (sum != target) throw Error("decomposition witness does not re-sum to the target");
    return out;
  }
  out.multiplicities.assign(vectors.size(), 0);
  out.certificate = infeasibility_certificate(g, target, vectors);
  return out;
}

std::vector<BoundVector> admissible_vectors(const CosetTable& table, const AffineWeylElement& x,
                                            const CanonicalLibrary& library) {
  const AffineWeylGroup& g = table.group();
  std::vector<AffineWeylElement> keys;
  for (const auto& [y, entry] : library.entries) keys.push_back(y);
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) { return g.canonical_less(a, b); });
  std::vector<BoundVector> out;
  for (const auto& y : keys)
    for (std::size_t w = 0; w < table.size(); ++w) {
      const AffineWeylElement top = g.frobenius(y, table.p()) * table.rep(w);
      if (!g.bruhat_leq(top, x)) continue;
      out.push_back({y, w, f_scale(g, table.p(), library.entries.at(y).value, table.rep(w))});
    }
  return out;
}

BoundResult check_lower_bound(const CosetTable& table, const AffineWeylElement& x, const GroupAlgElt& candidate,
                              const CanonicalLibrary& library) {
  const AffineWeylGroup& g = table.group();
  g.check_element(x);
  if (!candidate.nonnegative()) throw InvalidInput("candidate has a negative coefficient");
  if (library.entries.empty() && !candidate.is_zero()) throw InvalidInput("empty library with a nonzero candidate");
  if (library.p != 0 && library.p != table.p()) throw DatumMismatch("library and coset table use different p");
  library.validate();
  for (const auto& [y, entry] : library.entries)
    if (!entry.trusted && g.length(y) >= g.length(x))
      throw InvalidInput("library key is not shorter than x and is not marked trusted");

  BoundResult out;
  out.vectors = admissible_vectors(table, x, library);
  std::vector<GroupAlgElt> values;
  for (const auto& v : out.vectors) values.push_back(v.value);
  const NonnegResult r = decompose_nonnegative(g, candidate, values);
  out.feasible = r.feasible;
  out.certificate = r.certificate;
  for (std::size_t i = 0; i < out.vectors.size(); ++i)
    if (r.multiplicities[i] > 0) out.witness.push_back({out.vectors[i].y, out.vectors[i].w, r.multiplicities[i]});
  return out;
}

}  // namespace pcanon
