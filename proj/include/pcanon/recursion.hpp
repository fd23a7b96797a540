#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcanon/group_alg.hpp"
#include "pcanon/hecke.hpp"
#include "pcanon/star_hecke.hpp"

namespace pcanon {

/// Square matrix indexed by coset representatives in table order. Right
/// actions are written with row vectors, so products compose left to right.
template <class T>
using RecursionMatrix = std::vector<std::vector<T>>;

using XiMatrix = RecursionMatrix<GroupAlgElt>;
/// Entries are HeckeElt values supported on W_p.
using RhoMatrix = RecursionMatrix<HeckeElt>;

XiMatrix xi_identity(const CosetTable& table);
XiMatrix xi(const CosetTable& table, const AffineWeylElement& y);
XiMatrix xi(const CosetTable& table, const GroupAlgElt& y);
XiMatrix xi_mul(const XiMatrix& a, const XiMatrix& b);

RhoMatrix rho(const CosetTable& table, const StarHeckeElt& a);
RhoMatrix rho_mul(const CosetTable& table, const RhoMatrix& a, const RhoMatrix& b);
/// Entrywise F^{-1} followed by v = 1.
XiMatrix rho_specialize(const CosetTable& table, const RhoMatrix& m);

enum class PsiEntryKind { Zero, Move, StayDiagonal };

struct PsiEntry {
  std::size_t w = 0;
  std::size_t z = 0;
  PsiEntryKind kind = PsiEntryKind::Zero;
  std::string literal;
  std::string from_rho;
  /// Zero and Move entries are compared; StayDiagonal entries are only flagged.
  bool agrees = false;
};

struct PsiReport {
  Generator s = 0;
  std::vector<PsiEntry> entries;
  bool zero_pattern_agrees = true;
  bool move_entries_agree = true;
  std::size_t flagged = 0;
};

/// Compares the generator formula (w,z) -> H*_s / 1 / 0 with rho(H*_s).
PsiReport psi_generator_crosscheck(const CosetTable& table, Generator s);

/// Buckets t by coset: z = xbar w contributes F^{-1}(xbar) to bucket w.
std::vector<GroupAlgElt> first_row_decomposition(const CosetTable& table, const GroupAlgElt& t);
/// sum_w F(bucket_w) w.
GroupAlgElt first_row_reconstruct(const CosetTable& table, const std::vector<GroupAlgElt>& buckets);

/// y -> F(y) z on the support.
GroupAlgElt f_scale(const AffineWeylGroup& g, std::int64_t p, const GroupAlgElt& chi, const AffineWeylElement& z);

struct XiSizeRow {
  std::size_t w = 0;
  std::size_t z = 0;
  AffineWeylElement entry;
  double norm = 0;   ///< |x(0)|
  double bound = 0;  ///< (|y(0)| + diam A_0) / p
};

/// |x(0)| for the entries x of xi(y), next to (|y(0)| + diam A_0) / p.
std::vector<XiSizeRow> xi_size_stats(const CosetTable& table, const AffineWeylElement& y);
double euclidean_norm(const RootDatum& datum, const std::vector<double>& mu);

struct LibraryEntry {
  GroupAlgElt value;
  std::string provenance;
  bool trusted = false;
};

/// v = 1 specializations of p-canonical basis elements, supplied as input.
struct CanonicalLibrary {
  std::int64_t p = 0;
  std::map<AffineWeylElement, LibraryEntry> entries;

  /// Throws InvalidInput unless each value has coefficient 1 on its key
  /// and nonnegative coefficients.
  void validate() const;
};

enum class CertificateKind { None, Uncovered, ForcedOverflow, Exhausted };
std::string to_string(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::None;
  std::optional<AffineWeylElement> element;
  /// ForcedOverflow: the vectors forced by uniquely covered elements, with
  /// their minimal multiplicities.
  std::vector<std::pair<std::size_t, std::int64_t>> forced;
};

struct NonnegResult {
  bool feasible = false;
  std::vector<std::int64_t> multiplicities;
  Certificate certificate;
};

/// Is target in the Z>=0-span of the vectors? Depth-first branch and bound
/// on the longest remaining support element. Vectors must be nonnegative.
NonnegResult decompose_nonnegative(const AffineWeylGroup& g, const GroupAlgElt& target,
                                   const std::vector<GroupAlgElt>& vectors);

struct BoundVector {
  AffineWeylElement y;
  std::size_t w = 0;
  GroupAlgElt value;
};

/// V_{y,w} = f_scale(library[y], w) over keys y and representatives w with F(y) w <= x.
std::vector<BoundVector> admissible_vectors(const CosetTable& table, const AffineWeylElement& x,
                                            const CanonicalLibrary& library);

struct WitnessTerm {
  AffineWeylElement y;
  std::size_t w = 0;
  std::int64_t multiplicity = 0;
};

struct BoundResult {
  bool feasible = false;
  std::vector<WitnessTerm> witness;
  Certificate certificate;
  std::vector<BoundVector> vectors;
};

BoundResult check_lower_bound(const CosetTable& table, const AffineWeylElement& x, const GroupAlgElt& candidate,
                              const CanonicalLibrary& library);

}  // namespace pcanon
