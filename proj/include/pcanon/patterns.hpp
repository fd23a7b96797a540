#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcanon/affine_group.hpp"

namespace pcanon {

/// Type vector of a subsequence: 0 = discard, 1 = keep.
using Subsequence = std::vector<std::uint8_t>;

/// All 2^n subsequences of an expression of length n, in binary order with
/// the first term most significant. Throws CapExceeded when n > cap.
std::vector<Subsequence> subsequences(std::size_t n, std::size_t cap = 20);
/// Product of the kept generators.
AffineWeylElement subsequence_element(const AffineWeylGroup& g, const Word& expr, const Subsequence& e);
/// Deodhar defect: up-moves minus down-moves that discard a generator.
int defect(const AffineWeylGroup& g, const Word& expr, const Subsequence& e);

enum class TermType : std::uint8_t { Zero = 0, One = 1, Star = 2 };

/// Pattern for an expression in S_p^{prefix} S^{rest}: the first
/// `prefix_len` generators are S_p-generators (0 meaning s~_p).
struct Pattern {
  Word expr;
  std::vector<TermType> types;
  std::size_t prefix_len = 0;
  std::int64_t p = 0;

  std::size_t size() const { return expr.size(); }
  std::size_t indeterminate_count() const;
  /// e.g. "1**1111*".
  std::string type_string() const;
  static std::vector<TermType> parse_types(const std::string& s);

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// The W-element of term i of the pattern.
AffineWeylElement term_generator(const AffineWeylGroup& g, const Pattern& r, std::size_t i);
/// Product of the type-1 generators.
AffineWeylElement r_hat(const AffineWeylGroup& g, const Pattern& r);

/// Bits at indeterminate positions; -1 at fixed positions.
struct Match {
  Pattern pattern;
  std::vector<std::int8_t> bits;

  /// The subsequence e_c obtained by overlaying the match on the pattern.
  Subsequence subsequence() const;
  /// e.g. "-01----0" with '-' for a fixed term.
  std::string type_string() const;
  static std::vector<std::int8_t> parse_types(const std::string& s);
};

/// All matches of a pattern, in binary order of the indeterminate bits.
std::vector<Match> matches(const Pattern& r);
/// Does the subsequence agree with the fixed terms of the pattern?
bool pattern_admits(const Pattern& r, const Subsequence& e);

enum class Decoration : std::uint8_t { U0, U1, D0, D1, Fixed0, Fixed1 };
std::string to_string(Decoration d);

struct DecoratedMatch {
  std::vector<AffineWeylElement> stroll;  ///< w_0, ..., w_m
  std::vector<Decoration> decorations;
  int defect = 0;
  /// e_c, the product of all kept generators.
  AffineWeylElement kept;
};

/// The w-twisted Bruhat stroll w_i = w c_{<=i} w^{-1} with decorations.
/// S_p-prefix terms take part in the stroll like any other term.
DecoratedMatch twisted_stroll(const AffineWeylGroup& g, const Match& c, const AffineWeylElement& w);

/// The pattern set [expr]_*(w) for a coset representative, in lexicographic
/// order of type strings with 0 < 1 < *.
std::vector<Pattern> patterns_star(const CosetTable& table, const Word& expr, std::size_t w);
/// The pattern set [x|y]_{p|*} = x [y]_*(1): the S_p-prefix terms are indeterminate.
std::vector<Pattern> patterns_past(const CosetTable& table, const Word& xexpr, const Word& yexpr);

}  // namespace pcanon
