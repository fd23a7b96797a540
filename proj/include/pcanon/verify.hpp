#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pcanon/affine_group.hpp"

namespace pcanon {

struct VerifyReport {
  std::string suite;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& what);
  nlohmann::json to_json() const;
};

/// All words of length 1..maxlen, plus the empty word.
std::vector<Word> words_up_to(std::size_t generators, std::size_t maxlen);

/// deodhar_expand against kl_product on every expression up to maxlen.
VerifyReport verify_deodhar(const AffineWeylGroup& g, std::size_t maxlen);
/// Both bimodule product formulas: every representative and expression up
/// to maxlen, then S_p prefixes up to prefix_len before expressions up to maxlen.
VerifyReport verify_past(const CosetTable& table, std::size_t maxlen, std::size_t prefix_len = 2);
/// The five toral relations on random pairs from the generated Boolean algebra.
VerifyReport verify_toral(const CosetTable& table, unsigned seed, std::size_t pairs = 100);
VerifyReport verify_rlzcoefs(const CosetTable& table);
/// Homomorphism on random pairs, and agreement with the graded action
/// matrices on generators and random words.
VerifyReport verify_xi(const CosetTable& table, unsigned seed, std::size_t pairs = 200, std::size_t words = 50);

}  // namespace pcanon
