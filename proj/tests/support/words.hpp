#pragma once

#include <vector>

#include "pcanon/affine_group.hpp"

namespace testing_words {

inline std::vector<pcanon::Word> all_words(std::size_t k, std::size_t n) {
  std::vector<pcanon::Word> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<pcanon::Word> next;
    for (const auto& w : out)
      for (std::size_t s = 0; s < k; ++s) {
        pcanon::Word ws = w;
        ws.push_back(static_cast<pcanon::Generator>(s));
        next.push_back(ws);
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<pcanon::Word> words_up_to(std::size_t k, std::size_t n) {
  std::vector<pcanon::Word> out;
  for (std::size_t len = 0; len <= n; ++len)
    for (auto& w : all_words(k, len)) out.push_back(std::move(w));
  return out;
}

// Order of st, or 0 if it exceeds 6.
inline int braid_order(const pcanon::AffineWeylGroup& g, pcanon::Generator s, pcanon::Generator t) {
  const auto st = g.generator(s) * g.generator(t);
  auto cur = st;
  for (int m = 1; m <= 6; ++m) {
    if (cur.is_identity()) return m;
    cur = cur * st;
  }
  return 0;
}

inline pcanon::Word braid_word(pcanon::Generator s, pcanon::Generator t, int m) {
  pcanon::Word w;
  for (int i = 0; i < m; ++i) w.push_back(i % 2 == 0 ? s : t);
  return w;
}

}  // namespace testing_words
