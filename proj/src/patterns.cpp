#include "pcanon/patterns.hpp"

#include <algorithm>

#include "pcanon/error.hpp"

namespace pcanon {

std::vector<Subsequence> subsequences(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("expression length " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  std::vector<Subsequence> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    Subsequence e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint8_t>((code >> (n - 1 - i)) & 1U);
    out.push_back(std::move(e));
  }
  return out;
}

AffineWeylElement subsequence_element(const AffineWeylGroup& g, const Word& expr, const Subsequence& e) {
  AffineWeylElement x = g.identity();
  for (std::size_t i = 0; i < expr.size(); ++i)
    if (e[i]) x = x * g.generator(expr[i]);
  return x;
}

int defect(const AffineWeylGroup& g, const Word& expr, const Subsequence& e) {
  if (e.size() != expr.size()) throw InvalidInput("subsequence and expression lengths differ");
  AffineWeylElement cur = g.identity();
  std::int64_t len = 0;
  int d = 0;
  for (std::size_t i = 0; i < expr.size(); ++i) {
    const AffineWeylElement next = cur * g.generator(expr[i]);
    const std::int64_t next_len = g.length(next);
    const bool up = next_len > len;
    if (e[i]) {
      cur = next;
      len = next_len;
    } else {
      d += up ? 1 : -1;
    }
  }
  return d;
}

std::size_t Pattern::indeterminate_count() const {
  return static_cast<std::size_t>(std::count(types.begin(), types.end(), TermType::Star));
}

std::string Pattern::type_string() const {
  std::string out;
  for (TermType t : types) out += t == TermType::Star ? '*' : t == TermType::One ? '1' : '0';
  return out;
}

std::vector<TermType> Pattern::parse_types(const std::string& s) {
  std::vector<TermType> out;
  for (char ch : s) {
    switch (ch) {
      case '0': out.push_back(TermType::Zero); break;
      case '1': out.push_back(TermType::One); break;
      case '*': out.push_back(TermType::Star); break;
      default: throw InvalidInput(std::string("bad pattern type character '") + ch + "'");
    }
  }
  return out;
}

AffineWeylElement term_generator(const AffineWeylGroup& g, const Pattern& r, std::size_t i) {
  if (i < r.prefix_len) return g.p_generator(r.expr[i], r.p);
  return g.generator(r.expr[i]);
}

AffineWeylElement r_hat(const AffineWeylGroup& g, const Pattern& r) {
  AffineWeylElement x = g.identity();
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r.types[i] == TermType::One) x = x * term_generator(g, r, i);
  return x;
}

Subsequence Match::subsequence() const {
  Subsequence e(pattern.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const TermType t = pattern.types[i];
    e[i] = t == TermType::Star ? static_cast<std::uint8_t>(bits[i]) : static_cast<std::uint8_t>(t == TermType::One);
  }
  return e;
}

std::string Match::type_string() const {
  std::string out;
  for (auto b : bits) out += b < 0 ? '-' : static_cast<char>('0' + b);
  return out;
}

std::vector<std::int8_t> Match::parse_types(const std::string& s) {
  std::vector<std::int8_t> out;
  for (char ch : s) {
    if (ch == '-') out.push_back(-1);
    else if (ch == '0' || ch == '1') out.push_back(static_cast<std::int8_t>(ch - '0'));
    else throw InvalidInput(std::string("bad match type character '") + ch + "'");
  }
  return out;
}

std::vector<Match> matches(const Pattern& r) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r.types[i] == TermType::Star) free.push_back(i);
  std::vector<Match> out;
  for (const auto& bits : subsequences(free.size())) {
    Match c{r, std::vector<std::int8_t>(r.size(), -1)};
    for (std::size_t k = 0; k < free.size(); ++k) c.bits[free[k]] = static_cast<std::int8_t>(bits[k]);
    out.push_back(std::move(c));
  }
  return out;
}

bool pattern_admits(const Pattern& r, const Subsequence& e) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.types[i] == TermType::Star) continue;
    if (e[i] != static_cast<std::uint8_t>(r.types[i] == TermType::One)) return false;
  }
  return true;
}

std::string to_string(Decoration d) {
  switch (d) {
    case Decoration::U0: return "U0";
    case Decoration::U1: return "U1";
    case Decoration::D0: return "D0";
    case Decoration::D1: return "D1";
    case Decoration::Fixed0: return "-0";
    case Decoration::Fixed1: return "-1";
  }
  return "?";
}

DecoratedMatch twisted_stroll(const AffineWeylGroup& g, const Match& c, const AffineWeylElement& w) {
  const Pattern& r = c.pattern;
  if (c.bits.size() != r.size() || r.types.size() != r.size()) throw InvalidInput("match and pattern lengths differ");
  const AffineWeylElement w_inv = inverse(w);
  DecoratedMatch out;
  out.kept = g.identity();
  AffineWeylElement rhat = g.identity();
  out.stroll.push_back(g.identity());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const AffineWeylElement gen = term_generator(g, r, i);
    if (r.types[i] == TermType::Star) {
      if (c.bits[i] < 0) throw InvalidInput("indeterminate term without a match bit");
      const AffineWeylElement z = w * rhat;
      const AffineWeylElement t = z * gen * inverse(z);
      const AffineWeylElement& cur = out.stroll.back();
      const bool up = g.length(cur * t) > g.length(cur);
      const bool keep = c.bits[i] == 1;
      out.decorations.push_back(up ? (keep ? Decoration::U1 : Decoration::U0)
                                   : (keep ? Decoration::D1 : Decoration::D0));
      if (!keep) out.defect += up ? 1 : -1;
      if (keep) out.kept = out.kept * gen;
    } else {
      if (c.bits[i] >= 0) throw InvalidInput("fixed term carries a match bit");
      const bool one = r.types[i] == TermType::One;
      out.decorations.push_back(one ? Decoration::Fixed1 : Decoration::Fixed0);
      if (one) {
        out.kept = out.kept * gen;
        rhat = rhat * gen;
      }
    }
    out.stroll.push_back(w * out.kept * inverse(rhat) * w_inv);
  }
  return out;
}

std::vector<Pattern> patterns_star(const CosetTable& table, const Word& expr, std::size_t w) {
  if (w >= table.size()) throw InvalidInput("coset representative index out of range");
  struct Partial {
    std::vector<TermType> types;
    std::size_t z;  // coset rep of w * r^
  };
  std::vector<Partial> current{{{}, w}};
  for (Generator s : expr) {
    table.group().check_generator(s);
    std::vector<Partial> next;
    for (auto& part : current) {
      const CosetStep& step = table.step(part.z, s);
      if (step.stay) {
        part.types.push_back(TermType::Star);
        next.push_back(std::move(part));
        continue;
      }
      Partial zero = part;
      zero.types.push_back(TermType::Zero);
      next.push_back(std::move(zero));
      part.types.push_back(TermType::One);
      part.z = static_cast<std::size_t>(step.target);
      next.push_back(std::move(part));
    }
    current = std::move(next);
  }
  std::vector<Pattern> out;
  for (auto& part : current) out.push_back(Pattern{expr, std::move(part.types), 0, table.p()});
  return out;
}

std::vector<Pattern> patterns_past(const CosetTable& table, const Word& xexpr, const Word& yexpr) {
  for (Generator t : xexpr) table.group().check_generator(t);
  std::vector<Pattern> out;
  for (const Pattern& q : patterns_star(table, yexpr, 0)) {
    Pattern r;
    r.expr = xexpr;
    r.expr.insert(r.expr.end(), yexpr.begin(), yexpr.end());
    r.types.assign(xexpr.size(), TermType::Star);
    r.types.insert(r.types.end(), q.types.begin(), q.types.end());
    r.prefix_len = xexpr.size();
    r.p = table.p();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pcanon
