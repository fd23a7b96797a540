#include "pcanon/io.hpp"

#include <sstream>

#include "pcanon/error.hpp"

namespace pcanon {

Word parse_word(const std::string& text) {
  Word out;
  if (text.empty() || text == "e") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int s = 0;
    try {
      s = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse generator '" + item + "'");
    }
    if (used != item.size() || s < 0) throw InvalidInput("cannot parse generator '" + item + "'");
    out.push_back(s);
  }
  return out;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) out += (i ? "," : "") + std::to_string(word[i]);
  return out;
}

std::string element_label(const AffineWeylGroup& g, const AffineWeylElement& x) {
  std::string out;
  for (Generator s : g.canonical_rex(x)) out += std::to_string(s);
  return out.empty() ? "e" : out;
}

RootDatumSpec root_datum_spec_from_json(const json& j) {
  if (j.contains("type")) return RootDatumSpec::of_type(j.at("type").get<std::string>());
  if (!j.contains("cartan")) throw InvalidInput("root datum needs \"type\" or \"cartan\"");
  const auto rows = j.at("cartan").get<std::vector<std::vector<std::int64_t>>>();
  IntMatrix a(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InvalidInput("Cartan matrix must be square");
    for (std::size_t k = 0; k < rows.size(); ++k) a(i, k) = rows[i][k];
  }
  std::optional<std::vector<std::int64_t>> norms;
  if (j.contains("norms")) norms = j.at("norms").get<std::vector<std::int64_t>>();
  return RootDatumSpec::of_matrix(a, norms);
}

json element_to_json(const AffineWeylGroup& g, const AffineWeylElement& x) {
  return json{{"word", g.canonical_rex(x)}};
}

namespace {

AffineWeylElement element_from_matrix(const AffineWeylGroup& g, const json& j) {
  const auto rows = j.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
  const auto translation = j.at("translation").get<IntVector>();
  const std::size_t n = g.rank();
  if (rows.size() != n || translation.size() != n) throw DatumMismatch("element has the wrong rank");
  AffineWeylElement x;
  x.linear = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InvalidInput("element matrix must be square");
    for (std::size_t k = 0; k < n; ++k) x.linear(i, k) = rows[i][k];
  }
  // Finite Weyl group elements have small order, so the inverse is a power.
  IntMatrix power = x.linear;
  IntMatrix prev = IntMatrix::identity(n);
  for (int k = 0; k < 256 && !(power == IntMatrix::identity(n)); ++k) {
    prev = power;
    power = power * x.linear;
  }
  if (!(power == IntMatrix::identity(n))) throw InvalidInput("matrix is not in the finite Weyl group");
  x.linear_inv = prev;
  x.translation = translation;
  if (!(g.from_word(g.canonical_rex(x)) == x)) throw InvalidInput("matrix and translation do not define an element of W");
  return x;
}

}  // namespace

AffineWeylElement element_from_json(const AffineWeylGroup& g, const json& j) {
  if (j.is_array()) return g.from_word(j.get<Word>());
  if (j.is_string()) return g.from_word(parse_word(j.get<std::string>()));
  if (j.is_object() && j.contains("word")) return element_from_json(g, j.at("word"));
  if (j.is_object() && j.contains("matrix")) return element_from_matrix(g, j);
  throw InvalidInput("cannot read an element from " + j.dump());
}

json laurent_to_json(const LaurentPoly& c) {
  json out = json::object();
  for (const auto& [e, k] : c.terms()) out[std::to_string(e)] = k;
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  if (j.is_number_integer()) return LaurentPoly(j.get<std::int64_t>());
  std::map<int, std::int64_t> terms;
  for (const auto& [key, value] : j.items()) {
    try {
      terms[std::stoi(key)] += value.get<std::int64_t>();
    } catch (const std::invalid_argument&) {
      throw InvalidInput("bad exponent '" + key + "'");
    }
  }
  return LaurentPoly::from_terms(terms);
}

namespace {

template <class Terms>
std::vector<const typename Terms::value_type*> sorted_terms(const AffineWeylGroup& g, const Terms& terms) {
  std::vector<const typename Terms::value_type*> out;
  for (const auto& t : terms) out.push_back(&t);
  std::sort(out.begin(), out.end(), [&](auto a, auto b) { return g.canonical_less(a->first, b->first); });
  return out;
}

}  // namespace

json group_alg_to_json(const AffineWeylGroup& g, const GroupAlgElt& t) {
  json out = json::array();
  for (const auto* term : sorted_terms(g, t.terms()))
    out.push_back({{"word", g.canonical_rex(term->first)}, {"coeff", term->second}});
  return out;
}

GroupAlgElt group_alg_from_json(const AffineWeylGroup& g, const json& j) {
  if (!j.is_array()) throw InvalidInput("group ring element must be a JSON array");
  GroupAlgElt out;
  for (const auto& item : j) out.add(element_from_json(g, item.at("word")), item.value("coeff", std::int64_t{1}));
  return out;
}

json hecke_to_json(const AffineWeylGroup& g, const HeckeElt& h) {
  json out = json::array();
  for (const auto* term : sorted_terms(g, h.terms()))
    out.push_back({{"word", g.canonical_rex(term->first)}, {"coeff", laurent_to_json(term->second)}});
  return out;
}

HeckeElt hecke_from_json(const AffineWeylGroup& g, const json& j) {
  if (!j.is_array()) throw InvalidInput("Hecke element must be a JSON array");
  HeckeElt out;
  for (const auto& item : j) out.add(element_from_json(g, item.at("word")), laurent_from_json(item.at("coeff")));
  return out;
}

json star_hecke_to_json(const CosetTable& table, const StarHeckeElt& a) {
  const AffineWeylGroup& g = table.group();
  json out = json::array();
  for (const auto* term : sorted_terms(g, a.terms())) {
    json coeff = json::array();
    for (const auto& c : term->second.values()) coeff.push_back(laurent_to_json(c));
    out.push_back({{"word", g.canonical_rex(term->first)}, {"coeff", coeff}});
  }
  return out;
}

StarHeckeElt star_hecke_from_json(const CosetTable& table, const json& j) {
  if (!j.is_array()) throw InvalidInput("star Hecke element must be a JSON array");
  StarHeckeElt out;
  for (const auto& item : j) {
    const auto& coeff = item.at("coeff");
    if (!coeff.is_array() || coeff.size() != table.size())
      throw DatumMismatch("toral coefficient does not match the coset table size");
    std::vector<LaurentPoly> values;
    for (const auto& c : coeff) values.push_back(laurent_from_json(c));
    out.add(element_from_json(table.group(), item.at("word")), ToralFunction(std::move(values)));
  }
  return out;
}

json library_to_json(const AffineWeylGroup& g, const CanonicalLibrary& lib, const std::string& type) {
  json elements = json::array();
  for (const auto* entry : sorted_terms(g, lib.entries)) {
    json e{{"word", g.canonical_rex(entry->first)}, {"v1", group_alg_to_json(g, entry->second.value)}};
    if (!entry->second.provenance.empty()) e["provenance"] = entry->second.provenance;
    if (entry->second.trusted) e["trusted"] = true;
    elements.push_back(e);
  }
  return json{{"p", lib.p}, {"type", type}, {"elements", elements}};
}

CanonicalLibrary library_from_json(const AffineWeylGroup& g, const json& j) {
  CanonicalLibrary lib;
  lib.p = j.value("p", std::int64_t{0});
  for (const auto& item : j.at("elements")) {
    LibraryEntry entry;
    entry.value = group_alg_from_json(g, item.at("v1"));
    entry.provenance = item.value("provenance", std::string{});
    entry.trusted = item.value("trusted", false);
    const AffineWeylElement y = element_from_json(g, item.at("word"));
    if (!lib.entries.emplace(y, std::move(entry)).second) throw InvalidInput("library lists an element twice");
  }
  lib.validate();
  return lib;
}

json bound_result_to_json(const CosetTable& table, const BoundResult& r) {
  const AffineWeylGroup& g = table.group();
  json witness = json::array();
  for (const auto& t : r.witness)
    witness.push_back({{"y", g.canonical_rex(t.y)}, {"w", g.canonical_rex(table.rep(t.w))}, {"multiplicity", t.multiplicity}});
  json out{{"feasible", r.feasible}, {"witness", witness}, {"admissible_vectors", r.vectors.size()}};
  if (!r.feasible) {
    json cert{{"kind", to_string(r.certificate.kind)}};
    if (r.certificate.element) cert["element"] = g.canonical_rex(*r.certificate.element);
    json forced = json::array();
    for (const auto& [i, m] : r.certificate.forced)
      forced.push_back({{"y", g.canonical_rex(r.vectors[i].y)},
                        {"w", g.canonical_rex(table.rep(r.vectors[i].w))},
                        {"multiplicity", m}});
    if (!forced.empty()) cert["forced"] = forced;
    out["certificate"] = cert;
  }
  return out;
}

}  // namespace pcanon
