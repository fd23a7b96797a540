#pragma once

#include <string>

#include <json.hpp>

#include "pcanon/group_alg.hpp"
#include "pcanon/hecke.hpp"
#include "pcanon/recursion.hpp"
#include "pcanon/root_datum.hpp"
#include "pcanon/star_hecke.hpp"

namespace pcanon {

using nlohmann::json;

/// "0,1,0" -> {0,1,0}; the empty string and "e" give the empty word.
Word parse_word(const std::string& text);
std::string format_word(const Word& word);
/// Canonical reduced word as a compact label, "e" for the identity.
std::string element_label(const AffineWeylGroup& g, const AffineWeylElement& x);

RootDatumSpec root_datum_spec_from_json(const json& j);

json element_to_json(const AffineWeylGroup& g, const AffineWeylElement& x);
/// Accepts {"word":[...]}, a bare word array, or {"matrix":[[...]],"translation":[...]}.
AffineWeylElement element_from_json(const AffineWeylGroup& g, const json& j);

json laurent_to_json(const LaurentPoly& c);
LaurentPoly laurent_from_json(const json& j);

json group_alg_to_json(const AffineWeylGroup& g, const GroupAlgElt& t);
GroupAlgElt group_alg_from_json(const AffineWeylGroup& g, const json& j);

json hecke_to_json(const AffineWeylGroup& g, const HeckeElt& h);
HeckeElt hecke_from_json(const AffineWeylGroup& g, const json& j);

json star_hecke_to_json(const CosetTable& table, const StarHeckeElt& a);
StarHeckeElt star_hecke_from_json(const CosetTable& table, const json& j);

json library_to_json(const AffineWeylGroup& g, const CanonicalLibrary& lib, const std::string& type);
CanonicalLibrary library_from_json(const AffineWeylGroup& g, const json& j);

json bound_result_to_json(const CosetTable& table, const BoundResult& r);

}  // namespace pcanon
