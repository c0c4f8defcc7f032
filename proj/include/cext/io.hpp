#pragma once

// JSON forms of presentations, certificates, balls and finite cochains.
// Words travel as their text form; rationals as "p/q" strings.

#include <string>

#include "json.hpp"

#include "cext/cayley.hpp"
#include "cext/dehn.hpp"
#include "cext/finitegrp.hpp"
#include "cext/presentations.hpp"

namespace cext {

using Json = nlohmann::json;

// {alphabet: [...], relators: [...]} or {family: "paper", truncation: N, form: "consistent"|"literal"}.
Presentation presentation_from_json(const Json& j);
Json presentation_to_json(const Presentation& p);

Json certificate_to_json(const AreaCertificate& c);
AreaCertificate certificate_from_json(const Json& j, const Presentation& p);

Json piece_to_json(const PieceReport& r);
Json ball_to_json(const Ball& b);

// A bare array of values (numbers or "p/q" strings), or {values, coefficients}.
// The degree is recovered from the length.
CochainVector cochain_from_json(const Json& j, const FiniteGroup& g, CoefficientRing fallback);
Json cochain_to_json(const CochainVector& f);
Json rational_to_json(const Rational& q);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cext
