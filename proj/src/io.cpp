#include "cext/io.hpp"

#include <fstream>
#include <sstream>

namespace cext {

namespace {

template <typename T>
T field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is missing \"" + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " field \"" + key + "\": " + e.what());
  }
}

Rational rational_from_json(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorCode::InvalidArgument, "cochain values must be integers or \"p/q\" strings");
}

}  // namespace

Presentation presentation_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "presentation must be a JSON object");
  if (j.contains("family")) {
    const auto family = field<std::string>(j, "family", "presentation");
    if (family != "paper") throw Error(ErrorCode::InvalidArgument, "unknown presentation family '" + family + "'");
    const std::size_t truncation =
        j.contains("truncation") ? field<std::size_t>(j, "truncation", "presentation") : kDefaultTruncation;
    const RelatorForm form = j.contains("form") ? parse_relator_form(field<std::string>(j, "form", "presentation"))
                                                : RelatorForm::consistent;
    return Presentation::paper_family(truncation, form);
  }
  auto names = field<std::vector<std::string>>(j, "alphabet", "presentation");
  auto texts = field<std::vector<std::string>>(j, "relators", "presentation");
  auto alphabet = std::make_shared<const Alphabet>(std::move(names));
  std::vector<Word> relators;
  for (const auto& t : texts) relators.push_back(parse_word(t, alphabet));
  return Presentation::from_relators(alphabet, std::move(relators));
}

Json presentation_to_json(const Presentation& p) {
  if (p.is_family()) {
    return {{"family", "paper"}, {"truncation", *p.truncation()}, {"form", to_string(p.form())}};
  }
  Json relators = Json::array();
  for (const Word& r : p.relators()) relators.push_back(to_string(r));
  return {{"alphabet", p.alphabet()->names()}, {"relators", relators}};
}

Json certificate_to_json(const AreaCertificate& c) {
  Json factors = Json::array();
  for (const auto& f : c.factors) {
    factors.push_back({{"conjugator", to_string(f.conjugator)}, {"index", f.index}, {"sign", f.sign}});
  }
  return {{"word", to_string(c.word)}, {"factors", factors}, {"weight", c.weight}};
}

AreaCertificate certificate_from_json(const Json& j, const Presentation& p) {
  AreaCertificate c;
  c.word = parse_word(field<std::string>(j, "word", "certificate"), p.alphabet());
  c.weight = field<std::int64_t>(j, "weight", "certificate");
  for (const Json& f : field<Json>(j, "factors", "certificate")) {
    CertificateFactor factor;
    factor.conjugator = parse_word(field<std::string>(f, "conjugator", "factor"), p.alphabet());
    factor.index = field<std::size_t>(f, "index", "factor");
    factor.sign = field<int>(f, "sign", "factor");
    if (factor.sign != 1 && factor.sign != -1) throw Error(ErrorCode::InvalidArgument, "factor sign must be +-1");
    c.factors.push_back(std::move(factor));
  }
  return c;
}

Json rational_to_json(const Rational& q) { return format_rational(q); }

Json piece_to_json(const PieceReport& r) {
  return {{"first", r.first},
          {"second", r.second},
          {"inverse", r.inverse},
          {"piece", to_string(r.piece)},
          {"length", r.length},
          {"ratio", format_rational(r.worst_ratio())}};
}

Json ball_to_json(const Ball& b) {
  Json words = Json::array();
  for (const Word& w : b.representatives()) words.push_back(to_string(w));
  return {{"radius", b.radius()}, {"size", b.size()}, {"sphere_sizes", b.sphere_sizes()}, {"words", words}};
}

CochainVector cochain_from_json(const Json& j, const FiniteGroup& g, CoefficientRing fallback) {
  Json values = j;
  CoefficientRing coefficients = fallback;
  if (j.is_object()) {
    values = field<Json>(j, "values", "cochain");
    if (j.contains("coefficients")) coefficients = CoefficientRing::parse(field<std::string>(j, "coefficients", "cochain"));
  }
  if (!values.is_array()) throw Error(ErrorCode::InvalidArgument, "cochain values must be a JSON array");
  const std::size_t n = g.order();
  std::size_t degree = 0, size = 1;
  while (size < values.size()) {
    size *= n;
    ++degree;
    if (n == 1) break;
  }
  if (size != values.size()) {
    throw Error(ErrorCode::InvalidArgument, "cochain length " + std::to_string(values.size()) +
                                                " is not a power of the group order " + std::to_string(n));
  }
  if (n == 1 && j.is_object() && j.contains("degree")) degree = field<std::size_t>(j, "degree", "cochain");
  CochainVector f{degree, coefficients, {}};
  for (const Json& v : values) f.values.push_back(coefficients.normalize(rational_from_json(v)));
  return f;
}

Json cochain_to_json(const CochainVector& f) {
  Json values = Json::array();
  for (const Rational& q : f.values) {
    if (denominator(q) == 1 && abs(numerator(q)) < Integer(INT64_MAX)) {
      values.push_back(static_cast<std::int64_t>(numerator(q)));
    } else {
      values.push_back(format_rational(q));
    }
  }
  return {{"degree", f.degree}, {"coefficients", f.coefficients.to_string()}, {"values", values}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::IoError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace cext
