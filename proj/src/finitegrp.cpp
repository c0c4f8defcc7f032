#include "cext/finitegrp.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cext/error.hpp"

namespace cext {

std::size_t max_group_order() {
  if (const char* env = std::getenv("CEXT_MAX_GROUP_ORDER")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("CEXT_MAX_GROUP_ORDER is not a number: ") + env);
    }
  }
  return kDefaultMaxGroupOrder;
}

namespace {

void require_order_guard(const FiniteGroup& g) {
  if (g.order() > max_group_order()) {
    throw Error(ErrorCode::InvalidGroup, "group order " + std::to_string(g.order()) + " exceeds the guard " +
                                             std::to_string(max_group_order()) +
                                             " (set CEXT_MAX_GROUP_ORDER to override)");
  }
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_same_length(const FiniteGroup& g, const CochainVector& f) {
  if (f.values.size() != ipow(g.order(), f.degree)) {
    throw Error(ErrorCode::InvalidArgument, "cochain length does not match order^degree");
  }
}

Integer to_integer(const Rational& q) {
  if (denominator(q) != 1) throw Error(ErrorCode::InvalidArgument, "integer cochain has a non-integral value");
  return numerator(q);
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidGroup, "bad " + what + ": " + text);
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidGroup, "empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::InvalidGroup, "multiplication table is not square");
    for (std::size_t v : row) {
      if (v >= n) throw Error(ErrorCode::InvalidGroup, "table entry out of range");
    }
  }
  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw Error(ErrorCode::InvalidGroup, "no identity element");
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == *e && table[b][a] == *e) inverse[a] = b;
    }
    if (inverse[a] == n) throw Error(ErrorCode::InvalidGroup, "element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorCode::InvalidGroup, "associativity fails at (" + std::to_string(a) + "," +
                                                   std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  if (labels.empty()) {
    for (std::size_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  }
  if (labels.size() != n) throw Error(ErrorCode::InvalidGroup, "label count does not match the order");
  FiniteGroup g;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.labels_ = std::move(labels);
  g.identity_ = *e;
  return g;
}

FiniteGroup FiniteGroup::trivial() {
  FiniteGroup g = from_table({{0}}, {"e"});
  g.name_ = "trivial";
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidGroup, "cyclic group needs n >= 1");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  FiniteGroup g = from_table(std::move(t));
  g.name_ = "cyclic:" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidGroup, "dihedral group needs n >= 1");
  const std::size_t order = 2 * n;
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("r" + std::to_string(k));
  for (std::size_t k = 0; k < n; ++k) labels.push_back("sr" + std::to_string(k));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const bool sa = a >= n, sb = b >= n;
      const std::size_t i = a % n, j = b % n;
      if (!sa && !sb) t[a][b] = (i + j) % n;
      else if (!sa && sb) t[a][b] = n + (n - i + j) % n;
      else if (sa && !sb) t[a][b] = n + (i + j) % n;
      else t[a][b] = (n - i + j) % n;
    }
  }
  FiniteGroup g = from_table(std::move(t), std::move(labels));
  g.name_ = "dihedral:" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::dicyclic(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidGroup, "dicyclic group needs n >= 2");
  const std::size_t half = 2 * n, order = 4 * n;
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < half; ++k) labels.push_back("a" + std::to_string(k));
  for (std::size_t k = 0; k < half; ++k) labels.push_back("xa" + std::to_string(k));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const bool xa = a >= half, xb = b >= half;
      const std::size_t i = a % half, j = b % half;
      if (!xa && !xb) t[a][b] = (i + j) % half;
      else if (!xa && xb) t[a][b] = half + (half - i + j) % half;
      else if (xa && !xb) t[a][b] = half + (i + j) % half;
      else t[a][b] = (n + half - i + j) % half;
    }
  }
  FiniteGroup g = from_table(std::move(t), std::move(labels));
  g.name_ = n == 2 ? "quaternion" : "dicyclic:" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + a.labels()[x / nb] + "," + b.labels()[x % nb] + ")";
    for (std::size_t y = 0; y < n; ++y) {
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  FiniteGroup g = from_table(std::move(t), std::move(labels));
  g.name_ = a.name() + "x" + b.name();
  return g;
}

FiniteGroup FiniteGroup::parse(std::string_view spec) {
  const std::string text = trim(spec);
  if (text.empty()) throw Error(ErrorCode::InvalidGroup, "empty group description");
  if (text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidGroup, std::string("group JSON: ") + e.what());
    }
    if (!j.contains("table")) throw Error(ErrorCode::InvalidGroup, "group JSON needs a \"table\" field");
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::string> labels;
    try {
      table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
      if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidGroup, std::string("group JSON: ") + e.what());
    }
    return from_table(std::move(table), std::move(labels));
  }
  if (auto x = text.find('x'); x != std::string::npos) {
    return direct_product(parse(text.substr(0, x)), parse(text.substr(x + 1)));
  }
  const auto colon = text.find(':');
  const std::string kind = colon == std::string::npos ? text : text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : trim(text.substr(colon + 1));
  if (kind == "trivial") return trivial();
  if (kind == "quaternion") return dicyclic(2);
  if (arg.empty()) throw Error(ErrorCode::InvalidGroup, "group '" + kind + "' needs a parameter");
  const std::size_t n = parse_size(arg, "group parameter");
  if (kind == "cyclic") return cyclic(n);
  if (kind == "dihedral") return dihedral(n);
  if (kind == "dicyclic") return dicyclic(n);
  throw Error(ErrorCode::InvalidGroup, "unknown group family '" + kind + "'");
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

FiniteGroup FiniteGroup::relabeled(const std::vector<std::size_t>& perm) const {
  const std::size_t n = order();
  if (perm.size() != n) throw Error(ErrorCode::InvalidArgument, "permutation size does not match the order");
  std::vector<bool> hit(n);
  for (std::size_t p : perm) {
    if (p >= n || hit[p]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    hit[p] = true;
  }
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[perm[a]] = labels_[a];
    for (std::size_t b = 0; b < n; ++b) t[perm[a]][perm[b]] = perm[table_[a][b]];
  }
  FiniteGroup g = from_table(std::move(t), std::move(labels));
  g.name_ = name_;
  return g;
}

std::map<std::size_t, std::size_t> order_census(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> census;
  for (std::size_t a = 0; a < g.order(); ++a) ++census[g.element_order(a)];
  return census;
}

CoefficientRing CoefficientRing::modular(std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  return {Kind::modular, m};
}

CoefficientRing CoefficientRing::parse(std::string_view text) {
  const std::string t = trim(text);
  if (t == "Z") return integers();
  if (t == "Q") return rationals();
  std::string digits;
  if (t.rfind("Z/", 0) == 0) digits = t.substr(2);
  else if (t.size() > 1 && t[0] == 'Z') digits = t.substr(1);
  else throw Error(ErrorCode::InvalidArgument, "unknown coefficients '" + t + "' (use Z, Q or Z/m)");
  std::int64_t m = 0;
  try {
    std::size_t pos = 0;
    m = std::stoll(digits, &pos);
    if (pos != digits.size()) throw std::invalid_argument(digits);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "bad modulus in '" + t + "'");
  }
  return modular(m);
}

std::string CoefficientRing::to_string() const {
  switch (kind) {
    case Kind::integers:
      return "Z";
    case Kind::rationals:
      return "Q";
    case Kind::modular:
      return "Z/" + std::to_string(modulus);
  }
  return "Z";
}

Rational CoefficientRing::normalize(const Rational& v) const {
  switch (kind) {
    case Kind::rationals:
      return v;
    case Kind::integers:
      return Rational(to_integer(v));
    case Kind::modular:
      return Rational(mod_floor(to_integer(v), Integer(modulus)));
  }
  return v;
}

CochainVector CochainVector::zero(const FiniteGroup& g, std::size_t degree, CoefficientRing coefficients) {
  return {degree, coefficients, std::vector<Rational>(ipow(g.order(), degree))};
}

const Rational& CochainVector::at(const FiniteGroup& g, std::initializer_list<std::size_t> tuple) const {
  if (tuple.size() != degree) throw Error(ErrorCode::InvalidArgument, "tuple length does not match the degree");
  return values.at(tuple_index(g.order(), std::span<const std::size_t>(tuple.begin(), tuple.size())));
}

std::size_t tuple_index(std::size_t order, std::span<const std::size_t> tuple) {
  std::size_t idx = 0;
  for (std::size_t v : tuple) idx = idx * order + v;
  return idx;
}

std::vector<std::size_t> tuple_of(std::size_t order, std::size_t degree, std::size_t index) {
  std::vector<std::size_t> t(degree);
  for (std::size_t i = degree; i-- > 0;) {
    t[i] = index % order;
    index /= order;
  }
  return t;
}

namespace {

// Calls visit(target_index, sign) for each face of the bar differential on C^degree
// evaluated at the (degree+1)-tuple.
template <typename Visit>
void bar_faces(const FiniteGroup& g, std::span<const std::size_t> tuple, Visit&& visit) {
  const std::size_t n = tuple.size() - 1;  // source degree
  const std::size_t order = g.order();
  std::vector<std::size_t> face(n);
  std::copy(tuple.begin() + 1, tuple.end(), face.begin());
  visit(tuple_index(order, face), 1);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t k = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i - 1) {
        face[k++] = g.mul(tuple[j], tuple[j + 1]);
        ++j;
      } else {
        face[k++] = tuple[j];
      }
    }
    visit(tuple_index(order, face), i % 2 == 0 ? 1 : -1);
  }
  std::copy(tuple.begin(), tuple.end() - 1, face.begin());
  visit(tuple_index(order, face), (n + 1) % 2 == 0 ? 1 : -1);
}

}  // namespace

IntMatrix coboundary_matrix(const FiniteGroup& g, std::size_t degree, CoefficientRing coefficients) {
  if (degree < 1 || degree > 3) {
    throw Error(ErrorCode::DegreeUnsupported, "coboundary matrices exist for degrees 1..3, not " + std::to_string(degree));
  }
  require_order_guard(g);
  const std::size_t order = g.order();
  const std::size_t rows = ipow(order, degree + 1), cols = ipow(order, degree);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto tuple = tuple_of(order, degree + 1, r);
    bar_faces(g, tuple, [&](std::size_t c, int sign) { m(r, c) += sign; });
  }
  if (coefficients.kind == CoefficientRing::Kind::modular) {
    const Integer mod(coefficients.modulus);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = mod_floor(m(r, c), mod);
    }
  }
  return m;
}

CochainVector apply_coboundary(const FiniteGroup& g, const CochainVector& f) {
  require_same_length(g, f);
  const std::size_t order = g.order();
  CochainVector out = CochainVector::zero(g, f.degree + 1, f.coefficients);
  for (std::size_t r = 0; r < out.values.size(); ++r) {
    const auto tuple = tuple_of(order, f.degree + 1, r);
    Rational acc = 0;
    bar_faces(g, tuple, [&](std::size_t c, int sign) {
      if (sign > 0) acc += f.values[c];
      else acc -= f.values[c];
    });
    out.values[r] = f.coefficients.normalize(acc);
  }
  return out;
}

bool is_cocycle(const FiniteGroup& g, const CochainVector& omega) {
  const CochainVector d = apply_coboundary(g, omega);
  return std::all_of(d.values.begin(), d.values.end(), [](const Rational& v) { return v == 0; });
}

namespace {

// Coordinates of an integer 2-cochain in the cocycle lattice, or nullopt if it is not a cocycle.
std::optional<std::vector<Integer>> kernel_coordinates(const std::vector<Integer>& v, const H2Description& d) {
  const std::vector<Integer> w = d.kernel_q_inv.apply(v);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (d.kernel_scale[i] == 0 && w[i] != 0) return std::nullopt;
    if (d.kernel_scale[i] != 0 && w[i] % d.kernel_scale[i] != 0) return std::nullopt;
  }
  std::vector<Integer> out;
  out.reserve(d.kernel_slots.size());
  for (std::size_t s : d.kernel_slots) out.push_back(w[s] / d.kernel_scale[s]);
  return out;
}

std::vector<Integer> integer_values(const CochainVector& f) {
  std::vector<Integer> out;
  out.reserve(f.values.size());
  for (const Rational& q : f.values) out.push_back(to_integer(q));
  return out;
}

}  // namespace

H2Description h2(const FiniteGroup& g, CoefficientRing coefficients) {
  if (coefficients.kind == CoefficientRing::Kind::rationals) {
    throw Error(ErrorCode::InvalidArgument, "H^2 is computed for integer or modular coefficients");
  }
  require_order_guard(g);
  const std::size_t n = g.order(), n2 = n * n;
  const std::int64_t m = coefficients.kind == CoefficientRing::Kind::modular ? coefficients.modulus : 0;

  H2Description d;
  d.coefficients = coefficients;

  const IntMatrix d1 = coboundary_matrix(g, 1, CoefficientRing::integers());
  const IntMatrix d2 = coboundary_matrix(g, 2, CoefficientRing::integers());
  SmithForm s2 = smith_normal_form(d2, {.track_p = false, .track_q = true});
  d.kernel_q_inv = std::move(s2.q_inv);
  d.kernel_scale.assign(n2, 0);
  for (std::size_t i = 0; i < n2; ++i) {
    const Integer di = i < s2.diagonal.size() ? s2.diagonal[i] : Integer(0);
    if (m == 0) {
      d.kernel_scale[i] = di == 0 ? 1 : 0;
    } else {
      d.kernel_scale[i] = Integer(m) / gcd(di, Integer(m));
    }
    if (d.kernel_scale[i] != 0) d.kernel_slots.push_back(i);
  }
  const std::size_t k = d.kernel_slots.size();

  // Relation lattice: coboundaries, plus m times everything for Z/m.
  std::vector<std::vector<Integer>> generators;
  for (std::size_t c = 0; c < d1.cols(); ++c) generators.push_back(d1.column(c));
  if (m != 0) {
    for (std::size_t c = 0; c < n2; ++c) {
      std::vector<Integer> e(n2);
      e[c] = m;
      generators.push_back(std::move(e));
    }
  }
  IntMatrix rel(k, generators.size());
  for (std::size_t c = 0; c < generators.size(); ++c) {
    auto coords = kernel_coordinates(generators[c], d);
    if (!coords) throw Error(ErrorCode::InvalidArgument, "internal: coboundary outside the cocycle lattice");
    for (std::size_t r = 0; r < k; ++r) rel(r, c) = (*coords)[r];
  }
  SmithForm sr = smith_normal_form(rel, {.track_p = true, .track_q = false});
  d.class_p = std::move(sr.p);
  d.class_factors.assign(k, 0);
  for (std::size_t i = 0; i < k && i < sr.diagonal.size(); ++i) d.class_factors[i] = sr.diagonal[i];

  for (std::size_t i = 0; i < k; ++i) {
    if (d.class_factors[i] == 1) continue;
    d.invariant_factors.push_back(d.class_factors[i]);
    // Lattice vector with class coordinates e_i: Q * scale * (P^-1 column i).
    std::vector<Integer> z(n2);
    for (std::size_t r = 0; r < k; ++r) {
      const std::size_t slot = d.kernel_slots[r];
      z[slot] = sr.p_inv(r, i) * d.kernel_scale[slot];
    }
    const std::vector<Integer> v = s2.q.apply(z);
    CochainVector rep = CochainVector::zero(g, 2, coefficients);
    for (std::size_t t = 0; t < n2; ++t) rep.values[t] = coefficients.normalize(Rational(v[t]));
    d.representatives.push_back(normalize_cocycle(g, rep));
  }
  return d;
}

std::vector<Integer> class_coordinates(const CochainVector& omega, const H2Description& d) {
  if (omega.degree != 2) throw Error(ErrorCode::InvalidArgument, "H^2 classes need a 2-cochain");
  std::vector<Integer> v = integer_values(omega);
  if (d.coefficients.kind == CoefficientRing::Kind::modular) {
    for (auto& x : v) x = mod_floor(x, Integer(d.coefficients.modulus));
  }
  if (v.size() != d.kernel_q_inv.cols()) throw Error(ErrorCode::InvalidArgument, "cochain from a different group");
  auto coords = kernel_coordinates(v, d);
  if (!coords) throw Error(ErrorCode::NotACocycle, "cochain is not a cocycle");
  const std::vector<Integer> y = d.class_p.apply(*coords);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Integer& f = d.class_factors[i];
    if (f == 1) continue;
    out.push_back(f == 0 ? y[i] : mod_floor(y[i], f));
  }
  return out;
}

Integer class_order(const CochainVector& omega, const H2Description& d) {
  const auto coords = class_coordinates(omega, d);
  Integer order = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Integer& f = d.invariant_factors[i];
    if (coords[i] == 0) continue;
    if (f == 0) return 0;
    const Integer o = f / gcd(coords[i], f);
    order = order / gcd(order, o) * o;
  }
  return order;
}

bool is_coboundary(const CochainVector& omega, const H2Description& d) { return class_order(omega, d) == 1; }

CochainVector normalize_cocycle(const FiniteGroup& g, const CochainVector& omega) {
  if (omega.degree != 2) throw Error(ErrorCode::InvalidArgument, "normalization applies to 2-cochains");
  require_same_length(g, omega);
  const std::size_t e = g.identity();
  const Rational shift = omega.values[e * g.order() + e];
  CochainVector out = omega;
  for (auto& v : out.values) v = omega.coefficients.normalize(v - shift);
  return out;
}

FiniteGroup extension_table(const FiniteGroup& g, std::int64_t m, const CochainVector& omega) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "extension kernel order must be positive");
  if (omega.degree != 2) throw Error(ErrorCode::InvalidArgument, "extension needs a 2-cochain");
  require_same_length(g, omega);
  const std::size_t n = g.order(), mm = static_cast<std::size_t>(m);
  const std::size_t total = n * mm;
  std::vector<std::vector<std::size_t>> t(total, std::vector<std::size_t>(total));
  std::vector<std::string> labels(total);
  for (std::size_t a = 0; a < total; ++a) {
    const std::size_t ga = a / mm, za = a % mm;
    labels[a] = "(" + std::to_string(za) + "," + g.labels()[ga] + ")";
    for (std::size_t b = 0; b < total; ++b) {
      const std::size_t gb = b / mm, zb = b % mm;
      const Integer w = to_integer(omega.values[ga * n + gb]);
      const Integer z = mod_floor(Integer(za) + Integer(zb) + w, Integer(m));
      t[a][b] = g.mul(ga, gb) * mm + static_cast<std::size_t>(z);
    }
  }
  try {
    return FiniteGroup::from_table(std::move(t), std::move(labels));
  } catch (const Error& e) {
    throw Error(ErrorCode::NotACocycle, std::string("extension table is not a group: ") + e.what());
  }
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<std::size_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw Error(ErrorCode::NotASubgroup, "empty subset");
  std::vector<std::size_t> local(g.order(), g.order());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= g.order()) throw Error(ErrorCode::NotASubgroup, "element index out of range");
    local[elements[i]] = i;
  }
  const std::size_t k = elements.size();
  std::vector<std::vector<std::size_t>> t(k, std::vector<std::size_t>(k));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(g.labels()[elements[i]]);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t p = local[g.mul(elements[i], elements[j])];
      if (p == g.order()) {
        throw Error(ErrorCode::NotASubgroup, "subset is not closed under multiplication");
      }
      t[i][j] = p;
    }
  }
  return {FiniteGroup::from_table(std::move(t), std::move(labels)), std::move(elements)};
}

CochainVector restrict_cocycle(const FiniteGroup& g, const CochainVector& omega, const Subgroup& h) {
  require_same_length(g, omega);
  CochainVector out = CochainVector::zero(h.group, omega.degree, omega.coefficients);
  for (std::size_t r = 0; r < out.values.size(); ++r) {
    auto tuple = tuple_of(h.group.order(), omega.degree, r);
    for (auto& x : tuple) x = h.elements[x];
    out.values[r] = omega.values[tuple_index(g.order(), tuple)];
  }
  return out;
}

CochainVector transfer_cocycle(const FiniteGroup& g, const Subgroup& h, const CochainVector& omega_h) {
  require_same_length(h.group, omega_h);
  const std::size_t n = g.order();
  std::vector<std::size_t> local(n, n);
  for (std::size_t i = 0; i < h.elements.size(); ++i) local[h.elements[i]] = i;

  // Right coset Hx: least element index as representative.
  std::vector<std::size_t> rep(n, n);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (rep[x] != n) continue;
    reps.push_back(x);
    for (std::size_t e : h.elements) rep[g.mul(e, x)] = x;
  }

  CochainVector out = CochainVector::zero(g, omega_h.degree, omega_h.coefficients);
  std::vector<std::size_t> hs(omega_h.degree);
  for (std::size_t r = 0; r < out.values.size(); ++r) {
    const auto tuple = tuple_of(n, omega_h.degree, r);
    Rational acc = 0;
    for (std::size_t t : reps) {
      std::size_t current = t;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        const std::size_t moved = g.mul(current, tuple[i]);
        const std::size_t next = rep[moved];
        hs[i] = local[g.mul(moved, g.inv(next))];
        current = next;
      }
      acc += omega_h.values[tuple_index(h.group.order(), hs)];
    }
    out.values[r] = omega_h.coefficients.normalize(acc);
  }
  return out;
}

CochainVector averaging_primitive(const FiniteGroup& g, const CochainVector& omega) {
  if (omega.degree < 1) throw Error(ErrorCode::DegreeUnsupported, "averaging needs degree >= 1");
  if (omega.coefficients.kind == CoefficientRing::Kind::modular) {
    throw Error(ErrorCode::InvalidArgument, "averaging needs integer or rational values");
  }
  require_same_length(g, omega);
  if (!is_cocycle(g, omega)) throw Error(ErrorCode::NotACocycle, "averaging primitive needs a cocycle");
  const std::size_t n = g.order();
  const std::size_t block = ipow(n, omega.degree - 1);
  CochainVector f = CochainVector::zero(g, omega.degree - 1, CoefficientRing::rationals());
  for (std::size_t r = 0; r < block; ++r) {
    Rational acc = 0;
    for (std::size_t x = 0; x < n; ++x) acc += omega.values[x * block + r];
    f.values[r] = acc / Rational(static_cast<long long>(n));
  }
  return f;
}

FunctionCochain linfty_primitive(const FiniteGroup& g, const CochainVector& omega) {
  if (omega.degree < 1) throw Error(ErrorCode::DegreeUnsupported, "primitive needs degree >= 1");
  require_same_length(g, omega);
  if (!is_cocycle(g, omega)) throw Error(ErrorCode::NotACocycle, "primitive needs a cocycle");
  const std::size_t n = g.order();
  const std::size_t block = ipow(n, omega.degree - 1);
  FunctionCochain phi{omega.degree - 1, omega.coefficients, std::vector<Rational>(block * n)};
  for (std::size_t r = 0; r < block; ++r) {
    for (std::size_t h = 0; h < n; ++h) phi.values[r * n + h] = omega.values[g.inv(h) * block + r];
  }
  return phi;
}

PrimitiveCheck verify_linfty_primitive(const FiniteGroup& g, const FunctionCochain& phi, const CochainVector& omega) {
  const std::size_t n = g.order();
  if (omega.degree != phi.degree + 1 || phi.values.size() != ipow(n, phi.degree) * n) {
    throw Error(ErrorCode::InvalidArgument, "primitive and cocycle degrees do not match");
  }
  PrimitiveCheck check;
  for (std::size_t r = 0; r < omega.values.size(); ++r) {
    const auto tuple = tuple_of(n, omega.degree, r);
    for (std::size_t h = 0; h < n; ++h) {
      Rational acc = 0;
      bool first = true;
      bar_faces(g, tuple, [&](std::size_t c, int sign) {
        // The first face carries the module action of g1.
        const std::size_t point = first ? g.mul(g.inv(tuple[0]), h) : h;
        first = false;
        if (sign > 0) acc += phi.values[c * n + point];
        else acc -= phi.values[c * n + point];
      });
      ++check.points;
      if (phi.coefficients.normalize(acc) != omega.coefficients.normalize(omega.values[r])) ++check.failures;
    }
  }
  return check;
}

PrimitiveCheck verify_primitive(const FiniteGroup& g, const CochainVector& f, const CochainVector& omega) {
  const CochainVector d = apply_coboundary(g, f);
  if (d.values.size() != omega.values.size()) {
    throw Error(ErrorCode::InvalidArgument, "primitive and cocycle degrees do not match");
  }
  PrimitiveCheck check;
  for (std::size_t r = 0; r < d.values.size(); ++r) {
    ++check.points;
    if (d.values[r] != omega.values[r]) ++check.failures;
  }
  return check;
}

CochainVector round_real_cochain(const CochainVector& f) {
  CochainVector out{f.degree, CoefficientRing::integers(), {}};
  out.values.reserve(f.values.size());
  for (const Rational& q : f.values) out.values.emplace_back(floor_rational(q));
  return out;
}

}  // namespace cext
