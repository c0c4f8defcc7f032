#include "cext/slow_class.hpp"

#include <charconv>
#include <cstdlib>

namespace cext {

namespace {

std::int64_t parse_int64(std::string_view text, std::string_view context) {
  if (!text.empty() && text[0] == '+') text.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidArgument, "malformed integer '" + std::string(text) + "' in alpha formula '" +
                                                std::string(context) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// "i", "-i", "3i", "-2i" -> coefficient; nullopt if not of that shape.
std::optional<std::int64_t> linear_coefficient(std::string_view s, std::string_view context) {
  if (s.empty() || s.back() != 'i') return std::nullopt;
  s.remove_suffix(1);
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_int64(s, context);
}

}  // namespace

SlowClass SlowClass::make(std::vector<std::int64_t> prefix, TailRule tail, std::int64_t coefficient,
                          std::optional<std::int64_t> lambda_int) {
  SlowClass c;
  c.prefix_ = std::move(prefix);
  c.tail_ = coefficient == 0 ? TailRule::zero : tail;
  c.coefficient_ = c.tail_ == TailRule::zero ? 0 : coefficient;

  Rational lambda = 0;
  for (std::size_t i = 0; i < c.prefix_.size(); ++i) {
    const Rational r(Integer(std::abs(c.prefix_[i])), Integer(2 * static_cast<std::int64_t>(i) + 1));
    if (r > lambda) lambda = r;
  }
  const auto m = static_cast<std::int64_t>(c.prefix_.size());
  const Integer abs_coeff = Integer(std::abs(c.coefficient_));
  switch (c.tail_) {
    case TailRule::zero:
      break;
    case TailRule::constant: {
      // |c|/(2i+1) is decreasing; the supremum over the tail sits at i = m.
      const Rational r(abs_coeff, Integer(2 * m + 1));
      if (r > lambda) lambda = r;
      break;
    }
    case TailRule::linear: {
      // |c| i/(2i+1) increases to |c|/2.
      const Rational r(abs_coeff, Integer(2));
      if (r > lambda) lambda = r;
      break;
    }
  }
  c.lambda_ = lambda;
  const Integer ceiling = ceil_rational(lambda);
  c.lambda_int_ = static_cast<std::int64_t>(ceiling);
  if (lambda_int) {
    if (Integer(*lambda_int) < ceiling) {
      throw Error(ErrorCode::InvalidArgument,
                  "lambda override " + std::to_string(*lambda_int) + " below Lambda = " + format_rational(lambda));
    }
    c.lambda_int_ = *lambda_int;
  }
  return c;
}

SlowClass SlowClass::parse(std::string_view formula) {
  const std::string_view text = trim(formula);
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, "empty alpha formula");
  if (text.find(':') == std::string_view::npos) {
    if (auto c = linear_coefficient(text, formula)) return make({}, TailRule::linear, *c);
    return make({}, TailRule::constant, parse_int64(text, formula));
  }
  std::vector<std::int64_t> prefix;
  TailRule tail = TailRule::zero;
  std::int64_t coefficient = 0;
  std::optional<std::int64_t> lambda_int;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string_view part = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (part.empty()) continue;
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument, "malformed alpha clause '" + std::string(part) + "'");
    }
    const std::string_view key = trim(part.substr(0, colon));
    const std::string_view body = trim(part.substr(colon + 1));
    if (key == "prefix") {
      std::size_t p = 0;
      while (p < body.size()) {
        const std::size_t q = std::min(body.find(',', p), body.size());
        const std::string_view item = trim(body.substr(p, q - p));
        if (!item.empty()) prefix.push_back(parse_int64(item, formula));
        p = q + 1;
      }
    } else if (key == "tail") {
      const auto c2 = body.find(':');
      const std::string_view rule = trim(body.substr(0, c2));
      const std::string_view arg = c2 == std::string_view::npos ? std::string_view{} : trim(body.substr(c2 + 1));
      if (rule == "zero") {
        tail = TailRule::zero;
      } else if (rule == "linear") {
        tail = TailRule::linear;
        coefficient = arg.empty() ? 1 : parse_int64(arg, formula);
      } else if (rule == "constant") {
        tail = TailRule::constant;
        coefficient = parse_int64(arg, formula);
      } else if (auto c = linear_coefficient(rule, formula)) {
        tail = TailRule::linear;
        coefficient = *c;
      } else {
        tail = TailRule::constant;
        coefficient = parse_int64(rule, formula);
      }
    } else if (key == "lambda") {
      lambda_int = parse_int64(body, formula);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown alpha clause '" + std::string(key) + "'");
    }
  }
  return make(std::move(prefix), tail, coefficient, lambda_int);
}

std::int64_t SlowClass::value(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  switch (tail_) {
    case TailRule::zero: return 0;
    case TailRule::constant: return coefficient_;
    case TailRule::linear: return checked_mul(coefficient_, static_cast<std::int64_t>(i));
  }
  return 0;
}

SlowClass SlowClass::negated() const {
  std::vector<std::int64_t> prefix;
  for (auto v : prefix_) prefix.push_back(checked_sub(0, v));
  return make(std::move(prefix), tail_, checked_sub(0, coefficient_), lambda_int_);
}

std::string SlowClass::to_string() const {
  const bool default_lambda = Integer(lambda_int_) == ceil_rational(lambda_);
  if (prefix_.empty() && default_lambda) {
    switch (tail_) {
      case TailRule::zero: return "0";
      case TailRule::constant: return std::to_string(coefficient_);
      case TailRule::linear:
        if (coefficient_ == 1) return "i";
        if (coefficient_ == -1) return "-i";
        return std::to_string(coefficient_) + "i";
    }
  }
  std::string out = "prefix:";
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(prefix_[i]);
  }
  out += ";tail:";
  switch (tail_) {
    case TailRule::zero: out += "zero"; break;
    case TailRule::linear: out += "linear:" + std::to_string(coefficient_); break;
    case TailRule::constant: out += "constant:" + std::to_string(coefficient_); break;
  }
  if (!default_lambda) out += ";lambda:" + std::to_string(lambda_int_);
  return out;
}

}  // namespace cext
