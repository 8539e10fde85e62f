#include "fpcov/model.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "fpcov/checked.hpp"
#include "fpcov/errors.hpp"

namespace fpcov {

namespace {

constexpr int kMaxParams = 100000;

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

[[noreturn]] void fail(ParseError::Kind kind, const std::string& msg) {
  throw ParseError(kind, msg);
}

}  // namespace

std::uint64_t SystemModel::exhaustive_size() const {
  std::uint64_t product = 1;
  for (int v : cardinalities)
    product = checked_mul(product, static_cast<std::uint64_t>(v),
                          "exhaustive_size");
  return product;
}

bool test_in_range(const SystemModel& model, const TestCase& test) {
  if (test.values.size() != model.cardinalities.size()) return false;
  for (std::size_t i = 0; i < test.values.size(); ++i)
    if (test.values[i] < 0 || test.values[i] >= model.cardinalities[i])
      return false;
  return true;
}

TestCase discretize(const std::vector<double>& position,
                    const SystemModel& model) {
  TestCase out;
  out.values.resize(position.size());
  for (std::size_t i = 0; i < position.size(); ++i) {
    const int hi = model.cardinalities[i] - 1;
    const double f = std::floor(position[i]);
    out.values[i] = f < 0.0 ? 0 : (f > hi ? hi : static_cast<int>(f));
  }
  return out;
}

SystemModel parse_model(std::string_view spec) {
  std::vector<int> cards;
  std::optional<int> strength;

  std::istringstream stream{std::string(spec)};
  std::string token;
  while (stream >> token) {
    if (token.rfind("t=", 0) == 0) {
      if (strength)
        fail(ParseError::Kind::DuplicateStrength,
             "duplicate strength clause '" + token + "'");
      const auto t = parse_int(std::string_view(token).substr(2));
      if (!t)
        fail(ParseError::Kind::MalformedTerm,
             "malformed strength clause '" + token + "'");
      strength = *t;
      continue;
    }
    const auto caret = token.find('^');
    if (caret == std::string::npos || caret == 0 || caret + 1 == token.size())
      fail(ParseError::Kind::MalformedTerm, "malformed term '" + token + "'");
    std::string_view head = std::string_view(token).substr(0, caret);
    std::string_view tail = std::string_view(token).substr(caret + 1);
    if (tail.size() >= 2 && tail.front() == '{' && tail.back() == '}')
      tail = tail.substr(1, tail.size() - 2);
    const auto v = parse_int(head);
    const auto n = parse_int(tail);
    if (!v || !n)
      fail(ParseError::Kind::MalformedTerm, "malformed term '" + token + "'");
    if (*v < 2)
      fail(ParseError::Kind::BadCardinality,
           "cardinality must be >= 2 in term '" + token + "'");
    if (*n < 1)
      fail(ParseError::Kind::BadCount,
           "parameter count must be >= 1 in term '" + token + "'");
    if (*n > kMaxParams || static_cast<int>(cards.size()) > kMaxParams - *n)
      fail(ParseError::Kind::BadCount,
           "parameter count too large in term '" + token + "'");
    cards.insert(cards.end(), static_cast<std::size_t>(*n), *v);
  }

  if (cards.empty())
    fail(ParseError::Kind::NoParameters, "model spec has no parameter terms");
  if (!strength)
    fail(ParseError::Kind::MissingStrength,
         "model spec is missing the strength clause 't=N'");
  if (*strength < 2)
    fail(ParseError::Kind::BadStrength,
         "interaction strength must be >= 2 (got t=" +
             std::to_string(*strength) + ")");
  if (*strength > static_cast<int>(cards.size()))
    fail(ParseError::Kind::StrengthExceedsParams,
         "strength t=" + std::to_string(*strength) +
             " exceeds the parameter count " + std::to_string(cards.size()));
  return SystemModel{std::move(cards), *strength};
}

std::vector<SystemModel> parse_models_text(std::string_view text) {
  std::vector<SystemModel> models;
  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      models.push_back(parse_model(line));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(),
                       "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return models;
}

std::vector<SystemModel> parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_models_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), path + ": " + e.what());
  }
}

std::string render_model(const SystemModel& model) {
  std::string out;
  std::size_t i = 0;
  while (i < model.cardinalities.size()) {
    std::size_t j = i;
    while (j < model.cardinalities.size() &&
           model.cardinalities[j] == model.cardinalities[i])
      ++j;
    out += std::to_string(model.cardinalities[i]) + "^" +
           std::to_string(j - i) + " ";
    i = j;
  }
  out += "t=" + std::to_string(model.strength);
  return out;
}

Pollen random_test(const SystemModel& model, Rng& rng) {
  Pollen p;
  p.position.resize(model.cardinalities.size());
  for (std::size_t i = 0; i < p.position.size(); ++i)
    p.position[i] = rng.uniform(0.0, model.cardinalities[i]);
  p.test = discretize(p.position, model);
  return p;
}

}  // namespace fpcov
