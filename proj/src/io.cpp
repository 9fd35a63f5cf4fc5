#include "conegeo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace conegeo {

namespace {

// Pulls whitespace-separated tokens, dropping '#' comments to end of line.
class Tokenizer {
 public:
  explicit Tokenizer(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream parts(line);
      std::string token;
      while (parts >> token) tokens_.push_back(token);
    }
  }

  std::optional<std::string> next() {
    if (pos_ >= tokens_.size()) return std::nullopt;
    return tokens_[pos_++];
  }

  std::string expect(const char* what) {
    auto token = next();
    if (!token) throw invalid_input(std::string("unexpected end of input, expected ") + what);
    return *token;
  }

  double expect_number(const char* what) {
    std::string token = expect(what);
    size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw invalid_input("expected a number for " + std::string(what) + ", got '" + token + "'");
    }
    if (used != token.size() || !std::isfinite(value))
      throw invalid_input("expected a finite number for " + std::string(what) + ", got '" + token + "'");
    return value;
  }

  int expect_int(const char* what) {
    double value = expect_number(what);
    int rounded = static_cast<int>(std::lround(value));
    if (value != rounded) throw invalid_input(std::string(what) + " must be an integer");
    return rounded;
  }

  void expect_keyword(const char* keyword) {
    std::string token = expect(keyword);
    if (token != keyword)
      throw invalid_input(std::string("expected '") + keyword + "', got '" + token + "'");
  }

  bool at_end() const { return pos_ >= tokens_.size(); }

 private:
  std::vector<std::string> tokens_;
  size_t pos_ = 0;
};

void require_done(Tokenizer& tokens, const char* what) {
  if (!tokens.at_end())
    throw invalid_input(std::string("trailing tokens after ") + what);
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open file '" + path + "'");
  return in;
}

ConeSpec parse_cone(Tokenizer& tokens) {
  tokens.expect_keyword("cone");
  std::string kind = tokens.expect("cone kind");
  tokens.expect_keyword("dim");
  int dim = tokens.expect_int("dim");
  if (dim < 1) throw invalid_input("dim must be at least 1");

  if (kind == "orthant") return ConeSpec::Orthant(dim);
  if (kind == "lorentz") return ConeSpec::Lorentz(dim);
  if (kind == "psd") {
    int order = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim))));
    if (order * order != dim)
      throw invalid_input("psd dim must be a perfect square (order * order)");
    return ConeSpec::Psd(order);
  }
  if (kind == "polyhedral") {
    tokens.expect_keyword("facets");
    int rows = tokens.expect_int("facets");
    if (rows < 1) throw invalid_input("facet count must be at least 1");
    Matrix facets(rows, dim);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < dim; ++j) facets(i, j) = tokens.expect_number("facet entry");
    return ConeSpec::Polyhedral(std::move(facets));
  }
  throw invalid_input("unknown cone kind '" + kind + "'");
}

ConeMap parse_one_map(Tokenizer& tokens, const ConeSpec& cone) {
  std::string kind = tokens.expect("map kind");
  const int n = cone.ambient_dim();
  if (kind == "linear") {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = tokens.expect_number("matrix entry");
    return ConeMap::Linear(cone, std::move(a));
  }
  if (kind == "congruence") {
    Point g(n);
    for (int i = 0; i < n; ++i) g[i] = tokens.expect_number("congruence entry");
    return ConeMap::Congruence(cone, std::move(g));
  }
  if (kind == "inversion") return ConeMap::Inversion(cone);
  if (kind == "partial_inversion") {
    tokens.expect_keyword("index");
    int index = tokens.expect_int("index");
    if (index < 1) throw invalid_input("index is 1-based and must be positive");
    return ConeMap::PartialInversion(cone, index - 1);
  }
  throw invalid_input("unknown map kind '" + kind + "'");
}

}  // namespace

ConeSpec read_cone(std::istream& in) {
  Tokenizer tokens(in);
  ConeSpec cone = parse_cone(tokens);
  require_done(tokens, "cone description");
  return cone;
}

ConeSpec read_cone_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_cone(in);
}

Point read_point(std::istream& in, const ConeSpec& cone) {
  Tokenizer tokens(in);
  auto first = tokens.next();
  if (!first) throw invalid_input("empty point description");
  Point p(cone.ambient_dim());
  int start = 0;
  if (*first == "point") {
    // keyword form; all coordinates still pending
  } else {
    size_t used = 0;
    try {
      p[0] = std::stod(*first, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != first->size())
      throw invalid_input("expected 'point' or a number, got '" + *first + "'");
    start = 1;
  }
  for (int i = start; i < cone.ambient_dim(); ++i) p[i] = tokens.expect_number("coordinate");
  require_done(tokens, "point coordinates");
  return p;
}

Point read_point_file(const std::string& path, const ConeSpec& cone) {
  std::ifstream in = open_file(path);
  return read_point(in, cone);
}

ConeMap read_map(std::istream& in, const ConeSpec& cone) {
  Tokenizer tokens(in);
  std::vector<ConeMap> parts;
  while (!tokens.at_end()) {
    tokens.expect_keyword("map");
    parts.push_back(parse_one_map(tokens, cone));
  }
  if (parts.empty()) throw invalid_input("map description has no stanzas");
  if (parts.size() == 1) return parts.front();
  return ConeMap::Composite(cone, std::move(parts));
}

ConeMap read_map_file(const std::string& path, const ConeSpec& cone) {
  std::ifstream in = open_file(path);
  return read_map(in, cone);
}

std::string format_real(double value, int precision) {
  if (precision < 0) throw invalid_input("precision must be nonnegative");
  if (!std::isfinite(value)) throw numeric_failure("non-finite value in output");
  if (std::abs(value) < 0.5 * std::pow(10.0, -precision)) value = 0.0;
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), "%.*f", precision, value);
  return buffer;
}

}  // namespace conegeo
