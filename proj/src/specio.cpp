#include "gibbsnum/specio.hpp"

#include <fstream>
#include <stdexcept>

namespace gibbsnum {

namespace {

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("expected rational string");
  auto parsed = parse_rational(j.get<std::string>());
  if (!parsed) throw std::invalid_argument("bad rational literal: " + j.get<std::string>());
  return *parsed;
}

}  // namespace

MatrixMeasureSpec spec_from_json(const nlohmann::json& j) {
  MatrixMeasureSpec spec;
  spec.dim = j.at("dim").get<int>();
  for (const auto& x : j.at("L")) spec.L.push_back(rational_from_json(x));
  for (const auto& x : j.at("V")) spec.V.push_back(rational_from_json(x));
  for (const auto& jm : j.at("matrices")) {
    RatMatrix m(spec.dim, spec.dim);
    if (static_cast<int>(jm.size()) != spec.dim)
      throw std::invalid_argument("matrix row count does not match dim");
    for (int i = 0; i < spec.dim; ++i) {
      if (static_cast<int>(jm[i].size()) != spec.dim)
        throw std::invalid_argument("matrix column count does not match dim");
      for (int c = 0; c < spec.dim; ++c) m.at(i, c) = rational_from_json(jm[i][c]);
    }
    spec.matrices.push_back(std::move(m));
  }
  return spec;
}

nlohmann::json spec_to_json(const MatrixMeasureSpec& spec) {
  nlohmann::json j;
  j["dim"] = spec.dim;
  for (const auto& x : spec.L) j["L"].push_back(rational_to_string(x));
  for (const auto& x : spec.V) j["V"].push_back(rational_to_string(x));
  j["matrices"] = nlohmann::json::array();
  for (const auto& m : spec.matrices) {
    nlohmann::json jm = nlohmann::json::array();
    for (int i = 0; i < spec.dim; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < spec.dim; ++c) row.push_back(rational_to_string(m.at(i, c)));
      jm.push_back(row);
    }
    j["matrices"].push_back(jm);
  }
  return j;
}

MatrixMeasureSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  nlohmann::json j;
  in >> j;
  return spec_from_json(j);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
    auto parsed = parse_rational(piece);
    if (!parsed) throw std::invalid_argument("bad rational literal: " + piece);
    out.push_back(*parsed);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

RatMatrix parse_rational_matrix(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t semi = text.find(';', pos);
    std::string row = text.substr(pos, semi == std::string::npos ? std::string::npos
                                                                 : semi - pos);
    rows.push_back(parse_rational_list(row));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  const int n = static_cast<int>(rows.size());
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("matrix rows must all have the same length");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace gibbsnum
