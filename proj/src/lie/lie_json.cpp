#include "gkspin/lie/lie_data.hpp"

#include <json.hpp>

#include <algorithm>

namespace gkspin {

namespace {

using nlohmann::ordered_json;

FieldScalar scalar(const ordered_json &j, const std::string &where) {
  if (j.is_number_integer())
    return FieldScalar(j.get<long>());
  if (!j.is_string())
    throw std::invalid_argument(where + ": expected a scalar string");
  try {
    return FieldScalar::parse(j.get<std::string>());
  } catch (const std::exception &e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
}

std::vector<std::pair<int, int>> pairs(const CompactLieData &d, const ordered_json &j,
                                       const std::string &key) {
  std::vector<std::pair<int, int>> out;
  if (!j.contains(key))
    return out;
  for (const auto &p : j.at(key)) {
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument(key + ": entries must be [x, conj x]");
    out.emplace_back(d.index(p[0].get<std::string>()), d.index(p[1].get<std::string>()));
  }
  return out;
}

ExactMatrix matrix(const ordered_json &j, const std::string &where) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument(where + ": expected a matrix");
  ExactMatrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (j[r].size() != m.cols())
      throw std::invalid_argument(where + ": ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(r, c) = scalar(j[r][c], where);
  }
  return m;
}

ordered_json matrix_json(const ExactMatrix &m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

} // namespace

CompactLieData lie_from_json(const std::string &text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception &e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  try {
    CompactLieData d;
    d.name = j.value("name", "user");
    d.basis = j.at("basis").get<std::vector<std::string>>();
    int m = d.dim();
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < a; ++c)
        if (d.basis[a] == d.basis[c])
          throw std::invalid_argument("duplicate basis vector '" + d.basis[a] + "'");
    d.cartan = pairs(d, j, "cartan");
    d.roots = pairs(d, j, "positive_roots");
    d.conj.assign(m, -1);
    for (const auto &ps : {d.cartan, d.roots})
      for (auto [x, y] : ps) {
        d.conj[x] = y;
        d.conj[y] = x;
      }
    d.b = matrix(j.at("B"), "B");
    if (d.b.rows() != std::size_t(m) || d.b.cols() != std::size_t(m))
      throw std::invalid_argument("B must be dim x dim");
    d.structure.assign(m, std::vector<ExactVector>(m, ExactVector(m)));
    for (const auto &[key, val] : j.at("brackets").items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("bracket key '" + key + "' must be 'x,y'");
      int a = d.index(key.substr(0, comma)), c = d.index(key.substr(comma + 1));
      if (a == c)
        throw std::invalid_argument("bracket key '" + key + "' repeats a vector");
      if (!d.structure[a][c].empty() &&
          std::any_of(d.structure[a][c].begin(), d.structure[a][c].end(),
                      [](const FieldScalar &x) { return !x.is_zero(); }))
        throw std::invalid_argument("bracket '" + key + "' given twice");
      for (const auto &[z, coeff] : val.items()) {
        FieldScalar s = scalar(coeff, "bracket " + key);
        d.structure[a][c][d.index(z)] += s;
        d.structure[c][a][d.index(z)] -= s;
      }
    }
    if (j.contains("matrices")) {
      for (const auto &n : d.basis)
        d.matrices.push_back(matrix(j.at("matrices").at(n), "matrix " + n));
    }
    validate_lie(d);
    return d;
  } catch (const ordered_json::exception &e) {
    throw std::invalid_argument(std::string("root data: ") + e.what());
  }
}

std::string lie_to_json(const CompactLieData &d) {
  ordered_json j;
  j["name"] = d.name;
  j["basis"] = d.basis;
  auto pair_json = [&](const std::vector<std::pair<int, int>> &ps) {
    ordered_json a = ordered_json::array();
    for (auto [x, y] : ps)
      a.push_back({d.basis[x], d.basis[y]});
    return a;
  };
  j["cartan"] = pair_json(d.cartan);
  j["positive_roots"] = pair_json(d.roots);
  j["B"] = matrix_json(d.b);
  ordered_json br = ordered_json::object();
  for (int a = 0; a < d.dim(); ++a)
    for (int c = a + 1; c < d.dim(); ++c) {
      ordered_json terms = ordered_json::object();
      for (int k = 0; k < d.dim(); ++k)
        if (!d.structure[a][c][k].is_zero())
          terms[d.basis[k]] = d.structure[a][c][k].str();
      if (!terms.empty())
        br[d.basis[a] + "," + d.basis[c]] = terms;
    }
  j["brackets"] = br;
  if (!d.matrices.empty()) {
    ordered_json ms = ordered_json::object();
    for (int a = 0; a < d.dim(); ++a)
      ms[d.basis[a]] = matrix_json(d.matrices[a]);
    j["matrices"] = ms;
  }
  return j.dump(2);
}

} // namespace gkspin
