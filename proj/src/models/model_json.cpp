#include "gkspin/models/models.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace gkspin {

namespace {

using nlohmann::json;

Blade parse_blade(const std::string &key, const Patch &p) {
  if (key == "1")
    return 0;
  Blade b = 0;
  const auto &names = p.generator_names();
  std::size_t start = 0;
  while (start <= key.size()) {
    std::size_t end = key.find('^', start);
    std::string g = key.substr(start, end == std::string::npos ? std::string::npos : end - start);
    auto it = std::find(names.begin(), names.end(), g);
    if (it == names.end())
      throw std::invalid_argument("unknown generator '" + g + "' in " + key);
    Blade bit = Blade(1) << (it - names.begin());
    if (b & bit)
      throw std::invalid_argument("repeated generator in " + key);
    // keys are written in increasing generator order
    if (b >= bit)
      throw std::invalid_argument("generators out of order in " + key);
    b |= bit;
    if (end == std::string::npos)
      break;
    start = end + 1;
  }
  return b;
}

FormField parse_form(const json &j, const Patch &p) {
  FormField f;
  if (j.is_null())
    return f;
  if (!j.is_object())
    throw std::invalid_argument("a form is an object {blade: expression}");
  for (const auto &[k, v] : j.items())
    f.add(parse_blade(k, p), p.parse(v.get<std::string>()));
  return f;
}

GenSection parse_section(const json &j, const Patch &p) {
  GenSection e(p.dim());
  if (j.is_null())
    return e;
  if (!j.is_object())
    throw std::invalid_argument("a section is an object {d/dz1 | dz1: expression}");
  const auto &gn = p.generator_names();
  const auto &vn = p.vector_names();
  for (const auto &[k, v] : j.items()) {
    Expr c = p.parse(v.get<std::string>());
    if (auto it = std::find(vn.begin(), vn.end(), k); it != vn.end())
      e.vec[it - vn.begin()] += c;
    else if (auto it2 = std::find(gn.begin(), gn.end(), k); it2 != gn.end())
      e.cov[it2 - gn.begin()] += c;
    else
      throw std::invalid_argument("unknown section component " + k);
  }
  return e;
}

} // namespace

GKModel model_from_json(const std::string &text) {
  json j = json::parse(text);
  GKModel m;
  m.name = j.value("name", std::string("user"));
  m.kind = ModelKind::User;
  int n = j.value("n", 2);
  bool punctured = j.value("punctured", false);
  m.patch = std::make_shared<Patch>(n, punctured);
  const Patch &p = *m.patch;
  m.phi = parse_form(j.at("phi"), p);
  m.psi = parse_form(j.at("psi"), p);
  m.h = parse_form(j.value("h", json()), p);
  const json &vol = j.at("vol");
  m.vol = vol.is_string() ? FormField::blade(p.volume_blade(), p.parse(vol.get<std::string>()))
                          : parse_form(vol, p);
  m.eta = parse_section(j.value("eta", json()), p);
  m.zeta = parse_section(j.value("zeta", json()), p);
  m.expected_s = FieldScalar::parse(j.at("expected_S").get<std::string>());
  m.orientation = j.value("orientation", 1);
  return m;
}

} // namespace gkspin
