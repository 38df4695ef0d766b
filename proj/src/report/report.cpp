#include "gkspin/report/report.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gkspin {

using nlohmann::ordered_json;

const char *status_name(Status s) {
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Skip:
    return "skip";
  }
  return "?";
}

namespace {

Status parse_status(const std::string &s) {
  if (s == "pass")
    return Status::Pass;
  if (s == "fail")
    return Status::Fail;
  if (s == "skip")
    return Status::Skip;
  throw std::invalid_argument("unknown status " + s);
}

} // namespace

Check pass_check(std::string id, std::string anchor) {
  Check c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  return c;
}

Check fail_check(std::string id, std::string anchor, std::string witness) {
  Check c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.status = Status::Fail;
  c.witness = std::move(witness);
  return c;
}

void Report::add(Check c) {
  if (find(c.id))
    throw std::logic_error("duplicate check id " + c.id);
  if (c.status == Status::Fail && !c.witness)
    throw std::logic_error("failed check " + c.id + " has no witness");
  checks_.push_back(std::move(c));
}

void Report::merge(const Report &other, const std::string &prefix) {
  for (Check c : other.checks_) {
    c.id = prefix + c.id;
    add(std::move(c));
  }
}

const Check *Report::find(const std::string &id) const {
  for (const auto &c : checks_)
    if (c.id == id)
      return &c;
  return nullptr;
}

bool Report::all_pass() const { return failures() == 0; }

int Report::failures() const {
  int n = 0;
  for (const auto &c : checks_)
    n += c.status == Status::Fail;
  return n;
}

std::string Report::text() const {
  std::ostringstream out;
  out << suite_ << " (seed " << seed_ << ", trials " << trials_ << ")\n";
  for (const auto &c : checks_) {
    out << "  [" << status_name(c.status) << "] " << c.id << "  -- " << c.anchor << "\n";
    for (const auto &[k, v] : c.values)
      out << "      " << k << " = " << v << "\n";
    if (c.witness)
      out << "      witness: " << *c.witness << "\n";
  }
  out << (all_pass() ? "all checks passed" : std::to_string(failures()) + " check(s) failed")
      << "\n";
  return out.str();
}

std::string Report::json() const {
  ordered_json j;
  j["suite"] = suite_;
  j["seed"] = seed_;
  j["trials"] = trials_;
  j["passed"] = all_pass();
  ordered_json arr = ordered_json::array();
  for (const auto &c : checks_) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["anchor"] = c.anchor;
    cj["status"] = status_name(c.status);
    cj["witness"] = c.witness ? ordered_json(*c.witness) : ordered_json(nullptr);
    ordered_json vals = ordered_json::object();
    for (const auto &[k, v] : c.values)
      vals[k] = v;
    cj["values"] = vals;
    arr.push_back(cj);
  }
  j["checks"] = arr;
  return j.dump(2) + "\n";
}

void Report::write_json(const std::string &path) const {
  std::ofstream f(path);
  if (!f)
    throw std::runtime_error("cannot write " + path);
  f << json();
}

Report Report::from_json(const std::string &text) {
  ordered_json j = ordered_json::parse(text);
  Report r(j.at("suite").get<std::string>(), j.at("seed").get<std::uint64_t>(),
           j.at("trials").get<int>());
  for (const auto &cj : j.at("checks")) {
    Check c;
    c.id = cj.at("id").get<std::string>();
    c.anchor = cj.at("anchor").get<std::string>();
    c.status = parse_status(cj.at("status").get<std::string>());
    if (!cj.at("witness").is_null())
      c.witness = cj.at("witness").get<std::string>();
    for (const auto &[k, v] : cj.at("values").items())
      c.values.emplace_back(k, v.get<std::string>());
    r.add(std::move(c));
  }
  return r;
}

} // namespace gkspin
