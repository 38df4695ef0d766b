#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gkspin {

enum class Status { Pass, Fail, Skip };

const char *status_name(Status s);

struct Check {
  std::string id;
  std::string anchor;
  Status status = Status::Pass;
  std::optional<std::string> witness;
  std::vector<std::pair<std::string, std::string>> values;

  Check &value(std::string key, std::string v) {
    values.emplace_back(std::move(key), std::move(v));
    return *this;
  }
};

Check pass_check(std::string id, std::string anchor);
Check fail_check(std::string id, std::string anchor, std::string witness);

class Report {
public:
  Report(std::string suite, std::uint64_t seed, int trials)
      : suite_(std::move(suite)), seed_(seed), trials_(trials) {}

  // Throws on a duplicate id or a failure without witness.
  void add(Check c);
  void merge(const Report &other, const std::string &prefix = "");

  const std::string &suite() const { return suite_; }
  std::uint64_t seed() const { return seed_; }
  int trials() const { return trials_; }
  const std::vector<Check> &checks() const { return checks_; }
  const Check *find(const std::string &id) const;

  bool all_pass() const;
  int failures() const;

  std::string text() const;
  std::string json() const;
  void write_json(const std::string &path) const;
  static Report from_json(const std::string &text);

private:
  std::string suite_;
  std::uint64_t seed_;
  int trials_;
  std::vector<Check> checks_;
};

} // namespace gkspin
