#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "nagata/checks.hpp"
#include "nagata/json_io.hpp"

namespace nagata {

// FNV-1a, for stable input digests in reports.
inline std::string digest_bytes(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

// Deterministic machine-readable run record. Wall time goes to the human
// summary, not here, so identical inputs and seed give byte-identical JSON.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // name -> digest
  std::uint64_t seed = 0;
  CheckList assertions;
  json results = json::object();

  void add_input(const std::string& name, const std::string& bytes) {
    inputs.emplace_back(name, digest_bytes(bytes));
  }

  json to_json() const {
    json j;
    j["command"] = command;
    json ins = json::object();
    for (const auto& [name, dig] : inputs) ins[name] = dig;
    j["inputs"] = std::move(ins);
    j["seed"] = seed;
    json as = json::array();
    for (const auto& rec : assertions.records) {
      json a;
      a["name"] = rec.name;
      a["pass"] = rec.pass;
      a["measured"] = std::isinf(rec.measured) ? json("inf") : json(rec.measured);
      a["bound"] = std::isinf(rec.bound) ? json("inf") : json(rec.bound);
      if (!rec.witness.empty()) a["witness"] = rec.witness;
      as.push_back(std::move(a));
    }
    j["assertions"] = std::move(as);
    j["all_pass"] = assertions.all_pass();
    j["results"] = results;
    return j;
  }
};

class WallClock {
 public:
  WallClock() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace nagata
