#pragma once

#include <string>
#include <vector>

#include "nagata/scalar.hpp"

namespace nagata {

// One verified inequality or contract point. `pass` is decided in the native
// scalar; measured/bound are doubles for reporting only.
struct CheckRecord {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double bound = 0.0;
  std::string witness;
};

// r fits under a possibly-infinite Lebesgue value, up to the mode tolerance.
template <typename S>
bool scale_le_ext(const S& r, const ExtValue<S>& L) {
  return L.infinite || leq_tol(r, L.value);
}

struct CheckList {
  std::vector<CheckRecord> records;

  bool all_pass() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }

  void add(std::string name, bool pass, double measured = 0.0, double bound = 0.0,
           std::string witness = {}) {
    records.push_back({std::move(name), pass, measured, bound, std::move(witness)});
  }

  template <typename S>
  void require_leq(std::string name, const S& measured, const S& bound, std::string witness = {}) {
    add(std::move(name), leq_tol(measured, bound), to_double(measured), to_double(bound),
        std::move(witness));
  }

  const CheckRecord* find(const std::string& name) const {
    for (const auto& r : records)
      if (r.name == name) return &r;
    return nullptr;
  }
};

}  // namespace nagata
