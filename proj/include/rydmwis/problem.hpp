#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "rydmwis/common.hpp"

namespace rydmwis {

/// One coefficient of the classical spin Hamiltonian: J * prod_{i in indices} s_i.
/// Order 1 terms are local fields; higher orders are multi-spin couplings.
struct InteractionTerm {
  std::vector<int> indices;  // strictly increasing
  double coeff = 0.0;
};

struct Problem {
  int spin_count = 0;
  std::vector<InteractionTerm> terms;
};

/// Spin values, each +1 or -1.
using SpinConfiguration = std::vector<int>;

inline void check_valid(const Problem& p) {
  if (p.spin_count <= 0) throw input_error("problem: spin count must be positive");
  std::set<std::vector<int>> seen;
  for (const auto& t : p.terms) {
    if (t.indices.empty()) throw input_error("problem: empty index set in term");
    for (std::size_t k = 0; k < t.indices.size(); ++k) {
      if (t.indices[k] < 0 || t.indices[k] >= p.spin_count)
        throw input_error("problem: spin index out of range");
      if (k > 0 && t.indices[k] <= t.indices[k - 1])
        throw input_error("problem: term indices must be strictly increasing");
    }
    if (!seen.insert(t.indices).second)
      throw input_error("problem: duplicate index set");
  }
}

inline double energy(const Problem& p, const SpinConfiguration& s) {
  if (static_cast<int>(s.size()) != p.spin_count)
    throw input_error("energy: configuration length does not match spin count");
  for (int v : s)
    if (v != 1 && v != -1) throw input_error("energy: spin values must be +1 or -1");
  double e = 0.0;
  for (const auto& t : p.terms) {
    double prod = t.coeff;
    for (int i : t.indices) prod *= s[i];
    e += prod;
  }
  return e;
}

struct GroundStates {
  double min_energy = 0.0;
  std::vector<SpinConfiguration> minimizers;
};

/// Exhaustive scan over all 2^N configurations.
inline GroundStates brute_force_ground_states(const Problem& p, int spin_cap = 24) {
  if (p.spin_count > spin_cap)
    throw size_error("brute_force_ground_states: spin count exceeds cap " +
                     std::to_string(spin_cap));
  GroundStates out;
  bool first = true;
  SpinConfiguration s(p.spin_count);
  const std::uint64_t total = std::uint64_t{1} << p.spin_count;
  for (std::uint64_t m = 0; m < total; ++m) {
    for (int i = 0; i < p.spin_count; ++i) s[i] = (m >> i) & 1u ? +1 : -1;
    const double e = energy(p, s);
    if (first || e < out.min_energy) {
      out.min_energy = e;
      out.minimizers.clear();
      out.minimizers.push_back(s);
      first = false;
    } else if (e == out.min_energy) {
      out.minimizers.push_back(s);
    }
  }
  return out;
}

// --- JSON format: {"spins": N, "terms": [{"indices": [...], "j": x}, ...]} ---

inline nlohmann::json to_json(const Problem& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms)
    terms.push_back({{"indices", t.indices}, {"j", t.coeff}});
  return {{"spins", p.spin_count}, {"terms", terms}};
}

inline Problem problem_from_json(const nlohmann::json& j) {
  Problem p;
  if (!j.is_object() || !j.contains("spins"))
    throw input_error("problem json: missing field 'spins'");
  if (!j["spins"].is_number_integer())
    throw input_error("problem json: field 'spins' must be an integer");
  p.spin_count = j["spins"].get<int>();
  if (j.contains("terms")) {
    if (!j["terms"].is_array())
      throw input_error("problem json: field 'terms' must be an array");
    for (const auto& t : j["terms"]) {
      if (!t.contains("indices") || !t["indices"].is_array())
        throw input_error("problem json: term missing array field 'indices'");
      if (!t.contains("j") || !t["j"].is_number())
        throw input_error("problem json: term missing numeric field 'j'");
      InteractionTerm term;
      term.indices = t["indices"].get<std::vector<int>>();
      term.coeff = t["j"].get<double>();
      p.terms.push_back(std::move(term));
    }
  }
  check_valid(p);
  return p;
}

}  // namespace rydmwis
