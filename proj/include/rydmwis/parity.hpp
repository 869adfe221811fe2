#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "rydmwis/common.hpp"
#include "rydmwis/problem.hpp"

namespace rydmwis {

/// Parity qubit label: the set of original spin indices whose product the
/// qubit encodes, kept sorted ascending.
using Label = std::vector<int>;

struct ParityQubit {
  Label label;
  double field = 0.0;            // problem field J_m
  std::array<int, 2> pos{0, 0};  // integer parity-grid position (row, col)
};

struct ParityConstraint {
  std::vector<Label> members;  // 3 or 4 qubit labels
  int parity = 0;              // required XOR: 1 for three-body, 0 for four-body
};

struct ParityLayout {
  std::vector<ParityQubit> qubits;
  std::vector<ParityConstraint> constraints;

  int index_of(const Label& label) const {
    for (std::size_t i = 0; i < qubits.size(); ++i)
      if (qubits[i].label == label) return static_cast<int>(i);
    return -1;
  }
};

inline void check_valid(const ParityLayout& layout) {
  std::set<Label> seen;
  for (const auto& q : layout.qubits) {
    if (q.label.empty()) throw input_error("parity layout: empty qubit label");
    if (!std::is_sorted(q.label.begin(), q.label.end()) ||
        std::adjacent_find(q.label.begin(), q.label.end()) != q.label.end())
      throw input_error("parity layout: qubit label must be strictly increasing");
    if (!seen.insert(q.label).second)
      throw input_error("parity layout: duplicate qubit label");
  }
  for (const auto& c : layout.constraints) {
    if (c.members.size() != 3 && c.members.size() != 4)
      throw input_error("parity layout: constraint must have 3 or 4 members");
    const int expected = c.members.size() == 3 ? 1 : 0;
    if (c.parity != expected)
      throw input_error("parity layout: parity must be 1 for three-body and 0 for four-body");
    std::vector<std::array<int, 2>> pos;
    for (const auto& m : c.members) {
      const int idx = layout.index_of(m);
      if (idx < 0) throw input_error("parity layout: constraint member names unknown qubit");
      pos.push_back(layout.qubits[idx].pos);
    }
    for (std::size_t a = 0; a < pos.size(); ++a)
      for (std::size_t b = a + 1; b < pos.size(); ++b) {
        const int l1 = std::abs(pos[a][0] - pos[b][0]) + std::abs(pos[a][1] - pos[b][1]);
        if (l1 > 2)
          throw input_error("parity layout: constraint members not plaquette-adjacent on grid");
      }
  }
}

/// LHZ encoding of an all-to-all two-body problem: one parity qubit per spin
/// pair on the triangular parity grid, three-body plaquettes on the boundary
/// row and four-body plaquettes in the bulk.
inline ParityLayout lhz_encode(const Problem& p) {
  check_valid(p);
  for (const auto& t : p.terms)
    if (t.indices.size() != 2)
      throw input_error(
          "lhz_encode: only all-to-all two-body problems are supported; "
          "supply an explicit parity layout for higher-order terms");
  const int n = p.spin_count;
  if (n < 2) throw input_error("lhz_encode: need at least two spins");

  std::map<std::pair<int, int>, double> coupling;
  for (const auto& t : p.terms) coupling[{t.indices[0], t.indices[1]}] = t.coeff;

  ParityLayout layout;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ParityQubit q;
      q.label = {i, j};
      auto it = coupling.find({i, j});
      q.field = it == coupling.end() ? 0.0 : it->second;
      q.pos = {i, j};
      layout.qubits.push_back(std::move(q));
    }

  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      ParityConstraint c;
      c.members.push_back({i, j});
      c.members.push_back({i, j - 1});
      c.members.push_back({i + 1, j});
      if (j > i + 2) {
        c.members.push_back({i + 1, j - 1});
        c.parity = 0;
      } else {
        c.parity = 1;
      }
      layout.constraints.push_back(std::move(c));
    }
  check_valid(layout);
  return layout;
}

/// n_m = (1 + prod_{i in m} s_i) / 2 for each label.
inline std::vector<int> parity_config_from_spins(const std::vector<Label>& labels,
                                                 const SpinConfiguration& s) {
  std::vector<int> bits;
  bits.reserve(labels.size());
  for (const auto& m : labels) {
    int prod = 1;
    for (int i : m) {
      if (i < 0 || i >= static_cast<int>(s.size()))
        throw input_error("parity_config_from_spins: label index out of range");
      prod *= s[i];
    }
    bits.push_back(prod > 0 ? 1 : 0);
  }
  return bits;
}

struct ConstraintCheck {
  bool satisfied = true;
  std::vector<int> violated;  // indices into the constraint list
};

/// XOR of member bits must equal the required parity for every constraint.
/// `bits` is aligned with `layout.qubits`.
inline ConstraintCheck check_constraints(const ParityLayout& layout,
                                         const std::vector<int>& bits) {
  if (bits.size() != layout.qubits.size())
    throw input_error("check_constraints: bit vector length mismatch");
  ConstraintCheck out;
  for (std::size_t c = 0; c < layout.constraints.size(); ++c) {
    int x = 0;
    for (const auto& m : layout.constraints[c].members) {
      const int idx = layout.index_of(m);
      if (idx < 0) throw input_error("check_constraints: member names unknown qubit");
      x ^= bits[idx] & 1;
    }
    if (x != layout.constraints[c].parity) {
      out.satisfied = false;
      out.violated.push_back(static_cast<int>(c));
    }
  }
  return out;
}

struct DecodeResult {
  bool ok = false;
  std::vector<SpinConfiguration> solutions;  // {s, -s} when both are consistent
  std::vector<Label> violated_cycle;         // witness when inconsistent
};

/// Inverts the parity map: finds spin assignments whose pair/tuple products
/// reproduce the given bits. GF(2) elimination over the label equations with
/// row provenance, so an inconsistency is reported as the combination of
/// labels forming the violated cycle.
inline DecodeResult decode(const std::vector<int>& bits, const ParityLayout& layout) {
  if (bits.size() != layout.qubits.size())
    throw input_error("decode: bit vector length mismatch");
  int n = 0;
  for (const auto& q : layout.qubits)
    for (int i : q.label) n = std::max(n, i + 1);
  std::vector<bool> present(n, false);
  for (const auto& q : layout.qubits)
    for (int i : q.label) present[i] = true;
  for (int i = 0; i < n; ++i)
    if (!present[i]) throw input_error("decode: spin index " + std::to_string(i) +
                                       " appears in no qubit label");

  const std::size_t m = layout.qubits.size();
  const std::size_t words = (m + 63) / 64;
  struct Row {
    std::vector<std::uint64_t> coeff;  // over spins (packed)
    int rhs = 0;
    std::vector<std::uint64_t> prov;  // which original equations were combined
  };
  const std::size_t swords = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<Row> rows(m);
  for (std::size_t r = 0; r < m; ++r) {
    rows[r].coeff.assign(swords, 0);
    rows[r].prov.assign(words, 0);
    for (int i : layout.qubits[r].label) rows[r].coeff[i / 64] |= std::uint64_t{1} << (i % 64);
    rows[r].rhs = 1 - (bits[r] & 1);  // product +1 <=> even number of -1 spins
    rows[r].prov[r / 64] |= std::uint64_t{1} << (r % 64);
  }

  auto get = [](const std::vector<std::uint64_t>& v, int i) {
    return (v[i / 64] >> (i % 64)) & 1u;
  };
  auto xor_into = [](std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
  };

  std::vector<int> pivot_of_col(n, -1);
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    std::size_t pr = rank;
    while (pr < m && !get(rows[pr].coeff, col)) ++pr;
    if (pr == m) continue;
    std::swap(rows[rank], rows[pr]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r != rank && get(rows[r].coeff, col)) {
        xor_into(rows[r].coeff, rows[rank].coeff);
        rows[r].rhs ^= rows[rank].rhs;
        xor_into(rows[r].prov, rows[rank].prov);
      }
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }

  DecodeResult out;
  for (std::size_t r = rank; r < m; ++r) {
    if (rows[r].rhs) {
      for (std::size_t q = 0; q < m; ++q)
        if (get(rows[r].prov, static_cast<int>(q)))
          out.violated_cycle.push_back(layout.qubits[q].label);
      return out;  // inconsistent
    }
  }

  SpinConfiguration s(n, +1);  // free variables fixed to +1
  for (int col = 0; col < n; ++col) {
    if (pivot_of_col[col] < 0) continue;
    // back-substitution is already done (full reduction); rhs is the value
    if (rows[pivot_of_col[col]].rhs) s[col] = -1;
  }

  auto consistent = [&](const SpinConfiguration& cand) {
    const auto labels = [&] {
      std::vector<Label> l;
      for (const auto& q : layout.qubits) l.push_back(q.label);
      return l;
    }();
    return parity_config_from_spins(labels, cand) == bits;
  };
  if (!consistent(s)) throw system_error("decode: internal inconsistency");
  out.ok = true;
  out.solutions.push_back(s);
  SpinConfiguration flipped(s);
  for (auto& v : flipped) v = -v;
  if (consistent(flipped)) out.solutions.push_back(flipped);
  return out;
}

// --- JSON format ---
// {"qubits": [{"label": [...], "j": x, "pos": [r, c]}, ...],
//  "constraints": [{"members": [[...], ...], "parity": 0|1}, ...]}

inline nlohmann::json to_json(const ParityLayout& layout) {
  nlohmann::json qubits = nlohmann::json::array();
  for (const auto& q : layout.qubits)
    qubits.push_back({{"label", q.label},
                      {"j", q.field},
                      {"pos", std::vector<int>{q.pos[0], q.pos[1]}}});
  nlohmann::json constraints = nlohmann::json::array();
  for (const auto& c : layout.constraints) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& mlabel : c.members) members.push_back(mlabel);
    constraints.push_back({{"members", members}, {"parity", c.parity}});
  }
  return {{"qubits", qubits}, {"constraints", constraints}};
}

inline ParityLayout parity_layout_from_json(const nlohmann::json& j) {
  ParityLayout layout;
  if (!j.contains("qubits") || !j["qubits"].is_array())
    throw input_error("parity layout json: missing array field 'qubits'");
  for (const auto& q : j["qubits"]) {
    if (!q.contains("label") || !q["label"].is_array())
      throw input_error("parity layout json: qubit missing array field 'label'");
    ParityQubit out;
    out.label = q["label"].get<std::vector<int>>();
    if (q.contains("j")) out.field = q["j"].get<double>();
    if (q.contains("pos")) {
      auto p = q["pos"].get<std::vector<int>>();
      if (p.size() != 2) throw input_error("parity layout json: 'pos' must be [row, col]");
      out.pos = {p[0], p[1]};
    }
    layout.qubits.push_back(std::move(out));
  }
  if (j.contains("constraints")) {
    if (!j["constraints"].is_array())
      throw input_error("parity layout json: 'constraints' must be an array");
    for (const auto& c : j["constraints"]) {
      if (!c.contains("members") || !c["members"].is_array())
        throw input_error("parity layout json: constraint missing array field 'members'");
      ParityConstraint out;
      for (const auto& mlabel : c["members"]) out.members.push_back(mlabel.get<Label>());
      if (!c.contains("parity") || !c["parity"].is_number_integer())
        throw input_error("parity layout json: constraint missing integer field 'parity'");
      out.parity = c["parity"].get<int>();
      layout.constraints.push_back(std::move(out));
    }
  }
  check_valid(layout);
  return layout;
}

}  // namespace rydmwis
