#pragma once

// JSON form of a BiHomInstance:
//   {"d": 4, "p": 101, "seed": 1, "quadrics": [[...], ...]}
// quadrics[i*(d-1)+j] holds q_ij as residues mod p, t-monomial major
// (t0^2, t0t1, t1^2) and graded lex on the u-monomials.

#include <fstream>
#include <string>

#include <json.hpp>

#include "oscone/degloc/degloc.hpp"
#include "oscone/errors.hpp"

namespace oscone::degloc {

inline nlohmann::json to_json(const BiHomInstance& inst) {
  return {{"d", inst.d}, {"p", inst.p}, {"seed", inst.seed}, {"quadrics", inst.quadrics}};
}

inline BiHomInstance instance_from_json(const nlohmann::json& j) {
  BiHomInstance inst;
  try {
    inst.d = j.at("d").get<int>();
    inst.p = j.at("p").get<std::uint64_t>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    inst.quadrics = j.at("quadrics").get<std::vector<std::vector<std::uint64_t>>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed instance: ") + e.what());
  }
  validate(inst);
  return inst;
}

inline void save_instance(const BiHomInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << to_json(inst).dump() << '\n';
}

inline BiHomInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
  return instance_from_json(j);
}

}  // namespace oscone::degloc
