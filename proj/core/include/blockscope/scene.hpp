#pragma once

#include "blockscope/permgroup.hpp"

#include <cstdint>
#include <string>

namespace blockscope {

/// The coprime-action setup: inside one ambient group Gamma, a normal
/// subgroup G, a normal N <= G with G/N of p'-order, and a p-subgroup P with
/// Gamma = G P.  P acts on everything by conjugation.
struct ActionScene {
  std::string name;
  PermGroup ambient{1};
  PermGroup G{1};
  PermGroup N{1};
  PermGroup P{1};
  std::uint64_t p = 2;
};

/// Validates all scene invariants and returns the scene; throws domain_error
/// on any violation.
ActionScene make_scene(std::string name, PermGroup ambient, PermGroup G, PermGroup N,
                       PermGroup P, std::uint64_t p);

} // namespace blockscope
