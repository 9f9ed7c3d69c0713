#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmf/errors.hpp"

namespace rmf {

// The symbol universe is fixed and globally ordered so objects built in
// different modules compose without renaming.  z1,z2,z3 are the three-leg
// spectral symbols, z,t the two-leg ones, u1,u2,u3 evaluation parameters,
// s the quantum deformation symbol, eps the expansion symbol.
enum class Var : std::uint8_t { z1 = 0, z2, z3, z, t, u1, u2, u3, s, eps };

inline constexpr int kVarCount = 10;

const char* var_name(Var v);
Var var_parse(const std::string& name);  // DomainError on unknown name

// A variable set: strictly increasing in the global order.
using VarSet = std::vector<Var>;

VarSet make_vars(std::initializer_list<Var> vs);  // sorts, rejects duplicates
VarSet vars_union(const VarSet& a, const VarSet& b);
bool vars_contains(const VarSet& vs, Var v);
int var_position(const VarSet& vs, Var v);  // -1 if absent
std::string vars_str(const VarSet& vs);

}  // namespace rmf
