#include "rmf/vars.hpp"

#include <algorithm>

namespace rmf {

static const char* kNames[kVarCount] = {"z1", "z2", "z3", "z",  "t",
                                        "u1", "u2", "u3", "s",  "eps"};

const char* var_name(Var v) { return kNames[static_cast<int>(v)]; }

Var var_parse(const std::string& name) {
  for (int i = 0; i < kVarCount; ++i)
    if (name == kNames[i]) return static_cast<Var>(i);
  throw DomainError("var_parse: unknown variable '" + name + "'");
}

VarSet make_vars(std::initializer_list<Var> vs) {
  VarSet out(vs);
  std::sort(out.begin(), out.end());
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1]) throw StructuralError("make_vars: duplicate variable");
  return out;
}

VarSet vars_union(const VarSet& a, const VarSet& b) {
  VarSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool vars_contains(const VarSet& vs, Var v) {
  return std::binary_search(vs.begin(), vs.end(), v);
}

int var_position(const VarSet& vs, Var v) {
  auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v) return -1;
  return static_cast<int>(it - vs.begin());
}

std::string vars_str(const VarSet& vs) {
  std::string out = "{";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += var_name(vs[i]);
  }
  out += "}";
  return out;
}

}  // namespace rmf
