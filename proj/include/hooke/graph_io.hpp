#pragma once

#include <string>

#include "hooke/foliation.hpp"

namespace hooke {

/// DOT-like rendering: vertices `v<i> [atom=A lambda2=...]`, edges
/// `v<i> -- v<j> [r=0 eps=1]`, families `family [n=-1 members="..."]`.
std::string fomenko_to_dot(const FomenkoGraph& g);

/// JSON mirror with the same fields.
std::string fomenko_to_json(const FomenkoGraph& g);

}  // namespace hooke
