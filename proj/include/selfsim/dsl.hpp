#pragma once

#include <string>

#include "selfsim/system.hpp"

namespace selfsim {

// Text format:
//
//   basis L0 L1 R0 R1;          # comments run to end of line
//   gen alpha inv = (1 2)(3 4) [beta, beta^-1, beta*alpha, alpha^-1*beta^-1];
//   gen P inv = (1 3)(2 4) [e, e, e, e];
//
// A generator may appear in sections before its own definition.  Perm "id"
// (or no cycles) is the identity.  Sections are stored as written; reduction
// happens in the operations that consume them.
System parse_system(const std::string& text);
std::string render_system(const System& sys);

std::string system_to_json(const System& sys);
System system_from_json(const std::string& text);

}  // namespace selfsim
