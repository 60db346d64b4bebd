#pragma once

#include <string>
#include <vector>

#include "tits/structurable.hpp"
#include "tits/superalgebra.hpp"

namespace tits {

// Named algebras:
//   cayley, quaternion, binarion, ground
//   h3:<comp>, jvtheta, d2, dt:<p>/<q>, diag:<n>, field
//   aj:<jordan>, ak, tensor:<comp>:<comp>
//   tits:<comp>:<jordan>, der:<comp>, kaplansky
//   glw, so:<n>, sl:<n>, sp:<n>, gl-h
// Throws std::invalid_argument for unknown names.
SuperAlgebra algebra_by_name(const std::string& name);
// aj:<jordan>, ak, tensor:<comp>:<comp>.
AlgebraWithInvolution involution_algebra_by_name(const std::string& name);
// Representative names, for help text.
std::vector<std::string> registry_examples();

}  // namespace tits
