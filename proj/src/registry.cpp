#include "tits/registry.hpp"

#include <stdexcept>

#include "tits/composition.hpp"
#include "tits/decompose.hpp"
#include "tits/jordan.hpp"
#include "tits/tits.hpp"

namespace tits {

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::size_t parse_size(const std::string& s, const std::string& name) {
  try {
    std::size_t pos = 0;
    unsigned long n = std::stoul(s, &pos);
    if (pos == s.size()) return n;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad size in '" + name + "'");
}

bool is_composition(const std::string& s) {
  return s == "cayley" || s == "quaternion" || s == "binarion" || s == "ground";
}

}  // namespace

AlgebraWithInvolution involution_algebra_by_name(const std::string& name) {
  if (starts_with(name, "aj:")) return a_of_j(jordan_by_name(name.substr(3)));
  if (name == "ak") return a_of_cubic(kaplansky());
  if (starts_with(name, "tensor:")) {
    std::string rest = name.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected tensor:<comp>:<comp>, got '" + name + "'");
    return tensor_product(composition_by_name(rest.substr(0, colon)), composition_by_name(rest.substr(colon + 1)));
  }
  throw std::invalid_argument("unknown algebra with involution '" + name + "'");
}

SuperAlgebra algebra_by_name(const std::string& name) {
  if (is_composition(name)) return composition_by_name(name).algebra;
  if (starts_with(name, "aj:") || name == "ak" || starts_with(name, "tensor:"))
    return involution_algebra_by_name(name).algebra;
  if (starts_with(name, "tits:")) {
    std::string rest = name.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected tits:<comp>:<jordan>, got '" + name + "'");
    return tits_algebra(composition_by_name(rest.substr(0, colon)), jordan_by_name(rest.substr(colon + 1))).algebra;
  }
  if (starts_with(name, "der:")) return derivation_algebra(composition_by_name(name.substr(4))).lie();
  if (name == "kaplansky") return kaplansky().algebra;
  if (name == "glw") return gl_w();
  if (name == "gl-h") return gl_of_h_example().g;
  if (starts_with(name, "so:")) return classical_example(ClassicalKind::Orthogonal, parse_size(name.substr(3), name)).g;
  if (starts_with(name, "sl:")) return classical_example(ClassicalKind::Special, parse_size(name.substr(3), name)).g;
  if (starts_with(name, "sp:")) return classical_example(ClassicalKind::Symplectic, parse_size(name.substr(3), name)).g;
  if (starts_with(name, "h3:") || name == "jvtheta" || name == "d2" || starts_with(name, "dt:") ||
      starts_with(name, "diag:") || name == "field")
    return jordan_by_name(name).algebra;
  throw std::invalid_argument("unknown algebra '" + name + "'");
}

std::vector<std::string> registry_examples() {
  return {"cayley",     "quaternion",  "binarion",  "ground",     "h3:cayley", "jvtheta", "d2",
          "dt:1/2",     "diag:3",      "field",     "aj:h3:ground", "ak",      "tensor:cayley:quaternion",
          "tits:cayley:h3:cayley",    "der:cayley", "kaplansky", "glw",       "so:2",    "sl:1",
          "sp:0",       "gl-h"};
}

}  // namespace tits
