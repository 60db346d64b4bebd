#include "tits/group_action.hpp"

#include <sstream>
#include <stdexcept>

namespace tits {

const std::array<const char*, 4>& GroupAction::generator_names() {
  static const std::array<const char*, 4> names{"tau1", "tau2", "phi", "tau"};
  return names;
}

const Mat& GroupAction::generator(int i) const {
  switch (i) {
    case 0: return tau1;
    case 1: return tau2;
    case 2: return phi;
    case 3: return tau;
    default: throw std::out_of_range("GroupAction: generator index");
  }
}

Mat GroupAction::word(const std::string& w) const {
  std::istringstream in(w);
  std::string tok;
  Mat m = Mat::identity(dim());
  while (in >> tok) {
    const auto& names = generator_names();
    int g = -1;
    for (int i = 0; i < 4; ++i) {
      if (tok == names[static_cast<std::size_t>(i)]) g = i;
    }
    if (g < 0) throw std::invalid_argument("GroupAction: unknown generator '" + tok + "'");
    m = m * generator(g);
  }
  return m;
}

Report GroupAction::relations_report() const {
  Report r{"S4 relations"};
  const std::pair<const char*, const char*> relations[] = {
      {"tau1 tau2", "tau2 tau1"}, {"phi tau1", "tau2 phi"},      {"phi tau2", "tau1 tau2 phi"},
      {"tau1 tau", "tau tau1"},   {"tau2 tau", "tau tau2 tau1"}, {"tau phi", "phi phi tau"},
      {"tau1 tau1", ""},          {"tau2 tau2", ""},             {"tau tau", ""},
      {"phi phi phi", ""},
  };
  for (const auto& [lhs, rhs] : relations) {
    ++r.checked;
    if (word(lhs) != word(rhs)) {
      r.fail({{}, std::string(lhs) + " != " + (std::string(rhs).empty() ? "identity" : rhs)});
    }
  }
  return r;
}

Report GroupAction::verify(const SuperAlgebra& a) const {
  Report r = relations_report();
  r.check = "S4 action";
  for (int g = 0; g < 4; ++g) {
    Report ar = automorphism_report(a, generator(g));
    if (!ar.passed) {
      for (auto& w : ar.witnesses) w.detail = std::string(generator_names()[static_cast<std::size_t>(g)]) + ": " + w.detail;
    }
    r.merge(ar);
  }
  return r;
}

GroupAction trivial_action(std::size_t n) {
  Mat i = Mat::identity(n);
  return {i, i, i, i};
}

KleinDegree permute_degree(int generator, KleinDegree d) {
  if (generator == 2) {
    // (1,0) -> (0,1) -> (1,1) -> (1,0)
    if (d == KleinDegree{1, 0}) return {0, 1};
    if (d == KleinDegree{0, 1}) return {1, 1};
    if (d == KleinDegree{1, 1}) return {1, 0};
  }
  if (generator == 3) {
    if (d == KleinDegree{0, 1}) return {1, 1};
    if (d == KleinDegree{1, 1}) return {0, 1};
  }
  return d;
}

}  // namespace tits
