#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tits/superalgebra.hpp"

namespace tits {

struct MapGenerator {
  Mat matrix;
  Parity parity;
  std::pair<std::size_t, std::size_t> source;  // indices of the generating pair
  std::string label;
};

// A Lie superalgebra of linear maps on an n-dimensional space, spanned by
// homogeneous generators.  The basis is picked greedily in generator order and
// the bracket is the supercommutator, re-expressed in that basis.
class MapAlgebra {
 public:
  MapAlgebra() = default;
  MapAlgebra(const std::vector<MapGenerator>& generators, std::size_t n);

  std::size_t dim() const { return basis_.size(); }
  std::size_t space_dim() const { return n_; }
  const MapGenerator& element(std::size_t i) const { return basis_[i]; }
  const Mat& map(std::size_t i) const { return basis_[i].matrix; }
  const SuperAlgebra& lie() const { return lie_; }

  std::optional<Vec> try_coordinates(const Mat& m) const;
  Vec coordinates(const Mat& m) const;
  Mat combine(const Vec& coords) const;
  bool contains(const Mat& m) const { return try_coordinates(m).has_value(); }

 private:
  std::size_t n_ = 0;
  std::vector<MapGenerator> basis_;
  SubspaceBasis flat_;
  SuperAlgebra lie_;
};

// Supercommutator a b - (-1)^{|a||b|} b a.
Mat supercommutator(const Mat& a, Parity pa, const Mat& b, Parity pb);

}  // namespace tits
