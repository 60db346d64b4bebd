#include "tits/map_algebra.hpp"

#include <stdexcept>

namespace tits {

Mat supercommutator(const Mat& a, Parity pa, const Mat& b, Parity pb) {
  return commutator(a, b, koszul(pa, pb));
}

MapAlgebra::MapAlgebra(const std::vector<MapGenerator>& generators, std::size_t n) : n_(n) {
  SpanBuilder span(n * n);
  for (const auto& g : generators) {
    if (g.matrix.rows() != n || g.matrix.cols() != n) throw std::invalid_argument("MapAlgebra: generator shape");
    if (span.add(g.matrix.flatten())) basis_.push_back(g);
  }
  std::vector<Vec> flat;
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  for (const auto& b : basis_) {
    flat.push_back(b.matrix.flatten());
    labels.push_back(b.label);
    parity.push_back(b.parity);
  }
  flat_ = SubspaceBasis(std::move(flat), n * n);
  SuperAlgebra::Builder builder(labels, parity);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      Mat c = supercommutator(basis_[i].matrix, basis_[i].parity, basis_[j].matrix, basis_[j].parity);
      auto coords = try_coordinates(c);
      if (!coords) throw std::domain_error("MapAlgebra: span is not closed under the supercommutator");
      builder.add_product(i, j, *coords);
    }
  }
  builder.claims({false, true, false});
  lie_ = std::move(builder).build();
}

std::optional<Vec> MapAlgebra::try_coordinates(const Mat& m) const {
  return flat_.try_coordinates(m.flatten());
}

Vec MapAlgebra::coordinates(const Mat& m) const {
  auto c = try_coordinates(m);
  if (!c) throw std::domain_error("MapAlgebra: map not in the span");
  return *c;
}

Mat MapAlgebra::combine(const Vec& coords) const {
  return Mat::unflatten(flat_.combine(coords), n_, n_);
}

}  // namespace tits
