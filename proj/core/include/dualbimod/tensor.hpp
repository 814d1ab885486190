#ifndef DUALBIMOD_TENSOR_HPP
#define DUALBIMOD_TENSOR_HPP

#include <utility>
#include <vector>

#include "dualbimod/bimodule.hpp"

namespace dualbimod {

/*
  M ⊗_D N as the quotient of M ⊗_k N by the span of m·x ⊗ n − m ⊗ x·n.
  Ambient coordinates are the pure-tensor pairs (i, j) in lexicographic
  order; the quotient basis is the deterministic complement of the
  row-reduced relation subspace (non-pivot pure tensors, in order), so the
  same factors always produce the identical presentation.
*/
struct TensorProduct {
  BimodulePtr left_factor, right_factor, result;
  Mat project;  // result.dim × (dim M · dim N): class of each pure tensor
  Mat section;  // (dim M · dim N) × result.dim: chosen representatives
  std::vector<std::pair<int, int>> basis_pairs;

  int ambient_index(int i, int j) const { return i * right_factor->dim + j; }
  // Class of u⊗v for coordinate columns u, v.
  Mat pure(const Mat& u, const Mat& v) const;
  // Class of e_i ⊗ e_j.
  Mat pure_basis(int i, int j) const;
};

TensorProduct tensor_over_D(const Bimodule& m, const Bimodule& n);
TensorProduct tensor_over_D(const BimodulePtr& m, const BimodulePtr& n);

// Induced map M⊗N → M'⊗N' of f: M → M', g: N → N'.
Morphism tensor_morphisms(const Morphism& f, const Morphism& g);
Morphism tensor_morphisms(const TensorProduct& src, const TensorProduct& dst,
                          const Morphism& f, const Morphism& g);

// Coherence isomorphisms. All are verified invertible intertwiners on
// construction.
Morphism unitor_left(const Bimodule& m);                      // D⊗M → M
Morphism unitor_left(const TensorProduct& t);
Morphism unitor_right(const Bimodule& m);                     // M⊗D → M
Morphism unitor_right(const TensorProduct& t);
// (A⊗B)⊗C → A⊗(B⊗C)
Morphism associator(const Bimodule& a, const Bimodule& b, const Bimodule& c);

}  // namespace dualbimod

#endif
