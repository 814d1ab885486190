#ifndef DUALBIMOD_DECOMPOSE_HPP
#define DUALBIMOD_DECOMPOSE_HPP

#include <optional>
#include <vector>

#include "dualbimod/bimodule.hpp"
#include "dualbimod/tensor.hpp"

namespace dualbimod {

// Additive isomorphism invariants, cheap to compare before any hom solve.
struct Profile {
  int dim = 0;
  int rank_left = 0;
  int rank_right = 0;
  int rank_lr = 0;   // rank of the composite left∘right
  int im_cap = 0;    // dim(im left ∩ im right)
  int ker_cap = 0;   // dim(ker left ∩ ker right)
};

Profile profile_of(const Bimodule& m);
bool profile_eq(const Profile& a, const Profile& b);
// Necessary condition for "part is a direct summand of whole".
bool profile_dominates(const Profile& whole, const Profile& part);

/*
  Searches hom(M, N) for an invertible intertwiner: basis elements first,
  then small-integer combinations enumerated over growing coefficient radius
  (hom dimension ≤ 6), falling back to fixed-seed random combinations.
  Returns a verified isomorphism or nothing after exhaustion.
*/
std::optional<Morphism> is_isomorphic(const Bimodule& m, const Bimodule& n);

// True iff id_C lies in the span of { g∘f : f ∈ hom(C,M), g ∈ hom(M,C) },
// which for indecomposable C is equivalent to C being a direct summand of M.
bool summand_test(const Bimodule& c, const Bimodule& m);

struct PeelResult {
  Bimodule complement;
  Morphism injection;        // C → M, split by projection
  Morphism projection;       // M → C, projection ∘ injection = id_C
  Morphism comp_inclusion;   // complement → M
  Morphism comp_projection;  // M → complement
};

// Splits one copy of indecomposable C off M. Requires summand_test(C, M).
PeelResult peel(const Bimodule& c, const Bimodule& m);

struct SummandWitness {
  Label label;
  Morphism injection;   // summand model → input
  Morphism projection;  // input → summand model
};

struct DecompositionResult {
  LabelMultiset summands;
  std::vector<SummandWitness> witnesses;
  std::optional<Bimodule> residual;  // unrecognized part, absent when fully split

  int recognized_dim() const;
};

// Candidate labels generated from invariants of m: every string shape that
// fits, band lengths up to dim/2 with eigenvalues read off the action
// structure (plus 1), the projective-injective and the identity bimodule.
// Ordered by dimension descending, ties broken by fixed label order.
std::vector<Label> candidate_labels(const Bimodule& m);

DecompositionResult decompose(const Bimodule& m);
// Same, but the caller restricts the candidate pool (still sorted and
// filtered internally).
DecompositionResult decompose(const Bimodule& m, std::vector<Label> pool);

// Label of an indecomposable, using invariant pre-filters before any
// isomorphism search; nothing if no (unique) candidate matches.
std::optional<Label> identify(const Bimodule& m);

}  // namespace dualbimod

#endif
