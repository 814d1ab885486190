#ifndef DUALBIMOD_BIMODULE_HPP
#define DUALBIMOD_BIMODULE_HPP

#include <memory>
#include <string>
#include <vector>

#include "dualbimod/label.hpp"
#include "dualbimod/matrix.hpp"

namespace dualbimod {

/*
  A finite dimensional bimodule over the dual numbers D = k[x]/(x²),
  presented by the commuting square-zero matrices of the left and right
  action of x on a chosen basis. Values are immutable after construction;
  every operation in this module is a pure function.
*/
struct Bimodule {
  int dim = 0;
  Mat left;   // dim×dim, action of x·(−)
  Mat right;  // dim×dim, action of (−)·x
  std::vector<std::string> basis_names;  // reporting only, may be empty

  const std::string& name_of(int i) const;
};

// Throws std::invalid_argument unless left² = right² = 0 and the actions
// commute.
void validate_bimodule(const Bimodule& b);

Bimodule make_bimodule(Mat left, Mat right, std::vector<std::string> names = {});

bool same_presentation(const Bimodule& a, const Bimodule& b);  // names ignored

using BimodulePtr = std::shared_ptr<const Bimodule>;
BimodulePtr share(Bimodule b);

/*
  A bimodule homomorphism: matrix intertwining both actions,
  map·src.left = dst.left·map and map·src.right = dst.right·map.
*/
struct Morphism {
  BimodulePtr src, dst;
  Mat map;  // dst.dim × src.dim
};

bool is_bimodule_map(const Morphism& f);
// Throws unless f intertwines (used by every constructor of named maps).
void require_bimodule_map(const Morphism& f, const char* what);

Morphism identity_morphism(const BimodulePtr& m);
Morphism zero_morphism(const BimodulePtr& src, const BimodulePtr& dst);
Morphism compose(const Morphism& g, const Morphism& f);  // g ∘ f
Morphism inverse_morphism(const Morphism& f);            // throws if singular
bool is_injective(const Morphism& f);
bool is_surjective(const Morphism& f);

// ---- constructors of the classified indecomposables ----

Bimodule construct(const Label& label);
Bimodule zero_bimodule();
Bimodule direct_sum(const Bimodule& a, const Bimodule& b);
Bimodule direct_sum(const std::vector<Bimodule>& parts);

struct QuotientResult {
  Bimodule quotient;
  Morphism projection;  // source → quotient, surjective, kernel = span
};

// Quotient by the span of the given column vectors; the span must be stable
// under both actions ("not a subbimodule" otherwise). The quotient basis is
// the deterministic complement: non-pivot coordinates in increasing order.
QuotientResult quotient_by_span(const Bimodule& m, const Mat& vectors);

struct SubResult {
  Bimodule sub;
  Morphism inclusion;  // sub → ambient
};

// Restriction to an action-stable column span (basis columns as given).
SubResult sub_bimodule(const Bimodule& m, const Mat& basis_cols);

// Kernel and image of a morphism, as bimodules with their canonical maps.
SubResult kernel_bimodule(const Morphism& f);
SubResult image_bimodule(const Morphism& f);

// Dual space with the twisted actions: left* = rightᵀ, right* = leftᵀ.
Bimodule dual(const Bimodule& m);

// Hom_{D-}(M, D) of left-module maps with its induced bimodule structure:
// (x·f)(v) = f(v·x) and (f·x)(v) = f(v)·x.
Bimodule hom_left_regular(const Bimodule& m);

// Deterministic basis of the space of bimodule homomorphisms M → N.
std::vector<Morphism> hom_space(const Bimodule& m, const Bimodule& n);
std::vector<Morphism> hom_space(const BimodulePtr& m, const BimodulePtr& n);

}  // namespace dualbimod

#endif
