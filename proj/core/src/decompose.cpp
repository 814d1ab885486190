#include "dualbimod/decompose.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dualbimod {

Profile profile_of(const Bimodule& m) {
  Profile p;
  p.dim = m.dim;
  p.rank_left = rank(m.left);
  p.rank_right = rank(m.right);
  p.rank_lr = rank(m.left * m.right);
  p.im_cap = intersection_dim(column_space_basis(m.left), column_space_basis(m.right));
  p.ker_cap = m.dim - rank(m.left.vjoin(m.right));
  return p;
}

bool profile_eq(const Profile& a, const Profile& b) {
  return a.dim == b.dim && a.rank_left == b.rank_left && a.rank_right == b.rank_right &&
         a.rank_lr == b.rank_lr && a.im_cap == b.im_cap && a.ker_cap == b.ker_cap;
}

bool profile_dominates(const Profile& whole, const Profile& part) {
  return part.dim <= whole.dim && part.rank_left <= whole.rank_left &&
         part.rank_right <= whole.rank_right && part.rank_lr <= whole.rank_lr &&
         part.im_cap <= whole.im_cap && part.ker_cap <= whole.ker_cap;
}

namespace {

std::optional<Morphism> invertible_combination(const BimodulePtr& m, const BimodulePtr& n,
                                               const std::vector<Morphism>& basis) {
  const int b = static_cast<int>(basis.size());
  const auto try_coeffs = [&](const std::vector<int>& c) -> std::optional<Morphism> {
    Mat cand(n->dim, m->dim);
    for (int t = 0; t < b; ++t) {
      if (c[t] == 0) continue;
      cand = cand + basis[t].map.scaled(Rat(c[t]));
    }
    if (rank(cand) != m->dim) return std::nullopt;
    return Morphism{m, n, std::move(cand)};
  };

  for (const auto& f : basis)
    if (rank(f.map) == m->dim) return f;

  if (b <= 6) {
    // Deterministic spiral: all integer coefficient tuples of growing
    // max-norm radius, lexicographic within a radius.
    std::vector<int> c(b, 0);
    for (int radius = 1; radius <= 4; ++radius) {
      std::fill(c.begin(), c.end(), -radius);
      for (;;) {
        int maxabs = 0;
        int nonzero = 0;
        for (int t = 0; t < b; ++t) {
          maxabs = std::max(maxabs, std::abs(c[t]));
          nonzero += c[t] != 0;
        }
        if (maxabs == radius && nonzero > 1)
          if (auto iso = try_coeffs(c)) return iso;
        int p = b - 1;
        while (p >= 0 && c[p] == radius) c[p--] = -radius;
        if (p < 0) break;
        ++c[p];
      }
    }
    return std::nullopt;
  }

  std::mt19937_64 rng(0xD0A1);
  std::uniform_int_distribution<int> dist(-4, 4);
  std::vector<int> c(b);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    for (int t = 0; t < b; ++t) c[t] = dist(rng);
    if (auto iso = try_coeffs(c)) return iso;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Morphism> is_isomorphic(const Bimodule& m, const Bimodule& n) {
  if (m.dim != n.dim) return std::nullopt;
  const auto pm = share(m);
  const auto pn = share(n);
  if (m.dim == 0) return Morphism{pm, pn, Mat(0, 0)};
  if (same_presentation(m, n)) return identity_morphism(pm);
  if (!profile_eq(profile_of(m), profile_of(n))) return std::nullopt;
  const auto basis = hom_space(pm, pn);
  if (basis.empty()) return std::nullopt;
  return invertible_combination(pm, pn, basis);
}

namespace {

// Products g_j ∘ f_i flattened into columns, ordered i-major. Shared by the
// membership test and the peel that consumes its certificate.
struct ProductData {
  std::vector<Morphism> f, g;
  Mat products;  // (dimC²) × (|f|·|g|)
};

ProductData hom_products(const Bimodule& c, const Bimodule& m) {
  ProductData d;
  const auto pc = share(c);
  const auto pm = share(m);
  d.f = hom_space(pc, pm);
  d.g = hom_space(pm, pc);
  const int nf = static_cast<int>(d.f.size()), ng = static_cast<int>(d.g.size());
  d.products = Mat(c.dim * c.dim, nf * ng);
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < ng; ++j)
      d.products.set_col(i * ng + j, (d.g[j].map * d.f[i].map).vec());
  return d;
}

}  // namespace

namespace {

std::optional<PeelResult> attempt_peel(const Bimodule& c, const Bimodule& m) {
  if (c.dim == 0 || c.dim > m.dim) return std::nullopt;
  const auto d = hom_products(c, m);
  if (d.products.cols() == 0) return std::nullopt;
  const auto cert = solve(d.products, Mat::identity(c.dim).vec());
  if (!cert) return std::nullopt;
  const int ng = static_cast<int>(d.g.size());
  // id_C = Σ c_t g∘f with End(C) local, so some term with nonzero
  // coefficient is invertible; take the first.
  for (int t = 0; t < cert->rows(); ++t) {
    if (cert->at(t, 0).is_zero()) continue;
    const int i = t / ng, j = t % ng;
    const Mat h = d.g[j].map * d.f[i].map;
    const auto hinv = inverse(h);
    if (!hinv) continue;
    const Morphism& inj = d.f[i];
    Morphism proj{inj.dst, inj.src, *hinv * d.g[j].map};
    // Idempotent e = inj∘proj on M; the complement is its kernel.
    const Mat e = inj.map * proj.map;
    const Mat k = kernel_basis(e);
    auto sub = sub_bimodule(m, k);
    const auto coords = solve(k, Mat::identity(m.dim) - e);
    if (!coords) throw std::logic_error("peel: complement projection failed");
    Morphism comp_proj{inj.dst, sub.inclusion.src, *coords};
    require_bimodule_map(comp_proj, "peel complement projection");
    return PeelResult{*sub.inclusion.src, inj, std::move(proj),
                      std::move(sub.inclusion), std::move(comp_proj)};
  }
  throw std::logic_error("peel: certificate without an invertible product term");
}

}  // namespace

bool summand_test(const Bimodule& c, const Bimodule& m) {
  if (c.dim == 0 || c.dim > m.dim) return false;
  if (!profile_dominates(profile_of(m), profile_of(c))) return false;
  const auto d = hom_products(c, m);
  if (d.products.cols() == 0) return false;
  return solve(d.products, Mat::identity(c.dim).vec()).has_value();
}

PeelResult peel(const Bimodule& c, const Bimodule& m) {
  auto p = attempt_peel(c, m);
  if (!p) throw std::invalid_argument("peel: C is not a direct summand of M");
  return std::move(*p);
}

int DecompositionResult::recognized_dim() const {
  int total = 0;
  for (const auto& [label, count] : summands) total += count * label_dim(label);
  return total;
}

std::vector<Label> candidate_labels(const Bimodule& m) {
  std::vector<Label> pool;
  const int dim = m.dim;
  for (int k = 0; 2 * k + 1 <= dim; ++k) {
    if (2 * k + 3 <= dim) pool.push_back(string_label(StringShape::M, k));
    if (2 * k + 2 <= dim) {
      pool.push_back(string_label(StringShape::N, k));
      pool.push_back(string_label(StringShape::S, k));
    }
    pool.push_back(string_label(StringShape::W, k));
  }
  if (dim >= 4) pool.push_back(projinj_label());
  if (dim >= 2) pool.push_back(regular_label());

  // Band eigenvalue candidates: rational eigenvalues of the map that sends
  // a column of im(left) through a preimage under left and then right,
  // projected back onto im(left); plus 1. Nonzero rationals only — anything
  // else ends up in the residual rather than under a wrong label.
  std::vector<Rat> eigenvalues{Rat(1)};
  const Mat b = column_space_basis(m.left);
  if (b.cols() > 0) {
    Mat g(b.cols(), b.cols());
    for (int t = 0; t < b.cols(); ++t) {
      const auto u = solve(m.left, b.col(t));
      if (!u) continue;
      const auto coord = solve(b, m.right * *u);
      if (coord) g.set_col(t, *coord);
    }
    for (const auto& root : rational_roots(char_poly(g))) {
      if (root.is_zero()) continue;
      bool seen = false;
      for (const auto& e : eigenvalues)
        if (e == root) { seen = true; break; }
      if (!seen) eigenvalues.push_back(root);
    }
  }
  std::sort(eigenvalues.begin(), eigenvalues.end());
  for (int k = 1; 2 * k <= dim; ++k)
    for (const auto& lam : eigenvalues) {
      if (k == 1 && lam == Rat(1)) continue;  // that band is the Regular label
      pool.push_back(band_label(k, lam));
    }

  std::sort(pool.begin(), pool.end(), [](const Label& a, const Label& b) {
    const int da = label_dim(a), db = label_dim(b);
    if (da != db) return da > db;
    return label_less(a, b);
  });
  return pool;
}

DecompositionResult decompose(const Bimodule& m) {
  return decompose(m, candidate_labels(m));
}

DecompositionResult decompose(const Bimodule& m, std::vector<Label> pool) {
  std::sort(pool.begin(), pool.end(), [](const Label& a, const Label& b) {
    const int da = label_dim(a), db = label_dim(b);
    if (da != db) return da > db;
    return label_less(a, b);
  });

  DecompositionResult res;
  const auto pm = share(m);
  Bimodule cur = m;
  Morphism incl = identity_morphism(pm);  // cur → m
  Morphism proj = identity_morphism(pm);  // m → cur

  for (const auto& label : pool) {
    if (cur.dim == 0) break;
    if (label_dim(label) > cur.dim) continue;
    Bimodule model = construct(label);
    const Profile model_profile = profile_of(model);
    // Multiple copies of the same summand peel in one run of the loop.
    for (;;) {
      if (cur.dim == 0 || model.dim > cur.dim) break;
      if (!profile_dominates(profile_of(cur), model_profile)) break;
      if (!summand_test(model, cur)) break;
      PeelResult p = peel(model, cur);
      SummandWitness w;
      w.label = label;
      w.injection = compose(incl, p.injection);
      w.projection = compose(p.projection, proj);
      res.summands[label] += 1;
      res.witnesses.push_back(std::move(w));
      cur = p.complement;
      incl = compose(incl, p.comp_inclusion);
      proj = compose(p.comp_projection, proj);
    }
  }
  if (cur.dim > 0) res.residual = cur;
  return res;
}

std::optional<Label> identify(const Bimodule& m) {
  if (m.dim == 0) return std::nullopt;
  const Profile p = profile_of(m);
  for (const auto& label : candidate_labels(m)) {
    if (label_dim(label) != m.dim) continue;
    Bimodule model = construct(label);
    if (!profile_eq(profile_of(model), p)) continue;
    if (is_isomorphic(model, m)) return label;
  }
  return std::nullopt;
}

}  // namespace dualbimod
