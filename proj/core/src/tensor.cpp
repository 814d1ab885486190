#include "dualbimod/tensor.hpp"

#include <stdexcept>

namespace dualbimod {

Mat TensorProduct::pure(const Mat& u, const Mat& v) const {
  Mat out(result->dim, 1);
  for (int i = 0; i < u.rows(); ++i) {
    if (u.at(i, 0).is_zero()) continue;
    for (int j = 0; j < v.rows(); ++j) {
      if (v.at(j, 0).is_zero()) continue;
      const Rat c = u.at(i, 0) * v.at(j, 0);
      const int a = ambient_index(i, j);
      for (int t = 0; t < result->dim; ++t) {
        const Rat& p = project.at(t, a);
        if (!p.is_zero()) out.at(t, 0) += c * p;
      }
    }
  }
  return out;
}

Mat TensorProduct::pure_basis(int i, int j) const {
  Mat out(result->dim, 1);
  const int a = ambient_index(i, j);
  for (int t = 0; t < result->dim; ++t) out.at(t, 0) = project.at(t, a);
  return out;
}

TensorProduct tensor_over_D(const Bimodule& m, const Bimodule& n) {
  return tensor_over_D(share(m), share(n));
}

TensorProduct tensor_over_D(const BimodulePtr& m, const BimodulePtr& n) {
  const int md = m->dim, nd = n->dim;
  const int amb = md * nd;
  const auto aidx = [nd](int i, int j) { return i * nd + j; };

  // Relation generators (m_i·x)⊗n_j − m_i⊗(x·n_j), one ambient row each;
  // all-zero generators are dropped up front.
  std::vector<Mat> gen_rows;
  gen_rows.reserve(amb);
  for (int i = 0; i < md; ++i) {
    for (int j = 0; j < nd; ++j) {
      Mat row(1, amb);
      bool touched = false;
      for (int k = 0; k < md; ++k) {
        const Rat& f = m->right.at(k, i);
        if (f.is_zero()) continue;
        row.at(0, aidx(k, j)) += f;
        touched = true;
      }
      for (int k = 0; k < nd; ++k) {
        const Rat& f = n->left.at(k, j);
        if (f.is_zero()) continue;
        row.at(0, aidx(i, k)) -= f;
        touched = true;
      }
      if (touched && !row.is_zero()) gen_rows.push_back(std::move(row));
    }
  }
  Mat rel(static_cast<int>(gen_rows.size()), amb);
  for (int r = 0; r < static_cast<int>(gen_rows.size()); ++r)
    for (int c = 0; c < amb; ++c) rel.at(r, c) = gen_rows[r].at(0, c);
  const auto rr = rref(rel);
  const int nrel = static_cast<int>(rr.pivots.size());

  std::vector<bool> is_pivot(amb, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<int> keep;
  keep.reserve(amb - nrel);
  for (int c = 0; c < amb; ++c)
    if (!is_pivot[c]) keep.push_back(c);
  const int q = static_cast<int>(keep.size());

  Mat project(q, amb), section(amb, q);
  for (int t = 0; t < q; ++t) {
    project.at(t, keep[t]) = Rat(1);
    section.at(keep[t], t) = Rat(1);
  }
  for (int p = 0; p < nrel; ++p) {
    const int c = rr.pivots[p];
    for (int t = 0; t < q; ++t) {
      const Rat& v = rr.m.at(p, keep[t]);
      if (!v.is_zero()) project.at(t, c) = -v;
    }
  }

  // Inherited actions: left from the left factor, right from the right one.
  Mat left(q, q), right(q, q);
  for (int t = 0; t < q; ++t) {
    const int i = keep[t] / nd, j = keep[t] % nd;
    Mat lcol(q, 1), rcol(q, 1);
    for (int k = 0; k < md; ++k) {
      const Rat& f = m->left.at(k, i);
      if (f.is_zero()) continue;
      const int a = aidx(k, j);
      for (int s = 0; s < q; ++s) {
        const Rat& p = project.at(s, a);
        if (!p.is_zero()) lcol.at(s, 0) += f * p;
      }
    }
    for (int k = 0; k < nd; ++k) {
      const Rat& f = n->right.at(k, j);
      if (f.is_zero()) continue;
      const int a = aidx(i, k);
      for (int s = 0; s < q; ++s) {
        const Rat& p = project.at(s, a);
        if (!p.is_zero()) rcol.at(s, 0) += f * p;
      }
    }
    left.set_col(t, lcol);
    right.set_col(t, rcol);
  }

  std::vector<std::string> names;
  if (!m->basis_names.empty() && !n->basis_names.empty()) {
    names.resize(q);
    for (int t = 0; t < q; ++t)
      names[t] = m->name_of(keep[t] / nd) + "⊗" + n->name_of(keep[t] % nd);
  }

  TensorProduct tp;
  tp.left_factor = m;
  tp.right_factor = n;
  tp.result = share(make_bimodule(std::move(left), std::move(right), std::move(names)));
  tp.project = std::move(project);
  tp.section = std::move(section);
  tp.basis_pairs.reserve(q);
  for (int t = 0; t < q; ++t) tp.basis_pairs.emplace_back(keep[t] / nd, keep[t] % nd);
  return tp;
}

Morphism tensor_morphisms(const Morphism& f, const Morphism& g) {
  const TensorProduct src = tensor_over_D(f.src, g.src);
  const TensorProduct dst = tensor_over_D(f.dst, g.dst);
  return tensor_morphisms(src, dst, f, g);
}

Morphism tensor_morphisms(const TensorProduct& src, const TensorProduct& dst,
                          const Morphism& f, const Morphism& g) {
  if (!same_presentation(*src.left_factor, *f.src) ||
      !same_presentation(*src.right_factor, *g.src) ||
      !same_presentation(*dst.left_factor, *f.dst) ||
      !same_presentation(*dst.right_factor, *g.dst))
    throw std::invalid_argument("tensor_morphisms: factor mismatch");
  Mat map(dst.result->dim, src.result->dim);
  for (int t = 0; t < src.result->dim; ++t) {
    const auto [i, j] = src.basis_pairs[t];
    map.set_col(t, dst.pure(f.map.col(i), g.map.col(j)));
  }
  Morphism out{src.result, dst.result, std::move(map)};
  require_bimodule_map(out, "tensor of morphisms");
  return out;
}

Morphism unitor_left(const Bimodule& m) {
  return unitor_left(tensor_over_D(construct(regular_label()), m));
}

Morphism unitor_left(const TensorProduct& t) {
  const Bimodule d = construct(regular_label());
  if (!same_presentation(*t.left_factor, d))
    throw std::invalid_argument("unitor_left: left factor is not the identity bimodule");
  const Bimodule& m = *t.right_factor;
  Mat map(m.dim, t.result->dim);
  for (int s = 0; s < t.result->dim; ++s) {
    const auto [i, j] = t.basis_pairs[s];
    // 1⊗v ↦ v, x⊗v ↦ x·v
    map.set_col(s, i == 0 ? Mat::identity(m.dim).col(j) : m.left.col(j));
  }
  Morphism out{t.result, t.right_factor, std::move(map)};
  require_bimodule_map(out, "left unitor");
  if (rank(out.map) != m.dim || t.result->dim != m.dim)
    throw std::logic_error("left unitor is not an isomorphism");
  return out;
}

Morphism unitor_right(const Bimodule& m) {
  return unitor_right(tensor_over_D(m, construct(regular_label())));
}

Morphism unitor_right(const TensorProduct& t) {
  const Bimodule d = construct(regular_label());
  if (!same_presentation(*t.right_factor, d))
    throw std::invalid_argument("unitor_right: right factor is not the identity bimodule");
  const Bimodule& m = *t.left_factor;
  Mat map(m.dim, t.result->dim);
  for (int s = 0; s < t.result->dim; ++s) {
    const auto [i, j] = t.basis_pairs[s];
    // v⊗1 ↦ v, v⊗x ↦ v·x
    map.set_col(s, j == 0 ? Mat::identity(m.dim).col(i) : m.right.col(i));
  }
  Morphism out{t.result, t.left_factor, std::move(map)};
  require_bimodule_map(out, "right unitor");
  if (rank(out.map) != m.dim || t.result->dim != m.dim)
    throw std::logic_error("right unitor is not an isomorphism");
  return out;
}

Morphism associator(const Bimodule& a, const Bimodule& b, const Bimodule& c) {
  const auto pa = share(a);
  const auto pb = share(b);
  const auto pc = share(c);
  const TensorProduct ab = tensor_over_D(pa, pb);
  const TensorProduct ab_c = tensor_over_D(ab.result, pc);
  const TensorProduct bc = tensor_over_D(pb, pc);
  const TensorProduct a_bc = tensor_over_D(pa, bc.result);

  Mat map(a_bc.result->dim, ab_c.result->dim);
  Mat ea(a.dim, 1);
  for (int t = 0; t < ab_c.result->dim; ++t) {
    const auto [s, k] = ab_c.basis_pairs[t];
    const auto [i, j] = ab.basis_pairs[s];
    for (int r = 0; r < a.dim; ++r) ea.at(r, 0) = (r == i) ? Rat(1) : Rat(0);
    map.set_col(t, a_bc.pure(ea, bc.pure_basis(j, k)));
  }
  Morphism out{ab_c.result, a_bc.result, std::move(map)};
  require_bimodule_map(out, "associator");
  if (ab_c.result->dim != a_bc.result->dim || rank(out.map) != out.map.rows())
    throw std::logic_error("associator is not an isomorphism");
  return out;
}

}  // namespace dualbimod
