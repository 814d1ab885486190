#include "dualbimod/bimodule.hpp"

#include <stdexcept>

namespace dualbimod {

std::string multiset_str(const LabelMultiset& m) {
  std::string out;
  for (const auto& [label, count] : m) {
    for (int i = 0; i < count; ++i) {
      if (!out.empty()) out += " + ";
      out += label_str(label);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

std::optional<Label> parse_label(std::string_view s) {
  if (s == "D") return regular_label();
  if (s == "DxD") return projinj_label();
  if (s.size() < 3 || s[1] != ':') return std::nullopt;
  const char shape = s[0];
  std::string_view rest = s.substr(2);
  const auto parse_int = [](std::string_view t) -> std::optional<int> {
    if (t.empty() || t.size() > 6) return std::nullopt;
    int v = 0;
    for (char c : t) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
    }
    return v;
  };
  if (shape == 'B') {
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    const auto k = parse_int(rest.substr(0, colon));
    const auto lam = Rat::parse(rest.substr(colon + 1));
    if (!k || *k < 1 || !lam || lam->is_zero()) return std::nullopt;
    return band_label(*k, *lam);
  }
  const auto k = parse_int(rest);
  if (!k) return std::nullopt;
  switch (shape) {
    case 'W': return string_label(StringShape::W, *k);
    case 'S': return string_label(StringShape::S, *k);
    case 'N': return string_label(StringShape::N, *k);
    case 'M': return string_label(StringShape::M, *k);
    default: return std::nullopt;
  }
}

const std::string& Bimodule::name_of(int i) const {
  static const std::string empty;
  if (i < 0 || i >= static_cast<int>(basis_names.size())) return empty;
  return basis_names[i];
}

void validate_bimodule(const Bimodule& b) {
  if (b.left.rows() != b.dim || b.left.cols() != b.dim ||
      b.right.rows() != b.dim || b.right.cols() != b.dim)
    throw std::invalid_argument("bimodule: action shape mismatch");
  if (!(b.left * b.left).is_zero()) throw std::invalid_argument("bimodule: left² != 0");
  if (!(b.right * b.right).is_zero()) throw std::invalid_argument("bimodule: right² != 0");
  if (b.left * b.right != b.right * b.left)
    throw std::invalid_argument("bimodule: actions do not commute");
}

Bimodule make_bimodule(Mat left, Mat right, std::vector<std::string> names) {
  Bimodule b{left.rows(), std::move(left), std::move(right), std::move(names)};
  validate_bimodule(b);
  return b;
}

bool same_presentation(const Bimodule& a, const Bimodule& b) {
  return a.dim == b.dim && a.left == b.left && a.right == b.right;
}

BimodulePtr share(Bimodule b) { return std::make_shared<const Bimodule>(std::move(b)); }

bool is_bimodule_map(const Morphism& f) {
  if (f.map.rows() != f.dst->dim || f.map.cols() != f.src->dim) return false;
  return f.map * f.src->left == f.dst->left * f.map &&
         f.map * f.src->right == f.dst->right * f.map;
}

void require_bimodule_map(const Morphism& f, const char* what) {
  if (!is_bimodule_map(f))
    throw std::logic_error(std::string("not a bimodule morphism: ") + what);
}

Morphism identity_morphism(const BimodulePtr& m) {
  return Morphism{m, m, Mat::identity(m->dim)};
}

Morphism zero_morphism(const BimodulePtr& src, const BimodulePtr& dst) {
  return Morphism{src, dst, Mat::zeros(dst->dim, src->dim)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!same_presentation(*f.dst, *g.src))
    throw std::invalid_argument("compose: codomain of f is not the domain of g");
  return Morphism{f.src, g.dst, g.map * f.map};
}

Morphism inverse_morphism(const Morphism& f) {
  auto inv = inverse(f.map);
  if (!inv) throw std::invalid_argument("inverse_morphism: map is singular");
  return Morphism{f.dst, f.src, *inv};
}

bool is_injective(const Morphism& f) { return rank(f.map) == f.src->dim; }
bool is_surjective(const Morphism& f) { return rank(f.map) == f.dst->dim; }

// ---- constructors ----

namespace {

std::vector<std::string> indexed_names(const char* stem, int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::string(stem) + "_" + std::to_string(i + 1);
  return names;
}

Bimodule construct_string_m(int k) {
  const int n = 2 * k + 3;
  Mat left(n, n), right(n, n);
  // Even basis vectors (1-based m_{2j}) map to their odd neighbours; odd
  // ones are killed by both actions.
  for (int j = 1; j <= k + 1; ++j) {
    left.at(2 * j, 2 * j - 1) = Rat(1);       // m_{2j} ↦ m_{2j+1}
    right.at(2 * j - 2, 2 * j - 1) = Rat(1);  // m_{2j} ↦ m_{2j-1}
  }
  return make_bimodule(std::move(left), std::move(right), indexed_names("m", n));
}

Mat unit_columns(int dim, const std::vector<int>& idx) {
  Mat v(dim, static_cast<int>(idx.size()));
  for (int j = 0; j < static_cast<int>(idx.size()); ++j) v.at(idx[j], j) = Rat(1);
  return v;
}

}  // namespace

Bimodule construct(const Label& label) {
  if (const auto* s = std::get_if<StringLabel>(&label)) {
    if (s->valleys < 0) throw std::invalid_argument("string label needs k >= 0");
    const int k = s->valleys;
    Bimodule mk = construct_string_m(k);
    switch (s->shape) {
      case StringShape::M:
        return mk;
      case StringShape::N: {
        auto q = quotient_by_span(mk, unit_columns(mk.dim, {2 * k + 2}));
        q.quotient.basis_names = indexed_names("n", q.quotient.dim);
        return q.quotient;
      }
      case StringShape::S: {
        auto q = quotient_by_span(mk, unit_columns(mk.dim, {0}));
        q.quotient.basis_names = indexed_names("s", q.quotient.dim);
        return q.quotient;
      }
      case StringShape::W: {
        auto q = quotient_by_span(mk, unit_columns(mk.dim, {0, 2 * k + 2}));
        q.quotient.basis_names = indexed_names("w", q.quotient.dim);
        return q.quotient;
      }
    }
  }
  if (const auto* b = std::get_if<BandLabel>(&label)) {
    if (b->length < 1) throw std::invalid_argument("band label needs k >= 1");
    if (b->eigenvalue.is_zero()) throw std::invalid_argument("band eigenvalue must be nonzero");
    const int k = b->length, n = 2 * k;
    Mat left(n, n), right(n, n);
    // Two layers of dimension k; x acts from the left as the identity
    // top→bottom and from the right as the Jordan cell Q_k(λ).
    for (int i = 0; i < k; ++i) {
      left.at(k + i, i) = Rat(1);
      right.at(k + i, i) = b->eigenvalue;
      if (i + 1 < k) right.at(k + i + 1, i) = Rat(1);
    }
    std::vector<std::string> names(n);
    for (int i = 0; i < k; ++i) names[i] = "t_" + std::to_string(i + 1);
    for (int i = 0; i < k; ++i) names[k + i] = "b_" + std::to_string(i + 1);
    return make_bimodule(std::move(left), std::move(right), std::move(names));
  }
  if (std::holds_alternative<ProjInjLabel>(label)) {
    Mat left(4, 4), right(4, 4);
    // Basis 1⊗1, 1⊗x, x⊗1, x⊗x of D⊗D.
    left.at(2, 0) = Rat(1);
    left.at(3, 1) = Rat(1);
    right.at(1, 0) = Rat(1);
    right.at(3, 2) = Rat(1);
    return make_bimodule(std::move(left), std::move(right),
                         {"1⊗1", "1⊗x", "x⊗1", "x⊗x"});
  }
  // Regular: the identity bimodule D on the basis {1, x}.
  Mat act(2, 2);
  act.at(1, 0) = Rat(1);
  return make_bimodule(act, act, {"1", "x"});
}

Bimodule zero_bimodule() { return Bimodule{0, Mat(0, 0), Mat(0, 0), {}}; }

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
  const int n = a.dim + b.dim;
  Mat left(n, n), right(n, n);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      left.at(i, j) = a.left.at(i, j);
      right.at(i, j) = a.right.at(i, j);
    }
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j) {
      left.at(a.dim + i, a.dim + j) = b.left.at(i, j);
      right.at(a.dim + i, a.dim + j) = b.right.at(i, j);
    }
  std::vector<std::string> names;
  if (!a.basis_names.empty() || !b.basis_names.empty()) {
    names.resize(n);
    for (int i = 0; i < a.dim; ++i) names[i] = a.name_of(i);
    for (int i = 0; i < b.dim; ++i) names[a.dim + i] = b.name_of(i);
  }
  return Bimodule{n, std::move(left), std::move(right), std::move(names)};
}

Bimodule direct_sum(const std::vector<Bimodule>& parts) {
  Bimodule acc = zero_bimodule();
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

QuotientResult quotient_by_span(const Bimodule& m, const Mat& vectors) {
  if (vectors.rows() != m.dim)
    throw std::invalid_argument("quotient_by_span: vector length mismatch");
  const auto rr = rref(vectors.transpose());
  const int r = static_cast<int>(rr.pivots.size());
  if (r > 0) {
    const Mat basis = rr.m.transpose().cols_subset([&] {
      std::vector<int> idx(r);
      for (int i = 0; i < r; ++i) idx[i] = i;
      return idx;
    }());
    if (!spans_contain(basis, m.left * basis) || !spans_contain(basis, m.right * basis))
      throw std::invalid_argument("not a subbimodule");
  }
  std::vector<bool> is_pivot(m.dim, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<int> keep;
  for (int c = 0; c < m.dim; ++c)
    if (!is_pivot[c]) keep.push_back(c);
  const int q = static_cast<int>(keep.size());

  Mat proj(q, m.dim);
  for (int t = 0; t < q; ++t) proj.at(t, keep[t]) = Rat(1);
  for (int p = 0; p < r; ++p) {
    const int c = rr.pivots[p];
    for (int t = 0; t < q; ++t) proj.at(t, c) = -rr.m.at(p, keep[t]);
  }
  Mat left(q, q), right(q, q);
  for (int t = 0; t < q; ++t) {
    left.set_col(t, proj * m.left.col(keep[t]));
    right.set_col(t, proj * m.right.col(keep[t]));
  }
  std::vector<std::string> names;
  if (!m.basis_names.empty()) {
    names.resize(q);
    for (int t = 0; t < q; ++t) names[t] = "[" + m.name_of(keep[t]) + "]";
  }
  Bimodule quot = make_bimodule(std::move(left), std::move(right), std::move(names));
  Morphism pi{share(m), share(quot), std::move(proj)};
  require_bimodule_map(pi, "quotient projection");
  return QuotientResult{*pi.dst, std::move(pi)};
}

SubResult sub_bimodule(const Bimodule& m, const Mat& basis_cols) {
  if (basis_cols.rows() != m.dim)
    throw std::invalid_argument("sub_bimodule: vector length mismatch");
  auto l = solve(basis_cols, m.left * basis_cols);
  auto r = solve(basis_cols, m.right * basis_cols);
  if (!l || !r) throw std::invalid_argument("not a subbimodule");
  Bimodule sub = make_bimodule(std::move(*l), std::move(*r));
  Morphism inc{share(sub), share(m), basis_cols};
  require_bimodule_map(inc, "subbimodule inclusion");
  return SubResult{*inc.src, std::move(inc)};
}

SubResult kernel_bimodule(const Morphism& f) {
  return sub_bimodule(*f.src, kernel_basis(f.map));
}

SubResult image_bimodule(const Morphism& f) {
  return sub_bimodule(*f.dst, column_space_basis(f.map));
}

Bimodule dual(const Bimodule& m) {
  std::vector<std::string> names;
  if (!m.basis_names.empty()) {
    names.resize(m.dim);
    for (int i = 0; i < m.dim; ++i) names[i] = m.name_of(i) + "*";
  }
  return make_bimodule(m.right.transpose(), m.left.transpose(), std::move(names));
}

std::vector<Morphism> hom_space(const Bimodule& m, const Bimodule& n) {
  return hom_space(share(m), share(n));
}

namespace {

// System matrix for { T·A = B·T, T·C = E·T } in the column-major unknowns
// vec(T), T of shape n×m. Rows are added only for the nonzero structure.
Mat intertwiner_system(const Mat& a, const Mat& b, const Mat& c, const Mat& e) {
  const int mdim = a.rows(), ndim = b.rows();
  const int unknowns = ndim * mdim;
  Mat s(2 * unknowns, unknowns);
  const auto idx = [ndim](int i, int k) { return k * ndim + i; };
  // Block 1: (T·A − B·T)_{ij} = Σ_k T_{ik} A_{kj} − Σ_k B_{ik} T_{kj}
  for (int j = 0; j < mdim; ++j)
    for (int k = 0; k < mdim; ++k) {
      const Rat& f = a.at(k, j);
      if (f.is_zero()) continue;
      for (int i = 0; i < ndim; ++i) s.at(j * ndim + i, idx(i, k)) += f;
    }
  for (int i = 0; i < ndim; ++i)
    for (int k = 0; k < ndim; ++k) {
      const Rat& f = b.at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < mdim; ++j) s.at(j * ndim + i, idx(k, j)) -= f;
    }
  const int off = unknowns;
  for (int j = 0; j < mdim; ++j)
    for (int k = 0; k < mdim; ++k) {
      const Rat& f = c.at(k, j);
      if (f.is_zero()) continue;
      for (int i = 0; i < ndim; ++i) s.at(off + j * ndim + i, idx(i, k)) += f;
    }
  for (int i = 0; i < ndim; ++i)
    for (int k = 0; k < ndim; ++k) {
      const Rat& f = e.at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < mdim; ++j) s.at(off + j * ndim + i, idx(k, j)) -= f;
    }
  return s;
}

}  // namespace

std::vector<Morphism> hom_space(const BimodulePtr& m, const BimodulePtr& n) {
  std::vector<Morphism> basis;
  if (m->dim == 0 || n->dim == 0) return basis;
  const Mat sys = intertwiner_system(m->left, n->left, m->right, n->right);
  const Mat ker = kernel_basis(sys);
  basis.reserve(ker.cols());
  for (int t = 0; t < ker.cols(); ++t)
    basis.push_back(Morphism{m, n, Mat::unvec(ker.col(t), n->dim, m->dim)});
  return basis;
}

Bimodule hom_left_regular(const Bimodule& m) {
  // Left-module maps M → D: solve T·L_M = L_D·T for 2×dim T.
  const Bimodule d = construct(regular_label());
  if (m.dim == 0) return zero_bimodule();
  const int unknowns = 2 * m.dim;
  Mat sys(unknowns, unknowns);
  const auto idx = [](int i, int k) { return k * 2 + i; };
  for (int j = 0; j < m.dim; ++j)
    for (int k = 0; k < m.dim; ++k) {
      const Rat& f = m.left.at(k, j);
      if (f.is_zero()) continue;
      for (int i = 0; i < 2; ++i) sys.at(j * 2 + i, idx(i, k)) += f;
    }
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      const Rat& f = d.left.at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < m.dim; ++j) sys.at(j * 2 + i, idx(k, j)) -= f;
    }
  const Mat ker = kernel_basis(sys);
  const int h = ker.cols();
  if (h == 0) return zero_bimodule();
  // Induced actions: (x·f) = f ∘ R_M and (f·x) = R_D ∘ f, in coordinates
  // with respect to the kernel basis.
  Mat lcols(unknowns, h), rcols(unknowns, h);
  for (int t = 0; t < h; ++t) {
    const Mat ft = Mat::unvec(ker.col(t), 2, m.dim);
    lcols.set_col(t, (ft * m.right).vec());
    rcols.set_col(t, (d.right * ft).vec());
  }
  auto lc = solve(ker, lcols);
  auto rc = solve(ker, rcols);
  if (!lc || !rc) throw std::logic_error("hom_left_regular: induced action not in span");
  return make_bimodule(std::move(*lc), std::move(*rc), indexed_names("f", h));
}

}  // namespace dualbimod
