#include "dualbimod/matrix.hpp"

#include <stdexcept>

namespace dualbimod {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? Rat(1) : Rat(0))) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: dimension mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& f = at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& g = o.at(k, j);
        if (g.is_zero()) continue;
        r.at(i, j) += f * g;
      }
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator+: shape mismatch");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator-: shape mismatch");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Mat Mat::operator-() const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

Mat Mat::scaled(const Rat& c) const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

Mat Mat::col(int j) const {
  Mat c(rows_, 1);
  for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

void Mat::set_col(int j, const Mat& column) {
  for (int i = 0; i < rows_; ++i) at(i, j) = column.at(i, 0);
}

Mat Mat::cols_subset(const std::vector<int>& idx) const {
  Mat r(rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < static_cast<int>(idx.size()); ++j)
    for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  return r;
}

Mat Mat::hjoin(const Mat& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("Mat::hjoin: row mismatch");
  Mat r(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Mat Mat::vjoin(const Mat& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("Mat::vjoin: column mismatch");
  Mat r(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Mat Mat::vec() const {
  Mat v(rows_ * cols_, 1);
  int t = 0;
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i) v.at(t++, 0) = at(i, j);
  return v;
}

Mat Mat::unvec(const Mat& v, int rows, int cols) {
  Mat m(rows, cols);
  int t = 0;
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = v.at(t++, 0);
  return m;
}

RrefResult rref(const Mat& a) {
  RrefResult res{a, {}};
  Mat& m = res.m;
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    if (!m.at(r, c).is_one()) {
      const Rat inv = Rat(1) / m.at(r, c);
      for (int j = c; j < cols; ++j)
        if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    }
    // Nonzero columns of the pivot row, collected once; elimination below
    // touches only rows with a nonzero entry in the pivot column.
    std::vector<int> support;
    for (int j = c; j < cols; ++j)
      if (!m.at(r, j).is_zero()) support.push_back(j);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Rat f = m.at(i, c);
      if (f.is_zero()) continue;
      for (int j : support) m.at(i, j) -= f * m.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

int rank(const Mat& a) { return static_cast<int>(rref(a).pivots.size()); }

Mat kernel_basis(const Mat& a) {
  const auto rr = rref(a);
  const int cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(cols, static_cast<int>(free_cols.size()));
  for (int t = 0; t < static_cast<int>(free_cols.size()); ++t) {
    const int f = free_cols[t];
    k.at(f, t) = Rat(1);
    for (int p = 0; p < static_cast<int>(rr.pivots.size()); ++p)
      k.at(rr.pivots[p], t) = -rr.m.at(p, f);
  }
  return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const auto rr = rref(a.hjoin(b));
  const int n = a.cols();
  Mat x(n, b.cols());
  for (int p = 0; p < static_cast<int>(rr.pivots.size()); ++p) {
    const int c = rr.pivots[p];
    if (c >= n) return std::nullopt;  // pivot in the rhs block: inconsistent
    for (int j = 0; j < b.cols(); ++j) x.at(c, j) = rr.m.at(p, n + j);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const auto rr = rref(a.hjoin(Mat::identity(a.rows())));
  if (static_cast<int>(rr.pivots.size()) != a.rows()) return std::nullopt;
  for (int p = 0; p < a.rows(); ++p)
    if (rr.pivots[p] != p) return std::nullopt;
  Mat inv(a.rows(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.rows(); ++j) inv.at(i, j) = rr.m.at(i, a.rows() + j);
  return inv;
}

Mat column_space_basis(const Mat& a) {
  const auto rr = rref(a);
  return a.cols_subset(rr.pivots);
}

int intersection_dim(const Mat& a, const Mat& b) {
  // dim(A∩B) = dim A + dim B − dim(A+B)
  const int da = rank(a), db = rank(b);
  return da + db - rank(a.hjoin(b));
}

bool spans_contain(const Mat& basis, const Mat& v) {
  return rank(basis) == rank(basis.hjoin(v));
}

std::vector<Rat> char_poly(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: square matrix required");
  const int n = a.rows();
  // Faddeev–LeVerrier: M_0 = I, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I,
  // c_{n-k} = -tr(A M_k)/k.
  std::vector<Rat> c(n + 1);
  c[n] = Rat(1);
  Mat m = Mat::identity(n);
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      m = a * m;
      for (int i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
    }
    Mat am = a * m;
    Rat tr;
    for (int i = 0; i < n; ++i) tr += am.at(i, i);
    c[n - k] = -(tr / Rat(k));
  }
  return c;
}

namespace {

std::vector<mpz_class> bounded_divisors(const mpz_class& value) {
  std::vector<mpz_class> divs;
  mpz_class v = abs(value);
  if (v == 0) return divs;
  divs.push_back(1);
  mpz_class d = 2;
  const mpz_class bound = 1000000;
  mpz_class rest = v;
  std::vector<std::pair<mpz_class, int>> factors;
  while (d * d <= rest && d <= bound) {
    if (rest % d == 0) {
      int e = 0;
      while (rest % d == 0) { rest /= d; ++e; }
      factors.emplace_back(d, e);
    }
    ++d;
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  for (const auto& [p, e] : factors) {
    const std::size_t sz = divs.size();
    mpz_class pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= p;
      for (std::size_t t = 0; t < sz; ++t) divs.push_back(divs[t] * pw);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs) {
  // Clear denominators to an integer polynomial, then run the rational root
  // test: candidates p/q with p | constant term, q | leading coefficient.
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg > 0 && coeffs[deg].is_zero()) --deg;
  std::vector<Rat> roots;
  if (deg <= 0) return roots;
  int low = 0;
  while (low < deg && coeffs[low].is_zero()) ++low;
  if (low > 0) roots.push_back(Rat(0));

  mpz_class lcm_den = 1;
  for (int i = low; i <= deg; ++i) {
    mpz_class den = coeffs[i].den();
    lcm_den = lcm_den / gcd(lcm_den, den) * den;
  }
  std::vector<mpz_class> ic(deg - low + 1);
  for (int i = low; i <= deg; ++i) {
    Rat scaled = coeffs[i] * Rat(mpq_class(lcm_den, 1));
    ic[i - low] = scaled.num();
  }
  const auto eval_is_zero = [&](const Rat& x) {
    Rat acc;
    for (int i = static_cast<int>(ic.size()) - 1; i >= 0; --i)
      acc = acc * x + Rat(mpq_class(ic[i], 1));
    return acc.is_zero();
  };
  const auto ps = bounded_divisors(ic.front());
  const auto qs = bounded_divisors(ic.back());
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      for (int s : {1, -1}) {
        mpq_class cand(s > 0 ? p : mpz_class(-p), q);
        cand.canonicalize();
        Rat r(cand);
        bool seen = false;
        for (const auto& existing : roots)
          if (existing == r) { seen = true; break; }
        if (!seen && eval_is_zero(r)) roots.push_back(r);
      }
    }
  }
  return roots;
}

}  // namespace dualbimod
