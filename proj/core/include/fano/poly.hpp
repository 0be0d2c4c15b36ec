#pragma once

#include <map>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include "fano/error.hpp"
#include "fano/field.hpp"
#include "fano/matrix.hpp"
#include "fano/monomial.hpp"

namespace fano {

/// Homogeneous polynomial over K in one of the tagged rings. Terms are kept
/// sparse, keyed by exponent, and iterate in grevlex-descending order; zero
/// coefficients are never stored.
template <Field K>
class MultiPoly {
 public:
  using Terms = std::map<Exponent, K, GrevlexGreater>;

  MultiPoly() = default;
  MultiPoly(RingTag ring, int degree) : ring_(ring), degree_(degree) {}

  static MultiPoly constant(RingTag ring, const K& c) {
    MultiPoly p(ring, 0);
    p.add_term(Exponent{}, c);
    return p;
  }
  static MultiPoly variable(RingTag ring, int i) { return monomial(ring, unit_exponent(i)); }
  static MultiPoly monomial(RingTag ring, const Exponent& e, const K& c = K(1)) {
    MultiPoly p(ring, total_degree(e));
    p.add_term(e, c);
    return p;
  }
  static MultiPoly linear_form(RingTag ring, std::span<const K> coeffs) {
    if (static_cast<int>(coeffs.size()) != ring.nvars) throw InvalidArgument("linear_form: wrong length");
    MultiPoly p(ring, 1);
    for (int i = 0; i < ring.nvars; ++i) p.add_term(unit_exponent(i), coeffs[static_cast<std::size_t>(i)]);
    return p;
  }
  static MultiPoly linear_form(RingTag ring, const std::vector<K>& coeffs) {
    return linear_form(ring, std::span<const K>(coeffs));
  }
  /// Coefficients in the grevlex-descending monomial basis of `degree`.
  static MultiPoly from_dense(RingTag ring, int degree, std::span<const K> coeffs) {
    const auto& basis = monomial_basis(ring.nvars, degree);
    if (coeffs.size() != basis.size()) throw InvalidArgument("from_dense: wrong length");
    MultiPoly p(ring, degree);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!coeffs[i].is_zero()) p.terms_.emplace(basis[i], coeffs[i]);
    return p;
  }

  RingTag ring() const { return ring_; }
  int degree() const { return degree_; }
  int nvars() const { return ring_.nvars; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  K coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }
  /// Leading (grevlex-largest) coefficient; zero for the zero polynomial.
  K leading_coefficient() const { return terms_.empty() ? K(0) : terms_.begin()->second; }

  void add_term(const Exponent& e, const K& c) {
    if (total_degree(e) != degree_)
      throw InvalidArgument("non-homogeneous term: degree " + std::to_string(total_degree(e)) +
                            " in a form of degree " + std::to_string(degree_));
    for (int i = ring_.nvars; i < 4; ++i)
      if (e[static_cast<std::size_t>(i)]) throw InvalidArgument("exponent uses a variable outside the ring");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::vector<K> to_dense() const {
    const auto& basis = monomial_basis(ring_.nvars, degree_);
    std::vector<K> v(basis.size());
    for (const auto& [e, c] : terms_) v[basis.index_of(e)] = c;
    return v;
  }

  K evaluate(std::span<const K> point) const {
    if (static_cast<int>(point.size()) != ring_.nvars) throw InvalidArgument("evaluate: wrong point length");
    K acc(0);
    for (const auto& [e, c] : terms_) {
      K t = c;
      for (int i = 0; i < ring_.nvars; ++i)
        for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) t *= point[static_cast<std::size_t>(i)];
      acc += t;
    }
    return acc;
  }
  K evaluate(const std::vector<K>& point) const { return evaluate(std::span<const K>(point)); }

  /// Same coefficients, reinterpreted in another ring with the same number of variables.
  MultiPoly retagged(RingTag ring) const {
    if (ring.nvars != ring_.nvars) throw InvalidArgument("retagged: variable count mismatch");
    MultiPoly p = *this;
    p.ring_ = ring;
    return p;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    merge_check(o);
    if (is_zero() && degree_ != o.degree_) degree_ = o.degree_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    merge_check(o);
    if (is_zero() && degree_ != o.degree_) degree_ = o.degree_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const K& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= K(-1); }
  friend MultiPoly operator*(const K& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(MultiPoly a, const K& s) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.ring_ != b.ring_) throw InvalidArgument("product of polynomials from different rings");
    MultiPoly p(a.ring_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    return p;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.ring_ != b.ring_) return false;
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void merge_check(const MultiPoly& o) const {
    if (ring_ != o.ring_) throw InvalidArgument("sum of polynomials from different rings");
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
      throw InvalidArgument("sum of forms of degrees " + std::to_string(degree_) + " and " +
                            std::to_string(o.degree_));
  }

  RingTag ring_{};
  int degree_ = 0;
  Terms terms_;
};

template <Field K>
MultiPoly<K> power(const MultiPoly<K>& f, int k) {
  MultiPoly<K> acc = MultiPoly<K>::constant(f.ring(), K(1));
  for (int i = 0; i < k; ++i) acc = acc * f;
  return acc;
}

/// Projective point: coordinates not all zero.
template <Field K>
struct Point {
  std::vector<K> coords;

  Point() = default;
  explicit Point(std::vector<K> c) : coords(std::move(c)) {
    bool all_zero = true;
    for (const auto& v : coords) all_zero = all_zero && v.is_zero();
    if (all_zero) throw InvalidArgument("projective point with all coordinates zero");
  }
  std::size_t size() const { return coords.size(); }
  const K& operator[](std::size_t i) const { return coords[i]; }
};

namespace detail {
template <Field K>
bool is_negative(const K& v) {
  if constexpr (std::same_as<K, Rational>) {
    return v.sign() < 0;
  } else {
    return false;
  }
}
}  // namespace detail

/// Canonical text form: grevlex-descending terms, `c*x0^2*x1` style.
template <Field K>
std::string print_poly(const MultiPoly<K>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    K mag = c;
    bool neg = detail::is_negative(c);
    if (neg) mag = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool constant = total_degree(e) == 0;
    bool wrote = false;
    if (!mag.is_one() || constant) {
      os << mag.str();
      wrote = true;
    }
    for (int i = 0; i < p.nvars(); ++i) {
      int k = e[static_cast<std::size_t>(i)];
      if (!k) continue;
      if (wrote) os << '*';
      os << p.ring().variable(i);
      if (k > 1) os << '^' << k;
      wrote = true;
    }
  }
  return os.str();
}

template <Field K>
std::ostream& operator<<(std::ostream& os, const MultiPoly<K>& p) {
  return os << print_poly(p);
}

/// Coefficient of the apolarity action of monomial `op` on monomial `target`:
/// prod target_i! / (target_i - op_i)!, or zero when op does not divide target.
template <Field K>
K apolarity_coefficient(const Exponent& op, const Exponent& target) {
  if (!divides(op, target)) return K(0);
  K c(1);
  for (std::size_t i = 0; i < 4; ++i)
    for (int t = 0; t < op[i]; ++t) c *= K(target[i] - t);
  return c;
}

/// Apolarity action D(f). D must live in the ring dual to f's; the result is
/// in f's ring with degree deg f - deg D, and is zero when deg D > deg f.
template <Field K>
MultiPoly<K> apply(const MultiPoly<K>& op, const MultiPoly<K>& f) {
  if (op.ring().nvars != f.ring().nvars) throw InvalidArgument("apply: variable count mismatch");
  if (op.ring() != f.ring().dual()) throw InvalidArgument("apply: operator and form must be on dual sides");
  const int deg = f.degree() - op.degree();
  MultiPoly<K> out(f.ring(), std::max(deg, 0));
  if (deg < 0) return out;
  for (const auto& [a, ca] : op.terms())
    for (const auto& [b, cb] : f.terms()) {
      if (!divides(a, b)) continue;
      out.add_term(b - a, ca * cb * apolarity_coefficient<K>(a, b));
    }
  return out;
}

/// P_a = sum a_i d_i in the operator ring dual to `forms`.
template <Field K>
MultiPoly<K> point_operator(RingTag forms, const Point<K>& a) {
  if (static_cast<int>(a.size()) != forms.nvars) throw InvalidArgument("point has wrong dimension");
  return MultiPoly<K>::linear_form(forms.dual(), a.coords);
}

/// k-th polar of f at a: P_a^k(f).
template <Field K>
MultiPoly<K> polar(const MultiPoly<K>& f, const Point<K>& a, int k) {
  if (k < 0 || k > f.degree()) throw InvalidArgument("polar: order must lie in [0, deg f]");
  return apply(power(point_operator(f.ring(), a), k), f);
}

/// Matrix of the pairing T_d x S_n -> S_{n-d}: row i holds the coefficients of
/// (i-th monomial of T_d)(f) in the basis of S_{n-d}.
template <Field K>
Matrix<K> pairing_matrix(const MultiPoly<K>& f, int d) {
  const int n = f.degree();
  const auto& rows = monomial_basis(f.nvars(), d);
  const auto& cols = monomial_basis(f.nvars(), n - d);
  Matrix<K> m(rows.size(), cols.size());
  if (d > n) return m;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [b, c] : f.terms())
      if (divides(rows[i], b)) m(i, cols.index_of(b - rows[i])) += c * apolarity_coefficient<K>(rows[i], b);
  return m;
}

/// Substitute variables by polynomials: f(args_0, ..., args_{n-1}).
template <Field K>
MultiPoly<K> substitute(const MultiPoly<K>& f, const std::vector<MultiPoly<K>>& args) {
  if (static_cast<int>(args.size()) != f.nvars()) throw InvalidArgument("substitute: wrong argument count");
  if (args.empty()) throw InvalidArgument("substitute: no arguments");
  const RingTag ring = args[0].ring();
  const int arg_deg = args[0].degree();
  MultiPoly<K> out(ring, f.degree() * arg_deg);
  std::vector<std::vector<MultiPoly<K>>> powers(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    powers[i].push_back(MultiPoly<K>::constant(ring, K(1)));
    for (int k = 1; k <= f.degree(); ++k) powers[i].push_back(powers[i].back() * args[i]);
  }
  for (const auto& [e, c] : f.terms()) {
    MultiPoly<K> t = MultiPoly<K>::constant(ring, c);
    for (std::size_t i = 0; i < args.size(); ++i)
      if (e[i]) t = t * powers[i][e[i]];
    out += t;
  }
  return out;
}

/// f(A y): variable x_i becomes sum_j A(i,j) y_j in the same ring.
template <Field K>
MultiPoly<K> linear_change(const MultiPoly<K>& f, const Matrix<K>& a) {
  if (static_cast<int>(a.rows()) != f.nvars() || a.rows() != a.cols())
    throw InvalidArgument("linear_change: matrix shape mismatch");
  std::vector<MultiPoly<K>> args;
  for (std::size_t i = 0; i < a.rows(); ++i) args.push_back(MultiPoly<K>::linear_form(f.ring(), a.row_vector(i)));
  MultiPoly<K> out = substitute(f, args);
  if (out.is_zero()) return MultiPoly<K>(f.ring(), f.degree());
  return out;
}

/// If f = lambda * g exactly (term by term) with lambda != 0, returns lambda.
template <Field K>
std::optional<K> proportionality(const MultiPoly<K>& f, const MultiPoly<K>& g) {
  if (f.ring() != g.ring() || f.is_zero() || g.is_zero()) return std::nullopt;
  if (f.term_count() != g.term_count()) return std::nullopt;
  const K lambda = f.leading_coefficient() / g.leading_coefficient();
  for (const auto& [e, c] : g.terms())
    if (!(f.coefficient(e) == lambda * c)) return std::nullopt;
  return lambda;
}

/// Matrix whose entries are forms of one ring.
template <Field K>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, RingTag ring)
      : rows_(rows), cols_(cols), ring_(ring), data_(rows * cols, MultiPoly<K>(ring, 0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RingTag ring() const { return ring_; }
  MultiPoly<K>& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MultiPoly<K>& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix transpose() const {
    PolyMatrix t(cols_, rows_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix<K> evaluate(std::span<const K> point) const {
    Matrix<K> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
    return m;
  }

  bool is_zero() const {
    for (const auto& p : data_)
      if (!p.is_zero()) return false;
    return true;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("poly matrix product: shape mismatch");
    PolyMatrix c(a.rows_, b.cols_, a.ring_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        MultiPoly<K> acc(a.ring_, 0);
        for (std::size_t k = 0; k < a.cols_; ++k) {
          if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
          acc += a(i, k) * b(k, j);
        }
        c(i, j) = acc;
      }
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RingTag ring_{};
  std::vector<MultiPoly<K>> data_;
};

/// Scalar matrix times polynomial matrix.
template <Field K>
PolyMatrix<K> scale_left(const Matrix<K>& s, const PolyMatrix<K>& m) {
  if (s.cols() != m.rows()) throw InvalidArgument("scale_left: shape mismatch");
  PolyMatrix<K> out(s.rows(), m.cols(), m.ring());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      MultiPoly<K> acc(m.ring(), 0);
      for (std::size_t k = 0; k < s.cols(); ++k)
        if (!s(i, k).is_zero() && !m(k, j).is_zero()) acc += s(i, k) * m(k, j);
      out(i, j) = acc;
    }
  return out;
}

template <Field K>
PolyMatrix<K> scale_right(const PolyMatrix<K>& m, const Matrix<K>& s) {
  return scale_left(s.transpose(), m.transpose()).transpose();
}

/// Determinant of a square polynomial matrix by Laplace expansion along the
/// first row (intended for sizes up to 4).
template <Field K>
MultiPoly<K> determinant(const PolyMatrix<K>& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of non-square polynomial matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly<K>::constant(m.ring(), K(1));
  if (n == 1) return m(0, 0);
  MultiPoly<K> acc(m.ring(), 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    PolyMatrix<K> minor(n - 1, n - 1, m.ring());
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(i - 1, cc++) = m(i, c);
      }
    MultiPoly<K> term = m(0, j) * determinant(minor);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

/// Minor on the given rows and columns.
template <Field K>
MultiPoly<K> minor(const PolyMatrix<K>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  PolyMatrix<K> sub(rows.size(), cols.size(), m.ring());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
  return determinant(sub);
}

/// Image of a rational polynomial in K.
template <Field K>
MultiPoly<K> reduce_poly(const MultiPoly<Rational>& f) {
  MultiPoly<K> out(f.ring(), f.degree());
  for (const auto& [e, c] : f.terms()) out.add_term(e, from_rational<K>(c));
  return out;
}

}  // namespace fano
