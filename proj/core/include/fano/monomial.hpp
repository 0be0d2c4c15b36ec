#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fano {

/// Which side of the apolarity pairing a ring lives on. Symbol-side forms are
/// differentiated; operator-side forms act on them.
enum class Side : std::uint8_t { Symbol, Operator };

/// Identifies one of the four polynomial rings the toolkit works in:
///   plane forms x0..x2, plane operators d0..d2,
///   space forms z0..z3 (quadrics of a net), space operators w0..w3.
struct RingTag {
  Side side = Side::Symbol;
  int nvars = 3;

  char prefix() const {
    if (nvars == 3) return side == Side::Symbol ? 'x' : 'd';
    return side == Side::Symbol ? 'z' : 'w';
  }
  RingTag dual() const { return {side == Side::Symbol ? Side::Operator : Side::Symbol, nvars}; }
  std::string variable(int i) const { return std::string(1, prefix()) + std::to_string(i); }

  friend bool operator==(RingTag, RingTag) = default;
};

inline constexpr RingTag kPlaneForms{Side::Symbol, 3};
inline constexpr RingTag kPlaneOperators{Side::Operator, 3};
inline constexpr RingTag kSpaceForms{Side::Symbol, 4};
inline constexpr RingTag kSpaceOperators{Side::Operator, 4};

/// Exponent vector; entries past the ring's variable count are zero.
using Exponent = std::array<std::uint8_t, 4>;

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2] + e[3]; }

/// Graded reverse lexicographic order: true iff a > b.
inline bool grevlex_greater(const Exponent& a, const Exponent& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (int i = 3; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const { return grevlex_greater(a, b); }
};

inline bool divides(const Exponent& a, const Exponent& b) {
  for (int i = 0; i < 4; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponent operator+(Exponent a, const Exponent& b) {
  for (int i = 0; i < 4; ++i) a[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return a;
}
inline Exponent operator-(Exponent a, const Exponent& b) {
  for (int i = 0; i < 4; ++i) a[i] = static_cast<std::uint8_t>(a[i] - b[i]);
  return a;
}

inline Exponent unit_exponent(int var) {
  Exponent e{};
  e[static_cast<std::size_t>(var)] = 1;
  return e;
}

inline constexpr int kMaxBasisDegree = 24;

/// Monomials of one degree in grevlex-descending order, with O(1) lookup.
class MonomialBasis {
 public:
  MonomialBasis(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  std::size_t index_of(const Exponent& e) const;

 private:
  int nvars_;
  int degree_;
  std::vector<Exponent> monomials_;
  std::vector<std::uint32_t> lookup_;
};

/// Shared cached basis; degree < 0 yields the empty basis.
const MonomialBasis& monomial_basis(int nvars, int degree);

/// dim of the degree-d piece of a polynomial ring in n variables.
std::size_t ring_dimension(int nvars, int degree);

}  // namespace fano
