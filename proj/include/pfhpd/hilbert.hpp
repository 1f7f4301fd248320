#pragma once

// Hilbert polynomials by exact interpolation of Euler characteristics, and
// the numerical invariants of linear sections.

#include "pfhpd/cohom.hpp"
#include "pfhpd/integer.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace pfhpd {

/// Polynomial in one variable with rational coefficients, c[i] · t^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& a) { return Polynomial({a}); }

  /// Unique polynomial of degree <= xs.size()-1 through the given points.
  static Polynomial interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    if (xs.size() != ys.size() || xs.empty()) {
      throw std::invalid_argument("interpolate: need matching nonempty point lists");
    }
    Polynomial result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Polynomial basis = constant(Rational(1));
      Rational denom = 1;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j == i) continue;
        basis = basis * Polynomial({Rational(-xs[j]), Rational(1)});
        denom *= Rational(xs[i] - xs[j]);
      }
      result = result + basis * constant(Rational(ys[i]) / denom);
    }
    return result;
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + b * constant(Rational(-1));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }

  /// P(s·t + shift).
  Polynomial substitute(const Rational& s, const Rational& shift) const {
    Polynomial result;
    const Polynomial lin({shift, s});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) result = result * lin + constant(*it);
    return result;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Rational& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      Rational mag = a < 0 ? Rational(-a) : a;
      if (first) {
        if (a < 0) os << "-";
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0 || mag != 1) os << to_decimal(mag);
      if (i > 0) {
        if (mag != 1) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

struct HilbertData {
  Polynomial poly;
  int dimension = -1;  // -1: empty
  Integer degree = 0;
};

/// Degree d!·(leading coefficient); throws if that is not an integer.
inline HilbertData make_hilbert_data(Polynomial p) {
  HilbertData h;
  h.dimension = p.degree();
  if (h.dimension >= 0) {
    Rational deg = p.leading() * Rational(factorial(h.dimension));
    if (boost::multiprecision::denominator(deg) != 1) {
      throw std::logic_error("non-integral degree " + to_decimal(deg));
    }
    h.degree = boost::multiprecision::numerator(deg);
  }
  h.poly = std::move(p);
  return h;
}

/// Interpolates f at t = 0..dim.
template <class F>
Polynomial interpolate_on_range(int dim, F&& f) {
  std::vector<Integer> xs, ys;
  for (int t = 0; t <= dim; ++t) {
    xs.emplace_back(t);
    ys.push_back(f(static_cast<Entry>(t)));
  }
  return Polynomial::interpolate(xs, ys);
}

/// χ(Gr(k,n), O(t)) through BBW.
inline Integer chi_gr(std::size_t k, std::size_t n, Entry t) {
  const Space s = Space::gr(k, n);
  return dimension(euler_characteristic(
      cohomology_gr(EquivariantObject::structure_sheaf(s).twisted(t))));
}

/// Hilbert polynomial of Gr(k,n) in its Plücker embedding.
inline HilbertData hilbert_data_gr(std::size_t k, std::size_t n) {
  const GrassmannianSpace g(k, n);
  const int d = static_cast<int>(g.dim());
  return make_hilbert_data(interpolate_on_range(d, [&](Entry t) { return chi_gr(k, n, t); }));
}

/// Hilbert polynomial of the Pfaffian Pf(n-3, W*) (n = 6, 7), computed on its
/// resolution TY(n) under the assumption that the structure sheaf pushes
/// forward to the structure sheaf.
inline HilbertData hilbert_data_pfaffian(std::size_t n) {
  if (n != 6 && n != 7) throw std::invalid_argument("hilbert_data_pfaffian: n must be 6 or 7");
  const int d = static_cast<int>(Space::ty(n).dim());
  return make_hilbert_data(interpolate_on_range(d, [&](Entry t) { return chi_ty(n, t); }));
}

/// The c > 0 with P(-t-c) = (-1)^d P(t), i.e. ω = O(-c) for an
/// arithmetically Gorenstein variety; std::nullopt if none below `limit`.
inline std::optional<Entry> gorenstein_index(const HilbertData& h, Entry limit = 64) {
  const Polynomial signed_p =
      h.dimension % 2 == 0 ? h.poly : h.poly * Polynomial::constant(Rational(-1));
  for (Entry c = 1; c <= limit; ++c) {
    if (h.poly.substitute(Rational(-1), Rational(-c)) == signed_p) return c;
  }
  return std::nullopt;
}

/// Hilbert polynomial of the intersection with c general hyperplanes:
/// Σ_i (-1)^i C(c,i) P(t - i).
inline Polynomial koszul_section(const Polynomial& p, std::size_t c) {
  Polynomial out;
  for (std::size_t i = 0; i <= c; ++i) {
    Polynomial shifted = p.substitute(Rational(1), Rational(-static_cast<Entry>(i)));
    Rational coeff(binomial(Integer(c), static_cast<std::int64_t>(i)));
    if (i % 2 == 1) coeff = -coeff;
    out = out + shifted * Polynomial::constant(coeff);
  }
  return out;
}

}  // namespace pfhpd
