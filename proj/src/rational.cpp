#include "gpd/rational.hpp"

namespace gpd {

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

GaussianRational gaussian_inverse(const GaussianRational& z) {
  Rational n = z.norm2();
  if (n == 0) throw std::domain_error("division by zero Gaussian rational");
  return GaussianRational(z.re / n, -z.im / n);
}

std::string gaussian_to_string(const GaussianRational& z) {
  if (z.im == 0) return rational_to_string(z.re);
  std::string imag;
  if (z.im == 1)
    imag = "i";
  else if (z.im == -1)
    imag = "-i";
  else
    imag = rational_to_string(z.im) + "i";
  if (z.re == 0) return imag;
  if (z.im > 0 && imag[0] != '-') imag = "+" + imag;
  return rational_to_string(z.re) + imag;
}

namespace {

// Splits "a+bi" / "a-bi" at the sign that separates the two componenents;
// signs inside "-3/2" or exponents never occur in this grammar.
size_t split_point(const std::string& s) {
  for (size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') return k;
  }
  return std::string::npos;
}

Rational imag_part_from(const std::string& t) {
  // t ends in 'i'; bare "i"/"-i"/"+i" mean +-1.
  std::string body = t.substr(0, t.size() - 1);
  if (body.empty() || body == "+") return Rational(1);
  if (body == "-") return Rational(-1);
  if (body[0] == '+') body.erase(0, 1);  // mpq_set_str rejects a leading '+'
  return rational_from_string(body);
}

}  // namespace

GaussianRational gaussian_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty gaussian literal");
  if (s.back() != 'i') return GaussianRational(rational_from_string(s));
  size_t k = split_point(s);
  if (k == std::string::npos) return GaussianRational(Rational(0), imag_part_from(s));
  return GaussianRational(rational_from_string(s.substr(0, k)), imag_part_from(s.substr(k)));
}

}  // namespace gpd
