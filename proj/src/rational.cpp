#include "stackzeta/rational.hpp"

namespace stackzeta {

Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(mpz_class(s), mpz_class(1));
  mpz_class n(s.substr(0, slash));
  mpz_class d(s.substr(slash + 1));
  if (d == 0) throw std::domain_error("Rat::parse: zero denominator in '" + s + "'");
  return Rat(n, d);
}

std::string Rat::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

Rat pow(const Rat& a, long e) {
  if (e < 0) {
    if (a.is_zero()) throw std::domain_error("Rat::pow: 0 to a negative power");
    return pow(Rat(1) / a, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), a.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), a.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

mpz_class ipow(long q, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), e);
  return r;
}

bool is_prime_power(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return true;  // n itself is prime
}

}  // namespace stackzeta
