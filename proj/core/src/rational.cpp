#include "tdqe/rational.hpp"

#include <stdexcept>
#include <string>

namespace tdqe {

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const Int& z) { return z.get_str(); }

Rat parse_rat(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!digits(num) || !digits(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not a rational literal: " + std::string(text));
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Int nz(n, 10);
  Int dz{std::string(den), 10};
  if (dz == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rat r(nz, dz);
  r.canonicalize();
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace tdqe
