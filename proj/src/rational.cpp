#include "laminar/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace laminar {

Rat make_rat(const BigInt& p, const BigInt& q) {
  if (q == 0) throw std::domain_error("zero denominator");
  Rat r{p, q};
  r.canonicalize();
  return r;
}

std::string fraction_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && part[0] == '-') i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw std::invalid_argument("malformed fraction '" + s + "'");
  Rat r{mpz_class(num), mpz_class(den)};
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string decimal_string(const Rat& r, int significant) {
  if (significant < 1) significant = 1;
  if (r == 0) return "0." + std::string(static_cast<std::size_t>(significant - 1), '0');
  Rat a = abs(r);
  // Find e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(mpz_class(a.get_num() / a.get_den() + 1).get_mpz_t(), 10)) - 1;
  auto pow10 = [](long k) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return Rat(out);
  };
  auto scaled = [&](long exp) { return exp >= 0 ? Rat(a / pow10(exp)) : Rat(a * pow10(-exp)); };
  while (scaled(e) >= 10) ++e;
  while (scaled(e) < 1) --e;

  // digits = round(a * 10^(significant-1-e))
  const long shift = significant - 1 - e;
  Rat s = shift >= 0 ? Rat(a * pow10(shift)) : Rat(a / pow10(-shift));
  mpz_class digits = (2 * s.get_num() + s.get_den()) / (2 * s.get_den());
  std::string ds = digits.get_str();
  long shift_used = shift;
  if (static_cast<long>(ds.size()) > significant) {  // rounded up to the next power of ten
    ds.pop_back();
    --shift_used;
  }
  long point = static_cast<long>(ds.size()) - shift_used;  // digits before the decimal point
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + ds;
  } else if (point >= static_cast<long>(ds.size())) {
    out = ds + std::string(static_cast<std::size_t>(point - static_cast<long>(ds.size())), '0');
  } else {
    out = ds.substr(0, static_cast<std::size_t>(point)) + "." + ds.substr(static_cast<std::size_t>(point));
  }
  return (r < 0 ? "-" : "") + out;
}

}  // namespace laminar
