#include "qtaft/rational.hpp"

#include <cctype>

namespace qtaft {

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> rational_from_string(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string body = text;
  if (body.find('/') == std::string::npos) body += "/1";
  // mpq_class(string) aborts on bad input, so validate first.
  const auto slash = body.find('/');
  const auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const std::string num = body.substr(0, slash);
  const std::string den = body.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  Rational q(body);
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

bool rational_square_root(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
  root = Rational(num_root, den_root);
  root.canonicalize();
  return true;
}

}  // namespace qtaft
