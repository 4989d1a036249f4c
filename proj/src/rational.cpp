#include "pairzeta/rational.hpp"

#include <limits>
#include <stdexcept>

#include "pairzeta/errors.hpp"

namespace pairzeta {

BigInt floor_of(const BigRational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigInt ceil_of(const BigRational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigRational frac_of(const BigRational& x) { return x - BigRational(floor_of(x)); }

bool is_integer(const BigRational& x) { return x.get_den() == 1; }

FloorCeilFrac rat_floor_ceil_frac(const BigRational& x) {
  FloorCeilFrac out{floor_of(x), ceil_of(x), {}};
  out.frac = x - BigRational(out.floor);
  return out;
}

std::int64_t to_int64(const BigInt& v) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "expects LP64");
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

std::int64_t floor_int(const BigRational& x) { return to_int64(floor_of(x)); }
std::int64_t ceil_int(const BigRational& x) { return to_int64(ceil_of(x)); }

BigRational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  BigRational r{BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

BigRational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::string_view digits = part;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("malformed rational: '" + std::string(text) + "'");
    for (char ch : digits) {
      if (ch < '0' || ch > '9') throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    std::string owned(part.front() == '+' ? part.substr(1) : part);
    return BigInt(owned, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') throw ParseError("negative denominator: '" + std::string(text) + "'");
  BigInt den = parse_int(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& x) { return x.get_str(); }

const BigRational& ExtendedRational::value() const {
  if (kind_ != Kind::finite) throw DomainError("value() of an infinite bound");
  return value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != ExtendedRational::Kind::finite) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtendedRational::to_string() const {
  switch (kind_) {
    case Kind::minus_infinity: return "-inf";
    case Kind::plus_infinity: return "inf";
    case Kind::finite: break;
  }
  return value_.get_str();
}

}  // namespace pairzeta
