#include "hycone/base.hpp"

#include <boost/multiprecision/integer.hpp>
#include <sstream>

namespace hycone {

std::string rat_str(const Rat& x) {
  std::ostringstream os;
  os << rat_num(x);
  if (rat_den(x) != 1) os << "/" << rat_den(x);
  return os.str();
}

std::string int_str(const Int& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

static bool parse_int(const std::string& s, Int& out) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (size_t k = i; k < s.size(); ++k)
    if (!isdigit(static_cast<unsigned char>(s[k]))) return false;
  out = Int(s);
  return true;
}

std::optional<Rat> rat_parse(const std::string& s) {
  auto slash = s.find('/');
  Int p, q;
  if (slash == std::string::npos) {
    if (!parse_int(s, p)) return std::nullopt;
    return Rat(p);
  }
  if (!parse_int(s.substr(0, slash), p)) return std::nullopt;
  if (!parse_int(s.substr(slash + 1), q)) return std::nullopt;
  if (q <= 0) return std::nullopt;
  return Rat(p, q);
}

Int floor_rat(const Rat& x) {
  Int p = rat_num(x), q = rat_den(x);
  Int d = p / q;
  if (p < 0 && d * q != p) --d;
  return d;
}

Int ceil_rat(const Rat& x) { return -floor_rat(-x); }

IVec primitive(IVec v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

IVec primitive_signed(IVec v) {
  v = primitive(std::move(v));
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
  return v;
}

IVec integral_multiple(const QVec& v) {
  Int l = 1;
  for (const Rat& x : v) l = boost::multiprecision::lcm(l, rat_den(x));
  IVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out[i] = rat_num(v[i]) * (l / rat_den(v[i]));
  return out;
}

IVec to_ivec(const BVec& v) {
  IVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

QVec to_qvec(const IVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool lex_less(const IVec& a, const IVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

bool lex_less(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

std::string ivec_str(const IVec& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += int_str(v[i]);
  }
  return s;
}

std::string qvec_str(const QVec& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += rat_str(v[i]);
  }
  return s;
}

}  // namespace hycone
