#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hycone {

using Int = boost::multiprecision::cpp_int;
// et_off: plain value semantics, so `auto` never captures a dangling
// expression template.
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

using BVec = std::vector<int>;   // small coefficient vectors (b-vectors, permutations)
using IVec = std::vector<Int>;   // exact integer vectors (rays, normals, lattice points)
using QVec = std::vector<Rat>;   // exact rational vectors

struct hy_error : std::runtime_error {
  explicit hy_error(const std::string& m) : std::runtime_error(m) {}
};

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

// Serialized as "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& x);
std::string int_str(const Int& x);

// Parses "p" or "p/q"; rejects anything else (including q <= 0).
std::optional<Rat> rat_parse(const std::string& s);

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// Divides out the gcd of the entries; the zero vector stays zero.
IVec primitive(IVec v);
// Same, then flips sign so the first nonzero entry is positive (for vectors
// that only matter up to sign: kernel directions, affine relations).
IVec primitive_signed(IVec v);

// Clears denominators: smallest positive multiplier making all entries integral.
IVec integral_multiple(const QVec& v);

IVec to_ivec(const BVec& v);
QVec to_qvec(const IVec& v);

Rat dot(const QVec& a, const QVec& b);
Int dot(const IVec& a, const IVec& b);

bool lex_less(const IVec& a, const IVec& b);
bool lex_less(const QVec& a, const QVec& b);

std::string ivec_str(const IVec& v, char sep = ' ');
std::string qvec_str(const QVec& v, char sep = ' ');

inline long long pair_count(int n) { return 1LL * n * (n - 1) / 2; }

// Lexicographic pair index: (0,1),(0,2),...,(n-2,n-1), 0-based, i < j.
inline int pair_index(int i, int j, int n) {
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

}  // namespace hycone
