#pragma once

// Exact integer arithmetic shared by every kernel in the library.
//
// Algorithms are written against an integer type parameter `Int`. Two
// instantiations are used: `long long` with overflow-checked operations (fast
// path) and `Integer` (arbitrary precision). Callers that start on the fast
// path catch `arithmetic_overflow` and rerun with `Integer`.

#include <boost/multiprecision/cpp_int.hpp>

#include <climits>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanograph {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of Z^n.
using LatticeVector = std::vector<Integer>;

class arithmetic_overflow : public std::overflow_error {
public:
    arithmetic_overflow() : std::overflow_error("64-bit integer overflow in exact kernel") {}
};

namespace exact {

inline long long add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow();
    return r;
}
inline long long sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_overflow();
    return r;
}
inline long long mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow();
    return r;
}
inline long long neg(long long a) {
    if (a == LLONG_MIN) throw arithmetic_overflow();
    return -a;
}

inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer neg(const Integer& a) { return -a; }

template <class Int>
Int abs(const Int& a) {
    return a < 0 ? neg(a) : a;
}

template <class Int>
int sign(const Int& a) {
    return a > 0 ? 1 : (a < 0 ? -1 : 0);
}

template <class Int>
Int gcd(Int a, Int b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

/// gcd of all entries; 0 for the zero vector.
template <class Int>
Int content(std::span<const Int> v) {
    Int g = 0;
    for (const Int& x : v) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

/// Divides `v` by the gcd of its entries. The zero vector is left unchanged.
template <class Int>
void make_primitive(std::vector<Int>& v) {
    Int g = content(std::span<const Int>(v));
    if (g == 0 || g == 1) return;
    for (Int& x : v) x /= g;
}

template <class Int>
Int dot(std::span<const Int> a, std::span<const Int> b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = add(s, mul(a[i], b[i]));
    return s;
}

template <class Int>
Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    return dot(std::span<const Int>(a), std::span<const Int>(b));
}

template <class To>
To convert(const Integer& x);

template <>
inline Integer convert<Integer>(const Integer& x) {
    return x;
}

template <>
inline long long convert<long long>(const Integer& x) {
    if (x > LLONG_MAX || x < LLONG_MIN) throw arithmetic_overflow();
    return static_cast<long long>(x);
}

inline Integer to_integer(long long x) { return Integer(x); }
inline const Integer& to_integer(const Integer& x) { return x; }

template <class To>
std::vector<To> convert_vector(const LatticeVector& v) {
    std::vector<To> out;
    out.reserve(v.size());
    for (const Integer& x : v) out.push_back(convert<To>(x));
    return out;
}

template <class From>
LatticeVector to_lattice_vector(const std::vector<From>& v) {
    LatticeVector out;
    out.reserve(v.size());
    for (const From& x : v) out.push_back(to_integer(x));
    return out;
}

}  // namespace exact

inline LatticeVector negated(const LatticeVector& v) {
    LatticeVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

inline std::string to_string(const LatticeVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace fanograph
