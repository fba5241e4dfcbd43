#pragma once

#include <cstdint>

namespace infgon {

using I128 = __int128;

template <typename T>
constexpr T floor_div(T a, T b) {
  T q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

template <typename T>
constexpr T ceil_div(T a, T b) {
  T q = a / b, r = a % b;
  return (r != 0 && ((r < 0) == (b < 0))) ? q + 1 : q;
}

template <typename T>
constexpr T gcd_positive(T a, T b) {
  while (b != 0) {
    T t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace infgon
