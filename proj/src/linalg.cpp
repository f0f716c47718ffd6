#include "weyres/linalg.hpp"

namespace weyres {

namespace {

long long mulmod(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long powmod(long long a, long long e, long long m) {
  long long result = 1;
  a %= m;
  while (e) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long q : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
    if (p == q) return true;
    if (p % q == 0) return false;
  }
  long long d = p - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (long long a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
    long long x = powmod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, p);
      if (x == p - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace weyres
