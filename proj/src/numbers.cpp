#include "crossrel/numbers.hpp"

namespace crossrel {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double to_double(const BigRat& v) { return v.convert_to<double>(); }

std::string to_string(const BigRat& v) { return v.str(); }

}  // namespace crossrel
