#pragma once

#include "cubic/transfer.hpp"

namespace cubic {

// Memoized Fibonacci numbers with F_1 = F_2 = 1 (so F_4 = 3, F_6 = 8).
// The indexing convention is load-bearing for schwenk_count.
class FibCache {
public:
    const BigInt& fib(int n);

private:
    std::vector<BigInt> memo_{0, 1, 1};
};

// Hamilton cycles of the generalized Petersen graph P(m,2) for even m >= 10:
// 2(F_{m/2+1} + F_{m/2-1} - 1), plus m when m = 4 (mod 6).
// Smaller or odd m: BadParameters.
BigInt schwenk_count(int m);

// Hamilton cycles of the ring of m k-ladders:
// 2^m + m(k-1)^(m-1) for odd k, 2 + mk(k-1)^(m-2) for even k.
// Requires m >= 2, k >= 2 (BadParameters).
BigInt rl_count(int m, int k);

// Hamilton cycles of the width-5 tube of length k >= 1:
// 5*2^k + 20*12^((k-1)/2) for odd k, 5*2^k for even k (BadParameters on k < 1).
BigInt n5_count(int k);

}  // namespace cubic
