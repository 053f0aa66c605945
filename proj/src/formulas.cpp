#include "cubic/formulas.hpp"

#include <string>

namespace cubic {

const BigInt& FibCache::fib(int n) {
    if (n < 1) throw BadParameters("Fibonacci index must be positive");
    while (static_cast<int>(memo_.size()) <= n)
        memo_.push_back(memo_[memo_.size() - 1] + memo_[memo_.size() - 2]);
    return memo_[n];
}

namespace {

BigInt big_pow(BigInt base, int exp) {
    BigInt r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        exp >>= 1;
        if (exp) base *= base;
    }
    return r;
}

}  // namespace

BigInt schwenk_count(int m) {
    if (m % 2 != 0 || m < 10)
        throw BadParameters("schwenk_count requires even m >= 10, got " + std::to_string(m));
    thread_local FibCache fibs;
    BigInt count = 2 * (fibs.fib(m / 2 + 1) + fibs.fib(m / 2 - 1) - 1);
    if (m % 6 == 4) count += m;
    return count;
}

BigInt rl_count(int m, int k) {
    if (m < 2 || k < 2) throw BadParameters("rl_count requires m >= 2 and k >= 2");
    if (k % 2 == 1) return big_pow(2, m) + m * big_pow(k - 1, m - 1);
    return 2 + m * k * big_pow(k - 1, m - 2);
}

BigInt n5_count(int k) {
    if (k < 1) throw BadParameters("n5_count requires k >= 1");
    BigInt count = 5 * big_pow(2, k);
    if (k % 2 == 1) count += 20 * big_pow(12, (k - 1) / 2);
    return count;
}

}  // namespace cubic
