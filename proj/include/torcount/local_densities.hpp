#pragma once

#include "torcount/setup.hpp"

#include <vector>

namespace torcount {

struct LocalDensity {
    long p = 0;
    Int x_count;             // #X(F_p)
    Int u_count;             // #U(F_p)
    int lambda_exponent = 0; // rank of Pic(U): exponent of (1 - 1/p)
    Rat omega;               // (1 - 1/p)^lambda * u_count / p^3, exact
};

// Primes above this use the verified closed forms instead of the O(p^4) loop.
long fp_bruteforce_cap();

// #{(a,b,c,d,z,w) in F_p^6 : a*d - b*c = z^(n+1)*w, (a,c,z) != 0, (b,d,w) != 0},
// counted by fixing (a,c,z,w) and solving the linear equation in (b,d).
// Requires p <= fp_bruteforce_cap().
Int torsor_count_fp(long n, long p);

// torsor_count_fp / (p-1)^2; the division must be exact. Closed form
// p^3 + 2p^2 + 2p + 1 beyond the brute-force cap.
Int x_count_fp(long n, long p);

// #U(F_p) for the chosen boundary, computed two ways for p <= cap (inclusion-
// exclusion from x_count, and direct torsor count with boundary coordinates
// nonzero); the routes must agree.
Int u_count_fp(long n, Boundary b, long p);

int lambda_exponent(Boundary b);

Rat omega_p(long n, Boundary b, long p);

LocalDensity local_density(long n, Boundary b, long p);

// prod_p (1 - 1/p^2) = 6/pi^2.
double euler_product_limit();

// Partial product over p <= P.
double truncated_euler(long P);

std::vector<long> primes_upto(long P);

bool is_prime(long p);

} // namespace torcount
