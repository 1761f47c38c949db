#pragma once

#include "torcount/height.hpp"
#include "torcount/setup.hpp"

#include <vector>

namespace torcount {

// Point of the base P^2 of the fibration (a:b:c:d:z:w) -> (a:c:z), stored
// primitive with the first nonzero coordinate positive.
struct FiberKey {
    Int a, c, z;

    static FiberKey normalized(const Int& a, const Int& c, const Int& z);
    bool operator==(const FiberKey&) const = default;
    bool operator<(const FiberKey& o) const;
    std::string str() const; // "a:c:z"
};

struct CountOptions {
    int threads = 1;
    long long work_budget = 1'000'000'000; // tuple tests allowed in naive_count
};

struct CountResult {
    Int count;           // integral points of height <= B
    Int raw_tuple_count; // Cox tuples before sign identification (= 2*count for DW)
};

// Exact N(B) by iterating base cells (a,c,z) and counting the b-progression
// inside the admissible interval in closed form.
CountResult enumerate_count(const Setup& s, const Int& B, const CountOptions& opt = {});

// Exact N(B) by direct scan: iterates the free coordinates of the torsor
// equation one by one and tests is_integral_point and height_leq on every
// candidate tuple. Slow on purpose; errors out when the work budget is hit.
CountResult naive_count(const Setup& s, const Int& B, const CountOptions& opt = {});

// Points of height <= B on the fiber over t. The key must name a nonempty
// fiber: gcd(a,c) = 1, and z = ±1 for DW_DZ.
Int fiber_count(const Setup& s, const FiberKey& t, const Int& B);

// Real-variable b-length of the fiber cell at (a,c,z):
//   length({|b| <= Z} ∩ {|z^(n+1) + b*c| <= Z*|a|}) / |a|,  Z = B^(1/l2) * M^(-l1/l2).
// Symmetric continuation V(0,c,z) = V(c,0,z); (a,c) = (0,0) is out of domain.
double volume_V(const Setup& s, double a, double c, double z, double B);

// Leading coefficient of volume_V in B^(1/l2): 2*M^(-l1/l2)/max{|a|,|c|}.
double volume_Vprime(const Setup& s, double a, double c, double z);

// Expected points of height <= B on the fiber over t, per unit B^(1/l2).
// Only meaningful for MOVING setups; empty fiber keys are rejected.
double fiber_constant(const Setup& s, const FiberKey& t);

// All nonempty fiber keys with max{|a|,|c|,|z|} <= limit (DW keys range over
// all z; DW_DZ keys have z = ±1, normalized), sorted.
std::vector<FiberKey> fiber_keys_upto(const Setup& s, long limit);

} // namespace torcount
