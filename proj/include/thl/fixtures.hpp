#pragma once

#include "thl/algebra.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace thl {

struct Fixture {
    std::string name;
    std::string description;
    Algebra algebra;
    FiniteGroupAction group;
    std::size_t default_degree = 3;
    std::string twist; // element used by single-twist commands
};

// Q, Q[x]/(x^2), Q^3 (two actions), Q[x]/(x^3); all validated.
const std::vector<Fixture>& builtin_fixtures();
// Throws ValidationError for an unknown name.
const Fixture& find_fixture(const std::string& name);

// Q[x]/(x^m) on basis 1, x, .., x^{m-1}.
Algebra truncated_polynomial(std::size_t m);
// Q^3 on basis (1, e1, e2); e0 = 1 - e1 - e2.
Algebra q3_algebra();
// Z/2 acting on Q[x]/(x^m) by x -> -x.
FiniteGroupAction sign_flip_action(const Algebra& a, std::size_t m);
// Coordinate permutations of Q^3: the cyclic subgroup when cyclic_only, else all of S3.
FiniteGroupAction q3_permutation_action(const Algebra& a, bool cyclic_only);

} // namespace thl
