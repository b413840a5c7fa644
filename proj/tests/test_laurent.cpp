#include "doctest.h"
#include "specht/laurent.hpp"

#include <stdexcept>

using namespace specht;

TEST_CASE("laurent arithmetic") {
    Laurent zero;
    CHECK(zero.is_zero());
    CHECK(Laurent(0).is_zero());
    CHECK(zero.to_string() == "0");
    CHECK(Laurent(1).to_string() == "1");

    Laurent q = Laurent::q_power(1);
    Laurent p = q + Laurent::q_power(-1);
    CHECK(p.coeff(1) == 1);
    CHECK(p.coeff(-1) == 1);
    CHECK(p.coeff(0) == 0);
    CHECK(p.min_exponent() == -1);
    CHECK(p.max_exponent() == 1);
    CHECK(p.to_string() == "q+q^-1");

    CHECK((p * p).to_string() == "q^2+2+q^-2");
    CHECK((p - p).is_zero());
    CHECK((-p).to_string() == "-q-q^-1");
    CHECK(p.shifted(2) == Laurent::q_power(3) + Laurent::q_power(1));
    CHECK(p.bar() == p);
    CHECK(Laurent::q_power(3).bar() == Laurent::q_power(-3));
    CHECK(p.nonnegative());
    CHECK(!(p - Laurent(1)).nonnegative());

    CHECK(Laurent::from_coeffs({{2, 1}, {0, 0}, {-1, 3}}) ==
          Laurent::q_power(2) + Laurent(3).shifted(-1));
    CHECK((Laurent::q_power(1) * Laurent(3) - Laurent(1)).to_string() == "3q-1");
    CHECK_THROWS_AS(zero.min_exponent(), std::logic_error);
}

TEST_CASE("quantum integers") {
    CHECK(quantum_int(0).is_zero());
    CHECK(quantum_int(1) == Laurent(1));
    CHECK(quantum_int(2).to_string() == "q+q^-1");
    CHECK(quantum_int(3).to_string() == "q^2+1+q^-2");
    CHECK(quantum_factorial(0) == Laurent(1));
    CHECK(quantum_factorial(3).to_string() == "q^3+2q+2q^-1+q^-3");

    for (int n = 0; n <= 6; ++n) {
        CHECK(quantum_int(n).bar() == quantum_int(n));
        CHECK(quantum_factorial(n).bar() == quantum_factorial(n));
        if (n > 0) CHECK(quantum_factorial(n) == quantum_factorial(n - 1) * quantum_int(n));
    }
}
