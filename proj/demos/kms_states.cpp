// Values of KMS states on the projections s^k v_p v_p* s*^k, and when they factor
// through the boundary quotients.

#include <iostream>

#include "axb/axb.hpp"

int main() {
    using namespace axb;

    for (auto beta : {Rational(1), Rational(3, 2), Rational(2)}) {
        auto params = StateParams::finite(beta);
        std::cout << params.to_string() << ":\n";
        for (Int p : {2, 3, 5})
            std::cout << "  phi(sum over p=" << p << ") = " << kms_value(params, prime_partition(p)).value.to_string()
                      << "\n";
        std::cout << "  factors through q_mult: " << factors_through(params, Quotient::mult).to_string() << "\n";
    }
    auto ground = StateParams::ground();
    std::cout << "ground: phi(s v3 v3* s*) = " << kms_value(ground, parse_operator("s v3 v3* s*")).value.to_string()
              << ", factors through q_add: " << factors_through(ground, Quotient::add).to_string() << "\n";
}
