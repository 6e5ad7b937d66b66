// Transfer operators on Laurent polynomials and on the Toeplitz algebra, and the
// coordinates of the associated Hilbert modules.

#include <iostream>

#include "axb/axb.hpp"

int main() {
    using namespace axb;

    auto f = parse_laurent("i^4 + i^3 + 2");
    std::cout << "L_2(" << f.to_string() << ") = " << transfer_L(2, f).to_string() << "\n";

    auto t = parse_toeplitz("S^5 S* + S^3");
    std::cout << "K_2(" << t.to_string() << ") = " << transfer_K(2, t).to_string() << "\n";
    std::cout << "rho(" << t.to_string() << ") = " << rho(t).to_string() << "\n";

    auto v = embed<KSystem>(3, parse_toeplitz("S^4 S*"));
    std::cout << "q_3(S^4 S*) = " << v.to_string() << "\n";
    std::cout << "pi_3 of it  = " << morphism_pi(v).to_string() << "\n";

    for (auto& term : lemma65_decompose(12))
        std::cout << "  conjugator " << (term.conjugator.empty() ? "1" : to_string(term.conjugator)) << ", prime "
                  << term.prime << "\n";
}
