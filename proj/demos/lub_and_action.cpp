// Least upper bounds in N x| N^x and the partial action on the spectrum.

#include <iostream>

#include "axb/axb.hpp"

int main() {
    using namespace axb;

    for (auto [x, y] : {std::pair{SemigroupElement{1, 2}, SemigroupElement{0, 3}},
                        std::pair{SemigroupElement{5, 2}, SemigroupElement{0, 3}},
                        std::pair{SemigroupElement{0, 2}, SemigroupElement{1, 2}}}) {
        auto l = lub(x, y);
        std::cout << x << " v " << y << " = " << (l ? l->to_string() : "inf") << "\n";
    }

    auto w = parse_point("B(0;3)");
    auto r = partial_act(parse_group("(1,2)"), w);
    std::cout << "theta_(1,2) " << to_string(w) << " = " << to_string(*r.point) << "\n";

    auto fixed = make_a(3, Supernatural::nabla());
    std::cout << to_string(fixed) << " fixed by (-6,3): " << std::boolalpha << is_fixed({-6, 3}, fixed) << "\n";
}
