// Prints the scalar by which the full twist acts in both matrix families.
#include "lawrence/rep.hpp"

#include <iostream>

int main() {
    using namespace lawrence;
    for (int n = 2; n <= 5; ++n) {
        BraidWord d2 = full_twist(n);
        for (Family f : {Family::burau, Family::lk}) {
            auto s = is_scalar(evaluate(d2, f));
            std::cout << family_name(f) << " n=" << n << ": " << (s ? s->to_string() : "not scalar") << '\n';
        }
    }
}
